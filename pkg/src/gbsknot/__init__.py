"""Labeled-graph calculator for generalized Baumslag-Solitar groups."""

from .graph_model import (
    CYCLE,
    OTHER,
    SEGMENT,
    SINGLE_VERTEX,
    CycleView,
    Disconnected,
    DuplicateId,
    Edge,
    Empty,
    GbsError,
    GraphError,
    LabeledGraph,
    NotReduced,
    SegmentView,
    Shape,
    ZeroLabel,
    betti1,
    graph,
    is_reduced,
    shape,
    spanning_tree,
    validate,
)
from .moves import (
    BadFactorization,
    NotCollapsible,
    UnknownEdge,
    canonicalize_signs,
    collapse,
    expand,
    reduce,
)
from .presentation import (
    AbelianStructure,
    Presentation,
    TreeMismatch,
    UnknownGenerator,
    Word,
    abelianization,
    build_presentation,
    quotient_abelianization,
    relation_matrix,
    smith_normal_form,
    word,
)
from .modular import (
    EdgeInTree,
    ModularImage,
    loop_modulus,
    modular_image,
    same_subgroup,
)
from .words import (
    StepBudgetExceeded,
    equal,
    is_elliptic,
    is_identity,
    normal_form,
    verify_homomorphism,
)
from .classifier import (
    BSSource,
    KnotVerdict,
    NKnotVerdict,
    OneKnotVerdict,
    PreconditionFailed,
    TorusSource,
    Witness,
    WitnessError,
    bs_embedding_witness,
    classify,
    classify_1knot,
    classify_nknot,
    cycle_knot_check,
    segment_coprime_check,
    torus_witness,
)
from .dsl import ParseError, load, parse, serialize

__version__ = "0.1.0"
