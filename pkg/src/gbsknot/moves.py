"""Expansion and collapse moves on labeled graphs.

Collapsing an edge with a +-1 label merges its two endpoints and keeps
the group unchanged; a graph admitting no collapse is reduced.  The
expansion move is the exact inverse, splitting one end of an edge
through a fresh valence-one vertex.
"""

from __future__ import annotations

from .graph_model import (
    Edge,
    GbsError,
    LabeledGraph,
    is_reduced,
    spanning_tree,
    tree_path,
    validate,
)


class MoveError(GbsError):
    pass


class NotCollapsible(MoveError):
    def __init__(self, edge_id: str, why: str):
        super().__init__(f"edge {edge_id!r} cannot be collapsed: {why}")
        self.edge_id = edge_id


class UnknownEdge(MoveError):
    def __init__(self, edge_id: str):
        super().__init__(f"no edge with id {edge_id!r}")
        self.edge_id = edge_id


class BadFactorization(MoveError):
    pass


def is_collapsible(e: Edge) -> bool:
    return not e.is_loop and (abs(e.label0) == 1 or abs(e.label1) == 1)


def collapse(g: LabeledGraph, edge_id: str) -> LabeledGraph:
    """Collapse an edge whose label at one end is +-1.

    The vertex at the +-1 end disappears; its generator equals a power of
    the surviving one, so every label at a former end of the dead vertex
    is multiplied by (sign) * (label at the surviving end).  When both
    ends carry +-1 the lexicographically smaller vertex survives.
    """
    if not g.has_edge(edge_id):
        raise UnknownEdge(edge_id)
    e = g.edge(edge_id)
    if e.is_loop:
        raise NotCollapsible(edge_id, "it is a loop")
    if abs(e.label0) != 1 and abs(e.label1) != 1:
        raise NotCollapsible(edge_id, "neither label is +-1")

    if abs(e.label1) == 1 and abs(e.label0) == 1:
        dead_end = 1 if e.v0 < e.v1 else 0
    elif abs(e.label1) == 1:
        dead_end = 1
    else:
        dead_end = 0
    dead = e.vertex(dead_end)
    survivor = e.vertex(1 - dead_end)
    factor = e.label(dead_end) * e.label(1 - dead_end)  # sign * surviving label

    new_edges = []
    for f in g.edges:
        if f.id == e.id:
            continue
        v0, l0, v1, l1 = f.v0, f.label0, f.v1, f.label1
        if v0 == dead:
            v0, l0 = survivor, factor * l0
        if v1 == dead:
            v1, l1 = survivor, factor * l1
        new_edges.append(Edge(f.id, v0, l0, v1, l1))
    new_vertices = [v for v in g.vertices if v != dead]
    return validate(new_edges, new_vertices)


def _fresh(base: str, taken) -> str:
    name = base + "'"
    while name in taken:
        name += "'"
    return name


def expand(g: LabeledGraph, edge_id: str, end: int, m: int, n: int) -> LabeledGraph:
    """Split the chosen end of an edge through a new vertex.

    The label ``L`` at that end must factor as ``m * n``.  A fresh vertex
    ``x`` is inserted; the attachment edge gets labels ``(m, 1)`` from the
    old vertex to ``x`` and the split end of the original edge moves to
    ``x`` with label ``n``.  Collapsing the attachment edge restores the
    input graph exactly.
    """
    if not g.has_edge(edge_id):
        raise UnknownEdge(edge_id)
    if end not in (0, 1):
        raise BadFactorization(f"end must be 0 or 1, got {end}")
    e = g.edge(edge_id)
    if n == 0 or m * n != e.label(end):
        raise BadFactorization(
            f"label {e.label(end)} at end {end} of edge {edge_id!r} is not {m} * {n}"
        )

    old_vertex = e.vertex(end)
    new_vertex = _fresh(old_vertex, g.vertices)
    new_edge_id = _fresh(edge_id, [f.id for f in g.edges])

    if end == 0:
        moved = Edge(e.id, new_vertex, n, e.v1, e.label1)
    else:
        moved = Edge(e.id, e.v0, e.label0, new_vertex, n)
    attachment = Edge(new_edge_id, old_vertex, m, new_vertex, 1)

    new_edges = [moved if f.id == e.id else f for f in g.edges]
    new_edges.append(attachment)
    return validate(new_edges, g.vertices)


def reduce(g: LabeledGraph) -> LabeledGraph:
    """Collapse the smallest-id collapsible edge until none remains."""
    while True:
        target = None
        for e in g.edges:
            if is_collapsible(e):
                target = e.id
                break
        if target is None:
            return g
        g = collapse(g, target)


def canonicalize_signs(g: LabeledGraph) -> LabeledGraph:
    """Flip vertex generators to make tree labels at child ends positive.

    Purely cosmetic: flipping a generator negates every label at that
    vertex's edge ends and changes nothing about the group.  Tree edges
    are walked from the root; classification never depends on this pass.
    """
    tree = spanning_tree(g)
    flipped: set[str] = set()
    for v in g.vertices:
        if v == g.vertices[0]:
            continue
        steps = tree_path(g, tree, g.vertices[0], v)
        e, d = steps[-1]
        # label at the v end of the tree edge leading to v; flipping v
        # only touches labels at v's own ends, so decisions are independent
        label = e.label1 if d == 1 else e.label0
        if label < 0:
            flipped.add(v)
    if not flipped:
        return g
    new_edges = []
    for e in g.edges:
        l0 = -e.label0 if e.v0 in flipped else e.label0
        l1 = -e.label1 if e.v1 in flipped else e.label1
        new_edges.append(Edge(e.id, e.v0, l0, e.v1, l1))
    return validate(new_edges, g.vertices)


__all__ = [
    "MoveError",
    "NotCollapsible",
    "UnknownEdge",
    "BadFactorization",
    "is_collapsible",
    "collapse",
    "expand",
    "reduce",
    "canonicalize_signs",
    "is_reduced",
]
