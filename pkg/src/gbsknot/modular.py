"""The modular homomorphism into the nonzero rationals.

Conjugating a power of a vertex generator around a closed loop rescales
its exponent by the ratio of the labels passed on the way; the map
sending each loop to that ratio is a homomorphism into Q*.  It is
computed combinatorially: each non-tree edge contributes the product of
(source-end label)/(target-end label) along its closed loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph_model import GbsError, LabeledGraph, SpanningTree, spanning_tree, tree_path
from .presentation import has_integer_solution

TRIVIAL = "trivial"
PLUS_MINUS_ONE = "plus_minus_one"
GENERAL = "general"


class EdgeInTree(GbsError):
    def __init__(self, edge_id: str):
        super().__init__(f"edge {edge_id!r} lies in the spanning tree")
        self.edge_id = edge_id


@dataclass(frozen=True)
class ModularImage:
    """Image subgroup of Q*, given by one generator per non-tree edge."""

    generators: tuple[Fraction, ...]
    tag: str


def loop_modulus(g: LabeledGraph, tree: SpanningTree, edge_id: str) -> Fraction:
    """Modulus of the loop closed by a non-tree edge.

    Walk the tree path from the edge's target back to its source, then
    cross the edge; every traversal from end x to end y contributes
    label(x)/label(y).
    """
    e = g.edge(edge_id)
    if e.id in tree:
        raise EdgeInTree(edge_id)
    value = Fraction(e.label0, e.label1)
    for f, d in tree_path(g, tree, e.v1, e.v0):
        value *= Fraction(f.label0, f.label1) if d == 1 else Fraction(f.label1, f.label0)
    return value


def modular_image(g: LabeledGraph, tree: SpanningTree | None = None) -> ModularImage:
    if tree is None:
        tree = spanning_tree(g)
    gens = sorted(
        {loop_modulus(g, tree, e.id) for e in g.edges if e.id not in tree}
    )
    if all(f == 1 for f in gens):
        tag = TRIVIAL
    elif all(f in (1, -1) for f in gens):
        tag = PLUS_MINUS_ONE
    else:
        tag = GENERAL
    return ModularImage(tuple(gens), tag)


# -- subgroup comparison ---------------------------------------------------


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    n = abs(n)
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _exponent_vectors(fractions, primes: list[int]):
    """Each fraction as (sign exponent, prime exponent vector)."""
    vectors = []
    for f in fractions:
        vec = [1 if f < 0 else 0]
        num, den = _factor(f.numerator), _factor(f.denominator)
        for p in primes:
            vec.append(num.get(p, 0) - den.get(p, 0))
        vectors.append(vec)
    return vectors


def _generates(generators, candidates) -> bool:
    primes = sorted(
        {
            p
            for f in list(generators) + list(candidates)
            for p in (*_factor(f.numerator), *_factor(f.denominator))
        }
    )
    gen_vecs = _exponent_vectors(generators, primes)
    # (-1)^2 = 1: the sign coordinate only matters mod 2
    sign_killer = [2] + [0] * len(primes)
    columns = gen_vecs + [sign_killer]
    matrix = [[col[i] for col in columns] for i in range(len(primes) + 1)]
    for vec in _exponent_vectors(candidates, primes):
        if not has_integer_solution(matrix, vec):
            return False
    return True


def same_subgroup(a: ModularImage, b: ModularImage) -> bool:
    """Whether two images generate the same subgroup of Q*."""
    return _generates(a.generators, b.generators) and _generates(
        b.generators, a.generators
    )


__all__ = [
    "TRIVIAL",
    "PLUS_MINUS_ONE",
    "GENERAL",
    "EdgeInTree",
    "ModularImage",
    "loop_modulus",
    "modular_image",
    "same_subgroup",
]
