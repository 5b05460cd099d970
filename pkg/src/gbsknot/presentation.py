"""Finite presentations of labeled-graph groups, and their abelianizations.

A labeled graph together with a spanning tree yields a presentation with
one generator per vertex, one generator per non-tree edge, and one
relator per geometric edge: a tree edge identifies powers of its two
vertex generators, a non-tree edge conjugates them by its edge letter.

Abelianized invariants are read off the integer relation matrix through
an exact Smith normal form; all arithmetic is arbitrary precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_model import GbsError, LabeledGraph, SpanningTree, betti1, spanning_tree


class TreeMismatch(GbsError):
    pass


class UnknownGenerator(GbsError):
    def __init__(self, name: str):
        super().__init__(f"unknown generator {name!r}")
        self.name = name


class WordSyntaxError(GbsError):
    pass


# -- words ---------------------------------------------------------------


def _normalize(factors) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for sym, exp in factors:
        exp = int(exp)
        if exp == 0:
            continue
        if out and out[-1][0] == sym:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([sym, exp])
    return tuple((s, e) for s, e in out)


class Word:
    """A freely reduced word: runs of ``generator ** exponent``.

    Adjacent runs never share a symbol and no exponent is zero; the
    constructor enforces both.  Words multiply by concatenation.
    """

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        self.factors = _normalize(factors)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``name^exp`` factors separated by whitespace; ``1`` is empty."""
        tokens = text.split()
        if tokens == ["1"]:
            return cls()
        factors = []
        for tok in tokens:
            name, _, exp = tok.partition("^")
            if not name:
                raise WordSyntaxError(f"bad factor {tok!r}")
            if exp:
                try:
                    k = int(exp)
                except ValueError:
                    raise WordSyntaxError(f"bad exponent in {tok!r}") from None
            else:
                k = 1
            factors.append((name, k))
        return cls(factors)

    def inverse(self) -> "Word":
        return Word(tuple((s, -e) for s, e in reversed(self.factors)))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.factors + other.factors)

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        return Word(base.factors * abs(n))

    def __bool__(self) -> bool:
        return bool(self.factors)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self.factors)

    def symbols(self) -> set[str]:
        return {s for s, _ in self.factors}


def word(text: str) -> Word:
    return Word.parse(text)


# -- presentations -------------------------------------------------------


def generator_names(g: LabeledGraph, tree: SpanningTree) -> tuple[dict[str, str], dict[str, str]]:
    """Symbols for vertex and edge generators.

    Vertex generators reuse the vertex id.  The single edge letter of a
    one-holed graph is called ``t``; with several non-tree edges (or a
    vertex already named ``t``) each letter is ``t_<edge id>``.
    """
    vertex_syms = {v: v for v in g.vertices}
    non_tree = [e.id for e in g.edges if e.id not in tree]
    edge_syms: dict[str, str] = {}
    taken = set(g.vertices)
    for eid in non_tree:
        if len(non_tree) == 1 and "t" not in taken:
            name = "t"
        else:
            name = f"t_{eid}"
            while name in taken:
                name = "t_" + name
        edge_syms[eid] = name
        taken.add(name)
    return vertex_syms, edge_syms


@dataclass(frozen=True)
class Presentation:
    vertex_generators: tuple[str, ...]
    edge_generators: tuple[str, ...]
    relators: tuple[Word, ...]

    @property
    def generators(self) -> tuple[str, ...]:
        return self.vertex_generators + self.edge_generators


def _check_tree(g: LabeledGraph, tree: SpanningTree) -> None:
    ids = {e.id for e in g.edges}
    if not set(tree) <= ids:
        raise TreeMismatch(f"tree edge(s) {sorted(set(tree) - ids)} not in graph")
    if len(tree) != len(g.vertices) - 1:
        raise TreeMismatch(
            f"tree has {len(tree)} edges, expected {len(g.vertices) - 1}"
        )
    reached = {g.vertices[0]}
    grew = True
    while grew:
        grew = False
        for e in g.edges:
            if e.id in tree and (e.v0 in reached) != (e.v1 in reached):
                reached.add(e.v0 if e.v1 in reached else e.v1)
                grew = True
    if len(reached) != len(g.vertices):
        raise TreeMismatch("tree does not reach every vertex")


def build_presentation(g: LabeledGraph, tree: SpanningTree) -> Presentation:
    """One relator per edge: ``u^k = w^l`` on the tree, conjugated off it."""
    _check_tree(g, tree)
    vertex_syms, edge_syms = generator_names(g, tree)
    relators = []
    for e in g.edges:
        u, w = vertex_syms[e.v0], vertex_syms[e.v1]
        if e.id in tree:
            relators.append(Word(((u, e.label0), (w, -e.label1))))
        else:
            t = edge_syms[e.id]
            relators.append(Word(((t, -1), (u, e.label0), (t, 1), (w, -e.label1))))
    return Presentation(
        vertex_generators=tuple(vertex_syms[v] for v in g.vertices),
        edge_generators=tuple(edge_syms[eid] for eid in sorted(edge_syms)),
        relators=tuple(relators),
    )


def relation_matrix(p: Presentation) -> list[list[int]]:
    """Exponent-sum matrix: rows are relators, columns follow ``p.generators``."""
    index = {sym: i for i, sym in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(index)
        for sym, exp in r.factors:
            row[index[sym]] += exp
        rows.append(row)
    return rows


# -- Smith normal form ---------------------------------------------------


def _snf(matrix, want_left=False):
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    left = [[int(i == j) for j in range(m)] for i in range(m)] if want_left else None

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        if left is not None:
            left[i] = [x - q * y for x, y in zip(left[i], left[j])]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the working submatrix becomes the pivot
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        dirty = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                for i in range(t, m):
                    a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
        if dirty:
            continue  # a smaller remainder appeared; re-pivot

        # pivot must divide everything that remains
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)  # pull the offending row up and repeat
            continue

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if left is not None:
                left[t] = [-x for x in left[t]]
        t += 1

    divisors = tuple(a[i][i] for i in range(min(m, n)) if a[i][i])
    return divisors, left


def smith_normal_form(matrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors and the free rank of the cokernel.

    Returns ``(divisors, rank_deficit)`` where ``divisors`` is the chain
    ``d1 | d2 | ... | dr`` of nonzero diagonal entries and ``rank_deficit``
    is ``columns - r``.  ``d1 * ... * di`` equals the gcd of all i-by-i
    minors.
    """
    ncols = len(matrix[0]) if matrix else 0
    divisors, _ = _snf(matrix)
    return divisors, ncols - len(divisors)


def has_integer_solution(matrix, target) -> bool:
    """Whether ``matrix @ x = target`` is solvable over the integers."""
    if not matrix or not matrix[0]:
        return all(v == 0 for v in target)
    divisors, left = _snf(matrix, want_left=True)
    c = [sum(l * t for l, t in zip(row, target)) for row in left]
    r = len(divisors)
    for i, v in enumerate(c):
        if i < r:
            if v % divisors[i]:
                return False
        elif v:
            return False
    return True


# -- abelian invariants ----------------------------------------------------


@dataclass(frozen=True)
class AbelianStructure:
    """Z^free_rank plus cyclic torsion factors d1 | d2 | ..., each >= 2."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    @property
    def is_infinite_cyclic(self) -> bool:
        return self.free_rank == 1 and not self.torsion


def _cokernel(matrix, ncols) -> AbelianStructure:
    if not matrix:
        return AbelianStructure(ncols)
    divisors, deficit = smith_normal_form(matrix)
    return AbelianStructure(deficit, tuple(d for d in divisors if d != 1))


def abelianization(g: LabeledGraph) -> AbelianStructure:
    """Abelianized group; independent of the spanning tree used."""
    p = build_presentation(g, spanning_tree(g))
    return _cokernel(relation_matrix(p), len(p.generators))


def quotient_abelianization(p: Presentation, extra_relators) -> AbelianStructure:
    """Abelianization after also killing the normal closure of extra words."""
    known = set(p.generators)
    index = {sym: i for i, sym in enumerate(p.generators)}
    rows = relation_matrix(p)
    for w in extra_relators:
        for sym in w.symbols():
            if sym not in known:
                raise UnknownGenerator(sym)
        row = [0] * len(index)
        for sym, exp in w.factors:
            row[index[sym]] += exp
        rows.append(row)
    return _cokernel(rows, len(p.generators))


__all__ = [
    "Word",
    "word",
    "Presentation",
    "AbelianStructure",
    "TreeMismatch",
    "UnknownGenerator",
    "WordSyntaxError",
    "generator_names",
    "build_presentation",
    "relation_matrix",
    "smith_normal_form",
    "has_integer_solution",
    "abelianization",
    "quotient_abelianization",
    "betti1",
]
