"""Word problem for labeled-graph groups via pinch reduction.

Every element is rewritten as a closed walk based at the smallest
vertex: each vertex generator becomes "walk out along the tree, take the
power, walk back" and each edge letter becomes a crossing of its edge.
A *pinch* is a backtrack of the walk - an edge crossed and immediately
recrossed - whose intermediate vertex power is divisible by the label at
the turnaround end; it trades the two crossings for a vertex power at
the near end.  Removing pinches terminates (each one shortens the walk
by two crossings) and, by the normal form theory for groups acting on
trees, a pinch-free walk of positive length is never the identity.
This yields a sound and complete identity test; tree relations are only
ever applied as part of a pinch, exactly when they shorten the walk.
"""

from __future__ import annotations

import os
from typing import Mapping

from .graph_model import Edge, GbsError, LabeledGraph, SpanningTree, tree_path
from .presentation import UnknownGenerator, Word, generator_names

DEFAULT_STEP_BUDGET = 10**6
_BUDGET_ENV = "GBSKNOT_STEP_BUDGET"


class StepBudgetExceeded(GbsError):
    """Internal guard against runaway rewriting; never a verdict."""


def _budget(override: int | None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(_BUDGET_ENV, DEFAULT_STEP_BUDGET))


class _Walk:
    """A closed walk: steps[i] = (edge, dir), exps[i] before steps[i].

    ``dir`` is +1 for a v0-to-v1 crossing.  ``verts[i]`` is where
    exponent ``exps[i]`` lives; len(exps) == len(steps) + 1.
    """

    __slots__ = ("exps", "steps", "verts")

    def __init__(self, base: str):
        self.exps: list[int] = [0]
        self.steps: list[tuple[Edge, int]] = []
        self.verts: list[str] = [base]


def _head(step: tuple[Edge, int]) -> str:
    e, d = step
    return e.v1 if d == 1 else e.v0


def _turn_label(step: tuple[Edge, int]) -> int:
    """Label at the head end - the divisor for a pinch after this step."""
    e, d = step
    return e.label1 if d == 1 else e.label0


def _far_label(step: tuple[Edge, int]) -> int:
    e, d = step
    return e.label0 if d == 1 else e.label1


def _reverse(step: tuple[Edge, int]) -> tuple[Edge, int]:
    e, d = step
    return (e, -d)


class _Context:
    def __init__(self, g: LabeledGraph, tree: SpanningTree):
        self.g = g
        self.tree = tree
        self.base = g.vertices[0]
        vertex_syms, edge_syms = generator_names(g, tree)
        self.vertex_of_symbol = {sym: v for v, sym in vertex_syms.items()}
        self.edge_of_symbol = {sym: g.edge(eid) for eid, sym in edge_syms.items()}
        self.symbol_of_vertex = vertex_syms
        self.symbol_of_edge = edge_syms
        self.to_base = {
            v: tree_path(g, tree, v, self.base) for v in g.vertices
        }

    def encode(self, w: Word, budget: int) -> _Walk:
        walk = _Walk(self.base)
        used = 0

        def extend(step: tuple[Edge, int]):
            walk.steps.append(step)
            walk.exps.append(0)
            walk.verts.append(_head(step))

        def out_and_back(v: str, power: int):
            for e, d in reversed(self.to_base[v]):
                extend((e, -d))
            walk.exps[-1] += power
            for step in self.to_base[v]:
                extend(step)

        for sym, exp in w.factors:
            # vertex powers are single runs and cost nothing however large;
            # edge letters are crossed once per unit of the exponent
            used += 1 if sym in self.vertex_of_symbol else 1 + abs(exp)
            if used > budget:
                raise StepBudgetExceeded(f"encoding exceeded {budget} steps")
            if sym in self.vertex_of_symbol:
                out_and_back(self.vertex_of_symbol[sym], exp)
            elif sym in self.edge_of_symbol:
                e = self.edge_of_symbol[sym]
                d = 1 if exp > 0 else -1
                for _ in range(abs(exp)):
                    tail = e.v0 if d == 1 else e.v1
                    for f, fd in reversed(self.to_base[tail]):
                        extend((f, -fd))
                    extend((e, d))
                    for step in self.to_base[_head((e, d))]:
                        extend(step)
            else:
                raise UnknownGenerator(sym)
        return walk

    def decode(self, walk: _Walk) -> Word:
        factors: list[tuple[str, int]] = []
        for i, step in enumerate(walk.steps):
            if walk.exps[i]:
                factors.append((self.symbol_of_vertex[walk.verts[i]], walk.exps[i]))
            e, d = step
            if e.id not in self.tree:
                factors.append((self.symbol_of_edge[e.id], d))
        if walk.exps[-1]:
            factors.append((self.symbol_of_vertex[walk.verts[-1]], walk.exps[-1]))
        return Word(factors)


def _reduce_walk(walk: _Walk, budget: int) -> _Walk:
    """Remove every pinch, scanning once with a cascade stack."""
    out = _Walk(walk.verts[0])
    out.exps[0] = walk.exps[0]
    used = 0
    for step, exp, vert in zip(walk.steps, walk.exps[1:], walk.verts[1:]):
        out.steps.append(step)
        out.exps.append(exp)
        out.verts.append(vert)
        while len(out.steps) >= 2:
            used += 1
            if used > budget:
                raise StepBudgetExceeded(f"pinch reduction exceeded {budget} steps")
            prev, last = out.steps[-2], out.steps[-1]
            mid = out.exps[-2]
            if last != _reverse(prev):
                break
            div = _turn_label(prev)
            if mid % div:
                break
            gained = (mid // div) * _far_label(prev)
            tail_exp = out.exps[-1]
            del out.steps[-2:]
            del out.exps[-2:]
            del out.verts[-2:]
            out.exps[-1] += gained + tail_exp
    return out


def _cyclic_reduce(walk: _Walk, budget: int) -> int:
    """Length of the walk after reducing it as a cyclic word."""
    steps = list(walk.steps)
    # exponent following steps[i]; the base exponent wraps around
    after = list(walk.exps[1:])
    if after:
        after[-1] += walk.exps[0]
    used = 0
    while len(steps) >= 2:
        used += 1
        if used > budget:
            raise StepBudgetExceeded(f"cyclic reduction exceeded {budget} steps")
        last, first = steps[-1], steps[0]
        mid = after[-1]
        if first != _reverse(last) or mid % _turn_label(last):
            break
        gained = (mid // _turn_label(last)) * _far_label(last)
        tail = after[0]
        steps = steps[1:-1]
        after = after[1:-1]
        if after:
            after[-1] += gained + tail
    return len(steps)


def _context(g: LabeledGraph, tree: SpanningTree) -> _Context:
    return _Context(g, tree)


def normal_form(
    g: LabeledGraph, tree: SpanningTree, w: Word, step_budget: int | None = None
) -> Word:
    """A pinch-free word equal to ``w``; empty exactly on the identity.

    The result is freely reduced and admits no pinch, which by the
    normal form theorem decides triviality; it is not a unique canonical
    representative.
    """
    budget = _budget(step_budget)
    ctx = _context(g, tree)
    return ctx.decode(_reduce_walk(ctx.encode(w, budget), budget))


def is_identity(
    g: LabeledGraph, tree: SpanningTree, w: Word, step_budget: int | None = None
) -> bool:
    budget = _budget(step_budget)
    ctx = _context(g, tree)
    walk = _reduce_walk(ctx.encode(w, budget), budget)
    return not walk.steps and walk.exps[0] == 0


def equal(
    g: LabeledGraph,
    tree: SpanningTree,
    w1: Word,
    w2: Word,
    step_budget: int | None = None,
) -> bool:
    return is_identity(g, tree, w1 * w2.inverse(), step_budget)


def is_elliptic(
    g: LabeledGraph, tree: SpanningTree, w: Word, step_budget: int | None = None
) -> bool:
    """Whether ``w`` is conjugate to a power of a vertex generator.

    Equivalent to the cyclically reduced walk having length zero: the
    element then fixes a point of the tree the group acts on.
    """
    budget = _budget(step_budget)
    ctx = _context(g, tree)
    walk = _reduce_walk(ctx.encode(w, budget), budget)
    return _cyclic_reduce(walk, budget) == 0


def verify_homomorphism(
    source_relators,
    images: Mapping[str, Word],
    g: LabeledGraph,
    tree: SpanningTree,
    step_budget: int | None = None,
) -> bool:
    """Check that substituting ``images`` kills every source relator."""
    for relator in source_relators:
        acc = Word()
        for sym, exp in relator.factors:
            if sym not in images:
                raise UnknownGenerator(sym)
            acc = acc * (images[sym] ** exp)
        if not is_identity(g, tree, acc, step_budget):
            return False
    return True


__all__ = [
    "DEFAULT_STEP_BUDGET",
    "StepBudgetExceeded",
    "normal_form",
    "is_identity",
    "equal",
    "is_elliptic",
    "verify_homomorphism",
]
