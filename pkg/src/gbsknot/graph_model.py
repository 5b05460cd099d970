"""Labeled graphs with an integer at each end of each edge.

A labeled graph is a finite connected graph together with a nonzero
integer attached to each end of each edge.  Such a graph encodes a
generalized Baumslag-Solitar group: one infinite cyclic group per
vertex, glued along edges whose two labels give the indices of the
edge group inside the two vertex groups.

Vertex and edge ids are opaque strings.  Every deterministic choice in
this package (spanning tree, traversal order, view orientation) is made
by lexicographic id order, so identical inputs always give identical
outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GbsError(Exception):
    """Base class for every error raised by this package."""


class GraphError(GbsError):
    pass


class ZeroLabel(GraphError):
    def __init__(self, edge_id: str, end: int):
        super().__init__(f"edge {edge_id!r} has label 0 at end {end}")
        self.edge_id = edge_id
        self.end = end


class Empty(GraphError):
    def __init__(self) -> None:
        super().__init__("graph has no vertices")


class Disconnected(GraphError):
    def __init__(self, vertex: str):
        super().__init__(f"vertex {vertex!r} is not connected to the rest of the graph")
        self.vertex = vertex


class DuplicateId(GraphError):
    def __init__(self, kind: str, ident: str):
        super().__init__(f"duplicate {kind} id {ident!r}")
        self.kind = kind
        self.ident = ident


class NotReduced(GraphError):
    def __init__(self, edge_id: str):
        super().__init__(f"graph is not reduced: edge {edge_id!r} is collapsible")
        self.edge_id = edge_id


@dataclass(frozen=True)
class Edge:
    """A geometric edge; ``label0`` sits at the ``v0`` end, ``label1`` at ``v1``."""

    id: str
    v0: str
    label0: int
    v1: str
    label1: int

    @property
    def is_loop(self) -> bool:
        return self.v0 == self.v1

    def vertex(self, end: int) -> str:
        return self.v0 if end == 0 else self.v1

    def label(self, end: int) -> int:
        return self.label0 if end == 0 else self.label1

    def other_vertex(self, v: str) -> str:
        return self.v1 if self.v0 == v else self.v0


@dataclass(frozen=True)
class LabeledGraph:
    """Immutable labeled graph; construct through :func:`validate`."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def has_edge(self, edge_id: str) -> bool:
        return any(e.id == edge_id for e in self.edges)

    def edges_at(self, v: str) -> list[Edge]:
        return [e for e in self.edges if e.v0 == v or e.v1 == v]

    def degree(self, v: str) -> int:
        """Number of edge ends at ``v``; a loop counts twice."""
        return sum((e.v0 == v) + (e.v1 == v) for e in self.edges)


# A spanning tree is just the set of edge ids it uses.
SpanningTree = frozenset


# -- shapes -------------------------------------------------------------

SINGLE_VERTEX = "single_vertex"
SEGMENT = "segment"
CYCLE = "cycle"
OTHER = "other"


@dataclass(frozen=True)
class SegmentView:
    """A simple path read off in canonical orientation.

    ``pairs[i] = (k, l)`` with ``k`` the label at the ``vertices[i]`` end
    of the i-th path edge and ``l`` the label at the ``vertices[i+1]`` end.
    """

    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CycleView:
    """A simple cycle (a single loop when ``len(edges) == 1``).

    ``pairs[i] = (k, l)`` with ``k`` at the ``vertices[i]`` end of the
    i-th cycle edge and ``l`` at the ``vertices[(i+1) % s]`` end.
    """

    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Shape:
    kind: str
    segment: SegmentView | None = None
    cycle: CycleView | None = None
    reason: str | None = None


# -- construction -------------------------------------------------------


def validate(
    edges: Iterable[Edge | Sequence],
    vertices: Iterable[str] = (),
) -> LabeledGraph:
    """Build a :class:`LabeledGraph`, checking every invariant.

    ``edges`` may contain :class:`Edge` values or ``(id, v0, label0, v1,
    label1)`` tuples.  Vertices are declared implicitly by the edges that
    use them; ``vertices`` only needs to list isolated ones.  Raises
    :class:`ZeroLabel`, :class:`DuplicateId`, :class:`Empty` or
    :class:`Disconnected`.
    """
    edge_list: list[Edge] = []
    for raw in edges:
        if isinstance(raw, Edge):
            e = raw
        else:
            eid, v0, l0, v1, l1 = raw
            e = Edge(str(eid), str(v0), int(l0), str(v1), int(l1))
        edge_list.append(e)

    seen_edge_ids: set[str] = set()
    for e in edge_list:
        if e.id in seen_edge_ids:
            raise DuplicateId("edge", e.id)
        seen_edge_ids.add(e.id)
        if e.label0 == 0:
            raise ZeroLabel(e.id, 0)
        if e.label1 == 0:
            raise ZeroLabel(e.id, 1)

    vertex_list = list(vertices)
    seen_vertices: set[str] = set()
    for v in vertex_list:
        if v in seen_vertices:
            raise DuplicateId("vertex", v)
        seen_vertices.add(v)
    for e in edge_list:
        for v in (e.v0, e.v1):
            if v not in seen_vertices:
                seen_vertices.add(v)
                vertex_list.append(v)

    if not vertex_list:
        raise Empty()

    vertex_tuple = tuple(sorted(vertex_list))
    edge_tuple = tuple(sorted(edge_list, key=lambda e: e.id))

    # connectivity from the smallest vertex id
    adjacency: dict[str, set[str]] = {v: set() for v in vertex_tuple}
    for e in edge_tuple:
        adjacency[e.v0].add(e.v1)
        adjacency[e.v1].add(e.v0)
    reached = {vertex_tuple[0]}
    frontier = [vertex_tuple[0]]
    while frontier:
        v = frontier.pop()
        for w in adjacency[v]:
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    for v in vertex_tuple:
        if v not in reached:
            raise Disconnected(v)

    return LabeledGraph(vertex_tuple, edge_tuple)


def graph(*edge_tuples: Sequence, vertices: Iterable[str] = ()) -> LabeledGraph:
    """Shorthand: ``graph(("e1", "a", 2, "b", 3), ...)``."""
    return validate(edge_tuples, vertices)


# -- basic invariants ----------------------------------------------------


def spanning_tree(g: LabeledGraph) -> SpanningTree:
    """Deterministic maximal subtree, as a frozenset of edge ids.

    Grown from the lexicographically smallest vertex; at each step the
    smallest-id edge joining the tree to a new vertex is added.
    """
    visited = {g.vertices[0]}
    chosen: list[str] = []
    while len(visited) < len(g.vertices):
        for e in g.edges:
            in0, in1 = e.v0 in visited, e.v1 in visited
            if in0 != in1:
                chosen.append(e.id)
                visited.add(e.v1 if in0 else e.v0)
                break
        else:  # unreachable on validated graphs
            raise Disconnected(next(v for v in g.vertices if v not in visited))
    return frozenset(chosen)


def betti1(g: LabeledGraph) -> int:
    """First Betti number |E| - |V| + 1; the number of non-tree edges."""
    return len(g.edges) - len(g.vertices) + 1


def is_reduced(g: LabeledGraph) -> bool:
    """True iff no non-loop edge carries a label +-1 at either end."""
    return not any(
        not e.is_loop and (abs(e.label0) == 1 or abs(e.label1) == 1) for e in g.edges
    )


def tree_path(g: LabeledGraph, tree: SpanningTree, start: str, goal: str) -> list[tuple[Edge, int]]:
    """Steps along tree edges from ``start`` to ``goal``.

    Each step is ``(edge, direction)`` with direction +1 when the edge is
    traversed from its ``v0`` end to its ``v1`` end, -1 otherwise.
    """
    if start == goal:
        return []
    tree_edges = [e for e in g.edges if e.id in tree]
    parent: dict[str, tuple[Edge, int]] = {}
    reached = {start}
    frontier = [start]
    while frontier:
        nxt: list[str] = []
        for v in frontier:
            for e in tree_edges:
                if e.v0 == v and e.v1 not in reached:
                    parent[e.v1] = (e, 1)
                    reached.add(e.v1)
                    nxt.append(e.v1)
                elif e.v1 == v and e.v0 not in reached:
                    parent[e.v0] = (e, -1)
                    reached.add(e.v0)
                    nxt.append(e.v0)
        frontier = nxt
    if goal not in parent:
        raise GraphError(f"no tree path from {start!r} to {goal!r}")
    steps: list[tuple[Edge, int]] = []
    v = goal
    while v != start:
        e, d = parent[v]
        steps.append((e, d))
        v = e.v0 if d == 1 else e.v1
    steps.reverse()
    return steps


# -- shape detection -----------------------------------------------------


def shape(g: LabeledGraph) -> Shape:
    """Classify a reduced graph as a single vertex, segment, cycle or other.

    Raises :class:`NotReduced` when a collapse move still applies; the
    classification is only meaningful on reduced graphs.
    """
    for e in g.edges:
        if not e.is_loop and (abs(e.label0) == 1 or abs(e.label1) == 1):
            raise NotReduced(e.id)

    if not g.edges:
        return Shape(SINGLE_VERTEX)

    for v in g.vertices:
        d = g.degree(v)
        if d > 2:
            return Shape(OTHER, reason=f"vertex {v!r} has degree {d}")

    # all degrees <= 2 and the graph is connected: a path or a cycle
    leaves = sorted(v for v in g.vertices if g.degree(v) == 1)
    if leaves:
        return Shape(SEGMENT, segment=_segment_view(g, leaves[0]))
    return Shape(CYCLE, cycle=_cycle_view(g))


def _segment_view(g: LabeledGraph, start: str) -> SegmentView:
    vertices = [start]
    edges: list[str] = []
    pairs: list[tuple[int, int]] = []
    used: set[str] = set()
    v = start
    while True:
        nxt = [e for e in g.edges_at(v) if e.id not in used]
        if not nxt:
            break
        e = nxt[0]
        used.add(e.id)
        if e.v0 == v:
            k, l, w = e.label0, e.label1, e.v1
        else:
            k, l, w = e.label1, e.label0, e.v0
        edges.append(e.id)
        pairs.append((k, l))
        vertices.append(w)
        v = w
    return SegmentView(tuple(vertices), tuple(edges), tuple(pairs))


def _cycle_view(g: LabeledGraph) -> CycleView:
    start = g.vertices[0]
    if len(g.edges) == 1:  # single loop
        e = g.edges[0]
        return CycleView((start,), (e.id,), ((e.label0, e.label1),))
    vertices = [start]
    edges: list[str] = []
    pairs: list[tuple[int, int]] = []
    used: set[str] = set()
    v = start
    while True:
        nxt = sorted((e for e in g.edges_at(v) if e.id not in used), key=lambda e: e.id)
        if not nxt:
            break
        e = nxt[0]
        used.add(e.id)
        if e.v0 == v:
            k, l, w = e.label0, e.label1, e.v1
        else:
            k, l, w = e.label1, e.label0, e.v0
        edges.append(e.id)
        pairs.append((k, l))
        v = w
        if v == start:
            break
        vertices.append(v)
    return CycleView(tuple(vertices), tuple(edges), tuple(pairs))
