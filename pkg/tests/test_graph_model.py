import random

import pytest

from gbsknot import (
    CYCLE,
    OTHER,
    SEGMENT,
    SINGLE_VERTEX,
    Disconnected,
    DuplicateId,
    Empty,
    NotReduced,
    ZeroLabel,
    betti1,
    graph,
    is_reduced,
    shape,
    spanning_tree,
    validate,
)
from helpers import cycle_graph, loop_graph, random_graph, segment, trident


def test_validate_minimal_edge():
    g = graph(("e1", "a", 2, "b", 3))
    assert g.vertices == ("a", "b")
    assert g.edges[0].label0 == 2 and g.edges[0].label1 == 3


def test_validate_zero_label():
    with pytest.raises(ZeroLabel) as exc:
        graph(("e1", "a", 0, "b", 3))
    assert exc.value.edge_id == "e1"


def test_validate_disconnected():
    with pytest.raises(Disconnected):
        validate([], vertices=["a", "b"])
    with pytest.raises(Disconnected) as exc:
        validate([("e1", "a", 2, "b", 3)], vertices=["z"])
    assert exc.value.vertex == "z"


def test_validate_empty():
    with pytest.raises(Empty):
        validate([])


def test_validate_duplicate_ids():
    with pytest.raises(DuplicateId):
        graph(("e1", "a", 2, "b", 3), ("e1", "b", 2, "c", 3))
    with pytest.raises(DuplicateId):
        validate([], vertices=["a", "a"])


def test_spanning_tree_of_tree_is_everything():
    g = segment((2, 3), (5, 7), (11, 13))
    assert spanning_tree(g) == {"e1", "e2", "e3"}


def test_spanning_tree_of_loop_is_empty():
    assert spanning_tree(loop_graph(2, 3)) == frozenset()


def test_spanning_tree_triangle_tie_break():
    # grown from vertex a, trying edges in id order: e1 joins b, e2 joins c
    g = graph(("e1", "a", 2, "b", 3), ("e2", "b", 5, "c", 7), ("e3", "c", 4, "a", 9))
    assert spanning_tree(g) == {"e1", "e2"}


def test_betti1():
    assert betti1(segment((2, 3), (5, 7), (11, 13))) == 0
    assert betti1(loop_graph(2, 3)) == 1
    two_vertices_three_edges = graph(
        ("e1", "a", 2, "b", 3), ("e2", "a", 5, "b", 7), ("e3", "a", 4, "b", 9)
    )
    assert betti1(two_vertices_three_edges) == 2


def test_is_reduced():
    assert not is_reduced(graph(("e1", "a", 1, "b", 2)))
    assert is_reduced(loop_graph(1, 2))  # loops never collapse
    assert is_reduced(graph(("e1", "a", 2, "b", 3)))


def test_shape_requires_reduced():
    with pytest.raises(NotReduced):
        shape(graph(("e1", "a", 1, "b", 2)))


def test_shape_segment():
    sh = shape(segment((2, 3), (5, 7)))
    assert sh.kind == SEGMENT
    assert sh.segment.pairs == ((2, 3), (5, 7))
    assert sh.segment.vertices == ("a1", "a2", "a3")


def test_shape_single_loop_is_cycle():
    sh = shape(loop_graph(2, 3))
    assert sh.kind == CYCLE
    assert sh.cycle.pairs == ((2, 3),)


def test_shape_single_vertex():
    assert shape(validate([], vertices=["a"])).kind == SINGLE_VERTEX


def test_shape_two_edge_cycle():
    sh = shape(cycle_graph((2, 3), (5, 7)))
    assert sh.kind == CYCLE
    assert sh.cycle.pairs == ((2, 3), (5, 7))


def test_shape_trident_is_other():
    sh = shape(trident(2, 3, 5))
    assert sh.kind == OTHER
    assert "degree 3" in sh.reason


def test_shape_lollipop_is_other():
    g = graph(("e1", "a", 2, "a", 3), ("e2", "a", 5, "b", 7))
    sh = shape(g)
    assert sh.kind == OTHER
    assert "degree 3" in sh.reason


def test_shape_invariant_under_renaming():
    g = segment((2, 3), (5, 7))
    renamed = graph(("z9", "q", 7, "p", 5), ("z8", "p", 3, "zz", 2))
    # same path read from the other end: order reversed, k and l swapped
    sh = shape(renamed)
    assert sh.kind == SEGMENT
    flipped = tuple((l, k) for k, l in reversed(sh.segment.pairs))
    assert sh.segment.pairs == ((2, 3), (5, 7)) or flipped == ((2, 3), (5, 7))


def test_betti1_random_euler_count():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng)
        assert betti1(g) == len(g.edges) - len(g.vertices) + 1
        assert (betti1(g) == 0) == (spanning_tree(g) == {e.id for e in g.edges})


def test_graph_is_hashable_value():
    g1 = graph(("e1", "a", 2, "b", 3))
    g2 = graph(("e1", "a", 2, "b", 3))
    assert g1 == g2 and hash(g1) == hash(g2)
