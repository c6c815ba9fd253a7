import random

import pytest
from hypothesis import given, settings, strategies as st

from antimagic.errors import (
    AlreadyAdjacent,
    EmptyClass,
    HasLeaves,
    LeafCountInvalid,
    NotStronglyAntimagic,
    ShapeInvalid,
    TargetInvalid,
)
from antimagic.families import LevelWiseTreeShape, enumerate_level_wise_trees
from antimagic.graph import Graph, LabeledGraph
from antimagic.inductive import (
    CONNECT,
    NEW_LEAF,
    ExtensionTarget,
    Growth,
    attach_cycle,
    attach_path,
    extend,
    extend_all_in_class,
    label_level_wise_tree,
)
from antimagic.spider_lab import label_cycle, label_spider
from antimagic.families import SpiderShape
from helpers import random_strong_tree, valid_modes, valid_positions

P3 = LabeledGraph(Graph(3, ((0, 1), (1, 2))), (1, 2))
P4 = LabeledGraph(Graph(4, ((0, 1), (1, 2), (2, 3))), (1, 3, 2))


def test_extend_center_of_p3():
    out = extend(P3, ExtensionTarget(3))
    assert out.graph.edges[-1] == (1, 3)
    assert out.labels == (2, 3, 1)
    assert out.is_strongly_antimagic()


def test_connect_closes_c4():
    # P4 ordering is 0, 3, 1, 2: connecting 0 and 3 at position 2 closes the cycle
    out = extend(P4, ExtensionTarget(2, CONNECT))
    assert out.graph.edge_count == 4
    assert out.phi == (3, 6, 7, 4)


def test_degree_gap_required():
    with pytest.raises(TargetInvalid):
        extend(P4, ExtensionTarget(3))  # vertex 1 has degree 2, next vertex too
    with pytest.raises(TargetInvalid):
        extend(P4, ExtensionTarget(0))
    with pytest.raises(TargetInvalid):
        extend(P3, ExtensionTarget(1, CONNECT))


def test_already_adjacent():
    # ordering of (1, 3, 2) on P4 is 0, 3, 1, 2; positions 3, 4 hold adjacent vertices 1 and 2
    lg = LabeledGraph(Graph(4, ((0, 1), (1, 2), (2, 3))), (1, 3, 2))
    with pytest.raises(AlreadyAdjacent):
        extend(lg, ExtensionTarget(4, CONNECT))


def test_rejects_invalid_input():
    bad = LabeledGraph(Graph(4, ((0, 1), (1, 2), (2, 3))), (1, 2, 3))
    with pytest.raises(NotStronglyAntimagic):
        extend(bad, ExtensionTarget(4))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_extend_preserves_old_order(seed):
    rnd = random.Random(seed)
    lg = random_strong_tree(rnd)
    pos = rnd.choice(valid_positions(lg))
    mode = rnd.choice(valid_modes(lg, pos))
    out = extend(lg, ExtensionTarget(pos, mode))
    assert out.is_strongly_antimagic()
    n = lg.graph.vertex_count
    assert [v for v in out.ordering if v < n] == list(lg.ordering)
    if mode == NEW_LEAF:
        assert out.ordering[0] == n


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_invalid_positions_raise(seed):
    rnd = random.Random(seed)
    lg = random_strong_tree(rnd)
    ok = set(valid_positions(lg))
    for pos in range(1, lg.graph.vertex_count + 1):
        if pos not in ok:
            with pytest.raises(TargetInvalid):
                extend(lg, ExtensionTarget(pos))


def test_extend_all_in_class():
    lg = label_spider(SpiderShape((2, 2, 2)))
    out = extend_all_in_class(lg, 1)
    assert out.graph.edge_count == lg.graph.edge_count + 3
    assert out.is_strongly_antimagic()
    with pytest.raises(EmptyClass):
        extend_all_in_class(lg, 7)


def test_attach_cycle_and_path():
    base = label_cycle(5)
    out = attach_cycle(base, 4, 4)
    assert out.graph.edge_count == 9 and out.is_strongly_antimagic()
    with pytest.raises(HasLeaves):
        attach_cycle(P4, 2, 3)
    with pytest.raises(ShapeInvalid):
        attach_cycle(base, 4, 2)
    closed = attach_path(P4, 3)
    assert closed.graph.edge_count == 6 and closed.is_strongly_antimagic()
    assert all(d == 2 for d in closed.graph.degrees)
    with pytest.raises(LeafCountInvalid):
        attach_path(label_spider(SpiderShape((1, 1, 1))), 2)


def test_attach_path_adjacent_leaves():
    lg = LabeledGraph(Graph(2, ((0, 1),)), (1,))
    with pytest.raises((AlreadyAdjacent, NotStronglyAntimagic)):
        attach_path(lg, 1)


def test_growth_names():
    growth = Growth(P3, ["a", "b", "c"])
    growth.add_leaf("b", "d")
    assert growth.degree("b") == 3
    assert growth.leaves()[0] == "d"
    with pytest.raises(ValueError):
        growth.add_leaf("b", "a")


@pytest.mark.parametrize("shape", [LevelWiseTreeShape((3,)), LevelWiseTreeShape((4, 3, 2)), LevelWiseTreeShape((3, 3), 2), LevelWiseTreeShape((2, 2, 2), 2)])
def test_level_wise_examples(shape):
    out = label_level_wise_tree(shape)
    assert out.graph == shape.graph()
    assert out.is_strongly_antimagic()


def test_level_wise_rejects_increasing():
    with pytest.raises(ShapeInvalid):
        label_level_wise_tree(LevelWiseTreeShape((2, 3)))


def test_level_wise_small_sweep():
    for shape in enumerate_level_wise_trees(20):
        assert label_level_wise_tree(shape).is_strongly_antimagic()
