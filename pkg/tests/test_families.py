import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from antimagic import families as fam
from antimagic.errors import ShapeInvalid

# reference counts from networkx.nonisomorphic_trees, filtered by number of degree > 2 vertices
SPIDERS_UP_TO_12 = 223
DOUBLE_SPIDERS_UP_TO_13 = 1576


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def test_spider_count():
    assert len(list(fam.enumerate_spiders(12))) == SPIDERS_UP_TO_12


def test_double_spider_count():
    assert len(list(fam.enumerate_double_spiders(13))) == DOUBLE_SPIDERS_UP_TO_13


@pytest.mark.parametrize("n", range(4, 12))
def test_double_spiders_match_tree_census(n):
    want = sum(1 for t in nx.nonisomorphic_trees(n) if sum(d > 2 for _, d in t.degree) == 2)
    got = [s for s in fam.enumerate_double_spiders(n - 1) if s.edge_count == n - 1]
    assert len(got) == want
    graphs = [_nx(s.graph()) for s in got]
    for i in range(len(graphs)):
        for j in range(i):
            assert not nx.is_isomorphic(graphs[i], graphs[j])


def test_enumeration_is_deterministic():
    assert list(fam.enumerate_cycle_double_spiders(14)) == list(fam.enumerate_cycle_double_spiders(14))


def test_canonical_spider_layout():
    g = fam.SpiderShape((1, 3, 2)).graph()
    assert g.edges == ((0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6))


def test_double_spider_layout():
    lay = fam.DoubleSpiderShape((1, 1, 1), 5, (3, 5)).layout()
    assert lay.middle == (0, 1, 2, 3, 4, 5)
    assert lay.right == ((6, 7, 8, 9, 10), (11, 12, 13))
    assert lay.left == ((14,), (15,), (16,))
    assert lay.graph().is_tree()


def test_level_wise_tree_sizes():
    assert fam.LevelWiseTreeShape((3, 2)).graph().edge_count == 3 + 3
    assert fam.LevelWiseTreeShape((3, 3), roots=2).graph().edge_count == 1 + 4 + 8
    assert all(s.is_nonincreasing() for s in fam.enumerate_level_wise_trees(40))


@pytest.mark.parametrize(
    "bad",
    [
        lambda: fam.SpiderShape((1, 1)),
        lambda: fam.DoubleSpiderShape((1,), 1, (1, 1)),
        lambda: fam.DoubleSpiderShape((1, 1), 0, (1, 1)),
        lambda: fam.CycleSpiderShape((3,)),
        lambda: fam.CycleDoubleSpiderShape((2,), 1, (3,)),
        lambda: fam.PathShape(1),
        lambda: fam.LevelWiseTreeShape((1,)),
    ],
)
def test_invalid_shapes(bad):
    with pytest.raises(ShapeInvalid):
        bad()


SHAPES = [
    fam.PathShape(6),
    fam.CycleShape(5),
    fam.SpiderShape((4, 2, 1, 1)),
    fam.DoubleSpiderShape((2, 2, 1), 4, (3, 1)),
    fam.CycleSpiderShape((5, 3)),
    fam.CycleDoubleSpiderShape((4, 3), 2, (6,)),
    fam.LevelWiseTreeShape((3, 2, 2), 2),
]


@pytest.mark.parametrize("shape", SHAPES)
def test_shape_args_round_trip(shape):
    family, params = fam.shape_to_args(shape)
    assert fam.shape_from_args(family, params) == shape


@pytest.mark.parametrize("shape", SHAPES[:-1])
def test_recognize_canonical(shape):
    assert fam.recognize(shape.graph()) == shape


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=2, max_size=4), st.integers(1, 5), st.lists(st.integers(1, 5), min_size=2, max_size=4), st.randoms())
def test_recognize_relabeled_double_spider(left, x, right, rnd):
    left, right = sorted(left, reverse=True), sorted(right, reverse=True)
    if (len(left), left) < (len(right), right):
        left, right = right, left
    shape = fam.DoubleSpiderShape(tuple(left), x, tuple(right))
    g = shape.graph()
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    h = fam.Graph(g.vertex_count, tuple((perm[a], perm[b]) for a, b in g.edges))
    assert fam.recognize(h) == shape


def test_recognize_rejects_other_graphs():
    with pytest.raises(ShapeInvalid):
        fam.recognize(fam.LevelWiseTreeShape((3, 3)).graph())
