import itertools

import networkx as nx
import pytest

from antimagic.errors import BudgetExceeded, ShapeInvalid
from antimagic.families import CycleShape, DoubleSpiderShape, PathShape, SpiderShape
from antimagic.graph import Graph, is_strongly_antimagic
from antimagic.oracle import ANTI, STRONG, SearchConfig, SearchStats, certify, count_labelings, find_labeling, naive_labelings
from antimagic.spider_lab import label_cycle

# counts computed by full enumeration of all m! bijections
FROZEN_COUNTS = {
    "C4": (CycleShape(4), 8, 8),
    "C5": (CycleShape(5), 30, 30),
    "K13": (SpiderShape((1, 1, 1)), 6, 6),
    "P5": (PathShape(5), 4, 6),
    "S211": (SpiderShape((2, 1, 1)), 10, 12),
    "DS": (DoubleSpiderShape((1, 1), 1, (1, 1)), 96, 96),
}


def small_connected_graphs(max_edges):
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_edges() and g.number_of_edges() <= max_edges and nx.is_connected(g):
            yield Graph(g.number_of_nodes(), tuple(g.edges))
    for n in range(8, max_edges + 2):
        for t in nx.nonisomorphic_trees(n):
            yield Graph(n, tuple(t.edges))


def test_trivial_examples():
    assert find_labeling(PathShape(2).graph()) is None
    assert find_labeling(PathShape(3).graph()) == (1, 2)
    assert find_labeling(PathShape(4).graph()) == (1, 3, 2)
    assert count_labelings(PathShape(2).graph()) == 0


@pytest.mark.parametrize("name", sorted(FROZEN_COUNTS))
def test_frozen_counts(name):
    shape, strong, anti = FROZEN_COUNTS[name]
    g = shape.graph()
    assert count_labelings(g) == strong
    assert count_labelings(g, SearchConfig(mode=ANTI)) == anti


def test_naive_p4():
    rows = {tuple(r) for r in naive_labelings(PathShape(4).graph())}
    assert rows == {(1, 3, 2), (2, 3, 1)}


def agreement_failures(max_edges=7):
    bad = []
    for g in small_connected_graphs(max_edges):
        for mode in (STRONG, ANTI):
            rows = naive_labelings(g, mode)
            cfg = SearchConfig(mode=mode, max_edges=10)
            n = count_labelings(g, cfg)
            sol = find_labeling(g, cfg)
            if n != len(rows) or (sol is None) != (len(rows) == 0):
                bad.append((g, mode, n, len(rows)))
            if sol is not None and sol not in {tuple(r) for r in rows}:
                bad.append((g, mode, sol))
    return bad


def test_agreement_up_to_5_edges():
    assert agreement_failures(5) == []


def test_first_solution_is_valid():
    g = DoubleSpiderShape((2, 1, 1), 2, (2, 1)).graph()
    stats = SearchStats()
    sol = find_labeling(g, stats=stats)
    assert is_strongly_antimagic(g, sol)
    assert stats.nodes > 0 and stats.solutions == 1


def test_workers_do_not_change_results():
    g = SpiderShape((3, 2, 2, 1)).graph()
    results = {w: (find_labeling(g, SearchConfig(workers=w)), count_labelings(g, SearchConfig(workers=w, max_edges=10))) for w in (1, 2)}
    assert results[1] == results[2]


def test_budget_is_not_absence():
    g = SpiderShape((4, 3, 3)).graph()
    with pytest.raises(BudgetExceeded):
        count_labelings(g, SearchConfig(node_budget=50))
    with pytest.raises(BudgetExceeded):
        find_labeling(g, SearchConfig(node_budget=5))


def test_size_guard():
    with pytest.raises(ShapeInvalid):
        find_labeling(PathShape(16).graph())
    with pytest.raises(ShapeInvalid):
        count_labelings(PathShape(12).graph())


def test_accept_predicate():
    g = CycleShape(5).graph()
    sol = find_labeling(g, accept=lambda labels: labels[0] == 5)
    assert sol[0] == 5 and is_strongly_antimagic(g, sol)


@pytest.mark.parametrize("n", range(3, 13))
def test_label_cycle_confirmed(n):
    g = CycleShape(n).graph()
    assert find_labeling(g) is not None
    assert certify(g, label_cycle(n).labels)


def test_certify_rejects():
    g = PathShape(5).graph()
    assert not certify(g, (1, 2, 3, 4))
    assert certify(g, (1, 2, 3, 4), ANTI)
    assert not certify(g, (1, 1, 3, 4))
