"""Shared fixtures: random strongly antimagic trees and valid extension targets."""

import random

import networkx as nx

from antimagic.graph import Graph, LabeledGraph
from antimagic.inductive import CONNECT, NEW_LEAF
from antimagic.oracle import SearchConfig, find_labeling


def random_tree(rnd: random.Random, n: int) -> Graph:
    if n == 2:
        return Graph(2, ((0, 1),))
    t = nx.from_prufer_sequence([rnd.randrange(n) for _ in range(n - 2)])
    return Graph(n, tuple(sorted(tuple(sorted(e)) for e in t.edges)))


def random_strong_tree(rnd: random.Random, lo: int = 3, hi: int = 9) -> LabeledGraph:
    while True:
        g = random_tree(rnd, rnd.randint(lo, hi))
        labels = find_labeling(g, SearchConfig(node_budget=200_000))
        if labels is not None:
            return LabeledGraph(g, labels)


def valid_positions(lg: LabeledGraph):
    order, g = lg.ordering, lg.graph
    n = len(order)
    return [p for p in range(1, n + 1) if p == n or g.degree(order[p - 1]) < g.degree(order[p])]


def valid_modes(lg: LabeledGraph, pos: int):
    modes = [NEW_LEAF]
    if pos >= 2 and not lg.graph.has_edge(lg.ordering[pos - 2], lg.ordering[pos - 1]):
        modes.append(CONNECT)
    return modes
