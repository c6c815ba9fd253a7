"""Exhaustive search for (strongly) antimagic labelings of small graphs.

Labels are placed from the largest down.  At depth ``d`` label ``m - d`` goes
to one of the free edges, tried in a fixed order (larger endpoint degree sum
first, then larger edge id).  A branch is cut when

  * two finished vertices share a sum, or
  * in strong mode, some vertex can no longer beat a vertex of lower degree
    (its largest reachable sum is at most the other's smallest).

The first solution in this order is the canonical answer.  The tree is
split into subtrees at a fixed depth so that running them in a process pool
gives the same answer and node counts as running them in sequence.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import BudgetExceeded, ShapeInvalid
from .graph import Graph, first_violation

STRONG = "strong"
ANTI = "anti"


@dataclass(frozen=True)
class SearchConfig:
    mode: str = STRONG
    node_budget: Optional[int] = 5_000_000
    time_limit: Optional[float] = None
    workers: int = 1
    split_depth: int = 2
    max_edges: int = 14

    def __post_init__(self):
        if self.mode not in (STRONG, ANTI):
            raise ValueError(f"mode must be {STRONG!r} or {ANTI!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class SearchStats:
    nodes: int = 0
    solutions: int = 0


class _Stop(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, mode: str, node_budget, deadline, accept=None):
        self.g = g
        self.m = g.edge_count
        self.n = g.vertex_count
        self.strong = mode == STRONG
        self.budget = node_budget
        self.deadline = deadline
        self.accept = accept
        deg = g.degrees
        self.deg = deg
        self.ends = g.edges
        self.order = sorted(range(self.m), key=lambda e: (deg[g.edges[e][0]] + deg[g.edges[e][1]], e), reverse=True)
        self.classes = sorted(set(deg))
        self.members = {d: [v for v in range(self.n) if deg[v] == d] for d in self.classes}
        self.labels = [0] * self.m
        self.phi = [0] * self.n
        self.rem = list(deg)
        self.done_sums: dict[int, int] = {}
        self.nodes = 0

    # bookkeeping
    def _assign(self, e, label):
        a, b = self.ends[e]
        self.labels[e] = label
        for w in (a, b):
            self.phi[w] += label
            self.rem[w] -= 1
            if self.rem[w] == 0:
                self.done_sums[self.phi[w]] = self.done_sums.get(self.phi[w], 0) + 1

    def _unassign(self, e, label):
        a, b = self.ends[e]
        for w in (a, b):
            if self.rem[w] == 0:
                s = self.phi[w]
                self.done_sums[s] -= 1
                if not self.done_sums[s]:
                    del self.done_sums[s]
            self.phi[w] -= label
            self.rem[w] += 1
        self.labels[e] = 0

    def _feasible(self, e, left) -> bool:
        """Check after assigning edge ``e``; ``left`` labels 1..left remain."""
        a, b = self.ends[e]
        for w in (a, b):
            if self.rem[w] == 0 and self.done_sums[self.phi[w]] > 1:
                return False
        if not self.strong:
            return True
        low_max = None  # largest lower bound seen in lower classes
        for d in self.classes:
            lo_d = None
            hi_d = None
            for v in self.members[d]:
                r = self.rem[v]
                p = self.phi[v]
                lo = p + r * (r + 1) // 2
                hi = p + r * left - r * (r - 1) // 2
                lo_d = lo if lo_d is None or lo > lo_d else lo_d
                hi_d = hi if hi_d is None or hi < hi_d else hi_d
            if low_max is not None and hi_d <= low_max:
                return False
            low_max = lo_d if low_max is None or lo_d > low_max else low_max
        return True

    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _Stop("nodes")
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _Stop("time")

    def _complete_ok(self) -> bool:
        labels = tuple(self.labels)
        if first_violation(self.g, labels, strong=self.strong) is not None:
            return False
        return self.accept is None or self.accept(labels)

    def run(self, prefix: Sequence[int], count: bool, first_only: bool):
        """Search below ``prefix`` (edges holding labels m, m-1, ...).

        Returns (first solution or None, number of solutions found).
        """
        found = []
        total = 0
        ok = True
        for depth, e in enumerate(prefix):
            self._assign(e, self.m - depth)
            ok = ok and self._feasible(e, self.m - depth - 1)

        def rec(depth):
            nonlocal total
            if depth == self.m:
                if self._complete_ok():
                    total += 1
                    if not found:
                        found.append(tuple(self.labels))
                    if first_only:
                        raise _Found
                return
            label = self.m - depth
            for e in self.order:
                if self.labels[e]:
                    continue
                self._tick()
                self._assign(e, label)
                if self._feasible(e, label - 1):
                    rec(depth + 1)
                self._unassign(e, label)

        if ok:
            try:
                rec(len(prefix))
            except _Found:
                pass
        return (found[0] if found else None), total


class _Found(Exception):
    pass


def _prefixes(g: Graph, depth: int, order: Sequence[int]) -> list[tuple[int, ...]]:
    depth = min(depth, g.edge_count)
    return [p for p in itertools.permutations(order, depth)] if depth else [()]


def _run_subtree(args):
    g, mode, budget, deadline, prefix, count = args
    s = _Search(g, mode, budget, deadline)
    try:
        sol, total = s.run(prefix, count, first_only=not count)
        return ("ok", sol, total, s.nodes)
    except _Stop as stop:
        return ("stop", str(stop), 0, s.nodes)


def _check_size(g: Graph, cfg: SearchConfig):
    if g.edge_count > cfg.max_edges:
        raise ShapeInvalid(f"oracle guard: {g.edge_count} edges exceeds max_edges={cfg.max_edges}")


def _subtrees(g: Graph, cfg: SearchConfig, count: bool):
    deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit
    order = _Search(g, cfg.mode, None, None).order
    prefixes = _prefixes(g, cfg.split_depth, order)
    jobs = [(g, cfg.mode, cfg.node_budget, deadline, p, count) for p in prefixes]
    if cfg.workers == 1 or len(jobs) == 1:
        for job in jobs:
            yield job[4], _run_subtree(job)
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for job, res in zip(jobs, pool.map(_run_subtree, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers)))):
                yield job[4], res


def find_labeling(g: Graph, cfg: SearchConfig = SearchConfig(), accept: Callable | None = None, stats: SearchStats | None = None):
    """First labeling in search order, or None when none exists.

    ``accept`` is an extra predicate on complete labelings; it forces a
    sequential search.  Raises BudgetExceeded when the node budget or time
    limit runs out before the answer is settled.
    """
    _check_size(g, cfg)
    if g.edge_count == 0:
        return None
    if accept is not None:
        return _find_sequential(g, cfg, accept, stats)
    used = 0
    for prefix, (status, sol, _total, nodes) in _subtrees(g, cfg, count=False):
        used += nodes
        if status == "stop" or (cfg.node_budget is not None and used > cfg.node_budget):
            raise BudgetExceeded(f"search stopped after {used} nodes ({sol if status == 'stop' else 'nodes'})")
        if sol is not None:
            if stats is not None:
                stats.nodes, stats.solutions = used, 1
            return sol
    if stats is not None:
        stats.nodes, stats.solutions = used, 0
    return None


def _find_sequential(g, cfg, accept, stats):
    deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit
    s = _Search(g, cfg.mode, cfg.node_budget, deadline, accept)
    try:
        sol, _ = s.run((), False, first_only=True)
    except _Stop as stop:
        raise BudgetExceeded(f"search stopped after {s.nodes} nodes ({stop})") from None
    if stats is not None:
        stats.nodes, stats.solutions = s.nodes, int(sol is not None)
    return sol


def certify(g: Graph, labels: Sequence[int], mode: str = STRONG) -> bool:
    """Replay ``labels`` as one full branch of the search.

    The branch passes every prune and the completion check exactly when
    the labeling is valid, so this both confirms a labeling and exercises
    the pruning rules on it.
    """
    m = g.edge_count
    if sorted(labels) != list(range(1, m + 1)):
        return False
    prefix = sorted(range(m), key=lambda e: -labels[e])
    sol, _ = _Search(g, mode, None, None).run(prefix, False, first_only=True)
    return sol is not None


def count_labelings(g: Graph, cfg: SearchConfig = SearchConfig(max_edges=10), stats: SearchStats | None = None) -> int:
    """Exact number of labelings passing the verifier in the configured mode."""
    if g.edge_count > min(cfg.max_edges, 10):
        raise ShapeInvalid(f"counting is limited to 10 edges, got {g.edge_count}")
    if g.edge_count == 0:
        return 0
    total = used = 0
    for _prefix, (status, info, n, nodes) in _subtrees(g, cfg, count=True):
        used += nodes
        if status == "stop" or (cfg.node_budget is not None and used > cfg.node_budget):
            raise BudgetExceeded(f"count stopped after {used} nodes")
        total += n
    if stats is not None:
        stats.nodes, stats.solutions = used, total
    return total


def naive_labelings(g: Graph, mode: str = STRONG) -> np.ndarray:
    """All valid labelings by plain enumeration of the m! bijections (rows of labels)."""
    m = g.edge_count
    if m == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m > 9:
        raise ShapeInvalid("naive enumeration is limited to 9 edges")
    perms = np.array(list(itertools.permutations(range(1, m + 1))), dtype=np.int64)
    inc = np.zeros((m, g.vertex_count), dtype=np.int64)
    for i, (a, b) in enumerate(g.edges):
        inc[i, a] = inc[i, b] = 1
    phi = perms @ inc
    s = np.sort(phi, axis=1)
    ok = np.all(s[:, 1:] != s[:, :-1], axis=1)
    if mode == STRONG:
        deg = np.array(g.degrees)
        hi = deg[:, None] > deg[None, :]
        # phi[a] > phi[b] whenever deg[a] > deg[b]
        diff = phi[:, :, None] - phi[:, None, :]
        ok &= np.all((diff > 0) | ~hi[None, :, :], axis=(1, 2))
    return perms[ok]
