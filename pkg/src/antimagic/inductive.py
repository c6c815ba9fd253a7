"""Extension operators that grow a strongly antimagic labeling edge by edge.

Every operator is built on :func:`extend`: shift all labels up by one and give
the new edge label 1.  If the extended vertex sits directly below a jump in
degree (or at the top of the phi ordering) the phi ordering of the old
vertices survives, and a new leaf enters at the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import (
    AlreadyAdjacent,
    EmptyClass,
    HasLeaves,
    LeafCountInvalid,
    NotStronglyAntimagic,
    ShapeInvalid,
    TargetInvalid,
    VerificationFailed,
)
from .families import LevelWiseTreeShape
from .graph import Graph, LabeledGraph, transplant

NEW_LEAF = "new-leaf"
CONNECT = "connect-to-predecessor"


@dataclass(frozen=True)
class ExtensionTarget:
    """Position ``j+1`` (1-based) in the phi ordering and the kind of new edge."""

    position: int
    mode: str = NEW_LEAF

    def __post_init__(self):
        if self.mode not in (NEW_LEAF, CONNECT):
            raise ValueError(f"unknown extension mode {self.mode!r}")


def _require_strong(lg: LabeledGraph):
    if not lg.is_strongly_antimagic():
        raise NotStronglyAntimagic("input labeling is not strongly antimagic")


def extend(lg: LabeledGraph, t: ExtensionTarget) -> LabeledGraph:
    """Add one edge at ordering position ``t.position`` and relabel.

    The new edge joins ``v_{j+1}`` to a new leaf or, in connect mode, to its
    predecessor ``v_j``.  It is appended after the existing edges, and a new
    leaf becomes vertex ``n``.
    """
    _require_strong(lg)
    g = lg.graph
    if min(g.degrees, default=1) < 1:
        raise TargetInvalid("graph has an isolated vertex")
    order = lg.ordering
    n = g.vertex_count
    pos = t.position
    if not 1 <= pos <= n:
        raise TargetInvalid(f"position {pos} outside 1..{n}")
    target = order[pos - 1]
    if pos < n and not g.degree(target) < g.degree(order[pos]):
        raise TargetInvalid(
            f"deg(v_{pos}) = {g.degree(target)} is not below deg(v_{pos + 1}) = {g.degree(order[pos])}"
        )
    if t.mode == NEW_LEAF:
        new_edge = (target, n)
        vertex_count = n + 1
    else:
        if pos < 2:
            raise TargetInvalid("connect mode needs a predecessor in the ordering")
        pred = order[pos - 2]
        if g.has_edge(pred, target):
            raise AlreadyAdjacent(f"vertices {pred} and {target} are already adjacent")
        new_edge = (pred, target)
        vertex_count = n
    out = LabeledGraph(Graph(vertex_count, g.edges + (new_edge,)), tuple(f + 1 for f in lg.labels) + (1,))
    if not out.is_strongly_antimagic():
        raise VerificationFailed("extension produced a labeling that is not strongly antimagic")
    return out


def position_of(lg: LabeledGraph, vertex: int) -> int:
    return lg.ordering.index(vertex) + 1


def extend_at(lg: LabeledGraph, vertex: int, mode: str = NEW_LEAF) -> LabeledGraph:
    """:func:`extend` addressed by vertex id instead of ordering position."""
    return extend(lg, ExtensionTarget(position_of(lg, vertex), mode))


class Growth:
    """A labeled graph under construction whose vertices carry external names.

    Constructions address vertices by the names they have in the graph being
    built (usually canonical ids of the final family member).  Unnamed new
    vertices get the next free integer.
    """

    def __init__(self, lg: LabeledGraph, names: Sequence[Hashable] | None = None):
        self.lg = lg
        self.names = list(range(lg.graph.vertex_count)) if names is None else list(names)
        if len(self.names) != lg.graph.vertex_count or len(set(self.names)) != len(self.names):
            raise ValueError("names must be distinct, one per vertex")
        self._index = {name: i for i, name in enumerate(self.names)}

    def _fresh(self):
        return len(self.names)

    def vertex(self, name) -> int:
        return self._index[name]

    def phi(self, name) -> int:
        return self.lg.phi[self._index[name]]

    def degree(self, name) -> int:
        return self.lg.graph.degree(self._index[name])

    def leaves(self) -> list:
        """Names of the current leaves, lowest phi first."""
        g = self.lg.graph
        return [self.names[v] for v in self.lg.ordering if g.degree(v) == 1]

    def _push(self, lg: LabeledGraph, name=None):
        grew = lg.graph.vertex_count > self.lg.graph.vertex_count
        self.lg = lg
        if grew:
            if name is None:
                name = self._fresh()
            if name in self._index:
                raise ValueError(f"name {name!r} already in use")
            self._index[name] = len(self.names)
            self.names.append(name)
        return name

    def add_leaf(self, at, name=None):
        """New pendant edge at the vertex named ``at``; returns the new leaf's name."""
        return self._push(extend_at(self.lg, self._index[at], NEW_LEAF), name)

    def join(self, a, b):
        """Edge between two vertices that are consecutive in the phi ordering."""
        pa = position_of(self.lg, self._index[a])
        pb = position_of(self.lg, self._index[b])
        if abs(pa - pb) != 1:
            raise TargetInvalid(f"{a!r} and {b!r} are not consecutive in the phi ordering")
        self._push(extend(self.lg, ExtensionTarget(max(pa, pb), CONNECT)))

    def add_leaves_to_class(self, degree: int, namer: Callable | None = None):
        """Pendant edge at every vertex of the given degree (highest phi first)."""
        m0 = self.lg.graph.edge_count
        lg = extend_all_in_class(self.lg, degree)
        self.lg = lg
        for a, b in lg.graph.edges[m0:]:
            parent = self.names[a]
            name = namer(parent) if namer else self._fresh()
            if name in self._index:
                raise ValueError(f"name {name!r} already in use")
            self._index[name] = b
            self.names.append(name)
        assert len(self.names) == lg.graph.vertex_count

    def grow_between(self, a, b, inner: Sequence):
        """Close an ``a``-``b`` path through the new vertices ``inner`` (listed from ``a``).

        ``a`` and ``b`` must be the only two leaves.  The top leaf is extended
        until one edge remains, and the two leaves are then joined.
        """
        inner = list(inner)
        lo, hi = -1, len(inner)  # frontier indices into inner; -1 and len mean a and b
        ends = {a: "lo", b: "hi"}
        while hi - lo > 1:
            leaves = self.leaves()
            if len(leaves) != 2 or set(leaves) != set(ends):
                raise LeafCountInvalid(f"expected exactly the two path ends as leaves, found {leaves}")
            top = leaves[-1]
            if ends[top] == "lo":
                lo += 1
                new = inner[lo]
                del ends[top]
                ends[new] = "lo"
            else:
                hi -= 1
                new = inner[hi]
                del ends[top]
                ends[new] = "hi"
            self.add_leaf(top, new)
        x, y = list(ends)
        self.join(x, y)

    def attach_cycle(self, at, ring: Sequence):
        """Attach a cycle at ``at`` whose new vertices are ``ring`` in cycle order."""
        if len(ring) < 2:
            raise ShapeInvalid("a cycle needs length >= 3")
        g = self.lg.graph
        if g.leaves():
            raise HasLeaves("cycle attachment needs a graph without leaves")
        order = self.lg.ordering
        v = self._index[at]
        pos = order.index(v) + 1
        if pos < len(order) and not g.degree(v) <= g.degree(order[pos]) - 2:
            raise TargetInvalid(
                f"deg({at!r}) = {g.degree(v)} must be at most deg(successor) - 2 = {g.degree(order[pos]) - 2}"
            )
        self.add_leaf(at, ring[0])
        self.add_leaf(at, ring[-1])
        self.grow_between(ring[0], ring[-1], ring[1:-1])

    def result(self, target: Graph | None = None) -> LabeledGraph:
        """The labeled graph, transplanted onto ``target`` when the names are its vertex ids."""
        if target is None:
            return self.lg
        return transplant(self.lg, self.names, target)


def extend_all_in_class(lg: LabeledGraph, i: int) -> LabeledGraph:
    """Pendant edge at every vertex of degree ``i``, processing the class from highest phi down.

    Each step targets a vertex whose successor already has degree above
    ``i``.  The chain is verified after the fact.
    """
    _require_strong(lg)
    phi = lg.phi
    members = [v for v in range(lg.graph.vertex_count) if lg.graph.degree(v) == i]
    if not members:
        raise EmptyClass(f"no vertex of degree {i}")
    members.sort(key=lambda v: phi[v], reverse=True)
    out = lg
    try:
        for v in members:
            out = extend_at(out, v, NEW_LEAF)
    except TargetInvalid as exc:
        raise VerificationFailed(f"pendant chain broke: {exc}") from exc
    if not out.is_strongly_antimagic():
        raise VerificationFailed("pendant batch is not strongly antimagic")
    return out


def attach_cycle(lg: LabeledGraph, v: int, k: int) -> LabeledGraph:
    """Attach a ``k``-cycle sharing only vertex ``v``; new vertices are appended."""
    if k < 3:
        raise ShapeInvalid(f"cycle length must be >= 3, got {k}")
    growth = Growth(lg)
    n = lg.graph.vertex_count
    growth.attach_cycle(v, list(range(n, n + k - 1)))
    out = growth.result()
    # vertex names equal ids here, but new ids were assigned in growth order
    names = growth.names
    return transplant(out, names, Graph(out.graph.vertex_count, tuple(
        (names[a], names[b]) for a, b in out.graph.edges)))


def attach_path(lg: LabeledGraph, k: int) -> LabeledGraph:
    """Join the only two leaves by a new path of length ``k``."""
    if k < 1:
        raise ShapeInvalid(f"path length must be >= 1, got {k}")
    _require_strong(lg)
    g = lg.graph
    leaves = g.leaves()
    if len(leaves) != 2:
        raise LeafCountInvalid(f"expected exactly two leaves, found {len(leaves)}")
    a, b = leaves
    if k == 1 and g.has_edge(a, b):
        raise AlreadyAdjacent("the two leaves are adjacent")
    growth = Growth(lg)
    n = g.vertex_count
    growth.grow_between(a, b, list(range(n, n + k - 1)))
    out = growth.result()
    names = growth.names
    return transplant(out, names, Graph(out.graph.vertex_count, tuple(
        (names[x], names[y]) for x, y in out.graph.edges)))


def label_level_wise_tree(shape: LevelWiseTreeShape) -> LabeledGraph:
    """Strongly antimagic labeling of a level-wise regular tree with nonincreasing degrees.

    Start from a star (one root) or ``P_4`` (two roots), raise the roots to
    degree ``t_0`` with pendant batches, then grow each level by adding a
    pendant to every vertex of degree 1, 2, ..., ``t_i - 1`` in turn.
    """
    if not shape.is_nonincreasing():
        raise ShapeInvalid(f"level degrees must be nonincreasing, got {list(shape.degrees)}")
    target = shape.graph()
    children = shape.children()
    used = {p: 0 for p in children}

    def child_of(parent):
        c = children[parent][used[parent]]
        used[parent] += 1
        return c

    t0 = shape.degrees[0]
    if shape.roots == 1:
        kids = [child_of(0) for _ in range(t0)]
        star = Graph(t0 + 1, tuple((0, i) for i in range(1, t0 + 1)))
        growth = Growth(LabeledGraph(star, tuple(range(1, t0 + 1))), [0] + kids)
    else:
        a, b = child_of(0), child_of(1)
        p4 = Graph(4, ((0, 1), (1, 2), (2, 3)))
        growth = Growth(LabeledGraph(p4, (1, 3, 2)), [a, 0, 1, b])
        for c in range(2, t0):
            growth.add_leaves_to_class(c, child_of)
    for t in shape.degrees[1:]:
        for c in range(1, t):
            growth.add_leaves_to_class(c, child_of)
    out = growth.result(target)
    if not out.is_strongly_antimagic():
        raise VerificationFailed(f"level-wise construction failed for {shape}")
    return out
