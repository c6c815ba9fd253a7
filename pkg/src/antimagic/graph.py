"""Graph and edge-labeling data model plus the (strongly) antimagic verifier.

Vertices are ``0..n-1`` and edge ids are positions in ``Graph.edges``.
Labels are 1-based: a labeling of a graph with ``m`` edges is a tuple whose
entry ``i`` is the label of edge ``i`` and whose values are exactly ``1..m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import LabelSetInvalid, NotAntimagic, ShapeInvalid

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with dense vertex ids and ordered edge ids."""

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ShapeInvalid("negative vertex count")
        seen = set()
        for a, b in edges:
            if a == b:
                raise ShapeInvalid(f"self-loop at vertex {a}")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ShapeInvalid(f"edge ({a}, {b}) has an endpoint outside 0..{self.vertex_count - 1}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise ShapeInvalid(f"duplicate edge {key}")
            seen.add(key)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], vertex_count: int | None = None) -> "Graph":
        edges = tuple((a, b) for a, b in edges)
        if vertex_count is None:
            vertex_count = 1 + max((max(e) for e in edges), default=-1)
        return cls(vertex_count, edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Vertex id -> set of incident edge ids."""
        inc: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for i, (a, b) in enumerate(self.edges):
            inc[a].add(i)
            inc[b].add(i)
        return tuple(frozenset(s) for s in inc)

    @cached_property
    def _edge_index(self) -> dict[Edge, int]:
        index = {}
        for i, (a, b) in enumerate(self.edges):
            index[(a, b)] = i
            index[(b, a)] = i
        return index

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def edge_id(self, a: int, b: int) -> int:
        try:
            return self._edge_index[(a, b)]
        except KeyError:
            raise KeyError(f"no edge between {a} and {b}") from None

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self._edge_index

    def neighbors(self, v: int) -> list[int]:
        out = []
        for e in sorted(self.adjacency[v]):
            a, b = self.edges[e]
            out.append(b if a == v else a)
        return out

    def leaves(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees) if d == 1]

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.vertex_count

    def is_tree(self) -> bool:
        return self.edge_count == self.vertex_count - 1 and self.is_connected()

    def canonical_edges(self) -> tuple[Edge, ...]:
        """Edges with endpoints sorted, in edge-id order."""
        return tuple((a, b) if a < b else (b, a) for a, b in self.edges)


def check_labeling(g: Graph, labels: Sequence[int]) -> tuple[int, ...]:
    """Return ``labels`` as a tuple, raising LabelSetInvalid unless it is a bijection onto 1..m."""
    labels = tuple(int(x) for x in labels)
    m = g.edge_count
    if len(labels) != m or sorted(labels) != list(range(1, m + 1)):
        raise LabelSetInvalid(f"labels must be a permutation of 1..{m}, got {list(labels)}")
    return labels


def _phi(g: Graph, labels: Sequence[int]) -> tuple[int, ...]:
    phi = [0] * g.vertex_count
    for (a, b), f in zip(g.edges, labels):
        phi[a] += f
        phi[b] += f
    return tuple(phi)


def phi_profile(g: Graph, labels: Sequence[int]) -> tuple[int, ...]:
    """Vertex sums: entry ``x`` is the sum of labels on edges incident to ``x``."""
    return _phi(g, check_labeling(g, labels))


def is_antimagic(g: Graph, labels: Sequence[int]) -> bool:
    phi = phi_profile(g, labels)
    return len(set(phi)) == len(phi)


def is_strongly_antimagic(g: Graph, labels: Sequence[int]) -> bool:
    return first_violation(g, labels) is None


def first_violation(g: Graph, labels: Sequence[int], strong: bool = True):
    """Return the first offending vertex pair ``(a, b)`` or None.

    A pair is offending when ``phi[a] == phi[b]`` or, in strong mode, when
    ``deg(a) > deg(b)`` but ``phi[a] <= phi[b]``.  Vertices are scanned in
    ascending phi (ties by id) so the reported pair is adjacent in that scan.
    """
    phi = phi_profile(g, labels)
    deg = g.degrees
    order = sorted(range(g.vertex_count), key=lambda v: (phi[v], v))
    for a, b in zip(order, order[1:]):
        if phi[a] == phi[b]:
            return (a, b)
    if not strong:
        return None
    # phi is now strictly increasing along order; degrees must be nondecreasing.
    top = None
    for v in order:
        if top is not None and deg[v] < deg[top]:
            return (top, v)
        if top is None or deg[v] > deg[top]:
            top = v
    return None


def degree_classes(g: Graph) -> dict[int, frozenset[int]]:
    """Partition of the vertices by degree."""
    classes: dict[int, set[int]] = {}
    for v, d in enumerate(g.degrees):
        classes.setdefault(d, set()).add(v)
    return {d: frozenset(vs) for d, vs in sorted(classes.items())}


@dataclass(frozen=True)
class LabeledGraph:
    """A graph together with a bijective edge labeling.

    ``phi`` and ``ordering`` are derived on first access and never stored
    separately from the graph and labels they come from.
    """

    graph: Graph
    labels: tuple[int, ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", check_labeling(self.graph, self.labels))

    @cached_property
    def phi(self) -> tuple[int, ...]:
        return _phi(self.graph, self.labels)

    @cached_property
    def ordering(self) -> tuple[int, ...]:
        return induced_ordering(self)

    def label_of(self, a: int, b: int) -> int:
        return self.labels[self.graph.edge_id(a, b)]

    def is_antimagic(self) -> bool:
        return len(set(self.phi)) == len(self.phi)

    def is_strongly_antimagic(self) -> bool:
        return is_strongly_antimagic(self.graph, self.labels)


def induced_ordering(lg: LabeledGraph) -> tuple[int, ...]:
    """Vertices sorted by strictly ascending phi; ties are an error."""
    phi = lg.phi
    order = tuple(sorted(range(lg.graph.vertex_count), key=lambda v: phi[v]))
    for a, b in zip(order, order[1:]):
        if phi[a] == phi[b]:
            raise NotAntimagic(f"vertices {a} and {b} share phi = {phi[a]}")
    return order


def transplant(lg: LabeledGraph, names: Sequence[int], target: Graph) -> LabeledGraph:
    """Carry a labeling onto ``target`` through the vertex map ``i -> names[i]``.

    The mapped edge set must coincide with the edge set of ``target``.
    """
    g = lg.graph
    if len(names) != g.vertex_count or len(set(names)) != len(names):
        raise ShapeInvalid("vertex map is not injective on the labeled graph")
    if g.vertex_count != target.vertex_count or g.edge_count != target.edge_count:
        raise ShapeInvalid("labeled graph and target differ in size")
    labels = [0] * target.edge_count
    for (a, b), f in zip(g.edges, lg.labels):
        try:
            labels[target.edge_id(names[a], names[b])] = f
        except KeyError:
            raise ShapeInvalid(f"mapped edge ({names[a]}, {names[b]}) missing from target") from None
    return LabeledGraph(target, tuple(labels))
