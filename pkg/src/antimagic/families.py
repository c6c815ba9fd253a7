"""Shapes, canonical embeddings and exhaustive enumerators for the graph families.

Canonical numbering puts the center(s) first and lays every leg out outward
from its center, legs in nonincreasing length.  Edge ids follow the order in
which edges are laid out, so a labeling of a family member can be written as
a plain label array.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ShapeInvalid
from .graph import Graph


def _legs(values: Sequence[int], what: str, minimum: int = 1) -> tuple[int, ...]:
    out = tuple(sorted((int(v) for v in values), reverse=True))
    if any(v < minimum for v in out):
        raise ShapeInvalid(f"{what} must all be >= {minimum}, got {list(values)}")
    return out


@dataclass(frozen=True)
class PathShape:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ShapeInvalid(f"path needs n >= 2 vertices, got {self.n}")

    @property
    def edge_count(self):
        return self.n - 1

    def graph(self) -> Graph:
        return Graph(self.n, tuple((i, i + 1) for i in range(self.n - 1)))


@dataclass(frozen=True)
class CycleShape:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ShapeInvalid(f"cycle needs n >= 3, got {self.n}")

    @property
    def edge_count(self):
        return self.n

    def graph(self) -> Graph:
        return Graph(self.n, tuple((i, (i + 1) % self.n) for i in range(self.n)))


@dataclass(frozen=True)
class SpiderShape:
    """Leg lengths of a spider; stored in nonincreasing order."""

    legs: tuple[int, ...]

    def __post_init__(self):
        legs = _legs(self.legs, "leg lengths")
        if len(legs) < 3:
            raise ShapeInvalid(f"a spider needs at least 3 legs, got {len(legs)}")
        object.__setattr__(self, "legs", legs)

    @property
    def edge_count(self):
        return sum(self.legs)

    def layout(self) -> "SpiderLayout":
        legs = []
        nxt = 1
        for length in self.legs:
            legs.append(tuple(range(nxt, nxt + length)))
            nxt += length
        return SpiderLayout(0, tuple(legs))

    def graph(self) -> Graph:
        return self.layout().graph()


@dataclass(frozen=True)
class SpiderLayout:
    """Vertex ids of a spider: each leg is listed outward from the center."""

    center: int
    legs: tuple[tuple[int, ...], ...]

    def edges(self):
        for leg in self.legs:
            prev = self.center
            for w in leg:
                yield (prev, w)
                prev = w

    def graph(self) -> Graph:
        n = 1 + sum(len(leg) for leg in self.legs)
        return Graph(n, tuple(self.edges()))


@dataclass(frozen=True)
class DoubleSpiderShape:
    """Left legs at ``u``, middle path length, right legs at ``v``.

    ``deg(u) >= deg(v) >= 3`` is enforced; legs are kept nonincreasing.
    """

    left: tuple[int, ...]
    middle: int
    right: tuple[int, ...]

    def __post_init__(self):
        left = _legs(self.left, "left legs")
        right = _legs(self.right, "right legs")
        if len(right) < 2:
            raise ShapeInvalid("v needs at least two right legs")
        if len(left) < len(right):
            raise ShapeInvalid("deg(u) must be at least deg(v); list the larger side first")
        if int(self.middle) < 1:
            raise ShapeInvalid("middle path must have length >= 1")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "middle", int(self.middle))

    @property
    def edge_count(self):
        return sum(self.left) + self.middle + sum(self.right)

    @property
    def deg_u(self):
        return len(self.left) + 1

    @property
    def deg_v(self):
        return len(self.right) + 1

    def layout(self) -> "DoubleSpiderLayout":
        middle = tuple(range(self.middle + 1))
        nxt = self.middle + 1
        right = []
        for length in self.right:
            right.append(tuple(range(nxt, nxt + length)))
            nxt += length
        left = []
        for length in self.left:
            left.append(tuple(range(nxt, nxt + length)))
            nxt += length
        return DoubleSpiderLayout(middle, tuple(left), tuple(right))

    def graph(self) -> Graph:
        return self.layout().graph()


@dataclass(frozen=True)
class DoubleSpiderLayout:
    """Vertex ids of a double spider.

    ``middle`` runs from ``u`` to ``v`` inclusive; legs are listed outward
    from their center, excluding the center itself.
    """

    middle: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    @property
    def u(self):
        return self.middle[0]

    @property
    def v(self):
        return self.middle[-1]

    def edges(self):
        for a, b in zip(self.middle, self.middle[1:]):
            yield (a, b)
        for center, legs in ((self.v, self.right), (self.u, self.left)):
            for leg in legs:
                prev = center
                for w in leg:
                    yield (prev, w)
                    prev = w

    def graph(self) -> Graph:
        n = len(self.middle) + sum(len(leg) for leg in self.left + self.right)
        return Graph(n, tuple(self.edges()))

    def shape(self) -> DoubleSpiderShape:
        return DoubleSpiderShape(
            tuple(len(leg) for leg in self.left), len(self.middle) - 1, tuple(len(leg) for leg in self.right)
        )


def _cycle_edges(center: int, length: int, nxt: int):
    ring = [center] + list(range(nxt, nxt + length - 1)) + [center]
    return list(zip(ring, ring[1:])), nxt + length - 1


@dataclass(frozen=True)
class CycleSpiderShape:
    """Cycles sharing one center vertex; at least two cycles, each of length >= 3."""

    cycles: tuple[int, ...]

    def __post_init__(self):
        cycles = _legs(self.cycles, "cycle lengths", 3)
        if len(cycles) < 2:
            raise ShapeInvalid("a cycle spider needs at least two cycles (a single cycle is a plain cycle)")
        object.__setattr__(self, "cycles", cycles)

    @property
    def edge_count(self):
        return sum(self.cycles)

    def graph(self) -> Graph:
        edges, nxt = [], 1
        for c in self.cycles:
            more, nxt = _cycle_edges(0, c, nxt)
            edges += more
        return Graph(nxt, tuple(edges))


@dataclass(frozen=True)
class CycleDoubleSpiderShape:
    """Cycles attached at both ends ``u`` (left) and ``v`` (right) of a path."""

    left: tuple[int, ...]
    middle: int
    right: tuple[int, ...]

    def __post_init__(self):
        left = _legs(self.left, "left cycles", 3)
        right = _legs(self.right, "right cycles", 3)
        if not left or not right:
            raise ShapeInvalid("each end needs at least one cycle")
        if int(self.middle) < 1:
            raise ShapeInvalid("middle path must have length >= 1")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "middle", int(self.middle))

    @property
    def edge_count(self):
        return sum(self.left) + self.middle + sum(self.right)

    def graph(self) -> Graph:
        x = self.middle
        edges = [(i, i + 1) for i in range(x)]
        nxt = x + 1
        for center, cycles in ((x, self.right), (0, self.left)):
            for c in cycles:
                more, nxt = _cycle_edges(center, c, nxt)
                edges += more
        return Graph(nxt, tuple(edges))


@dataclass(frozen=True)
class LevelWiseTreeShape:
    """Complete level-wise regular tree: level-i vertices have degree ``degrees[i]``.

    With ``roots=2`` the two level-0 vertices are adjacent; leaves sit at
    level ``len(degrees)``.
    """

    degrees: tuple[int, ...]
    roots: int = 1

    def __post_init__(self):
        degrees = tuple(int(t) for t in self.degrees)
        if not degrees or any(t < 2 for t in degrees):
            raise ShapeInvalid(f"level degrees must be a nonempty sequence of integers >= 2, got {list(degrees)}")
        if self.roots not in (1, 2):
            raise ShapeInvalid("roots must be 1 or 2")
        object.__setattr__(self, "degrees", degrees)

    @property
    def height(self):
        return len(self.degrees)

    @property
    def edge_count(self):
        return self.graph().edge_count

    def is_nonincreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.degrees, self.degrees[1:]))

    def levels(self) -> list[list[int]]:
        return self._build()[1]

    def children(self) -> dict[int, list[int]]:
        """Parent -> children in canonical order (the root edge of T^2 excluded)."""
        return self._build()[2]

    def graph(self) -> Graph:
        return self._build()[0]

    def _build(self):
        if self.roots == 1:
            level = [0]
            edges = []
            nxt = 1
        else:
            level = [0, 1]
            edges = [(0, 1)]
            nxt = 2
        levels = [level]
        children: dict[int, list[int]] = {}
        for i, t in enumerate(self.degrees):
            kids = t - (self.roots - 1 if i == 0 else 1)
            nxt_level = []
            for p in level:
                children[p] = []
                for _ in range(kids):
                    edges.append((p, nxt))
                    children[p].append(nxt)
                    nxt_level.append(nxt)
                    nxt += 1
            level = nxt_level
            levels.append(level)
        return Graph(nxt, tuple(edges)), levels, children


def generate(shape) -> Graph:
    """Canonical graph of a family member; a pure function of the shape."""
    return shape.graph()


def _partitions(max_total: int, count_min: int, lo: int = 1, hi: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples with parts in [lo, hi], length >= count_min, sum <= max_total."""

    def rec(prefix, remaining, cap):
        if len(prefix) >= count_min:
            yield tuple(prefix)
        for part in range(min(cap, remaining), lo - 1, -1):
            prefix.append(part)
            yield from rec(prefix, remaining - part, part)
            prefix.pop()

    yield from rec([], max_total, hi if hi is not None else max_total)


def _ordered(items, key):
    return sorted(items, key=key)


def enumerate_spiders(max_edges: int) -> Iterator[SpiderShape]:
    """Every spider with at most ``max_edges`` edges exactly once.

    Order: by edge count, then number of legs, then legs descending.
    """
    parts = [p for p in _partitions(max_edges, 3)]
    for legs in _ordered(parts, key=lambda p: (sum(p), len(p), tuple(-x for x in p))):
        yield SpiderShape(legs)


def enumerate_double_spiders(max_edges: int) -> Iterator[DoubleSpiderShape]:
    """Every double spider with at most ``max_edges`` edges, one per isomorphism class."""
    out = []
    for x in range(1, max_edges - 3):
        budget = max_edges - x
        for right in _partitions(budget - 2, 2):
            for left in _partitions(budget - sum(right), len(right)):
                if len(left) == len(right) and left < right:
                    continue
                out.append(DoubleSpiderShape(left, x, right))
    out.sort(key=lambda s: (s.edge_count, s.deg_u, s.deg_v, s.middle, s.left, s.right))
    yield from out


def enumerate_cycle_spiders(max_edges: int) -> Iterator[CycleSpiderShape]:
    parts = [p for p in _partitions(max_edges, 2, lo=3)]
    for cycles in _ordered(parts, key=lambda p: (sum(p), len(p), tuple(-x for x in p))):
        yield CycleSpiderShape(cycles)


def enumerate_cycle_double_spiders(max_edges: int) -> Iterator[CycleDoubleSpiderShape]:
    out = []
    for x in range(1, max_edges - 5):
        budget = max_edges - x
        for right in _partitions(budget - 3, 1, lo=3):
            for left in _partitions(budget - sum(right), len(right), lo=3):
                if len(left) == len(right) and left < right:
                    continue
                out.append(CycleDoubleSpiderShape(left, x, right))
    out.sort(key=lambda s: (s.edge_count, len(s.left), len(s.right), s.middle, s.left, s.right))
    yield from out


def enumerate_level_wise_trees(max_edges: int, nonincreasing: bool = True) -> Iterator[LevelWiseTreeShape]:
    """Level-wise regular trees with at most ``max_edges`` edges.

    With ``nonincreasing`` only degree sequences t_0 >= t_1 >= ... are emitted.
    """
    out = []

    def edges_of(degrees, roots):
        return LevelWiseTreeShape(tuple(degrees), roots).graph().edge_count

    def rec(degrees, roots):
        if degrees:
            out.append(LevelWiseTreeShape(tuple(degrees), roots))
        cap = degrees[-1] if (degrees and nonincreasing) else max_edges + 1
        for t in range(2, cap + 1):
            # edge count grows with t, so the first overflow ends the loop
            if edges_of(degrees + [t], roots) > max_edges:
                break
            degrees.append(t)
            rec(degrees, roots)
            degrees.pop()

    for roots in (1, 2):
        rec([], roots)
    out.sort(key=lambda s: (s.edge_count, s.roots, s.degrees))
    yield from out


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ShapeInvalid(f"expected comma-separated integers, got {text!r}") from None


def shape_from_args(family: str, params: Sequence[str]):
    """Build a shape from CLI-style arguments, e.g. ``double_spider 1,1,1 5 3,5``."""
    family = family.replace("-", "_")

    def need(k):
        if len(params) != k:
            raise ShapeInvalid(f"{family} expects {k} parameter(s), got {len(params)}")

    try:
        if family == "path":
            need(1)
            return PathShape(int(params[0]))
        if family == "cycle":
            need(1)
            return CycleShape(int(params[0]))
        if family == "spider":
            need(1)
            return SpiderShape(parse_int_list(params[0]))
        if family == "double_spider":
            need(3)
            return DoubleSpiderShape(parse_int_list(params[0]), int(params[1]), parse_int_list(params[2]))
        if family == "cycle_spider":
            need(1)
            return CycleSpiderShape(parse_int_list(params[0]))
        if family == "cycle_double_spider":
            need(3)
            return CycleDoubleSpiderShape(parse_int_list(params[0]), int(params[1]), parse_int_list(params[2]))
        if family in ("level_wise_tree", "level_wise"):
            if len(params) not in (1, 2):
                raise ShapeInvalid("level_wise_tree expects degrees and optional root count")
            roots = int(params[1]) if len(params) == 2 else 1
            return LevelWiseTreeShape(parse_int_list(params[0]), roots)
    except ValueError as exc:
        raise ShapeInvalid(str(exc)) from None
    raise ShapeInvalid(f"unknown family {family!r}")


def shape_to_args(shape) -> tuple[str, list[str]]:
    """Inverse of :func:`shape_from_args`."""

    def j(xs):
        return ",".join(str(x) for x in xs)

    if isinstance(shape, PathShape):
        return "path", [str(shape.n)]
    if isinstance(shape, CycleShape):
        return "cycle", [str(shape.n)]
    if isinstance(shape, SpiderShape):
        return "spider", [j(shape.legs)]
    if isinstance(shape, DoubleSpiderShape):
        return "double_spider", [j(shape.left), str(shape.middle), j(shape.right)]
    if isinstance(shape, CycleSpiderShape):
        return "cycle_spider", [j(shape.cycles)]
    if isinstance(shape, CycleDoubleSpiderShape):
        return "cycle_double_spider", [j(shape.left), str(shape.middle), j(shape.right)]
    if isinstance(shape, LevelWiseTreeShape):
        return "level_wise_tree", [j(shape.degrees), str(shape.roots)]
    raise ShapeInvalid(f"not a family shape: {shape!r}")


def _walk(g: Graph, start: int, first: int):
    """Follow degree-2 vertices from ``start`` through ``first``; returns (end, vertices strictly between)."""
    prev, cur, inner = start, first, []
    while g.degree(cur) == 2:
        inner.append(cur)
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
        if cur == start and g.degree(cur) == 2:
            break
    return cur, inner


def recognize(g: Graph):
    """Shape of a path, cycle, spider, double spider, cycle spider or cycle double spider isomorphic to ``g``."""
    if g.vertex_count < 2 or not g.is_connected():
        raise ShapeInvalid("graph must be connected with at least one edge")
    deg = g.degrees
    hubs = [v for v in range(g.vertex_count) if deg[v] > 2]
    if g.is_tree():
        if not hubs:
            return PathShape(g.vertex_count)
        if len(hubs) == 1:
            return SpiderShape(tuple(len(_walk(g, hubs[0], w)[1]) + 1 for w in g.neighbors(hubs[0])))
        if len(hubs) == 2:
            u, v = sorted(hubs, key=lambda h: -deg[h])
            sides = {u: [], v: []}
            middle = None
            for c in (u, v):
                for w in g.neighbors(c):
                    end, inner = _walk(g, c, w)
                    if end in sides and end != c:
                        middle = len(inner) + 1
                    else:
                        sides[c].append(len(inner) + 1)
            left, right = _legs(sides[u], "legs"), _legs(sides[v], "legs")
            if len(left) == len(right) and left < right:
                left, right = right, left
            return DoubleSpiderShape(left, middle, right)
        raise ShapeInvalid(f"tree has {len(hubs)} vertices of degree > 2")
    if not hubs:
        if g.edge_count == g.vertex_count:
            return CycleShape(g.vertex_count)
        raise ShapeInvalid("not a recognized family")
    if len(hubs) > 2:
        raise ShapeInvalid(f"graph has {len(hubs)} vertices of degree > 2")
    cycles = {h: [] for h in hubs}
    middle = []
    for c in hubs:
        seen = set()
        for w in g.neighbors(c):
            if w in seen:
                continue
            end, inner = _walk(g, c, w)
            if end == c:
                cycles[c].append(len(inner) + 1)
                seen.update(inner[-1:] or [w])
            else:
                middle.append(len(inner) + 1)
    shape = None
    if len(hubs) == 1:
        shape = CycleSpiderShape(tuple(cycles[hubs[0]]))
    elif len(middle) == 2 and all(cycles.values()):
        left, right = (_legs(cycles[h], "cycles", 3) for h in hubs)
        if (len(left), left) < (len(right), right):
            left, right = right, left
        shape = CycleDoubleSpiderShape(left, middle[0], right)
    if shape is None or shape.edge_count != g.edge_count:
        raise ShapeInvalid("not a recognized family")
    return shape
