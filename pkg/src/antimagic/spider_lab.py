"""Labelers for paths, spiders, cycles and cycle spiders, plus the Labeling A engine.

Labeling A lists the edges of a spider in a fixed order and gives the j-th
edge label j.  The order is built from parity classes of the legs:

  Phase I   RO(O) minus e1 of RO_1, LO(O) minus saved last edges, X_1,
            RE(E), LE(O), Y, then any extra tail edges
  Phase II  RO(E), LO(E), X_2, RE(O), LE(E)
  Phase III e1 of RO_1, the saved LO edges, the remaining middle edges

Left legs are indexed from their leaf (e1 is the pendant edge, e_l touches
u), the middle path from u and right legs from v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IndexInvalid, LayoutInvalid, ShapeInvalid, VerificationFailed
from .families import CycleShape, CycleSpiderShape, PathShape, SpiderShape
from .graph import Graph, LabeledGraph
from .inductive import Growth

Edge = tuple[int, int]


def _closed_form(n: int) -> tuple[int, ...]:
    """Labels of e_1..e_{n-1} on P_n with the largest degree-2 sum at v_{n-1}."""
    return tuple((i + 1) // 2 if (n - i) % 2 else (n + i) // 2 for i in range(1, n))


def path_max_at(n: int, u: int) -> LabeledGraph:
    """Strongly antimagic labeling of P_n (vertices v_1..v_n are ids 0..n-1) maximal at v_u.

    ``u`` is 1-based and must be a degree-2 position.
    """
    if n < 3 or not 2 <= u <= n - 1:
        raise IndexInvalid(f"v_{u} is not a degree-2 vertex of P_{n}")
    target = PathShape(n).graph()
    if 2 * u <= n:
        mirror = path_max_at(n, n + 1 - u)
        return LabeledGraph(target, tuple(reversed(mirror.labels)))
    if u == n - 1:
        return LabeledGraph(target, _closed_form(n))
    # sub-path v_{n-u}..v_{u+1}, then grow both ends by the same amount
    lo, hi = n - u - 1, u
    k = hi - lo + 1
    sub = LabeledGraph(PathShape(k).graph(), _closed_form(k))
    growth = Growth(sub, list(range(lo, hi + 1)))
    for _ in range(2 * lo):
        top = growth.leaves()[-1]
        if top == lo:
            lo -= 1
            growth.add_leaf(top, lo)
        else:
            hi += 1
            growth.add_leaf(top, hi)
    return growth.result(target)


def growth_from_order(order: Sequence[Edge]) -> Growth:
    """Label ``order[j]`` with ``j + 1`` on the graph spanned by those edges.

    Vertex names are the ids used in ``order``.
    """
    names = sorted({w for e in order for w in e})
    index = {w: i for i, w in enumerate(names)}
    g = Graph(len(names), tuple((index[a], index[b]) for a, b in order))
    return Growth(LabeledGraph(g, tuple(range(1, len(order) + 1))), names)


def _path_edges(full: Sequence[int]) -> list[Edge]:
    return [(a, b) for a, b in zip(full, full[1:])]


def _odd(edges):  # e1, e3, ... for a 1-based edge list
    return edges[0::2]


def _even(edges):
    return edges[1::2]


@dataclass(frozen=True)
class SpiderExtLayout:
    """A spider seen from a designated degree-2 vertex ``v``.

    ``middle`` lists the vertices from ``u`` to ``v``; ``right`` and ``left``
    list each leg outward from ``v`` and ``u`` respectively, excluding the
    center.  ``right`` holds several legs when the layout describes a
    double spider.  ``saved_lo`` is how many odd left legs keep their last
    edge for Phase III and ``tail`` lists edges labeled right after Y.
    """

    middle: tuple[int, ...]
    right: tuple[tuple[int, ...], ...]
    left: tuple[tuple[int, ...], ...]
    saved_lo: int = 1
    tail: tuple[Edge, ...] = ()
    swap_case2: bool | None = None
    exact_figure: bool = True

    @property
    def u(self):
        return self.middle[0]

    @property
    def v(self):
        return self.middle[-1]

    @property
    def x(self):
        return len(self.middle) - 1

    @property
    def pendants(self):
        return [leg for leg in self.left if len(leg) == 1]

    @property
    def lo(self):
        return [leg for leg in self.left if len(leg) > 1 and len(leg) % 2]

    @property
    def le(self):
        return [leg for leg in self.left if len(leg) % 2 == 0]

    @property
    def ro(self):
        return sorted((leg for leg in self.right if len(leg) % 2), key=len)

    @property
    def re(self):
        return sorted((leg for leg in self.right if len(leg) % 2 == 0), key=len)

    def left_edges(self, leg) -> list[Edge]:
        """e_1..e_l of a left leg, indexed from its leaf."""
        return _path_edges(((self.u,) + tuple(leg))[::-1])

    def right_edges(self, leg) -> list[Edge]:
        return _path_edges((self.v,) + tuple(leg))

    def middle_edges(self) -> list[Edge]:
        return _path_edges(self.middle)

    def edges(self) -> list[Edge]:
        out = self.middle_edges()
        for leg in self.right:
            out += self.right_edges(leg)
        for leg in self.left:
            out += self.left_edges(leg)
        return out + list(self.tail)

    def graph(self) -> Graph:
        """The spanned graph; vertex ids must already be dense."""
        edges = self.edges()
        n = 1 + max(w for e in edges for w in e)
        return Graph(n, tuple(edges))

    def validate(self):
        if self.x < 1:
            raise LayoutInvalid("middle path must have length >= 1")
        if any(len(leg) < 2 for leg in self.right):
            raise LayoutInvalid("v is adjacent to a leaf")
        if not self.right and not self.tail:
            raise LayoutInvalid("v needs a right leg")


def middle_split(edges: Sequence[Edge]):
    """(X_1, X_2, Z) for a middle path given as e_1..e_x."""
    x = len(edges)
    e = lambda i: edges[i - 1]  # noqa: E731
    if x % 2 == 0:
        x1 = [e(i) for i in range(x - 2, 1, -2)]
        x2 = [e(i) for i in range(x - 1, 0, -2)]
        z = [e(x)]
    elif x == 1:
        x1, x2, z = [], [], [e(1)]
    else:
        x1 = [e(i) for i in range(3, x - 1, 2)]
        x2 = [e(i) for i in range(2, x, 2)]
        z = [e(1), e(x)]
    return x1, x2, z


def _is_case2_swap(layout: SpiderExtLayout) -> bool:
    if layout.swap_case2 is not None:
        return layout.swap_case2
    return (
        len(layout.left) == 2
        and len(layout.pendants) == 1
        and len(layout.le) == 1
        and layout.x % 2 == 0
        and len(layout.right) == 1
        and len(layout.ro) == 1
    )


def labeling_A_order(layout: SpiderExtLayout) -> list[Edge]:
    """The Labeling A edge order, including the a3(i) and Case-2 adjustments."""
    layout.validate()
    ro = [layout.right_edges(p) for p in layout.ro]
    re = [layout.right_edges(p) for p in layout.re]
    lo = [layout.left_edges(p) for p in layout.lo]
    le = [layout.left_edges(p) for p in layout.le]
    y = [layout.left_edges(p)[0] for p in layout.pendants]
    x1, x2, zx = middle_split(layout.middle_edges())

    saved = [p[-1] for p in lo[: layout.saved_lo]]
    z1 = [ro[0][0]] if ro else []

    order: list[Edge] = []
    for i, p in enumerate(ro):
        order += _odd(p)[1:] if i == 0 else _odd(p)
    for p in lo:
        order += [e for e in _odd(p) if e not in saved]
    order += x1
    for p in re:
        order += _even(p)
    for p in le:
        order += _odd(p)
    order += y
    order += list(layout.tail)
    for p in ro:
        order += _even(p)
    for p in lo:
        order += _even(p)
    order += x2
    for p in re:
        order += _odd(p)
    for p in le:
        order += _even(p)
    order += z1 + saved + zx

    if z1 and _is_case2_swap(layout):
        last_le = _even(le[0])[-1]
        i, j = order.index(z1[0]), order.index(last_le)
        order[i], order[j] = order[j], order[i]
    return order


def _figure2_order(layout: SpiderExtLayout) -> list[Edge]:
    """Fixed order for one long leg with |X| = 2, |R| = 3 and three pendants."""
    (r,) = [layout.right_edges(p) for p in layout.right]
    x = layout.middle_edges()
    y = [layout.left_edges(p)[0] for p in layout.pendants]
    # labels: X = (7, 6), R = (8, 1, 5), pendants (2, 3, 4)
    by_label = {1: r[1], 2: y[0], 3: y[1], 4: y[2], 5: r[2], 6: x[1], 7: x[0], 8: r[0]}
    return [by_label[k] for k in range(1, 9)]


def _is_figure2(layout: SpiderExtLayout) -> bool:
    return (
        layout.exact_figure
        and layout.x == 2
        and len(layout.right) == 1
        and len(layout.right[0]) == 3
        and len(layout.left) == 3
        and len(layout.pendants) == 3
        and not layout.tail
    )


def ext_order(layout: SpiderExtLayout) -> list[Edge]:
    return _figure2_order(layout) if _is_figure2(layout) else labeling_A_order(layout)


def labeling_A(layout: SpiderExtLayout) -> LabeledGraph:
    """Labeling A on a spider layout with dense vertex ids.

    The result is checked: it must be strongly antimagic with ``v``
    maximal among degree-2 vertices.
    """
    check_ext_hypotheses(layout)
    order = ext_order(layout)
    target = layout.graph()
    out = growth_from_order(order).result(target)
    _check_v_max(out, layout.v)
    return out


def check_ext_hypotheses(layout: SpiderExtLayout):
    layout.validate()
    long_legs = 1 + sum(1 for leg in layout.left if len(leg) > 1)
    y = len(layout.pendants)
    deg = len(layout.left) + 1
    if len(layout.right) != 1 or layout.tail:
        return  # double spider use; checked by the caller
    if deg < 3:
        raise LayoutInvalid("u needs degree >= 3")
    if long_legs >= 2:
        if y > 1:
            raise LayoutInvalid(f"strip pendant edges at u to at most one first (found {y})")
    elif deg != 4:
        raise LayoutInvalid("with a single long leg, u must have degree 4")


def _check_v_max(lg: LabeledGraph, v: int):
    if not lg.is_strongly_antimagic():
        raise VerificationFailed("labeling is not strongly antimagic")
    g = lg.graph
    top = max((w for w in range(g.vertex_count) if g.degree(w) == 2), key=lambda w: lg.phi[w])
    if top != v:
        raise VerificationFailed(f"phi(v) = {lg.phi[v]} is not the largest degree-2 sum ({lg.phi[top]})")


def spider_ext_layout(shape: SpiderShape, leg: int, distance: int) -> SpiderExtLayout:
    """Layout of the canonical spider with ``v`` on leg ``leg`` at ``distance`` from the center."""
    lay = shape.layout()
    if not 0 <= leg < len(lay.legs):
        raise IndexInvalid(f"no leg {leg}")
    path = lay.legs[leg]
    if not 1 <= distance <= len(path) - 2:
        raise LayoutInvalid(f"v at distance {distance} on a leg of length {len(path)} is not a degree-2 vertex away from the leaf")
    middle = (lay.center,) + path[:distance]
    right = (path[distance:],)
    left = tuple(p for i, p in enumerate(lay.legs) if i != leg)
    return SpiderExtLayout(middle, right, left)


def spider_ext_growth(layout: SpiderExtLayout) -> Growth:
    """Like :func:`spider_ext` but returns the growth, named by the layout's vertex ids."""
    long_legs = 1 + sum(1 for leg in layout.left if len(leg) > 1)
    pendants = layout.pendants
    if long_legs >= 3:
        keep = 0
    elif long_legs == 2:
        keep = 1
    else:
        if len(layout.left) + 1 < 4:
            raise LayoutInvalid("with a single long leg, u needs degree >= 4")
        keep = 3
    strip = pendants[keep:]
    kept = tuple(leg for leg in layout.left if leg not in strip)
    base = SpiderExtLayout(layout.middle, layout.right, kept, layout.saved_lo, layout.tail, layout.swap_case2)
    check_ext_hypotheses(base)
    growth = growth_from_order(ext_order(base))
    for leg in strip:
        growth.add_leaf(layout.u, leg[0])
    _check_v_max(growth.lg, growth.vertex(layout.v))
    return growth


def spider_ext(layout: SpiderExtLayout, target: Graph | None = None) -> LabeledGraph:
    """Labeling with ``v`` maximal among degree-2 vertices for any spider meeting the hypotheses.

    Surplus pendant edges at ``u`` are stripped, Labeling A is applied and
    the pendants are put back with extensions at ``u``.
    """
    growth = spider_ext_growth(layout)
    if target is None:
        target = layout.graph()
    out = growth.result(target)
    _check_v_max(out, layout.v)
    return out


def label_spider(shape: SpiderShape) -> LabeledGraph:
    """Reduce the spider to a path, label it and grow it back."""
    lay = shape.layout()
    target = lay.graph()
    center = lay.center
    legs = [list(p) for p in lay.legs]
    log = []
    while True:
        if all(len(p) >= 2 for p in legs):
            log.append(("round", {p[-2]: p.pop() for p in legs}))
            continue
        pendant = max(i for i, p in enumerate(legs) if len(p) == 1)
        log.append(("pendant", legs.pop(pendant)[0]))
        if len(legs) == 2:
            break
    a, b = legs
    names = a[::-1] + [center] + b
    base = path_max_at(len(names), len(a) + 1)
    growth = Growth(base, names)
    for kind, data in reversed(log):
        if kind == "pendant":
            growth.add_leaf(center, data)
        else:
            growth.add_leaves_to_class(1, data.__getitem__)
    out = growth.result(target)
    if not out.is_strongly_antimagic():
        raise VerificationFailed(f"spider construction failed for {shape}")
    return out


def label_cycle(n: int) -> LabeledGraph:
    """C_n with labels 1..n around the cycle, the last two swapped when n is even.

    Vertex i (0 < i < n) sits between labels i and i + 1 except near the
    swap.  For even n the sums are the odd numbers 3..2n-5, then 2n-2 and
    2n-1, and n at vertex 0, so they are distinct.  Vertex n-1 is maximal.
    """
    g = CycleShape(n).graph()
    labels = list(range(1, n + 1))
    if n % 2 == 0:
        labels[-2], labels[-1] = labels[-1], labels[-2]
    out = LabeledGraph(g, tuple(labels), meta={"max_vertex": n - 1})
    if not out.is_strongly_antimagic():
        raise VerificationFailed(f"cycle labeling failed for n={n}")
    return out


def label_cycle_spider(cycles: Sequence[int] | CycleSpiderShape) -> LabeledGraph:
    """Label the first cycle, then attach the others one by one at the center."""
    shape = cycles if isinstance(cycles, CycleSpiderShape) else CycleSpiderShape(tuple(cycles))
    target = shape.graph()
    c0 = shape.cycles[0]
    base = label_cycle(c0)
    # cycle vertex j becomes j+1, so the maximal vertex c0-1 lands on the center
    growth = Growth(base, [(j + 1) % c0 for j in range(c0)])
    nxt = c0
    for c in shape.cycles[1:]:
        growth.attach_cycle(0, list(range(nxt, nxt + c - 1)))
        nxt += c - 1
    out = growth.result(target)
    if not out.is_strongly_antimagic():
        raise VerificationFailed(f"cycle spider construction failed for {shape}")
    return out


def label_path(n: int) -> LabeledGraph:
    if n == 2:
        raise ShapeInvalid("P_2 has no antimagic labeling")
    return path_max_at(n, n - 1)
