"""Double spiders and cycle double spiders.

Pipeline for a double spider: shrink it with the reduction loop while
logging every deletion, label the reduced tree with the scheme for its
class, then replay the log backwards with pendant extensions.  Every
vertex keeps the id it has in the canonical embedding of the input, so
the rebuilt labeling lands on the canonical graph directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    BudgetExceeded,
    NotReduced,
    NotStronglyAntimagic,
    ResidualUnsolved,
    ShapeInvalid,
    ShapeMismatch,
    SubcaseUnmatched,
    TargetInvalid,
    VerificationFailed,
)
from .families import CycleDoubleSpiderShape, DoubleSpiderLayout, DoubleSpiderShape
from .graph import Graph, LabeledGraph
from .inductive import Growth
from .spider_lab import SpiderExtLayout, growth_from_order, labeling_A_order, middle_split, spider_ext_growth

Edge = tuple[int, int]

# reduced classes
CORO_I = "TypeA_coro_i"
CORO_II = "TypeA_coro_ii"
A3_I = "TypeA_a3_i"
A3_II = "TypeA_a3_ii"
U4_ALL_LEAVES = "TypeA_u4_all_leaves"
B_CASE1 = "TypeB_case1"
B_CASE2 = "TypeB_case2"
RESIDUAL_GAP = "ResidualGap"


# ---------------------------------------------------------------- reduction


@dataclass(frozen=True)
class DeleteLeavesRound:
    pairs: tuple[tuple[int, int], ...]  # (parent, removed leaf)


@dataclass(frozen=True)
class DeletePendant:
    center: str  # "u" or "v" at the time of deletion
    parent: int
    leaf: int


@dataclass(frozen=True)
class SwapCenters:
    pass


@dataclass
class ReductionLog:
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


class _Work:
    """Mutable double spider on original vertex ids."""

    def __init__(self, lay: DoubleSpiderLayout):
        self.middle = list(lay.middle)
        self.left = [list(p) for p in lay.left]
        self.right = [list(p) for p in lay.right]

    def deg(self, side):
        return len(self.left if side == "u" else self.right) + 1

    def has_leaf(self, side):
        return any(len(p) == 1 for p in (self.left if side == "u" else self.right))

    def swap(self):
        self.middle.reverse()
        self.left, self.right = self.right, self.left

    def layout(self) -> DoubleSpiderLayout:
        return DoubleSpiderLayout(tuple(self.middle), tuple(map(tuple, self.left)), tuple(map(tuple, self.right)))

    def delete_pendant(self, side) -> DeletePendant:
        legs = self.left if side == "u" else self.right
        i = max(k for k, p in enumerate(legs) if len(p) == 1)
        leaf = legs.pop(i)[0]
        center = self.middle[0] if side == "u" else self.middle[-1]
        return DeletePendant(side, center, leaf)

    def delete_leaves(self) -> DeleteLeavesRound:
        pairs = []
        for p in self.right + self.left:
            pairs.append((p[-2], p.pop()))
        return DeleteLeavesRound(tuple(pairs))


def _complete(w) -> bool:
    if w.deg("v") == 3 and w.has_leaf("v"):
        return w.deg("u") < 5 or not w.has_leaf("u")
    if w.deg("u") == w.deg("v") + 1 and w.has_leaf("u"):
        return not w.has_leaf("v")
    return False


def _name_centers(w, log):
    # with equal degrees the center carrying a pendant edge is called v
    if w.deg("u") == w.deg("v") and w.has_leaf("u") and not w.has_leaf("v"):
        w.swap()
        log.steps.append(SwapCenters())


def reduction_complete(lay: DoubleSpiderLayout) -> bool:
    return _complete(_Work(lay))


def reduce_layout(lay: DoubleSpiderLayout) -> tuple[DoubleSpiderLayout, ReductionLog]:
    w = _Work(lay)
    log = ReductionLog()
    while True:
        _name_centers(w, log)
        while not (w.has_leaf("u") or w.has_leaf("v")):
            log.steps.append(w.delete_leaves())
        if w.has_leaf("v") and w.deg("v") >= 4:
            log.steps.append(w.delete_pendant("v"))
        if w.has_leaf("u"):
            if w.deg("u") == w.deg("v") == 4:
                log.steps.append(w.delete_pendant("u"))
                w.swap()
                log.steps.append(SwapCenters())
            elif w.deg("u") >= w.deg("v") + 2:
                log.steps.append(w.delete_pendant("u"))
        _name_centers(w, log)
        if _complete(w):
            return w.layout(), log


def reduce(shape: DoubleSpiderShape) -> tuple[DoubleSpiderShape, ReductionLog]:
    """Run the reduction loop; the shape is in the final u/v naming."""
    lay, log = reduce_layout(shape.layout())
    return _shape_of(lay), log


def _shape_of(lay: DoubleSpiderLayout) -> DoubleSpiderShape:
    left = tuple(len(p) for p in lay.left)
    right = tuple(len(p) for p in lay.right)
    if len(left) < len(right):
        left, right = right, left
    return DoubleSpiderShape(left, len(lay.middle) - 1, right)


# ---------------------------------------------------------------- classification


@dataclass(frozen=True)
class ReducedClass:
    tag: str
    swap: bool = False  # True when the roles of u and v must be exchanged first
    u_leaves: int = 0
    v_leaves: int = 0


def _leaves(legs):
    return sum(1 for p in legs if len(p) == 1)


def classify_layout(lay: DoubleSpiderLayout) -> ReducedClass:
    if not reduction_complete(lay):
        flipped = DoubleSpiderLayout(lay.middle[::-1], lay.right, lay.left)
        if reduction_complete(flipped):
            c = classify_layout(flipped)
            return ReducedClass(c.tag, not c.swap, c.v_leaves, c.u_leaves)
        raise NotReduced("shape is not maximally reduced")
    du, dv = len(lay.left) + 1, len(lay.right) + 1
    lu, lv = _leaves(lay.left), _leaves(lay.right)
    internal_u = any(len(p) > 1 for p in lay.left)
    if dv == 3 and lv:
        if lv == 1:
            if du == 3 and lu == 2:
                return ReducedClass(A3_II, False, lu, lv)
            if internal_u:
                return ReducedClass(CORO_I, False, lu, lv)
            if du == 4:
                return ReducedClass(CORO_II, False, lu, lv)
        else:
            if du == 3 and lu == 2:
                return ReducedClass(A3_II, False, lu, lv)
            if du == 3 and lu == 1:
                return ReducedClass(A3_II, True, lv, lu)
            if du >= 4 and internal_u:
                return ReducedClass(A3_I, False, lu, lv)
            if du == 4 and lu == 3:
                return ReducedClass(U4_ALL_LEAVES, False, lu, lv)
            if du == 3 and lu == 0:
                return ReducedClass(RESIDUAL_GAP, False, lu, lv)
        raise NotReduced(f"unexpected reduced shape {_shape_of(lay)}")
    if du == dv + 1 and lu and not lv:
        if all(len(p) % 2 for p in lay.right):
            return ReducedClass(B_CASE1, False, lu, lv)
        return ReducedClass(B_CASE2, False, lu, lv)
    raise NotReduced(f"unexpected reduced shape {_shape_of(lay)}")


def classify(shape: DoubleSpiderShape) -> ReducedClass:
    return classify_layout(shape.layout())


# ---------------------------------------------------------------- explicit orderings


def _edges_along(path: Sequence[int]) -> list[Edge]:
    return list(zip(path, path[1:]))


def eq3_order(path: Sequence[int], u_leaves: Sequence[int], v_leaves: Sequence[int]) -> list[Edge]:
    """Both centers carry two pendant edges; ``path`` runs from the u-center to the v-center."""
    e = _edges_along(path)
    k = len(e)
    u, v = path[0], path[-1]
    ep, epp = (u, u_leaves[0]), (u, u_leaves[1])
    q, qq = (v, v_leaves[0]), (v, v_leaves[1])
    evens = [e[i - 1] for i in range(2, k + 1, 2)]
    odds = [e[i - 1] for i in range(1, k + 1, 2)]
    return evens + [ep, epp, q, qq] + odds


def a3_ii_order(path: Sequence[int], t: int, u_leaves: Sequence[int], q_leaf: int) -> list[Edge]:
    """u carries two pendants e', e''; v = path[t] carries one pendant q; path = w_0..w_k.

    Besides 1 <= t <= k-2, the even-k ordering for t > k/2 is also allowed at
    t = k-1 (v then carries two leaves).
    """
    e = [None] + _edges_along(path)  # 1-based
    k = len(path) - 1
    if not (1 <= t <= k - 2 or (t == k - 1 and k % 2 == 0 and 2 * t > k)):
        raise SubcaseUnmatched(f"t={t} must lie in 1..k-2 for k={k}")
    u, v = path[0], path[t]
    ep, epp, q = (u, u_leaves[0]), (u, u_leaves[1]), (v, q_leaf)

    def run(a, b):  # e_a, e_{a-2}, ..., down to >= b
        return [e[i] for i in range(a, b - 1, -2)] if a >= b else []

    if k % 2 == 0:
        if 2 * t > k:
            return [e[i] for i in range(2, k + 1, 2)] + [ep, epp, q] + [e[i] for i in range(1, k, 2)]
        return run(k, 2) + [q, ep, epp] + run(k - 1, 1)
    if t % 2:
        order = run(k, t + 2) + run(t - 1, 2) + [q, ep, epp] + run(k - 1, t + 1) + run(t, 1)
        if 2 * t == k - 1:
            i, j = order.index(ep), order.index(q)
            order[i], order[j] = order[j], order[i]
        return order
    if t in (2, 4):
        return run(k, 1) + [ep, epp, q] + run(k - 1, 2)
    if 6 <= t <= k - 3:
        return run(k, t + 3) + run(t - 2, 2) + [q, ep, epp] + run(k - 1, t + 2) + run(t - 1, 1) + [e[t + 1], e[t]]
    raise SubcaseUnmatched(f"no ordering for k={k}, t={t}")


A3II = "a3ii"
EQ3 = "eq3"


def _a3_orders(lay: DoubleSpiderLayout, subcase: str | None = None) -> list[Edge]:
    if len(lay.left) != 2 or _leaves(lay.left) != 2:
        raise SubcaseUnmatched("u must have degree 3 with two pendant edges")
    u_leaves = [p[0] for p in lay.left]
    lv = _leaves(lay.right)
    if len(lay.right) != 2 or not lv:
        raise SubcaseUnmatched("v must have degree 3 with a pendant edge")
    if subcase is None:
        subcase = EQ3 if lv == 2 else A3II
    if subcase == EQ3:
        if lv != 2:
            raise SubcaseUnmatched("Eq. (3) needs two pendant edges at v")
        return eq3_order(lay.middle, u_leaves, [p[0] for p in lay.right])
    if subcase != A3II:
        raise SubcaseUnmatched(f"unknown subcase {subcase!r}")
    long_leg = max(lay.right, key=len)
    q_leaf = next(p for p in lay.right if p is not long_leg)[0]
    path = tuple(lay.middle) + tuple(long_leg)
    return a3_ii_order(path, len(lay.middle) - 1, u_leaves, q_leaf)


def a3_ordering(shape: DoubleSpiderShape, subcase: str | None = None) -> LabeledGraph:
    """Explicit orderings for deg(u) = deg(v) = 3 with two pendants at u.

    ``subcase`` is "a3ii" (one leg at v continues the path) or "eq3" (both
    v legs are pendant edges); by default it follows the shape.
    """
    lay = shape.layout()
    if _leaves(lay.left) < 2 <= _leaves(lay.right):
        lay = DoubleSpiderLayout(lay.middle[::-1], lay.right, lay.left)
    order = _a3_orders(lay, subcase)
    out = growth_from_order(order).result(shape.graph())
    if not out.is_strongly_antimagic():
        raise VerificationFailed(f"a3 ordering failed on {shape}")
    out.meta["order"] = order
    return out


# ---------------------------------------------------------------- Labeling A on double spiders


def _a_layout(lay: DoubleSpiderLayout) -> SpiderExtLayout:
    return SpiderExtLayout(tuple(lay.middle), tuple(lay.right), tuple(lay.left), exact_figure=False)


def _require_type_b(lay: DoubleSpiderLayout):
    if not (len(lay.left) == len(lay.right) + 1 and _leaves(lay.left) and not _leaves(lay.right)):
        raise ShapeMismatch("needs deg(u) = deg(v) + 1 with a pendant edge at u and none at v")


def labeling_A_double(shape: DoubleSpiderShape) -> LabeledGraph:
    """Labeling A with v's legs as right paths; every right leg must be odd of length >= 3."""
    lay = shape.layout()
    _require_type_b(lay)
    if any(len(p) % 2 == 0 or len(p) < 3 for p in lay.right):
        raise ShapeMismatch("every right leg must be odd with length >= 3")
    out = growth_from_order(labeling_A_order(_a_layout(lay))).result(shape.graph())
    if not out.is_strongly_antimagic():
        raise VerificationFailed(f"Labeling A failed on {shape}")
    return out


def _a3_i_order(lay: DoubleSpiderLayout) -> list[Edge]:
    v = lay.middle[-1]
    q = tuple((v, p[0]) for p in lay.right)
    a = sum(1 for p in lay.left if len(p) > 1 and len(p) % 2)
    spec = SpiderExtLayout(tuple(lay.middle), (), tuple(lay.left), saved_lo=min(2, a), tail=q, exact_figure=False)
    return labeling_A_order(spec)


# ---------------------------------------------------------------- Labeling B


@dataclass(frozen=True)
class BLayout:
    a: int
    b: int
    c: int
    d: int
    y: int
    b2: int
    alpha: int
    beta: int
    star: bool
    reverse: bool = True

    @classmethod
    def of(cls, lay: DoubleSpiderLayout, reverse: bool = True) -> "BLayout":
        a = sum(1 for p in lay.right if len(p) % 2)
        b = sum(1 for p in lay.right if len(p) % 2 == 0)
        c = sum(1 for p in lay.left if len(p) > 1 and len(p) % 2)
        d = sum(1 for p in lay.left if len(p) % 2 == 0)
        y = _leaves(lay.left)
        b2 = sum(1 for p in lay.right if len(p) == 2)
        alpha = max(0, b - 1 - (c + d))
        beta = min(alpha, b2)
        x = len(lay.middle) - 1
        star = x % 2 == 0 and a == c == d == beta == 0 and b == 2
        return cls(a, b, c, d, y, b2, alpha, beta, star, reverse)


def labeling_B_order(lay: DoubleSpiderLayout, blay: BLayout | None = None) -> list[Edge]:
    if blay is None:
        blay = BLayout.of(lay)
    if blay.b < 1:
        raise ShapeMismatch("Labeling B needs an even right leg")
    if any(len(p) % 2 and len(p) < 3 for p in lay.right):
        raise ShapeMismatch("right odd legs must have length >= 3")
    u, v = lay.middle[0], lay.middle[-1]

    def right(p):
        return _edges_along((v,) + tuple(p))

    def left(p):
        return _edges_along(((u,) + tuple(p))[::-1])

    ro = [right(p) for p in sorted((p for p in lay.right if len(p) % 2), key=len)]
    re = [right(p) for p in sorted((p for p in lay.right if len(p) % 2 == 0), key=len)]
    lo = [left(p) for p in lay.left if len(p) > 1 and len(p) % 2]
    le = [left(p) for p in lay.left if len(p) % 2 == 0]
    y = [left(p)[0] for p in lay.left if len(p) == 1]
    middle = tuple(lay.middle)
    if blay.star and blay.reverse:
        middle = middle[::-1]
    x1, x2, z = middle_split(_edges_along(middle))
    b, alpha, beta = blay.b, blay.alpha, blay.beta
    window = re[beta:alpha]  # RE_{beta+1} .. RE_alpha

    order: list[Edge] = []
    for i in range(beta):  # (1)
        order.append(re[i][0])
        if i < beta - 1:
            order.append(y[i])
    rest_y = y[max(beta - 1, 0):]
    for p in window:  # (2)
        order += p[3::2]
    for p in re[alpha:b - 1]:  # (3)
        order += p[1::2]
    for p in ro:  # (4)
        order += p[0::2]
    for p in lo:  # (5)
        order += p[0:-1:2]
    order += x1  # (6)
    order += re[b - 1][1::2]  # (7)
    for p in le:  # (8)
        order += p[0::2]
    order += [p[0] for p in window]  # (9)
    order += rest_y  # (10)
    order += [re[i][1] for i in reversed(range(beta))]  # (1)'
    for p in window:  # (2)'
        order += p[2::2]
    for p in re[alpha:b - 1]:  # (3)'
        order += p[0::2]
    for p in ro:  # (4)'
        order += p[1::2]
    for p in lo:  # (5)'
        order += p[1::2]
    order += x2  # (6)'
    order += re[b - 1][0::2]  # (7)'
    for p in le:  # (8)'
        order += p[1::2]
    order += [p[1] for p in window]  # (9)'
    order += [p[-1] for p in lo]  # (11)
    order += z  # (12)
    return order


def labeling_B(shape: DoubleSpiderShape, layout: BLayout | None = None, reverse: bool = True, verify: bool = True) -> LabeledGraph:
    """Labeling B on the canonical embedding; ``reverse=False`` disables the middle reversal."""
    lay = shape.layout()
    _require_type_b(lay)
    blay = layout if layout is not None else BLayout.of(lay, reverse)
    out = growth_from_order(labeling_B_order(lay, blay)).result(shape.graph())
    out.meta["blayout"] = blay
    if verify and not out.is_strongly_antimagic():
        raise VerificationFailed(f"Labeling B failed on {shape}")
    return out


# ---------------------------------------------------------------- base labelers on reduced layouts


def _coro_growth(lay: DoubleSpiderLayout) -> Growth:
    """v has one pendant q: label the spider without q with v on top of degree 2, then put q back."""
    v = lay.middle[-1]
    long_leg = next(p for p in lay.right if len(p) > 1)
    q_leaf = next(p for p in lay.right if len(p) == 1)[0]
    spec = SpiderExtLayout(tuple(lay.middle), (tuple(long_leg),), tuple(lay.left))
    growth = spider_ext_growth(spec)
    growth.add_leaf(v, q_leaf)
    return growth


def _graph_on(edges):
    names = sorted({w for e in edges for w in e})
    index = {w: i for i, w in enumerate(names)}
    return Graph(len(names), tuple((index[a], index[b]) for a, b in edges))


def _names_of(edges):
    return sorted({w for e in edges for w in e})


def _u4_growth(lay: DoubleSpiderLayout) -> Growth:
    """u has three pendants and v two: drop one at u, use Eq. (3) with u on top, re-add it."""
    u = lay.middle[0]
    u_leaves = [p[0] for p in lay.left]
    v_leaves = [p[0] for p in lay.right]
    x = len(lay.middle) - 1
    if x % 2 == 0:
        order = eq3_order(lay.middle, u_leaves[:2], v_leaves)
    else:
        order = eq3_order(lay.middle[::-1], v_leaves, u_leaves[:2])
    growth = growth_from_order(order)
    growth.add_leaf(u, u_leaves[2])
    return growth


def _oracle_growth(lay: DoubleSpiderLayout, accept=None) -> Growth:
    from .oracle import SearchConfig, find_labeling

    edges = list(DoubleSpiderLayout.edges(lay))
    g = _graph_on(edges)
    names = _names_of(edges)
    try:
        labels = find_labeling(g, SearchConfig(node_budget=2_000_000, max_edges=14), accept=accept)
    except (BudgetExceeded, ShapeInvalid) as exc:
        raise ResidualUnsolved(f"no labeling found within the oracle budget: {exc}", _shape_of(lay)) from exc
    if labels is None:
        raise ResidualUnsolved("oracle proved that no labeling exists", _shape_of(lay))
    return Growth(LabeledGraph(g, labels), names)


def base_growth(lay: DoubleSpiderLayout, cls: ReducedClass, replay=None) -> Growth:
    if cls.swap:
        lay = DoubleSpiderLayout(lay.middle[::-1], lay.right, lay.left)
    tag = cls.tag
    if tag in (CORO_I, CORO_II):
        return _coro_growth(lay)
    if tag == A3_II:
        return growth_from_order(_a3_orders(lay))
    if tag == A3_I:
        return growth_from_order(_a3_i_order(lay))
    if tag == U4_ALL_LEAVES:
        return _u4_growth(lay)
    if tag == B_CASE1:
        return growth_from_order(labeling_A_order(_a_layout(lay)))
    if tag == B_CASE2:
        return growth_from_order(labeling_B_order(lay))
    if tag == RESIDUAL_GAP:
        return _oracle_growth(lay, replay)
    raise SubcaseUnmatched(tag)


def _replay(growth: Growth, log: ReductionLog):
    for step in reversed(log.steps):
        if isinstance(step, DeleteLeavesRound):
            growth.add_leaves_to_class(1, dict(step.pairs).__getitem__)
        elif isinstance(step, DeletePendant):
            growth.add_leaf(step.parent, step.leaf)


def label_double_spider(shape: DoubleSpiderShape, with_class: bool = False):
    """Strongly antimagic labeling of the canonical double spider."""
    lay = shape.layout()
    target = lay.graph()
    reduced, log = reduce_layout(lay)
    cls = classify_layout(reduced)
    accept = None
    if cls.tag == RESIDUAL_GAP:
        names = _names_of(list(reduced.edges()))

        def accept(labels):
            try:
                g = _graph_on(list(reduced.edges()))
                _replay(Growth(LabeledGraph(g, labels), names), log)
                return True
            except (TargetInvalid, VerificationFailed, NotStronglyAntimagic):
                return False

    growth = base_growth(reduced, cls, accept)
    if not growth.lg.is_strongly_antimagic():
        raise VerificationFailed(f"base labeling for {cls.tag} failed on {_shape_of(reduced)}")
    _replay(growth, log)
    out = growth.result(target)
    if not out.is_strongly_antimagic():
        raise VerificationFailed(f"double spider construction failed for {shape}")
    out.meta["class"] = cls.tag
    return (out, cls) if with_class else out


# ---------------------------------------------------------------- cycle double spiders


def _rings(shape: CycleDoubleSpiderShape):
    x = shape.middle
    nxt = x + 1
    right, left = [], []
    for cycles, bucket in ((shape.right, right), (shape.left, left)):
        for c in cycles:
            bucket.append(list(range(nxt, nxt + c - 1)))
            nxt += c - 1
    return left, right


def _pick(rings, prefer):
    for i, r in enumerate(rings):
        if prefer(len(r) + 1):
            return i
    return 0


def label_cycle_double_spider(left: Sequence[int] | CycleDoubleSpiderShape, middle: int | None = None, right: Sequence[int] | None = None) -> LabeledGraph:
    """One cycle per side first (the side with more cycles plays u), then alternate cycle attachments."""
    shape = left if isinstance(left, CycleDoubleSpiderShape) else CycleDoubleSpiderShape(tuple(left), middle, tuple(right))
    target = shape.graph()
    x = shape.middle
    left_rings, right_rings = _rings(shape)
    sides = [(0, left_rings), (x, right_rings)]
    if len(right_rings) > len(left_rings) or (
        len(right_rings) == len(left_rings)
        and any(len(r) == 2 for r in right_rings)
        and not any(len(r) == 2 for r in left_rings)
    ):
        sides.reverse()
    (U, u_rings), (V, v_rings) = sides
    path = list(range(x + 1)) if U == 0 else list(range(x, -1, -1))
    iu = _pick(u_rings, lambda c: c == 3)
    iv = _pick(v_rings, (lambda c: c >= 4) if len(u_rings[iu]) + 1 >= 4 else (lambda c: True))
    growth = _cycle_base(path, u_rings[iu], v_rings[iv])
    rest_u = [r for i, r in enumerate(u_rings) if i != iu]
    rest_v = [r for i, r in enumerate(v_rings) if i != iv]
    for i in range(max(len(rest_u), len(rest_v))):
        if i < len(rest_u):
            growth.attach_cycle(U, rest_u[i])
        if i < len(rest_v):
            growth.attach_cycle(V, rest_v[i])
    out = growth.result(target)
    if not out.is_strongly_antimagic():
        raise VerificationFailed(f"cycle double spider construction failed for {shape}")
    return out


def _shift_close(path, low_leaves, high_leaves, w):
    """Eq. (3) on ``path`` then labels +3, w joined to both ``high_leaves`` and the ``low_leaves`` joined.

    ``high_leaves`` carry the two largest pendant labels (q, q') and get the
    new edges labeled 2 and 3; the ``low_leaves`` edge gets 1.
    """
    order = eq3_order(path, low_leaves, high_leaves)
    m = len(order)
    edges = [tuple(e) for e in order]
    labels = [i + 4 for i in range(m)]
    q_leaf, qq_leaf = high_leaves
    edges += [(w, qq_leaf), (w, q_leaf), tuple(low_leaves)]
    labels += [3, 2, 1]
    names = _names_of(edges)
    index = {n: i for i, n in enumerate(names)}
    g = Graph(len(names), tuple((index[a], index[b]) for a, b in edges))
    return Growth(LabeledGraph(g, tuple(labels)), names)


def _cycle_base(path, ring_u, ring_v) -> Growth:
    """Labeling of one cycle at each end with phi(U) > phi(V)."""
    n, m = len(ring_u) + 1, len(ring_v) + 1
    x = len(path) - 1
    U, V = path[0], path[-1]
    a, b = ring_u, ring_v  # ring vertices in cycle order
    if n == 3 and m == 3:
        if x % 2 == 0:
            growth = growth_from_order(eq3_order(path, [a[0], a[-1]], [b[0], b[-1]]))
        else:
            growth = growth_from_order(eq3_order(path[::-1], [b[0], b[-1]], [a[0], a[-1]]))
        _join_top_pair(growth)
        _join_top_pair(growth)
        return growth
    if n == 3:
        if x % 2:
            growth = growth_from_order(eq3_order(path[::-1], [b[0], b[-1]], [a[0], a[-1]]))
            growth.join(a[0], a[-1])
            growth.grow_between(b[0], b[-1], b[1:-1])
            return growth
        if m == 4:
            return _shift_close(path, [a[0], a[-1]], [b[0], b[-1]], b[1])
        growth = growth_from_order(eq3_order(path, [a[0], a[-1]], [b[0], b[-1]]))
        growth.add_leaf(b[-1], b[-2])
        growth.add_leaf(b[0], b[1])
        growth.join(a[0], a[-1])
        growth.grow_between(b[1], b[-2], b[2:-2])
        return growth
    if m == 3:
        if x % 2 == 0:
            growth = growth_from_order(eq3_order(path, [a[0], a[-1]], [b[0], b[-1]]))
            growth.join(b[0], b[-1])
            growth.grow_between(a[0], a[-1], a[1:-1])
            return growth
        if n >= 5:
            growth = growth_from_order(eq3_order(path[::-1], [b[0], b[-1]], [a[0], a[-1]]))
            growth.add_leaf(a[-1], a[-2])
            growth.add_leaf(a[0], a[1])
            growth.join(b[0], b[-1])
            growth.grow_between(a[1], a[-2], a[2:-2])
            return growth
        if x >= 3:
            return _shift_close(path[::-1], [b[0], b[-1]], [a[0], a[-1]], a[1])
        return _oracle_cycle_base(path, a, b)
    return _cycle_base_large(path, a, b)


def _join_top_pair(growth: Growth):
    leaves = growth.leaves()
    growth.join(leaves[-2], leaves[-1])


def _oracle_cycle_base(path, a, b) -> Growth:
    from .oracle import SearchConfig, find_labeling

    U, V = path[0], path[-1]
    edges = _edges_along(path) + _edges_along([U] + list(a) + [U]) + _edges_along([V] + list(b) + [V])
    g = _graph_on(edges)
    names = _names_of(edges)
    iu, iv = names.index(U), names.index(V)

    def accept(labels):
        lg = LabeledGraph(g, labels)
        return lg.phi[iu] > lg.phi[iv]

    labels = find_labeling(g, SearchConfig(node_budget=2_000_000), accept=accept)
    if labels is None:
        raise ResidualUnsolved("no base labeling with phi(u) > phi(v)")
    return Growth(LabeledGraph(g, labels), names)


def _cycle_base_large(path, a, b) -> Growth:
    """Both cycles have length >= 4: cut them into legs, use Labeling A with v on top, then close."""
    n, m = len(a) + 1, len(b) + 1
    U, V = path[0], path[-1]
    q_leaf = b[0]
    right_leg = tuple(b[::-1][:-1])  # b_{m-1}, ..., b_2 outward from V
    shrink = n % 2 == 1 and m % 2 == 0 and n % 4 == 3
    if n % 2 == m % 2 or n % 2 == 0:
        legs = ((a[0],), tuple(a[:0:-1]))  # a_1 and a_{n-1}..a_2
        left_pair = (a[0], a[1])
    else:
        h = (n - 1) // 2
        leg1, leg2 = tuple(a[:h]), tuple(a[::-1][:h])
        if shrink:
            leg1, leg2 = leg1[:-1], leg2[:-1]
        legs = (leg1, leg2)
        left_pair = (a[h - 1], a[h])
    growth = spider_ext_growth(SpiderExtLayout(tuple(path), (right_leg,), legs))
    growth.add_leaf(V, q_leaf)
    if shrink:
        h = (n - 1) // 2
        grow = {a[h - 2]: a[h - 1], a[h + 1]: a[h]}
        for _ in range(2):
            top = growth.leaves()[-1]
            if top not in grow:
                raise VerificationFailed("expected a left leaf on top")
            growth.add_leaf(top, grow.pop(top))
        growth.join(b[0], b[1])
        growth.join(*left_pair)
    else:
        growth.join(*left_pair)
        growth.join(b[0], b[1])
    return growth
