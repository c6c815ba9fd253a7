import pytest

from antimagic import double_spider_lab as dsl
from antimagic.errors import NotReduced, ShapeMismatch, SubcaseUnmatched
from antimagic.families import CycleDoubleSpiderShape, DoubleSpiderShape as DS, enumerate_cycle_double_spiders, enumerate_double_spiders
from antimagic.graph import LabeledGraph
from antimagic.spider_lab import growth_from_order


def along(lg, shape):
    lay = shape.layout()
    mid = [lg.label_of(a, b) for a, b in zip(lay.middle, lay.middle[1:])]
    right = [[lg.label_of(a, b) for a, b in zip((lay.v,) + p, p)] for p in lay.right]
    left = [[lg.label_of(a, b) for a, b in zip((lay.u,) + p, p)] for p in lay.left]
    return mid, right, left


def test_reduce_examples():
    shape, log = dsl.reduce(DS((2, 2), 1, (2, 2)))
    assert shape == DS((1, 1), 1, (1, 1))
    assert [type(s) for s in log] == [dsl.DeleteLeavesRound]
    shape, log = dsl.reduce(DS((1, 1, 1), 1, (1, 1)))
    assert shape == DS((1, 1, 1), 1, (1, 1)) and len(log) == 0
    shape, log = dsl.reduce(DS((3, 3, 3), 1, (2, 2)))
    assert shape == DS((2, 2, 2), 1, (1, 1)) and len(log) == 1


def test_reduce_needs_naming_rule():
    # equal degrees, pendant only on the u side: the centers are renamed
    shape, log = dsl.reduce(DS((2, 1), 2, (3, 2)))
    assert any(isinstance(s, dsl.SwapCenters) for s in log)
    assert dsl.reduction_complete(shape.layout()) or dsl.classify(shape)


def test_reduce_large_terminates():
    shape, log = dsl.reduce(DS((4000, 2500, 7, 1, 1, 1), 900, (3000, 12, 5, 2)))
    assert dsl.classify(shape).tag


def test_reduce_log_replays_forward():
    for shape in enumerate_double_spiders(11):
        reduced, log = dsl.reduce(shape)
        removed = sum(len(s.pairs) if isinstance(s, dsl.DeleteLeavesRound) else isinstance(s, dsl.DeletePendant) for s in log)
        assert reduced.edge_count + removed == shape.edge_count


def test_classify_examples():
    assert dsl.classify(DS((1, 1), 1, (1, 1))).tag == dsl.A3_II
    assert dsl.classify(DS((2, 2, 2), 1, (1, 1))).tag == dsl.A3_I
    assert dsl.classify(DS((2, 2), 3, (1, 1))).tag == dsl.RESIDUAL_GAP
    assert dsl.classify(DS((1, 1, 1), 5, (3, 5))).tag == dsl.B_CASE1
    assert dsl.classify(DS((1, 1, 1), 5, (4, 3))).tag == dsl.B_CASE2
    assert dsl.classify(DS((1, 1, 1), 2, (1, 1))).tag == dsl.U4_ALL_LEAVES
    assert dsl.classify(DS((1, 1, 1), 2, (4, 1))).tag == dsl.CORO_II
    assert dsl.classify(DS((3, 1), 2, (4, 1))).tag == dsl.CORO_I
    with pytest.raises(NotReduced):
        dsl.classify(DS((2, 2), 1, (2, 2)))


def test_a3_examples():
    lg = dsl.a3_ordering(DS((1, 1), 3, (1, 1)), "a3ii")
    mid, right, left = along(lg, DS((1, 1), 3, (1, 1)))
    # path e_1..e_4 is the middle plus one v leg
    assert mid + [right[0][0]] == [6, 1, 7, 2] and sorted(sum(left, [])) == [3, 4] and right[1] == [5]
    assert lg.phi[0] == 13 and lg.phi[3] == 14
    lg = dsl.a3_ordering(DS((1, 1), 2, (1, 1)), "eq3")
    assert lg.phi[0] == 11 and lg.phi[2] == 10
    lg = dsl.a3_ordering(DS((1, 1), 1, (1, 1)), "eq3")
    assert lg.labels == (5, 3, 4, 1, 2) and lg.phi[0] == 8 and lg.phi[1] == 12
    with pytest.raises(SubcaseUnmatched):
        dsl.a3_ordering(DS((1, 1), 2, (3, 1)), "eq3")


def a3_formula_mismatches(max_k=60):
    bad = []
    for k in range(3, max_k + 1):
        for t in range(1, k - 1):
            path = list(range(k + 1))
            order = dsl.a3_ii_order(path, t, [k + 1, k + 2], k + 3)
            lg = growth_from_order(order).lg
            pu, pv = lg.phi[0], lg.phi[t]
            if k % 2 == 0:
                want = (3 * k // 2 + 7, k + t + 7) if 2 * t > k else (2 * k + 8, 2 * k + 5 - t)
            elif t % 2:
                want = (2 * k + 6, 2 * k + 8) if 2 * t == k - 1 else (2 * k + 7, 2 * k + 7 + (k - 2 * t - 1) // 2)
            elif t >= 6:
                want = (2 * k + 3, 2 * k + 3 + (k + 3) // 2)
            else:
                want = None
            if not lg.is_strongly_antimagic() or (want and (pu, pv) != want):
                bad.append((k, t, (pu, pv), want))
    return bad


def test_a3_formulas():
    assert a3_formula_mismatches(40) == []


def test_figure3():
    shape = DS((1, 1, 1), 5, (3, 5))
    lg = dsl.labeling_A_double(shape)
    mid, right, left = along(lg, shape)
    assert mid == [15, 12, 5, 13, 16]
    assert right == [[2, 10, 3, 11, 4], [14, 9, 1]]
    assert left == [[6], [7], [8]]
    assert lg.phi[0] == 36 and lg.phi[5] == 32


def test_labeling_A_double_examples():
    assert dsl.labeling_A_double(DS((1, 1, 1), 1, (3, 3))).is_strongly_antimagic()
    lg = dsl.labeling_A_double(DS((1, 1, 1, 1), 2, (3, 3, 3)))
    assert max(range(lg.graph.vertex_count), key=lambda v: lg.phi[v]) == 0
    with pytest.raises(ShapeMismatch):
        dsl.labeling_A_double(DS((1, 1, 1), 2, (4, 3)))


def case1_bound_failures(max_m=40):
    bad = []
    for x in range(1, max_m):
        for a in range(3, max_m, 2):
            for b in range(a, max_m, 2):
                if 3 + x + a + b > max_m:
                    continue
                lg = dsl.labeling_A_double(DS((1, 1, 1), x, (a, b)))
                diff = lg.phi[0] - lg.phi[x]
                if diff < x // 2 + b // 2 + x % 2 - 1:
                    bad.append((x, a, b, diff))
    return bad


def test_case1_bound():
    assert case1_bound_failures(30) == []


def test_figure4a():
    shape = DS((1, 1, 1), 5, (4, 3))
    lg = dsl.labeling_B(shape)
    mid, right, left = along(lg, shape)
    assert mid == [14, 10, 3, 11, 15]
    assert right == [[12, 4, 13, 5], [1, 9, 2]]
    assert left == [[6], [7], [8]]
    b = lg.meta["blayout"]
    assert (b.a, b.b, b.c, b.d, b.y, b.alpha, b.beta, b.star) == (1, 1, 0, 0, 3, 0, 0, False)


def test_figure4b():
    shape = DS((1, 1, 1), 4, (4, 4))
    lg = dsl.labeling_B(shape)
    mid, right, left = along(lg, shape)
    assert mid == [15, 10, 2, 11]
    assert right == [[5, 14, 9, 1], [12, 3, 13, 4]]
    assert left == [[6], [7], [8]]
    b = lg.meta["blayout"]
    assert b.star and b.alpha == 1 and b.beta == 0


def test_figure4b_without_reversal():
    shape = DS((1, 1, 1), 4, (4, 4))
    lg = dsl.labeling_B(shape, reverse=False, verify=False)
    assert lg.phi[0] == lg.phi[4] == 32
    assert not lg.is_strongly_antimagic()


def test_labeling_B_precondition():
    with pytest.raises(ShapeMismatch):
        dsl.labeling_B(DS((1, 1), 3, (2, 2)))
    with pytest.raises(ShapeMismatch):
        dsl.labeling_B(DS((1, 1, 1), 3, (3, 3)))


def test_labeling_B_direct():
    n = 0
    for shape in enumerate_double_spiders(16):
        if shape.deg_u == shape.deg_v + 1 and 1 in shape.left and 1 not in shape.right and any(r % 2 == 0 for r in shape.right):
            assert dsl.labeling_B(shape).is_strongly_antimagic()
            n += 1
    assert n > 300


def test_gap_shape():
    lg, cls = dsl.label_double_spider(DS((2, 2), 3, (1, 1)), with_class=True)
    assert cls.tag == dsl.RESIDUAL_GAP and lg.is_strongly_antimagic()


def test_double_spiders_up_to_11():
    for shape in enumerate_double_spiders(11):
        lg = dsl.label_double_spider(shape)
        assert lg.graph == shape.graph() and lg.is_strongly_antimagic()


@pytest.mark.parametrize("shape", [DS((30, 20, 1), 17, (9, 8)), DS((9, 1, 1, 1, 1), 3, (6, 5, 4, 1)), DS((5, 5, 5, 5), 8, (3, 3, 3))])
def test_larger_double_spiders(shape):
    assert dsl.label_double_spider(shape).is_strongly_antimagic()


@pytest.mark.parametrize("args", [((3,), 2, (3,)), ((3,), 2, (4,)), ((4, 5), 1, (4,)), ((3,), 1, (4,)), ((4,), 1, (3,)), ((7,), 2, (6,))])
def test_cycle_double_spider_examples(args):
    lg = dsl.label_cycle_double_spider(*args)
    shape = CycleDoubleSpiderShape(*args)
    assert lg.graph == shape.graph() and lg.is_strongly_antimagic()


def test_cycle_double_spider_hub_vertex():
    # ({3}, 2, {4}): the new vertex w on the 4-cycle has the smallest sum, 5
    lg = dsl.label_cycle_double_spider((3,), 2, (4,))
    assert min(lg.phi) == 5
    g = lg.graph
    w = min(range(g.vertex_count), key=lambda v: lg.phi[v])
    assert g.degree(w) == 2 and w not in (0, 1, 2)


def test_cycle_double_spiders_up_to_16():
    for shape in enumerate_cycle_double_spiders(16):
        assert dsl.label_cycle_double_spider(shape).is_strongly_antimagic()
