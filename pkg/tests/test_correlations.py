import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corrkit import (
    BoxVector,
    BudgetError,
    ParameterError,
    PointSequence,
    ScaleVector,
    brute_force_r_k,
    circle_distance,
    dyadic_counterexample,
    r_k_box,
    r_k_consecutive,
    r_k_distinct,
    r_k_star,
    r_k_testfn,
)

THREE = PointSequence([0.0, 0.1, 0.5])


def test_r2_star_hand_instance():
    # z = (2, 2, 1) at s/N = 1/6, frozen from enumerating all 9 pairs
    rep = r_k_star(THREE, (0.5,))
    assert rep.raw_count == 5
    assert rep.value == pytest.approx(5 / 3)


def test_r2_distinct_hand_instance():
    rep = r_k_distinct(THREE, (0.5,))
    assert rep.raw_count == 2  # ordered pairs (1,2) and (2,1)
    assert rep.value == pytest.approx(2 / 3)


def test_star_counts_diagonal():
    seq = PointSequence([0.42])
    for k in (2, 3, 4):
        rep = r_k_star(seq, (0.3,) * (k - 1))
        assert rep.raw_count == 1 and rep.value == 1.0


def test_star_at_least_one():
    rng = np.random.default_rng(1)
    for _ in range(10):
        seq = PointSequence(rng.random(int(rng.integers(1, 50))))
        assert r_k_star(seq, (0.2, 0.2)).value >= 1.0


def test_scale_wrap_rejected_consistently():
    seq = PointSequence([0.1, 0.2])
    with pytest.raises(ParameterError):
        r_k_star(seq, (1.5,))
    with pytest.raises(ParameterError):
        r_k_distinct(seq, (1.5,))
    with pytest.raises(ParameterError):
        brute_force_r_k(seq, scales=(1.5,))


def test_dyadic_pair_one_triple_zero():
    for m in (2, 5, 8):
        seq = dyadic_counterexample(2**m)
        assert r_k_distinct(seq, (1.5,)).raw_count == 2**m  # R_2 = 1 exactly
        assert r_k_distinct(seq, (1.5, 1.5)).raw_count == 0


def test_equal_scale_distinct_formula():
    # (1/N) sum_i w_i (w_i - 1) ... with w_i = z_i - 1 equals the count
    rng = np.random.default_rng(3)
    for _ in range(25):
        n = int(rng.integers(4, 41))
        k = int(rng.integers(2, 5))
        s = float(rng.uniform(0.1, n / 3))
        seq = PointSequence(rng.random(n))
        fast = r_k_distinct(seq, (s,) * (k - 1)).raw_count
        w = np.array([
            sum(1 for j in range(n) if j != i and circle_distance(seq.points[i], seq.points[j]) <= s / n)
            for i in range(n)
        ])
        direct = 0
        for wi in w:
            t = 1
            for d in range(k - 1):
                t *= max(wi - d, 0)
            direct += t
        assert fast == direct


def test_scale_slot_permutation_invariance():
    rng = np.random.default_rng(4)
    for _ in range(10):
        n = int(rng.integers(6, 50))
        seq = PointSequence(rng.random(n))
        sc = tuple(rng.uniform(0.05, n / 3, size=3))
        counts = {r_k_distinct(seq, p).raw_count for p in itertools.permutations(sc)}
        assert len(counts) == 1


def test_box_hand_instance():
    seq = PointSequence([0.0, 0.1])
    rep = r_k_box(seq, ((0.2, 0.4),))
    assert rep.raw_count == 1
    assert rep.value == 0.5


def test_box_symmetric_matches_distinct():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(4, 40))
        k = int(rng.integers(2, 5))
        seq = PointSequence(rng.random(n))
        sc = rng.uniform(0.07, n / 3, size=k - 1)
        boxes = tuple((-s, s) for s in sc)
        assert r_k_box(seq, boxes).raw_count == r_k_distinct(seq, tuple(sc)).raw_count


def test_box_empty_region():
    seq = PointSequence([0.0, 0.5])
    assert r_k_box(seq, ((0.05, 0.2),)).raw_count == 0


def test_box_bounds_validated():
    seq = PointSequence([0.0, 0.5])
    with pytest.raises(ParameterError):
        r_k_box(seq, ((0.1, 2.0),))
    with pytest.raises(ParameterError):
        BoxVector(((0.4, 0.4),))


def test_oracle_equivalence_randomized():
    rng = np.random.default_rng(6)
    for _ in range(40):
        n = int(rng.integers(2, 41))
        k = int(rng.integers(2, 5))
        seq = PointSequence(rng.random(n))
        sc = tuple(rng.uniform(0.05, 0.9 * n / 2, size=k - 1))
        assert r_k_distinct(seq, sc).raw_count == brute_force_r_k(seq, scales=sc).raw_count
        assert r_k_star(seq, sc).raw_count == brute_force_r_k(seq, scales=sc, star=True).raw_count
        boxes = []
        for _ in range(k - 1):
            a, b = np.sort(rng.uniform(-0.9 * n / 2, 0.9 * n / 2, size=2))
            boxes.append((float(a), float(b) if b > a else float(a) + 0.1))
        boxes = tuple(boxes)
        assert r_k_box(seq, boxes).raw_count == brute_force_r_k(seq, boxes=boxes).raw_count


def test_oracle_equivalence_with_duplicates():
    rng = np.random.default_rng(7)
    for _ in range(15):
        n = int(rng.integers(4, 30))
        seq = PointSequence(rng.integers(0, 6, size=n) / 6.0)
        k = int(rng.integers(2, 4))
        sc = tuple(rng.uniform(0.05, 0.9 * n / 2, size=k - 1))
        assert r_k_distinct(seq, sc).raw_count == brute_force_r_k(seq, scales=sc).raw_count
        assert r_k_star(seq, sc).raw_count == brute_force_r_k(seq, scales=sc, star=True).raw_count


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.floats(min_value=0.0, max_value=1.0, exclude_max=True), min_size=2, max_size=16),
    st.floats(min_value=0.05, max_value=0.9),
    st.integers(min_value=2, max_value=3),
)
def test_fast_paths_match_brute_property(points, frac_scale, k):
    seq = PointSequence(points)
    s = frac_scale * len(points) / 2
    sc = (s,) * (k - 1)
    assert r_k_distinct(seq, sc).raw_count == brute_force_r_k(seq, scales=sc).raw_count
    assert r_k_star(seq, sc).raw_count == brute_force_r_k(seq, scales=sc, star=True).raw_count


def test_degenerate_all_equal_counts():
    import math

    for n in (2, 3, 4):
        seq = PointSequence([0.3] * n)
        assert brute_force_r_k(seq, scales=(0.2,) * (n - 1), star=True).raw_count == n**n
        assert brute_force_r_k(seq, scales=(0.2,) * (n - 1)).raw_count == math.factorial(n)


def test_star_dominates_distinct():
    rng = np.random.default_rng(8)
    for _ in range(20):
        n = int(rng.integers(5, 80))
        k = int(rng.integers(2, 5))
        seq = PointSequence(rng.random(n))
        sc = tuple(rng.uniform(0.05, n / 3, size=k - 1))
        assert r_k_distinct(seq, sc).value <= r_k_star(seq, sc).value


def test_testfn_indicator_matches_distinct():
    rng = np.random.default_rng(9)
    for _ in range(10):
        n = int(rng.integers(5, 40))
        k = int(rng.integers(2, 4))
        s = float(rng.uniform(0.1, n / 4))
        seq = PointSequence(rng.random(n))
        ind = lambda ys: 1.0 if all(abs(y) <= s for y in ys) else 0.0
        got = r_k_testfn(seq, ind, s, k).value
        want = r_k_distinct(seq, (s,) * (k - 1)).value
        assert got == pytest.approx(want, abs=1e-12)


def test_testfn_zero_function():
    seq = PointSequence(np.random.default_rng(0).random(30))
    assert r_k_testfn(seq, lambda ys: 0.0, 1.0, 3).value == 0.0
    assert r_k_consecutive(seq, lambda ys: 0.0, 1.0, 3).value == 0.0


def test_testfn_matches_bruteforce():
    rng = np.random.default_rng(10)
    tent = lambda ys: float(np.prod([max(1.5 - abs(y), 0.0) for y in ys]))
    for _ in range(6):
        n = int(rng.integers(6, 25))
        k = int(rng.integers(2, 4))
        seq = PointSequence(rng.random(n))
        fast = r_k_testfn(seq, tent, 1.5, k).value
        brute = brute_force_r_k(seq, testfn=tent, support_radius=1.5, k=k).value
        assert fast == pytest.approx(brute, abs=1e-12)


def test_consecutive_equals_testfn_for_k2():
    seq = PointSequence(np.random.default_rng(11).random(40))
    f = lambda ys: max(1.0 - abs(ys[0]), 0.0)
    assert r_k_consecutive(seq, f, 1.0, 2).value == r_k_testfn(seq, f, 1.0, 2).value


def test_consecutive_substitution_identity():
    # g(y) = f(y_1, y_1+y_2) turns the consecutive form into the anchored form
    rng = np.random.default_rng(12)
    rho = 1.0
    k = 3

    def f(ys):
        out = 1.0
        for y in ys:
            t = rho - abs(y)
            if t <= 0:
                return 0.0
            out *= t
        return out

    g = lambda ys: f((ys[0], ys[0] + ys[1]))
    for _ in range(8):
        n = int(rng.integers(2 * k * rho, 60))
        seq = PointSequence(rng.random(n))
        lhs = r_k_consecutive(seq, g, 2 * rho, k).value
        rhs = r_k_testfn(seq, f, rho, k).value
        assert abs(lhs - rhs) <= 1e-12 * n


def test_support_radius_validated():
    seq = PointSequence([0.1, 0.5, 0.9])
    with pytest.raises(ParameterError):
        r_k_testfn(seq, lambda ys: 0.0, 2.0, 2)


def test_brute_force_budget(monkeypatch):
    monkeypatch.setenv("CORRKIT_ORACLE_BUDGET", "100")
    seq = PointSequence(np.random.default_rng(1).random(20))
    with pytest.raises(BudgetError):
        brute_force_r_k(seq, scales=(0.5,))
    monkeypatch.delenv("CORRKIT_ORACLE_BUDGET")
    assert brute_force_r_k(seq, scales=(0.5,)).raw_count >= 0


def test_report_value_is_count_over_n():
    rep = r_k_distinct(THREE, (0.5,))
    assert rep.value == rep.raw_count / rep.n


def test_scale_vector_validation():
    with pytest.raises(ParameterError):
        ScaleVector(())
    with pytest.raises(ParameterError):
        ScaleVector((0.0,))
    assert ScaleVector.equal(1.0, 3).scales == (1.0, 1.0)


def test_order_sixteen_counts_stay_exact():
    # products overflow int64 here; the counters must fall back to exact ints
    import math

    n, k = 50, 16
    seq = PointSequence([0.3] * n)
    star = r_k_star(seq, (1.0,) * (k - 1))
    assert star.raw_count == n**k
    dist = r_k_distinct(seq, (1.0,) * (k - 1))
    assert dist.raw_count == math.perm(n, k)
    with pytest.raises(ParameterError):
        r_k_star(seq, (1.0,) * 16)  # k = 17 is out of contract


def test_box_halves_recombine_to_symmetric_count():
    # [‑s,0] and [0,s] overlap exactly in the zero-difference pairs, so
    # #[-s,0] + #[0,s] - #duplicates = #symmetric, exactly, duplicates and all
    rng = np.random.default_rng(14)
    for _ in range(15):
        n = int(rng.integers(4, 40))
        pts = rng.integers(0, 7, size=n) / 7.0  # force exact duplicates
        seq = PointSequence(pts)
        s = float(rng.uniform(0.1, 0.9 * n / 2))
        pos = r_k_box(seq, ((0.0, s),)).raw_count
        neg = r_k_box(seq, ((-s, 0.0),)).raw_count
        sym = r_k_distinct(seq, (s,)).raw_count
        zeros = sum(
            1 for i in range(n) for j in range(n) if i != j and pts[i] == pts[j]
        )
        assert pos + neg - zeros == sym


def test_box_dense_occupancy_uses_plain_dfs_correctly():
    # 30 points in one tight cluster: window occupancy 29 > memo limit
    rng = np.random.default_rng(15)
    pts = 0.4 + rng.random(30) * 0.004
    seq = PointSequence(pts)
    n = len(seq)
    boxes = ((-0.5, 0.5), (-0.3, 0.4))
    fast = r_k_box(seq, boxes).raw_count
    brute = brute_force_r_k(seq, boxes=boxes).raw_count
    assert fast == brute > 0


def test_threads_do_not_change_results():
    rng = np.random.default_rng(13)
    seq = PointSequence(rng.random(600))
    boxes = ((-0.8, 0.3), (0.1, 1.2))
    a = r_k_box(seq, boxes, threads=1)
    b = r_k_box(seq, boxes, threads=4)
    assert a.raw_count == b.raw_count
    f = lambda ys: float(np.prod([max(1.0 - abs(y), 0.0) for y in ys]))
    va = r_k_testfn(seq, f, 1.0, 3, threads=1).value
    vb = r_k_testfn(seq, f, 1.0, 3, threads=4).value
    assert va == vb
