import math

import numpy as np
import pytest

from corrkit import (
    ParameterError,
    PointSequence,
    brute_force_r_k,
    c_k_distinct_bruteforce,
    c_k_star,
    c_k_star_local,
    circle_distance,
    lambda_overlap,
    moments,
    signed_distance,
    uniform_random,
)


def test_lambda_overlap_examples():
    seq = PointSequence([0.0, 0.3])
    assert lambda_overlap(seq, 1.0, 0, 0) == pytest.approx(0.5)  # i = j gives s/N
    assert lambda_overlap(seq, 1.0, 0, 1) == pytest.approx(0.2)
    far = PointSequence([0.0, 0.5])
    assert lambda_overlap(far, 0.6, 0, 1) == 0.0  # disjoint arcs


def test_lambda_overlap_validation():
    seq = PointSequence([0.0, 0.3])
    with pytest.raises(ParameterError):
        lambda_overlap(seq, 3.0, 0, 1)
    with pytest.raises(ParameterError):
        lambda_overlap(seq, 1.0, 0, 2)


def test_c2_star_single_point():
    # N = 1: the single diagonal term gives exactly s
    for s in (0.25, 0.5, 1.0):
        assert c_k_star(PointSequence([0.7]), (s,)) == pytest.approx(s)


def test_c_k_star_matches_direct_double_sum():
    rng = np.random.default_rng(0)
    for _ in range(10):
        n = int(rng.integers(2, 50))
        s = float(rng.uniform(0.2, n))
        seq = PointSequence(rng.random(n))
        x = seq.points
        direct = math.fsum(
            max(s / n - circle_distance(x[i], x[j]), 0.0)
            for i in range(n)
            for j in range(n)
        )
        assert c_k_star(seq, (s,)) == pytest.approx(direct, rel=1e-12, abs=1e-14)


def test_c_k_star_equals_second_moment_of_window_count():
    rng = np.random.default_rng(1)
    for _ in range(10):
        n = int(rng.integers(100, 3000))
        s = float(rng.choice([0.5, 1.0, 5.0, 50.0]))
        seq = PointSequence(rng.random(n))
        left = moments(seq, s, 2).i_k_star
        right = c_k_star(seq, (s,))
        assert abs(left - right) <= 1e-9 * abs(right)


def test_c_k_star_lower_bound():
    rng = np.random.default_rng(2)
    for _ in range(15):
        n = int(rng.integers(10, 400))
        s = float(rng.uniform(0.2, min(n / 2, 8.0)))
        k = int(rng.integers(2, 5))
        seq = PointSequence(rng.random(n))
        assert c_k_star(seq, (s,) * (k - 1)) >= s ** (2 * (k - 1)) * (1 - 1e-12)


def test_c_k_star_scale_box_integral_k3():
    # 2-D integration of brute-force R_3* over its exact breakpoints
    rng = np.random.default_rng(3)
    for _ in range(3):
        n = int(rng.integers(10, 22))
        seq = PointSequence(rng.random(n))
        s1, s2 = float(rng.uniform(0.3, 1.2)), float(rng.uniform(0.3, 1.2))
        x = seq.points
        dvals = np.unique(np.abs(signed_distance(x[:, None] - x[None, :]))) * n

        def breaks(s):
            return np.unique(np.concatenate(([0.0], dvals[(dvals > 0) & (dvals < s)], [s])))

        total = 0.0
        b1, b2 = breaks(s1), breaks(s2)
        for a1, a2 in zip(b1[:-1], b1[1:]):
            for c1, c2 in zip(b2[:-1], b2[1:]):
                r = brute_force_r_k(seq, scales=((a1 + a2) / 2, (c1 + c2) / 2), star=True).value
                total += r * (a2 - a1) * (c2 - c1)
        assert c_k_star(seq, (s1, s2)) == pytest.approx(total, rel=1e-3)


def test_hoelder_chain_pair_vs_k():
    rng = np.random.default_rng(4)
    for _ in range(15):
        n = int(rng.integers(20, 300))
        s = float(rng.uniform(0.3, 10.0))
        k = int(rng.integers(3, 5))
        seq = PointSequence(rng.random(n))
        assert c_k_star(seq, (s,)) ** (k - 1) <= c_k_star(seq, (s,) * (k - 1)) * (1 + 1e-12)


def test_local_full_interval_matches_global():
    rng = np.random.default_rng(5)
    for _ in range(8):
        n = int(rng.integers(5, 200))
        s = float(rng.uniform(0.3, 5.0))
        k = int(rng.integers(2, 5))
        seq = PointSequence(rng.random(n))
        assert c_k_star_local(seq, s, k, (0.0, 1.0)) == pytest.approx(
            c_k_star(seq, (s,) * (k - 1)), rel=1e-12
        )


def test_local_empty_interval():
    seq = PointSequence([0.1, 0.2, 0.3])
    assert c_k_star_local(seq, 1.0, 3, (0.8, 0.9)) == 0.0


def test_local_superadditivity_over_partition():
    rng = np.random.default_rng(6)
    for _ in range(8):
        n = int(rng.integers(50, 1500))
        s = float(rng.uniform(0.5, 4.0))
        k = int(rng.integers(2, 4))
        seq = PointSequence(rng.random(n))
        parts = 8
        total = sum(
            c_k_star_local(seq, s, k, (j / parts, (j + 1) / parts)) for j in range(parts)
        )
        assert total <= c_k_star(seq, (s,) * (k - 1)) * (1 + 1e-12)


def test_distinct_bruteforce_examples():
    seq = PointSequence([0.0, 0.1, 0.5])
    assert c_k_distinct_bruteforce(seq, (0.6,)) == pytest.approx(0.2)
    # N = 1: no distinct tuple exists
    assert c_k_distinct_bruteforce(PointSequence([0.5]), (0.4,)) == 0.0


def test_distinct_below_star():
    rng = np.random.default_rng(7)
    for _ in range(10):
        n = int(rng.integers(2, 25))
        k = int(rng.integers(2, 4))
        s = float(rng.uniform(0.2, min(n, 3.0)))
        seq = PointSequence(rng.random(n))
        assert c_k_distinct_bruteforce(seq, (s,) * (k - 1)) <= c_k_star(seq, (s,) * (k - 1)) * (1 + 1e-12)


def test_local_lower_bound_for_uniform():
    a, s, k = 0.5, 2.0, 3
    seq = uniform_random(10**4, 11)
    assert c_k_star_local(seq, s, k, (0.0, a)) >= 0.9 * a * s ** (2 * (k - 1))
