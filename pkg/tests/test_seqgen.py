from fractions import Fraction

import numpy as np
import pytest

from corrkit import (
    GeneratorSpec,
    ParameterError,
    dilated,
    dyadic_counterexample,
    exact_frac_parts,
    generate,
    kronecker,
    polynomial,
    trial_rng,
    uniform_random,
    van_der_corput,
)


def test_kronecker_rational_alpha():
    assert kronecker(4, 0.5).points.tolist() == [0.5, 0.0, 0.5, 0.0]


def test_polynomial_direct_evaluation():
    assert polynomial(3, 0.5, 2).points.tolist() == [0.5, 0.0, 0.5]


def test_uniform_random_reproducible():
    a = uniform_random(1000, 42)
    b = uniform_random(1000, 42)
    assert np.array_equal(a.points, b.points)
    assert not np.array_equal(a.points, uniform_random(1000, 43).points)


def test_generate_dispatch_matches_helpers():
    spec = GeneratorSpec(kind="kronecker", alpha=0.3)
    assert np.array_equal(generate(spec, 50).points, kronecker(50, 0.3).points)
    spec = GeneratorSpec(kind="uniform_random", seed=7)
    assert np.array_equal(generate(spec, 50).points, uniform_random(50, 7).points)


def test_generate_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        GeneratorSpec(kind="polynomial", alpha=0.5, degree=0)
    with pytest.raises(ParameterError):
        GeneratorSpec(kind="nope")
    with pytest.raises(ParameterError):
        GeneratorSpec(kind="dilated", alpha=0.5, integers=(3, 2, 1))
    with pytest.raises(ParameterError):
        generate(GeneratorSpec(kind="van_der_corput"), 0)


def test_dyadic_explicit_prefix():
    assert dyadic_counterexample(2).points.tolist() == [0.0, 0.0]
    assert dyadic_counterexample(8).points.tolist() == [0.0, 0.0, 0.5, 0.5, 0.25, 0.25, 0.75, 0.75]


def test_dyadic_block_structure_exhaustive():
    for m in range(1, 15):
        pts = dyadic_counterexample(2**m).points
        vals, counts = np.unique(pts, return_counts=True)
        assert np.all(counts == 2)
        if vals.size > 1:
            assert np.diff(vals).min() == pytest.approx(2.0 / 2**m)
            # values sit on the dyadic grid of step 2/2^m
            assert np.allclose(vals * 2 ** (m - 1) % 1, 0.0)


def test_dilated_matches_exact_rational_reduction():
    rng = np.random.default_rng(0)
    ints = np.cumsum(rng.integers(1, 2**45, size=40)).tolist()
    alpha = float(rng.random())
    got = dilated(40, ints, alpha).points
    fr = Fraction(alpha)
    expected = [float(Fraction(a) * fr % 1) for a in ints]
    assert got.tolist() == expected


def test_exact_frac_parts_beats_naive_float():
    # at a ~ 2^60 the naive product has lost the fractional part entirely
    a = 2**60 + 1
    alpha = 1 / 3
    exact = float(Fraction(a) * Fraction(alpha) % 1)
    assert exact_frac_parts([a], alpha)[0] == exact
    assert (a * alpha) % 1.0 != exact


def test_all_families_in_unit_interval():
    seqs = [
        uniform_random(300, 1),
        kronecker(300, (5**0.5 - 1) / 2),
        polynomial(300, 0.123456, 3),
        dilated(100, range(1, 101), 0.77),
        dyadic_counterexample(300),
        van_der_corput(300),
    ]
    for s in seqs:
        assert s.points.min() >= 0.0
        assert s.points.max() < 1.0


def test_van_der_corput_prefix():
    assert van_der_corput(7).points.tolist() == [0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875]


def test_trial_rng_streams_independent_and_stable():
    a1 = trial_rng(9, 0).random(5)
    a2 = trial_rng(9, 0).random(5)
    b = trial_rng(9, 1).random(5)
    assert np.array_equal(a1, a2)
    assert not np.array_equal(a1, b)
