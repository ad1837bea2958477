"""Generators for the sequence families the statistics are computed on.

Randomness uses numpy's PCG64 behind ``default_rng``; Monte Carlo code
derives one independent stream per trial from ``SeedSequence([seed,
trial])`` so results are reproducible regardless of how trials are
scheduled.

Dilated sequences {a_n * alpha} are reduced mod 1 in exact integer
arithmetic before rounding once to float64: a float alpha equals p/q
with q a power of two, so {a p / q} = ((a p) mod q) / q, computed with
Python ints.  Naive float multiplication would lose exactly the
low-order bits that determine the fractional part for large a_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import PointSequence
from .errors import ParameterError

KINDS = (
    "uniform_random",
    "kronecker",
    "polynomial",
    "dilated",
    "dyadic_counterexample",
    "van_der_corput",
)


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one sequence family; see ``generate``."""

    kind: str
    alpha: float | None = None
    degree: int | None = None
    seed: int | None = None
    integers: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown generator kind {self.kind!r}")
        if self.kind == "polynomial" and (self.degree is None or self.degree < 1):
            raise ParameterError("polynomial generator needs degree >= 1")
        if self.kind in ("kronecker", "polynomial", "dilated") and self.alpha is None:
            raise ParameterError(f"{self.kind} generator needs alpha")
        if self.kind == "dilated":
            ints = self.integers
            if not ints:
                raise ParameterError("dilated generator needs an integer sequence")
            if any(a <= 0 for a in ints) or any(
                b <= a for a, b in zip(ints, ints[1:])
            ):
                raise ParameterError("integer sequence must be strictly increasing and positive")
        if self.kind == "uniform_random" and self.seed is None:
            raise ParameterError("uniform_random generator needs a seed")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent PCG64 stream for (seed, trial)."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(trial)]))


def exact_frac_parts(integers, alpha: float) -> np.ndarray:
    """{a * alpha} computed exactly per entry, rounded once to float64."""
    p, q = float(alpha).as_integer_ratio()
    # q is a power of two, so ((a*p) mod q)/q is one correctly-rounded division
    vals = [((int(a) * p) % q) / q for a in integers]
    return np.asarray(vals, dtype=np.float64) % 1.0


def uniform_random(n: int, seed: int) -> PointSequence:
    """n i.i.d. uniform points from the PCG64 stream of ``seed``."""
    _check_n(n)
    return PointSequence(np.random.default_rng(int(seed)).random(n))


def kronecker(n: int, alpha: float) -> PointSequence:
    """{alpha}, {2 alpha}, ..., {n alpha}."""
    _check_n(n)
    return PointSequence(exact_frac_parts(range(1, n + 1), alpha))


def polynomial(n: int, alpha: float, degree: int) -> PointSequence:
    """{alpha * m^degree} for m = 1..n."""
    _check_n(n)
    if degree < 1:
        raise ParameterError("degree must be >= 1")
    return PointSequence(exact_frac_parts((m**degree for m in range(1, n + 1)), alpha))


def dilated(n: int, integers, alpha: float) -> PointSequence:
    """{a_m * alpha} for the first n entries of a strictly increasing integer list."""
    _check_n(n)
    ints = [int(a) for a in integers][:n]
    if len(ints) < n:
        raise ParameterError(f"integer sequence has only {len(ints)} entries, need {n}")
    if any(a <= 0 for a in ints) or any(b <= a for a, b in zip(ints, ints[1:])):
        raise ParameterError("integer sequence must be strictly increasing and positive")
    return PointSequence(exact_frac_parts(ints, alpha))


def dyadic_counterexample(n: int) -> PointSequence:
    """The doubled dyadic sequence 0, 0, 1/2, 1/2, 1/4, 1/4, 3/4, 3/4, ...

    x_m = (2 ceil(k/2) - 1) / 2^r for m = 2^r + k, 1 <= k <= 2^r, and
    x_1 = 0.  Among the first 2^r points every value occurs exactly
    twice and distinct values are 2/2^r apart, which pins R_2 = 1 while
    R_3 = 0 for scales below 2 at N = 2^r.
    """
    _check_n(n)
    out = np.empty(n, dtype=np.float64)
    out[0] = 0.0
    m = 2
    r = 0
    while m <= n:
        block = 1 << r  # indices m = 2^r + k, k = 1..2^r
        k = m - block
        while k <= block and m <= n:
            out[m - 1] = ((2 * ((k + 1) // 2) - 1) / block) % 1.0
            m += 1
            k += 1
        r += 1
    return PointSequence(out)


def van_der_corput(n: int) -> PointSequence:
    """Base-2 radical-inverse sequence; a structured non-random example."""
    _check_n(n)
    out = np.empty(n, dtype=np.float64)
    for m in range(1, n + 1):
        v, denom, mm = 0.0, 2, m
        while mm:
            v += (mm & 1) / denom
            denom *= 2
            mm >>= 1
        out[m - 1] = v
    return PointSequence(out)


def generate(spec: GeneratorSpec, n: int) -> PointSequence:
    """First n terms of the family described by ``spec``, reduced mod 1."""
    _check_n(n)
    if spec.kind == "uniform_random":
        return uniform_random(n, spec.seed)
    if spec.kind == "kronecker":
        return kronecker(n, spec.alpha)
    if spec.kind == "polynomial":
        return polynomial(n, spec.alpha, spec.degree)
    if spec.kind == "dilated":
        return dilated(n, spec.integers, spec.alpha)
    if spec.kind == "dyadic_counterexample":
        return dyadic_counterexample(n)
    if spec.kind == "van_der_corput":
        return van_der_corput(n)
    raise ParameterError(f"unknown generator kind {spec.kind!r}")


def _check_n(n: int) -> None:
    if int(n) < 1:
        raise ParameterError("n must be >= 1")
