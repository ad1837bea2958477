"""Additive energy, arithmetic-progression counts, and the randomized
dilation experiments.

E(A) = #{(a,b,c,d) in A^4 : a+b = c+d} is computed by counting ordered
pair sums (E = sum_sigma r(sigma)^2); T(A) = #{(a,b,c) in A^3 :
a-b = b-c != 0} counts ordered nontrivial 3-term progressions, so each
unordered progression contributes 2.  Both are exact integers.

The dilation experiment samples uniform alpha, forms {a_m alpha} for the
first N entries of A, and compares the sample mean of the triple
correlation R_3(s, N) against the lower bound 2 s T(A_N) / N^2 that the
progression structure forces on the alpha-average.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PointSequence
from .correlations import r_k_box, r_k_distinct, _as_boxes
from .errors import BudgetError, ParameterError
from .seqgen import exact_frac_parts, trial_rng

_FLAT_SUM_LIMIT = 1 << 26  # use a flat array of pair-sum counts up to this
_METRIC_WORK_LIMIT = 10**8


@dataclass(frozen=True)
class IntegerSet:
    """A strictly increasing tuple of positive integers."""

    elements: tuple[int, ...]

    def __post_init__(self):
        e = self.elements
        if len(e) == 0:
            raise ParameterError("integer set must be nonempty")
        if e[0] <= 0 or any(b <= a for a, b in zip(e, e[1:])):
            raise ParameterError("elements must be strictly increasing and positive")

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class MetricExperimentReport:
    s: float
    n: int
    trials: int
    seed: int
    mean: float
    variance: float
    lower_bound: float          # 2 s T(A_N) / N^2
    fraction_above_poisson: float  # share of trials with R_3 > 4 s^2


def _as_elements(a) -> np.ndarray:
    if isinstance(a, IntegerSet):
        e = a.elements
    else:
        e = tuple(int(v) for v in a)
        IntegerSet(e)  # validate
    return np.asarray(e, dtype=np.int64)


def additive_energy(a) -> int:
    """E(A): exact count of quadruples with a+b = c+d, via pair-sum counts
    E = sum_sigma r(sigma)^2 with r(sigma) the ordered pairs summing to sigma."""
    e = _as_elements(a)
    if int(e[-1]) * 2 <= _FLAT_SUM_LIMIT:
        sums = (e[:, None] + e[None, :]).ravel()
        counts = np.bincount(sums).astype(np.int64)
        # r <= |A| and sum r^2 <= |A|^3, exact in int64 up to |A| ~ 2e6
        return int(np.sum(counts * counts))
    table: dict[int, int] = {}
    elems = e.tolist()
    for x in elems:
        for y in elems:
            sig = x + y
            table[sig] = table.get(sig, 0) + 1
    return sum(c * c for c in table.values())


def additive_energy_bruteforce(a) -> int:
    """O(|A|^4) oracle."""
    e = _as_elements(a).tolist()
    return sum(
        1
        for x in e
        for y in e
        for z in e
        for w in e
        if x + y == z + w
    )


def three_ap_count(a) -> int:
    """T(A): ordered triples (x,y,z) with x-y = y-z != 0, i.e. x+z = 2y,
    x != z, midpoint in A."""
    e = _as_elements(a)
    members = set(e.tolist())
    sums = e[:, None] + e[None, :]
    even = sums % 2 == 0
    np.fill_diagonal(even, False)
    mids = (sums[even] // 2).tolist()
    return sum(1 for m in mids if m in members)


def three_ap_count_bruteforce(a) -> int:
    """O(|A|^3) oracle."""
    e = _as_elements(a).tolist()
    return sum(
        1
        for x in e
        for y in e
        for z in e
        if x - y == y - z and x != y
    )


def metric_r3_experiment(a, s: float, n: int, trials: int, seed: int) -> MetricExperimentReport:
    """Sample uniform dilations alpha, compute R_3(s, N) of ({a_m alpha})
    per trial, and report the sample mean against 2 s T(A_N) / N^2."""
    e = _as_elements(a)
    if n > e.size:
        raise ParameterError(f"N = {n} exceeds |A| = {e.size}")
    if s > n / 2:
        raise ParameterError(f"need s <= N/2 = {n / 2}")
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    if n * trials > _METRIC_WORK_LIMIT:
        raise BudgetError(f"N * trials = {n * trials} exceeds {_METRIC_WORK_LIMIT}")
    head = e[:n]
    t_count = three_ap_count(head.tolist())
    lower = 2.0 * s * t_count / n**2
    vals = np.empty(trials)
    for t in range(trials):
        alpha = float(trial_rng(seed, t).random())
        seq = PointSequence(exact_frac_parts(head.tolist(), alpha))
        vals[t] = r_k_distinct(seq, (s, s)).value
    mean = float(vals.mean())
    var = float(vals.var(ddof=1)) if trials > 1 else 0.0
    frac = float(np.mean(vals > 4.0 * s * s))
    return MetricExperimentReport(float(s), int(n), int(trials), int(seed),
                                  mean, var, lower, frac)


def random_correlation_stats(k: int, boxes, n: int, trials: int, seed: int):
    """Sample mean and unbiased sample variance of the box correlation
    over independent seeded uniform sequences of length n."""
    boxes = _as_boxes(boxes)
    if len(boxes) != k - 1:
        raise ParameterError(f"expected {k - 1} boxes for k = {k}")
    if trials < 2:
        raise ParameterError("trials must be >= 2")
    if n * trials > _METRIC_WORK_LIMIT:
        raise BudgetError(f"N * trials = {n * trials} exceeds {_METRIC_WORK_LIMIT}")
    vals = np.empty(trials)
    for t in range(trials):
        seq = PointSequence(trial_rng(seed, t).random(n))
        vals[t] = r_k_box(seq, boxes).value
    return float(vals.mean()), float(vals.var(ddof=1))


def integer_range(n: int) -> IntegerSet:
    """{1, 2, ..., n}: maximal additive energy E ~ (2/3) n^3."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    return IntegerSet(tuple(range(1, n + 1)))


def additive_energy_range_closed_form(n: int) -> int:
    """E({1..n}) = n(n+1)(2n+1)/3 - n^2."""
    return n * (n + 1) * (2 * n + 1) // 3 - n * n


def dilation_measure_quadrature(d: int, s: float, n: int, grid: int = 200001) -> float:
    """Midpoint-rule measure of {alpha in [0,1) : ||d alpha|| <= s/N};
    the exact value is 2s/N for every integer d >= 1."""
    if d < 1:
        raise ParameterError("d must be >= 1")
    alphas = (np.arange(grid) + 0.5) / grid
    frac = (d * alphas) % 1.0
    dist = np.minimum(frac, 1.0 - frac)
    return float(np.mean(dist <= s / n))
