"""Uniform-distribution diagnostics: empirical distribution, dyadic
density profiles, the density-moment functional, and star discrepancy.

Empirical bucket masses stand in for any limit distribution function;
level r is an explicit parameter and nothing here claims convergence.
Bucket boundaries are the half-open dyadic intervals [i/2^r, (i+1)/2^r),
which partition [0,1) exactly (and are float-exact: scaling by 2^r is
an exact operation on the stored doubles).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import PointSequence
from .errors import ParameterError


@dataclass(frozen=True)
class DyadicProfile:
    level: int
    masses: np.ndarray  # 2^level entries summing to 1

    @property
    def buckets(self) -> int:
        return int(self.masses.size)


def ecdf(seq: PointSequence, x: float) -> float:
    """(1/N) #{m : x_m <= x} for x in [0,1]."""
    if not (0.0 <= x <= 1.0):
        raise ParameterError("x must be in [0,1]")
    n = len(seq)
    return float(np.searchsorted(seq.sorted_points, x, side="right")) / n


def dyadic_profile(seq: PointSequence, r: int) -> DyadicProfile:
    """Exact bucket masses over the 2^r dyadic intervals."""
    if r < 0:
        raise ParameterError("level must be >= 0")
    n = len(seq)
    buckets = np.floor(seq.points * (1 << r)).astype(np.int64)
    counts = np.bincount(buckets, minlength=1 << r)
    return DyadicProfile(int(r), counts / n)


def density_moment_lower_bound(seq: PointSequence, r: int, k: int) -> float:
    """sum_i 2^(r(k-1)) masses[i]^k: the empirical density k-th moment at
    dyadic level r.  Equals 1 for perfectly uniform masses, 2^(r(k-1))
    for full concentration, and is non-decreasing in r for any fixed
    sequence (refining a bucket can only raise the power mean).
    """
    if k < 2:
        raise ParameterError("k must be >= 2")
    prof = dyadic_profile(seq, r)
    return float(2.0 ** (r * (k - 1))) * math.fsum((prof.masses**k).tolist())


def star_discrepancy(seq: PointSequence) -> float:
    """Exact 1-D star discrepancy from the sorted view:
    max_i max(i/N - x_(i), x_(i) - (i-1)/N)."""
    n = len(seq)
    xs = seq.sorted_points
    i = np.arange(1, n + 1)
    return float(np.maximum(i / n - xs, xs - (i - 1) / n).max())
