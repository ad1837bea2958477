"""k-th order correlation counters: fast sorted-window algorithms plus
brute-force oracles.

All statistics are normalized counts over index k-tuples
(i_1, ..., i_k), i_j <= N, of a point sequence (x_m):

  r_k_star      repeats allowed, ||x_{i_1} - x_{i_{r+1}}|| <= s_r/N;
                factorizes per anchor as prod_r z_{i_1}(s_r) with
                z_i(s) = #{j : ||x_i - x_j|| <= s/N}
  r_k_distinct  pairwise-distinct indices, same constraints
  r_k_box       distinct indices, signed constraints
                a_r/N <= ((x_{i_1} - x_{i_{r+1}})) <= b_r/N
  r_k_testfn    distinct indices, weight f(N((x_{i_1}-x_{i_2})), ...)
  r_k_consecutive  distinct indices, weight on consecutive differences
                f(N((x_{i_1}-x_{i_2})), N((x_{i_2}-x_{i_3})), ...)

Counts are exact integers; every fast path is tested for exact integer
agreement against brute_force_r_k.  Window location uses two searches on
a tripled sorted array covering [-1, 2), so circular windows never
branch.  Ties at an exact window boundary are included (closed
inequality) on both the fast and brute-force paths.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import PointSequence, circle_distance, count_within, signed_distance
from .errors import BudgetError, ParameterError

ORACLE_BUDGET_ENV = "CORRKIT_ORACLE_BUDGET"
DEFAULT_ORACLE_BUDGET = 10**8

# candidate windows are padded by this much before the exact per-pair
# predicate is applied, so float rounding can only add candidates
_WINDOW_PAD = 1e-12

# bitmask-memoized injective counting up to this many window occupants
_MEMO_OCCUPANCY = 20


def oracle_budget() -> int:
    return int(os.environ.get(ORACLE_BUDGET_ENV, DEFAULT_ORACLE_BUDGET))


@dataclass(frozen=True)
class ScaleVector:
    """k-1 positive scales (s_1, ..., s_{k-1})."""

    scales: tuple[float, ...]

    def __post_init__(self):
        if len(self.scales) < 1:
            raise ParameterError("need at least one scale (k >= 2)")
        if any(s <= 0 for s in self.scales):
            raise ParameterError("all scales must be > 0")

    @classmethod
    def equal(cls, s: float, k: int) -> "ScaleVector":
        if k < 2:
            raise ParameterError("k must be >= 2")
        return cls((float(s),) * (k - 1))

    @property
    def k(self) -> int:
        return len(self.scales) + 1


@dataclass(frozen=True)
class BoxVector:
    """k-1 intervals (a_r, b_r), a_r < b_r, for the signed box form."""

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.intervals) < 1:
            raise ParameterError("need at least one interval (k >= 2)")
        if any(b <= a for a, b in self.intervals):
            raise ParameterError("each interval needs b > a")

    @property
    def k(self) -> int:
        return len(self.intervals) + 1


@dataclass(frozen=True)
class CorrelationReport:
    """One computed statistic.

    ``value`` is the single correctly-rounded quotient raw_count / N
    whenever the statistic is a count (raw_count is not None).
    """

    statistic_name: str
    k: int
    n: int
    parameters: dict = field(compare=False)
    raw_count: int | None
    value: float


def _as_scales(scales, k=None) -> tuple[float, ...]:
    if isinstance(scales, ScaleVector):
        out = scales.scales
    elif np.ndim(scales) == 0:
        if k is None:
            raise ParameterError("a scalar scale needs an explicit k")
        out = (float(scales),) * (k - 1)
    else:
        out = tuple(float(s) for s in scales)
    if k is not None and len(out) != k - 1:
        raise ParameterError(f"expected {k - 1} scales, got {len(out)}")
    if len(out) < 1 or any(s <= 0 for s in out):
        raise ParameterError("scales must be positive and nonempty")
    if len(out) > 15:
        raise ParameterError("orders above k = 16 are unsupported")
    return out


def _as_boxes(boxes) -> tuple[tuple[float, float], ...]:
    if isinstance(boxes, BoxVector):
        return boxes.intervals
    out = tuple((float(a), float(b)) for a, b in boxes)
    BoxVector(out)  # validate
    return out


def _check_scales_fit(scales, n):
    for s in scales:
        if s > n / 2:
            raise ParameterError(f"scale {s} > N/2 = {n / 2}: constraint arc wraps")


def _exact_product_sum(factors: list[np.ndarray]) -> int:
    """sum_i prod_r factors[r][i] as an exact Python int.

    Stays in int64 when a worst-case bound proves no overflow, otherwise
    falls back to Python-int (object) arithmetic.
    """
    maxes = [int(f.max(initial=0)) for f in factors]
    bound = 1
    for m in maxes:
        bound *= max(m, 1)
    n = factors[0].size
    if bound * n < 2**62:
        prod = factors[0].astype(np.int64, copy=True)
        for f in factors[1:]:
            prod *= f
        return int(prod.sum())
    prod = factors[0].astype(object)
    for f in factors[1:]:
        prod = prod * f.astype(object)
    return int(prod.sum())


def r_k_star(seq: PointSequence, scales, k=None) -> CorrelationReport:
    """Correlation count with repeated indices allowed.

    value = (1/N) sum_i prod_r z_i(s_r, N); always >= 1 since the
    diagonal tuples contribute z_i >= 1.
    """
    scales = _as_scales(scales, k)
    n = len(seq)
    _check_scales_fit(scales, n)
    sp = seq.sorted_points
    zs = [count_within(sp, sp, s / n) for s in scales]
    raw = _exact_product_sum(zs)
    return CorrelationReport(
        "r_k_star", len(scales) + 1, n, {"scales": scales}, raw, raw / n
    )


def r_k_distinct(seq: PointSequence, scales, k=None) -> CorrelationReport:
    """Correlation count over pairwise-distinct index tuples.

    The count is invariant under permuting scale slots (a relabeling of
    tuple positions), so scales are sorted descending and the windows
    around each anchor become nested.  Filling slots from the smallest
    window outward, the injective assignments per anchor number
    c_(k-1) (c_(k-2) - 1) ... (c_1 - (k-2)), clamped at zero, where
    c_r = z_{i_1}(s_r) - 1 excludes the anchor itself.
    """
    scales = _as_scales(scales, k)
    n = len(seq)
    _check_scales_fit(scales, n)
    desc = sorted(scales, reverse=True)
    sp = seq.sorted_points
    cs = [count_within(sp, sp, s / n) - 1 for s in desc]
    factors = []
    for t in range(len(desc)):  # t-th filled slot uses the (k-1-t)-th largest window
        f = cs[len(desc) - 1 - t] - t
        factors.append(np.maximum(f, 0))
    raw = _exact_product_sum(factors)
    return CorrelationReport(
        "r_k", len(scales) + 1, n, {"scales": scales}, raw, raw / n
    )


# ---------------------------------------------------------------------------
# window occupants: per-anchor candidate lists with exact signed distances


def _window_pairs(sorted_pts: np.ndarray, radius: float):
    """(anchor, occupant) index pairs with ||x_a - x_o|| <= radius + pad.

    Anchors and occupants are positions in the sorted array; the anchor
    itself is kept (callers drop it).  Returns (pair_anchor, pair_pos,
    counts) where pair_pos is already reduced mod n.  The pad makes the
    candidate set a superset under rounding; exact predicates decide.
    """
    n = sorted_pts.size
    w = radius + _WINDOW_PAD
    if w >= 0.5:
        # whole circle: every point once per anchor
        pair_anchor = np.repeat(np.arange(n), n)
        pair_pos = np.tile(np.arange(n), n)
        return pair_anchor, pair_pos, np.full(n, n, dtype=np.int64)
    ext = np.concatenate((sorted_pts - 1.0, sorted_pts, sorted_pts + 1.0))
    lo = np.searchsorted(ext, sorted_pts - w, side="left")
    hi = np.searchsorted(ext, sorted_pts + w, side="right")
    cnt = hi - lo
    total = int(cnt.sum())
    pair_anchor = np.repeat(np.arange(n), cnt)
    offs = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    pair_pos = (np.repeat(lo, cnt) + offs) % n
    return pair_anchor, pair_pos, cnt


def _occupant_table(seq: PointSequence, radius: float):
    """Per-anchor lists of (occupant sorted-position, signed distance).

    Signed distances are ((x_anchor - x_occ)) computed with the core
    definition, so they match the brute-force predicate bit for bit.
    The anchor's own index is excluded; duplicate values at other
    indices stay.
    """
    sp = seq.sorted_points
    n = sp.size
    pa, pp, _ = _window_pairs(sp, radius)
    keep = pp != pa
    pa, pp = pa[keep], pp[keep]
    delta = signed_distance(sp[pa] - sp[pp])
    table = [([], []) for _ in range(n)]
    for a, p, d in zip(pa.tolist(), pp.tolist(), delta.tolist()):
        table[a][0].append(p)
        table[a][1].append(d)
    return table


def _count_injective(masks: list[int]) -> int:
    """Number of ways to pick pairwise-distinct items, one per slot,
    where masks[r] is the candidate bitmask of slot r."""
    order = sorted(range(len(masks)), key=lambda r: bin(masks[r]).count("1"))
    ms = [masks[r] for r in order]
    memo: dict[tuple[int, int], int] = {}

    def rec(r: int, used: int) -> int:
        if r == len(ms):
            return 1
        key = (r, used)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        avail = ms[r] & ~used
        while avail:
            bit = avail & -avail
            avail ^= bit
            total += rec(r + 1, used | bit)
        memo[key] = total
        return total

    def rec_plain(r: int, used: int) -> int:
        if r == len(ms):
            return 1
        total = 0
        avail = ms[r] & ~used
        while avail:
            bit = avail & -avail
            avail ^= bit
            total += rec_plain(r + 1, used | bit)
        return total

    width = max((m.bit_length() for m in ms), default=0)
    return rec(0, 0) if width <= _MEMO_OCCUPANCY else rec_plain(0, 0)


def _map_chunks(worker, n: int, threads: int):
    """worker(start, stop) over a partition of range(n), results in order.

    Partial results are per-anchor contribution lists, so any final
    reduction done in index order (or with math.fsum, which is exactly
    rounded) is independent of the thread count.
    """
    if threads <= 1 or n < 512:
        return [worker(0, n)]
    parts = min(threads * 4, n)
    bounds = np.linspace(0, n, parts + 1).astype(int)
    ranges = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(lambda ab: worker(*ab), ranges))


def r_k_box(seq: PointSequence, boxes, threads: int = 1) -> CorrelationReport:
    """Distinct-index count with signed per-slot constraints
    a_r/N <= ((x_{i_1} - x_{i_{r+1}})) <= b_r/N.

    Symmetric boxes (-s, s) reproduce r_k_distinct.  Per anchor the slot
    candidate sets are arcs that need not be nested, so injective
    tuples are counted by depth-first slot filling (bitmask-memoized for
    small windows).
    """
    boxes = _as_boxes(boxes)
    n = len(seq)
    k = len(boxes) + 1
    for a, b in boxes:
        if abs(a) > n / 2 or abs(b) > n / 2:
            raise ParameterError(f"box bound beyond N/2 = {n / 2}")
    los = [a / n for a, b in boxes]
    his = [b / n for a, b in boxes]
    radius = max(max(abs(a), abs(b)) for a, b in boxes) / n
    sp = seq.sorted_points

    if k == 2:
        pa, pp, _ = _window_pairs(sp, radius)
        keep = pp != pa
        pa, pp = pa[keep], pp[keep]
        delta = signed_distance(sp[pa] - sp[pp])
        ok = (delta >= los[0]) & (delta <= his[0])
        raw = int(np.count_nonzero(ok))
        return CorrelationReport("r_k_box", k, n, {"boxes": boxes}, raw, raw / n)

    table = _occupant_table(seq, radius)

    def worker(start, stop):
        sub = 0
        for a in range(start, stop):
            _, deltas = table[a]
            if len(deltas) < k - 1:
                continue
            masks = []
            for lo, hi in zip(los, his):
                m = 0
                for idx, d in enumerate(deltas):
                    if lo <= d <= hi:
                        m |= 1 << idx
                masks.append(m)
            if all(masks):
                sub += _count_injective(masks)
        return sub

    raw = sum(_map_chunks(worker, n, threads))
    return CorrelationReport("r_k_box", k, n, {"boxes": boxes}, raw, raw / n)


def r_k_testfn(seq: PointSequence, f, support_radius: float, k: int,
               threads: int = 1) -> CorrelationReport:
    """Weighted correlation sum over distinct tuples:
    (1/N) sum f(N((x_{i_1}-x_{i_2})), ..., N((x_{i_1}-x_{i_k}))).

    ``f`` takes a sequence of k-1 floats and must vanish outside
    [-support_radius, support_radius]^(k-1); enumeration is restricted
    to window occupants per anchor.
    """
    n = len(seq)
    if k < 2:
        raise ParameterError("k must be >= 2")
    if support_radius > n / 2:
        raise ParameterError(f"support radius {support_radius} > N/2 = {n / 2}")
    table = _occupant_table(seq, support_radius / n)

    def worker(start, stop):
        out = []
        for a in range(start, stop):
            _, deltas = table[a]
            if len(deltas) < k - 1:
                continue
            scaled = [n * d for d in deltas]
            if k == 2:
                out.extend(f((y,)) for y in scaled)
            else:
                for tup in itertools.permutations(scaled, k - 1):
                    out.append(f(tup))
        return out

    parts = _map_chunks(worker, n, threads)
    total = math.fsum(itertools.chain.from_iterable(parts))
    return CorrelationReport(
        "r_k_testfn", k, n, {"support_radius": support_radius}, None, total / n
    )


def r_k_consecutive(seq: PointSequence, f, support_radius: float, k: int,
                    threads: int = 1) -> CorrelationReport:
    """Weighted sum over distinct tuples with consecutive differences:
    (1/N) sum f(N((x_{i_1}-x_{i_2})), N((x_{i_2}-x_{i_3})), ...).

    For k = 2 this coincides with r_k_testfn.  A contributing tuple has
    every consecutive distance <= support_radius/N, hence lies within
    (k-1) support_radius/N of its first point; that window bounds the
    enumeration.
    """
    n = len(seq)
    if k < 2:
        raise ParameterError("k must be >= 2")
    if support_radius > n / 2:
        raise ParameterError(f"support radius {support_radius} > N/2 = {n / 2}")
    if k == 2:
        rep = r_k_testfn(seq, f, support_radius, 2, threads)
        return CorrelationReport(
            "r_k_consecutive", 2, n, {"support_radius": support_radius}, None, rep.value
        )
    sp = seq.sorted_points
    table = _occupant_table(seq, min((k - 1) * support_radius / n, 0.5))

    def worker(start, stop):
        out = []
        for a in range(start, stop):
            occ, deltas = table[a]
            if len(occ) < k - 1:
                continue
            for tup in itertools.permutations(range(len(occ)), k - 1):
                args = [n * deltas[tup[0]]]
                prev = tup[0]
                for cur in tup[1:]:
                    args.append(n * signed_distance(sp[occ[prev]] - sp[occ[cur]]))
                    prev = cur
                out.append(f(tuple(args)))
        return out

    parts = _map_chunks(worker, n, threads)
    total = math.fsum(itertools.chain.from_iterable(parts))
    return CorrelationReport(
        "r_k_consecutive", k, n, {"support_radius": support_radius}, None, total / n
    )


# ---------------------------------------------------------------------------
# brute force oracle


def _pairwise_signed(seq: PointSequence) -> np.ndarray:
    x = seq.points
    return signed_distance(x[:, None] - x[None, :])


def _distinct_mask(n: int, m: int) -> np.ndarray:
    """Pairwise-distinct mask over [n]^m tuples."""
    idx = np.indices((n,) * m)
    mask = np.ones((n,) * m, dtype=bool)
    for a in range(m):
        for b in range(a + 1, m):
            mask &= idx[a] != idx[b]
    return mask


def _charge_budget(n: int, k: int) -> None:
    if n**k > oracle_budget():
        raise BudgetError(
            f"brute force over N^k = {n}^{k} tuples exceeds the budget of "
            f"{oracle_budget()} visits (override via {ORACLE_BUDGET_ENV})"
        )


def brute_force_r_k(seq: PointSequence, *, scales=None, boxes=None, testfn=None,
                    support_radius=None, k=None, star=False) -> CorrelationReport:
    """Direct enumeration over all k-tuples; the reference every fast
    path is tested against.

    Exactly one of scales / boxes / testfn must be given.  Constraints
    are evaluated for every tuple of [N]^k from the raw pairwise
    signed-difference matrix, independent of the sorted-window
    machinery.
    """
    given = [scales is not None, boxes is not None, testfn is not None]
    if sum(given) != 1:
        raise ParameterError("give exactly one of scales, boxes, testfn")
    n = len(seq)

    if testfn is not None:
        if k is None or support_radius is None:
            raise ParameterError("testfn mode needs k and support_radius")
        _charge_budget(n, k)
        delta = _pairwise_signed(seq)
        tuples = (
            itertools.product(range(n), repeat=k)
            if star
            else itertools.permutations(range(n), k)
        )
        terms = [
            testfn(tuple(n * delta[t[0], t[r]] for r in range(1, k)))
            for t in tuples
        ]
        total = math.fsum(terms)
        name = "brute_force_r_k_star" if star else "brute_force_r_k"
        return CorrelationReport(name, k, n, {"support_radius": support_radius},
                                 None, total / n)

    if scales is not None:
        scales = _as_scales(scales, k)
        k = len(scales) + 1
        _check_scales_fit(scales, n)
        _charge_budget(n, k)
        x = seq.points
        dist = circle_distance(x[:, None], x[None, :])
        slot_masks = [dist <= s / n for s in scales]
    else:
        boxes = _as_boxes(boxes)
        k = len(boxes) + 1
        for a, b in boxes:
            if abs(a) > n / 2 or abs(b) > n / 2:
                raise ParameterError(f"box bound beyond N/2 = {n / 2}")
        _charge_budget(n, k)
        delta = _pairwise_signed(seq)
        slot_masks = [(delta >= a / n) & (delta <= b / n) for a, b in boxes]

    m = k - 1
    distinct = None if star else _distinct_mask(n, m)
    ids = np.arange(n)
    raw = 0
    for i1 in range(n):
        rows = [sm[i1] for sm in slot_masks]
        if not star:
            rows = [r & (ids != i1) for r in rows]
        tensor = rows[0]
        for r in rows[1:]:
            tensor = tensor[..., None] & r
        if distinct is not None:
            tensor = tensor & distinct
        raw += int(tensor.sum())
    name = "brute_force_r_k_star" if star else "brute_force_r_k"
    params = {"scales": scales} if scales is not None else {"boxes": boxes}
    return CorrelationReport(name, k, n, params, raw, raw / n)
