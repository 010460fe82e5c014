"""Fourier-side tools: smoothed indicators, exponential sums over primes,
the generic-modulus progression bound, and extreme discrepancy.

The smoothing is the classical construction: convolve the periodic
indicator of (0, gamma] with a box kernel of half-width Delta.  The
resulting function agrees with the indicator outside Delta-neighbourhoods
of the jumps, interpolates linearly across them, and has Fourier
coefficients bounded by min(1/(pi k), 1/(2 pi^2 k^2 Delta)), which is what
makes truncated expansions quantitative: the tail beyond K contributes at
most 1/(pi^2 K Delta) pointwise.

Exponential sums use exact phase reduction (the integer part of theta*n is
removed in integer arithmetic before any trigonometry), so cancellation
down at the 1e-12 level is measured, not drowned in rounding noise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DeltaOutOfRange, PointOutOfRange
from .irrational import Irrational, cf_expand
from .sieve import MangoldtTable, ResidueClass

__all__ = ["PsiDelta", "SamplePoints", "psi_indicator", "build_psi_delta",
           "exp_sum_shifted", "exp_sum_ap", "substitution_identity_check",
           "SubstitutionCheck", "bound_ratio_sweep", "progression_sum_bound",
           "default_truncation",
           "BoundRatioRow", "discrepancy", "discrepancy_brute",
           "discrepancy_beatty", "decay_exponent"]

_TWO_PI = 2.0 * math.pi


def psi_indicator(x, gamma) -> float:
    """Period-1 indicator of (0, gamma]: 1 when 0 < {x} <= gamma, else 0."""
    r = x - math.floor(x)
    return 1.0 if 0 < r <= gamma else 0.0


@dataclass
class PsiDelta:
    """Truncated Fourier data of the smoothed indicator.

    g[k-1] multiplies e(k x) and h[k-1] multiplies e(-k x); by construction
    h = conj(g), and the mean value (the k = 0 coefficient) is gamma.
    """
    gamma: float
    delta: float
    K: int
    g: np.ndarray
    h: np.ndarray

    @property
    def mean(self) -> float:
        return self.gamma

    def coefficient_bounds(self) -> np.ndarray:
        k = np.arange(1, self.K + 1, dtype=np.float64)
        return np.minimum(1.0 / (math.pi * k),
                          1.0 / (2.0 * math.pi ** 2 * k * k * self.delta))

    def max_bound_ratio(self) -> float:
        """max_k |g_k| / bound_k; should not exceed 1 beyond roundoff."""
        return float(np.max(np.abs(self.g) / self.coefficient_bounds()))

    def tail_bound(self, K: Optional[int] = None) -> float:
        """Pointwise bound for the discarded tail beyond K."""
        K = self.K if K is None else K
        return 1.0 / (math.pi ** 2 * K * self.delta)

    def evaluate(self, x, K: Optional[int] = None):
        """Truncated series at x (scalar or array), using frequencies <= K."""
        KK = self.K if K is None else min(K, self.K)
        xs = np.atleast_1d(np.asarray(x, np.float64))
        acc = np.full(xs.shape, float(self.gamma))
        for lo in range(0, KK, 2048):
            ks = np.arange(lo + 1, min(lo + 2048, KK) + 1)
            for xlo in range(0, xs.size, 4096):
                chunk = xs[xlo: xlo + 4096]
                ph = np.exp((2j * math.pi) * np.outer(chunk, ks))
                acc[xlo: xlo + 4096] += 2.0 * (ph * self.g[ks - 1]).real.sum(axis=1)
        return acc if np.ndim(x) else float(acc[0])


def build_psi_delta(gamma: float, delta: float, K: int) -> PsiDelta:
    """Box-kernel smoothing of the (0, gamma] indicator, truncated at K."""
    gamma = float(gamma)
    if not 0.0 < gamma < 1.0:
        raise ValueError("gamma must lie strictly between 0 and 1")
    if not (0.0 < delta < 0.125 and delta <= min(gamma, 1.0 - gamma) / 2.0):
        raise DeltaOutOfRange(
            f"delta={delta} violates 0 < delta < 1/8 and delta <= min(gamma, 1-gamma)/2")
    if K < 1:
        raise ValueError("K must be >= 1")
    k = np.arange(1, K + 1, dtype=np.float64)
    # indicator coefficients (1 - e(-k gamma)) / (2 pi i k), box kernel sinc
    ind = (1.0 - np.exp(-2j * math.pi * k * gamma)) / (2j * math.pi * k)
    y = _TWO_PI * k * delta
    box = np.sin(y) / y
    g = ind * box
    return PsiDelta(gamma, float(delta), K, g, np.conj(g))


# -- exponential sums over primes ------------------------------------------

def _phase_sum(weights, phases) -> complex:
    ang = _TWO_PI * phases
    re = weights * np.cos(ang)
    im = weights * np.sin(ang)
    return complex(math.fsum(re.tolist()), math.fsum(im.tolist()))


def _progression_support(table: MangoldtTable, L: int, r: ResidueClass,
                         min_n: int):
    power, log_base = table.records_upto(L)
    sel = (power % r.q == r.a) & (power >= min_n)
    return power[sel], log_base[sel]


def exp_sum_shifted(table: MangoldtTable, M: int, r: ResidueClass,
                    gamma: Irrational, k: int) -> complex:
    """Sum of Lambda(q*m + a) e(gamma*k*m) over 1 <= m <= M."""
    if k == 0:
        raise ValueError("frequency k must be nonzero")
    if M < 1:
        return 0j
    table.require(r.q * M + r.a)
    ns, lam = _progression_support(table, r.q * M + r.a, r, r.q + r.a)
    ms = (ns - r.a) // r.q
    theta = gamma * k
    return _phase_sum(lam, theta.phases_many(ms))


def exp_sum_ap(table: MangoldtTable, M: int, r: ResidueClass,
               gamma: Irrational, k: int) -> complex:
    """Sum of Lambda(m) e(gamma*k*m) over m <= M with m congruent to a mod q."""
    if k == 0:
        raise ValueError("frequency k must be nonzero")
    if M < 2:
        table.require(max(M, 0))
        return 0j
    ns, lam = _progression_support(table, M, r, 2)
    theta = gamma * k
    return _phase_sum(lam, theta.phases_many(ns))


@dataclass
class SubstitutionCheck:
    """Both sides of the reindexing identity linking the shifted sum to a
    progression sum at frequency theta = gamma*k/q over n <= q*M + a."""
    lhs: complex
    rhs: complex
    residual: float
    relative: float


def substitution_identity_check(table: MangoldtTable, M: int, r: ResidueClass,
                                gamma: Irrational, k: int) -> SubstitutionCheck:
    """Check sum Lambda(qm+a) e(gamma k m) == e(-theta a) * sum Lambda(n) e(theta n).

    theta = gamma*k/q; the right side runs over n == a mod q with
    a < n <= q*M + a, which is the exact image of m = 1..M under n = qm + a.
    """
    if k == 0:
        raise ValueError("frequency k must be nonzero")
    lhs = exp_sum_shifted(table, M, r, gamma, k)
    theta = (gamma * k) / r.q
    L = r.q * M + r.a
    if M >= 1:
        ns, lam = _progression_support(table, L, r, r.a + 1)
        tail = _phase_sum(lam, theta.phases_many(ns))
    else:
        tail = 0j
    phase_a = theta.phases_many(np.array([r.a]))[0] if r.a else 0.0
    rhs = cmath.exp(-2j * math.pi * phase_a) * tail
    residual = abs(lhs - rhs)
    return SubstitutionCheck(lhs, rhs, residual, residual / (1.0 + abs(lhs)))


def default_truncation(M: int, tau_hat: float = 1.0) -> int:
    """Proof-guided truncation K = ceil(M^eps) with eps = 1/(16*tau_hat).

    Deliberately tiny; explicit K arguments override it everywhere.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    eps = 1.0 / (16.0 * max(float(tau_hat), 1.0))
    return max(1, math.ceil(M ** eps))


def progression_sum_bound(L: int, d: int) -> float:
    """(L/sqrt(d) + sqrt(d*L) + L^(4/5)) * (log L)^3, natural logarithm."""
    if L < 3:
        raise ValueError("L must be >= 3")
    if d < 1:
        raise ValueError("denominator d must be >= 1")
    return (L / math.sqrt(d) + math.sqrt(d * L) + L ** 0.8) * math.log(L) ** 3


@dataclass
class BoundRatioRow:
    den: int
    num: int
    abs_sum: float
    bound: float
    ratio: float
    hypothesis_ok: bool   # |theta - num/den| <= 1/L, the regime the bound targets


def bound_ratio_sweep(table: MangoldtTable, L: int, r: ResidueClass,
                      theta: Irrational, max_den: Optional[int] = None) -> list:
    """|progression exponential sum| against the generic bound, swept over
    convergent denominators of theta.

    The bound is smallest near d = sqrt(L); rows outside the rational
    approximation hypothesis are flagged rather than dropped.
    """
    if L < 3:
        raise ValueError("L must be >= 3")
    table.require(L)
    cap = max_den if max_den is not None else L
    ns, lam = _progression_support(table, L, r, 2)
    s = _phase_sum(lam, theta.phases_many(ns))
    abs_sum = abs(s)
    K = 8
    while True:
        cf = cf_expand(theta, K)
        if cf.convergents[-1][1] > cap or K > 4096:
            break
        K *= 2
    rows = []
    seen = set()
    for num, den in cf.convergents:
        if den > cap:
            break
        if den in seen:
            continue
        seen.add(den)
        bound = progression_sum_bound(L, den)
        # |theta - num/den| <= 1/L  <=>  |theta*den*L - num*L| <= den
        diff = (theta * (den * L)) - num * L
        ok = not (_abs_gt(diff, den))
        rows.append(BoundRatioRow(den, num, abs_sum, bound, abs_sum / bound, ok))
    return rows


def _abs_gt(value, bound: int) -> bool:
    """|value| > bound for a surd/PrecisionReal difference."""
    from .beatty import _is_positive
    return _is_positive(value - bound) or _is_positive(-bound - value)


# -- extreme discrepancy ---------------------------------------------------

@dataclass
class SamplePoints:
    """A finite multiset of points in [0, 1)."""
    values: np.ndarray

    def __post_init__(self):
        self.values = _validated(self.values)

    @property
    def count(self) -> int:
        return int(self.values.size)


def _validated(points) -> np.ndarray:
    xs = points.values if isinstance(points, SamplePoints) else \
        np.asarray(points, np.float64)
    if xs.size == 0:
        raise ValueError("need at least one sample point")
    if np.any(~np.isfinite(xs)) or np.any(xs < 0.0) or np.any(xs >= 1.0):
        raise PointOutOfRange("sample points must lie in [0, 1)")
    return xs


def _scaled_values(vals: np.ndarray):
    """Distinct values as exact integers on a common dyadic grid.

    Doubles are dyadic rationals, so scaling by 2^kmax (kmax the largest
    denominator exponent present) loses nothing; all interval quantities
    then live in Z and the supremum is computed without a single rounding.
    """
    ratios = [v.as_integer_ratio() for v in vals.tolist()]
    kmax = max(q.bit_length() - 1 for _, q in ratios)
    scale = 1 << kmax
    return [p * (scale // q) for p, q in ratios], scale


def discrepancy(points) -> float:
    """Extreme discrepancy over open subintervals (c, d) of [0, 1), exactly.

    The larger of the maximal excess (points captured above interval
    length) and maximal deficiency, each one linear scan over the sorted
    distinct values with a running extremum; O(M log M) overall.  All
    arithmetic is exact integer work on the common grid, so the result is
    the true supremum rounded once to a double.
    """
    xs = _validated(points)
    M = int(xs.size)
    vals, cnts = np.unique(xs, return_counts=True)
    leq = np.cumsum(cnts).tolist()
    less = [a - b for a, b in zip(leq, cnts.tolist())]
    iv, scale = _scaled_values(vals)
    cnt0 = leq[0] - less[0] if iv[0] == 0 else 0
    best = 0

    # excess: intervals shrinking onto a run of consecutive values; the
    # left endpoint either sits just below some value (iv[i] > 0) or at 0
    run = -cnt0 * scale
    for i in range(len(iv)):
        mv = M * iv[i]
        if iv[i] > 0:
            cand = mv - less[i] * scale
            if cand > run:
                run = cand
        t = leq[i] * scale - mv + run
        if t > best:
            best = t

    # deficiency: intervals opening up between values, with 0 and 1 as
    # extra endpoint candidates; c = 0 only pairs with d > 0
    best_c: Optional[int] = None
    virt_c = -cnt0 * scale
    for i in range(len(iv)):
        mv = M * iv[i]
        if iv[i] > 0:
            cand = virt_c if best_c is None else min(best_c, virt_c)
        else:
            cand = best_c
        if cand is not None:
            t = (mv - less[i] * scale) - cand
            if t > best:
                best = t
        cm = mv - leq[i] * scale
        best_c = cm if best_c is None else min(best_c, cm)
    t = -min(best_c, virt_c)   # d = 1 endpoint
    if t > best:
        best = t
    return float(Fraction(best, M * scale)) if best > 0 else 0.0


def discrepancy_brute(points) -> float:
    """All-pairs evaluation of the same supremum; O(R^2) in the number of
    distinct values.  Kept as an independent oracle for the scan version;
    both work on the identical exact grid, so agreement is bit-for-bit."""
    xs = _validated(points)
    M = int(xs.size)
    vals, cnts = np.unique(xs, return_counts=True)
    leq = np.cumsum(cnts).tolist()
    less = [a - b for a, b in zip(leq, cnts.tolist())]
    iv, scale = _scaled_values(vals)
    R = len(iv)
    cnt0 = leq[0] - less[0] if iv[0] == 0 else 0
    best = 0
    for s in range(R):
        t = (leq[s] - cnt0) * scale - M * iv[s]
        if t > best:
            best = t
        for r_i in range(s + 1):
            if iv[r_i] > 0:
                t = (leq[s] - less[r_i]) * scale - M * (iv[s] - iv[r_i])
                if t > best:
                    best = t
    c_list = [(0, cnt0)] + [(iv[i], leq[i]) for i in range(R)]
    d_list = [(iv[i], less[i]) for i in range(R)] + [(scale, M)]
    for ic, gc in c_list:
        for idd, hd in d_list:
            if idd > ic:
                t = M * (idd - ic) - (hd - gc) * scale
                if t > best:
                    best = t
    return float(Fraction(best, M * scale)) if best > 0 else 0.0


def discrepancy_beatty(gamma: Irrational, delta, M: int) -> float:
    """Discrepancy of the fractional parts {gamma*m + delta}, m = 1..M."""
    if M < 1:
        raise ValueError("M must be >= 1")
    _, fr, _ = gamma.affine_floor_frac_many(np.arange(1, M + 1, dtype=np.int64),
                                            delta)
    # the exact fractional part lives in [0, 1) but its float image can
    # round up to 1.0 (e.g. near-rational gamma); clamp into range
    np.copyto(fr, np.nextafter(1.0, 0.0), where=fr >= 1.0)
    return discrepancy(fr)


def decay_exponent(D: float, M: int) -> float:
    """log D / log M, the empirical decay rate; 0 at the trivial depth M = 1."""
    if M < 1:
        raise ValueError("M must be >= 1")
    if M == 1:
        return 0.0
    return math.log(D) / math.log(M)
