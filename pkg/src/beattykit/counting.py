"""Prime counting along Beatty sequences, main terms, and sweep reports.

Four quantities are tracked for parameters (alpha, beta) and a primitive
class a mod q, all over indices n <= N and with m(n) = floor(alpha*n + beta):

  S   sum of Lambda(q*m(n) + a)                  (weighted, shifted)
  T   sum of Lambda(m(n)) over m(n) == a mod q   (weighted, congruence)
  N   count of n with q*m(n) + a prime
  M   count of n with m(n) prime and m(n) == a mod q

The predicted main term compares each against 1/alpha times the same
quantity summed over all integers m <= M = floor(alpha*N + beta), the
heuristic being that a fraction 1/alpha of all m survive the Beatty
membership sieve.  Densities q/phi(q) (for S) and 1/phi(q) (for T) give the
cruder closed-form predictions.

Sums are accumulated with math.fsum, so equal multisets of terms produce
bit-identical totals no matter how the index set was partitioned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .beatty import BeattyParams, decompose_small_alpha
from .errors import TableTooSmall
from .irrational import floor_affine
from .sieve import MangoldtTable, ResidueClass, euler_phi, prime_pi_ap

__all__ = ["SumSpec", "SweepRow", "VerificationReport", "weighted_S",
           "weighted_T", "count_primes", "main_term", "density_prediction",
           "verify_sweep", "MODES"]

MODES = ("S", "T", "N", "M")


@dataclass(frozen=True)
class SumSpec:
    """One evaluation request: parameters, class, index bound, and mode."""
    params: BeattyParams
    residue: ResidueClass
    N: int
    mode: str = "S"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.N < 1:
            raise ValueError("N must be >= 1")


def evaluate(spec: SumSpec, table: MangoldtTable) -> float:
    if spec.mode == "S":
        return weighted_S(spec.params, spec.residue, spec.N, table)
    if spec.mode == "T":
        return weighted_T(spec.params, spec.residue, spec.N, table)
    return float(count_primes(spec.params, spec.residue, spec.N, table, spec.mode))


def _term_arrays(params: BeattyParams, N: int):
    """Yield term arrays covering indices 1..N.

    alpha > 1 evaluates directly; 0 < alpha < 1 goes through the
    decomposition into big-modulus subsequences, which covers the same
    index multiset exactly.
    """
    if params.alpha_gt_one():
        if N:
            yield params.terms(np.arange(1, N + 1, dtype=np.int64))
        return
    for part in decompose_small_alpha(params).parts:
        ks = part.index_range(N)
        if ks.size:
            yield part.params.terms(ks)


def weighted_S(params: BeattyParams, r: ResidueClass, N: int,
               table: MangoldtTable) -> float:
    """Sum of Lambda(q*floor(alpha*n + beta) + a) over n <= N."""
    vals = []
    for terms in _term_arrays(params, N):
        v = r.q * terms + r.a
        if v.size:
            table.require(int(v.max()))
        good = v >= 2
        vals.extend(table.mangoldt_values(v[good]).tolist())
    return math.fsum(vals)


def weighted_T(params: BeattyParams, r: ResidueClass, N: int,
               table: MangoldtTable) -> float:
    """Sum of Lambda(floor(alpha*n + beta)) over n <= N with the term in class a mod q."""
    vals = []
    for terms in _term_arrays(params, N):
        if terms.size:
            table.require(int(terms.max()))
        sel = (terms >= 2) & (terms % r.q == r.a)
        vals.extend(table.mangoldt_values(terms[sel]).tolist())
    return math.fsum(vals)


def count_primes(params: BeattyParams, r: ResidueClass, N: int,
                 table: MangoldtTable, mode: str = "N") -> int:
    """Unweighted N-mode / M-mode prime counts over indices n <= N."""
    if mode not in ("N", "M"):
        raise ValueError("count mode is 'N' or 'M'")
    total = 0
    for terms in _term_arrays(params, N):
        if mode == "N":
            v = r.q * terms + r.a
        else:
            v = terms[terms % r.q == r.a]
        if v.size:
            table.require(int(v.max()))
        v = v[v >= 2]
        total += int(np.count_nonzero(table.is_prime[v]))
    return total


def main_term(params: BeattyParams, r: ResidueClass, N: int,
              table: MangoldtTable, mode: str = "S") -> float:
    """1/alpha times the all-integers analogue up to M = floor(alpha*N + beta).

    S: (1/alpha) * sum_{m <= M} Lambda(q m + a)
    T: (1/alpha) * sum_{m <= M, m == a (q)} Lambda(m)
    N: (1/alpha) * pi(q M + a; q, a)
    M: (1/alpha) * pi(M; q, a)
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    M = floor_affine(params.alpha, N, params.beta)[0] if N else 0
    if M < 1:
        return 0.0
    gf = float(params.gamma)
    if mode == "S":
        table.require(r.q * M + r.a)
        ms = np.arange(1, M + 1, dtype=np.int64)
        lam = table.mangoldt_values(r.q * ms + r.a)
        return gf * math.fsum(lam.tolist())
    if mode == "T":
        power, log_base = table.records_upto(M)
        sel = power % r.q == r.a
        return gf * math.fsum(log_base[sel].tolist())
    if mode == "N":
        # primes q*m + a with 1 <= m <= M
        table.require(r.q * M + r.a)
        primes = table.primes
        cut = np.searchsorted(primes, r.q * M + r.a, side="right")
        sub = primes[:cut]
        return gf * int(np.count_nonzero((sub % r.q == r.a) & (sub >= r.q + r.a)))
    return gf * prime_pi_ap(table, M, r)


def density_prediction(params: BeattyParams, r: ResidueClass, N: int,
                         mode: str = "S") -> float:
    """Closed-form density prediction: (q/phi(q))*N for S, N/phi(q) for T."""
    if mode == "S":
        return r.q / euler_phi(r.q) * N
    if mode == "T":
        return N / euler_phi(r.q)
    raise ValueError("closed-form predictions exist for modes 'S' and 'T' only")


@dataclass
class SweepRow:
    N: int
    lhs: float
    main: float
    abs_err: float
    rel_err: float


@dataclass
class VerificationReport:
    """Sweep of lhs against main term over an N-grid, with an error-exponent fit.

    rel_err is abs_err/N when graded against the asymptotic main term (N is
    the natural error scale) and abs_err/|main| for closed-form density
    targets.
    The fitted exponent is the least-squares slope of log |abs_err| against
    log N; PASS requires the last rel_err under tolerance and, when at least
    three nonzero errors allow a fit, an exponent below 1.
    """
    mode: str
    target: str
    normalize: str
    tolerance: float
    rows: list
    fitted_exponent: Optional[float] = None
    fit_residual: Optional[float] = None
    observed: dict = field(default_factory=dict)
    passed: bool = False

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        tail = self.rows[-1].rel_err if self.rows else float("nan")
        exp = "n/a" if self.fitted_exponent is None else f"{self.fitted_exponent:.3f}"
        return (f"{verdict} mode={self.mode} target={self.target} "
                f"final_rel_err={tail:.3e} tol={self.tolerance:.3g} exponent={exp}")


def verify_sweep(params: BeattyParams, r: ResidueClass, grid, mode: str,
                 table: MangoldtTable, target: str = "main",
                 tol: float = 0.03) -> VerificationReport:
    """Evaluate lhs and main term over an N-grid and grade the error decay."""
    if target not in ("main", "density"):
        raise ValueError("target is 'main' or 'density'")
    if not grid:
        raise ValueError("empty N grid")
    grid = [int(x) for x in grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("N grid must be strictly ascending")
    normalize = "N" if target == "main" else "prediction"
    rows = []
    for N in grid:
        spec = SumSpec(params, r, N, mode)
        lhs = evaluate(spec, table)
        if target == "main":
            main = main_term(params, r, N, table, mode)
        else:
            main = density_prediction(params, r, N, mode)
        err = abs(lhs - main)
        scale = N if normalize == "N" else abs(main)
        rows.append(SweepRow(N, lhs, main, err, err / scale if scale else math.inf))
    report = VerificationReport(mode, target, normalize, tol, rows)
    fit_pts = [(math.log(row.N), math.log(row.abs_err))
               for row in rows if row.abs_err > 0 and row.N > 1]
    if len(fit_pts) >= 3:
        xs = np.array([p[0] for p in fit_pts])
        ys = np.array([p[1] for p in fit_pts])
        slope, intercept = np.polyfit(xs, ys, 1)
        resid = float(np.sqrt(np.mean((ys - (slope * xs + intercept)) ** 2)))
        report.fitted_exponent = float(slope)
        report.fit_residual = resid
        report.observed = {"kappa_hat": 1.0 - float(slope),
                           "C_hat": float(math.exp(intercept))}
    ok_tol = bool(rows and rows[-1].rel_err <= tol)
    ok_exp = report.fitted_exponent is None or report.fitted_exponent < 1.0
    report.passed = ok_tol and ok_exp
    return report
