"""Command-line front end.

Every subcommand emits a self-describing report: a comment header holding
the fully resolved configuration (defaults included), one fixed column
line, then data rows at 12 significant digits with LF endings.  Identical
invocations produce byte-identical files; there are no timestamps.

Exit codes: 0 for a pass (or a purely informational report), 2 when a
verification verdict fails, 1 for usage or runtime errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .beatty import BeattyParams, generate, is_member
from .counting import verify_sweep
from .errors import BeattyKitError, UsageError
from .expsum import (bound_ratio_sweep, build_psi_delta, decay_exponent,
                     discrepancy_beatty, exp_sum_shifted,
                     substitution_identity_check)
from .irrational import cf_expand, estimate_type, floor_affine, parse_irrational
from .sieve import (DEFAULT_SEGMENT, MAX_LIMIT, ResidueClass, build_table,
                    chebyshev_psi_ap, euler_phi, prime_pi_ap)

_COMMANDS = {
    "cfrac": (None,),
    "type-estimate": (None,),
    "beatty": ("generate", "member"),
    "sieve": ("psi", "pi"),
    "count": ("sweep",),
    "expsum": ("eval", "identity-check", "bound-ratio"),
    "psi-delta": ("inspect",),
    "discrepancy": (None,),
}


@dataclass
class RunConfig:
    """Fully resolved invocation: command plus every flag value."""
    command: str
    action: Optional[str] = None
    alpha: object = None
    alpha_text: str = ""
    beta: Fraction = Fraction(0)
    residue: Optional[ResidueClass] = None
    grid: tuple = ()
    mode: str = "S"
    target: str = "main"
    delta: Optional[Fraction] = None
    K: Optional[int] = None
    precision: int = 160
    segment: int = DEFAULT_SEGMENT
    tol: Optional[float] = None
    out: Optional[str] = None
    format: str = "csv"
    N: Optional[int] = None
    M: Optional[int] = None
    m: Optional[int] = None
    k: int = 1
    den_max: Optional[int] = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map to 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="beattykit", add_help=True, description=__doc__)
    a = p.add_argument
    a("--alpha", help="irrational: sqrt:d, quad:p/q+sqrt:d, or dec:digits[@bits]")
    a("--beta", default="0", help="shift, as a decimal or p/q")
    a("--q", type=int)
    a("--a", type=int)
    a("--grid", help="comma-separated N values, strictly ascending")
    a("--mode", choices=["S", "T", "N", "M"], default="S")
    a("--target", choices=["main", "density"], default="main")
    a("--delta", help="smoothing half-width, or the shift in {gamma m + delta}")
    a("--K", type=int)
    a("--precision", type=int, default=160)
    a("--segment", type=int, default=DEFAULT_SEGMENT)
    a("--tol", type=float)
    a("--out")
    a("--format", choices=["csv", "json"], default="csv")
    a("--N", type=int)
    a("--M", type=int)
    a("--m", type=int)
    a("--k", type=int, default=1)
    a("--den-max", dest="den_max", type=int)
    return p


def parse_config(argv) -> RunConfig:
    """Total parse of [command [action]] plus flags into a RunConfig.

    Diagnostics name the offending flag; a missing command defaults to
    `count sweep`, so a bare flag list is still a valid configuration.
    """
    argv = list(argv)
    words = []
    while argv and not argv[0].startswith("-") and len(words) < 2:
        words.append(argv.pop(0))
    command = words[0] if words else "count"
    if command not in _COMMANDS:
        raise UsageError(f"unknown command {command!r}")
    actions = _COMMANDS[command]
    if actions == (None,):
        if len(words) > 1:
            raise UsageError(f"{command} takes no action word, got {words[1]!r}")
        action = None
    else:
        action = words[1] if len(words) > 1 else actions[0]
        if action not in actions:
            raise UsageError(f"unknown action {action!r} for {command}; "
                             f"expected one of {', '.join(actions)}")
    ns = _build_parser().parse_args(argv)

    cfg = RunConfig(command=command, action=action)
    cfg.mode, cfg.target, cfg.format = ns.mode, ns.target, ns.format
    cfg.out, cfg.tol, cfg.k = ns.out, ns.tol, ns.k
    cfg.N, cfg.M, cfg.m, cfg.den_max = ns.N, ns.M, ns.m, ns.den_max

    if ns.precision < 16:
        raise UsageError("--precision: need at least 16 bits")
    cfg.precision = ns.precision
    if ns.segment < 1024:
        raise UsageError("--segment: need at least 1024")
    cfg.segment = ns.segment
    if ns.K is not None:
        if ns.K < 1:
            raise UsageError("--K: must be >= 1")
        cfg.K = ns.K

    if ns.alpha is not None:
        cfg.alpha_text = ns.alpha
        try:
            cfg.alpha = parse_irrational(ns.alpha, default_bits=cfg.precision)
        except BeattyKitError as exc:
            raise UsageError(f"--alpha: {exc}")
    try:
        cfg.beta = Fraction(ns.beta)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--beta: {exc}")
    if ns.delta is not None:
        try:
            cfg.delta = Fraction(ns.delta)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"--delta: {exc}")

    if (ns.q is None) != (ns.a is None):
        raise UsageError("--q/--a: provide both or neither")
    if ns.q is not None:
        if ns.q < 1:
            raise UsageError("--q: modulus must be >= 1")
        if not 0 <= ns.a < ns.q:
            raise UsageError("--a: need 0 <= a < q")
        if math.gcd(ns.a, ns.q) != 1:
            raise UsageError(f"--q/--a: gcd({ns.a}, {ns.q}) != 1")
        cfg.residue = ResidueClass(ns.a, ns.q)

    if ns.grid is not None:
        try:
            grid = tuple(int(float(tok)) for tok in ns.grid.split(","))
        except ValueError as exc:
            raise UsageError(f"--grid: {exc}")
        if not grid or any(n < 1 for n in grid):
            raise UsageError("--grid: values must be positive integers")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise UsageError("--grid: values must be strictly ascending")
        if grid[-1] > MAX_LIMIT:
            raise UsageError(f"--grid: {grid[-1]} exceeds the sieve budget "
                             f"({MAX_LIMIT})")
        cfg.grid = grid
    return cfg


# -- report emission -------------------------------------------------------

@dataclass
class Report:
    name: str
    params: list            # (key, value) pairs, insertion order
    columns: tuple
    rows: list
    verdict: Optional[bool] = None


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.12g}"
    return str(v)


def _json_value(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(f"{float(v):.12g}")
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "name": report.name,
            "params": {k: _json_value(v) for k, v in report.params},
            "columns": list(report.columns),
            "rows": [[_json_value(v) for v in row] for row in report.rows],
        }
        if report.verdict is not None:
            doc["verdict"] = "PASS" if report.verdict else "FAIL"
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"# beattykit {report.name}"]
    for k, v in report.params:
        lines.append(f"# {k}={_fmt(v)}")
    if report.verdict is not None:
        lines.append(f"# verdict={'PASS' if report.verdict else 'FAIL'}")
    lines.append(",".join(report.columns))
    for row in report.rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def emit_report(report: Report, path: Optional[str], fmt: str = "csv"):
    """Write the report to path (or stdout); identical inputs give
    byte-identical bytes, so artifacts can be diffed across runs."""
    text = render(report, fmt)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


# -- subcommand bodies -----------------------------------------------------

def _need(cfg: RunConfig, **flags):
    for name, val in flags.items():
        if val is None:
            raise UsageError(f"--{name} is required for {cfg.command}"
                             + (f" {cfg.action}" if cfg.action else ""))
        yield val


def _base_params(cfg: RunConfig) -> list:
    out = [("precision", cfg.precision)]
    if cfg.alpha is not None:
        out.insert(0, ("alpha", cfg.alpha_text))
    return out


def _run_cfrac(cfg: RunConfig) -> Report:
    (alpha,) = _need(cfg, alpha=cfg.alpha)
    K = cfg.K if cfg.K is not None else 8
    cf = cf_expand(alpha, K)
    params = _base_params(cfg) + [("K", K)]
    if cf.period is not None:
        params.append(("period_start", cf.period[0]))
        params.append(("period_length", cf.period[1]))
    rows = [(i, q, cf.convergents[i][0], cf.convergents[i][1])
            for i, q in enumerate(cf.quotients)]
    return Report("cfrac", params, ("i", "quotient", "num", "den"), rows)


def _run_type_estimate(cfg: RunConfig) -> Report:
    (alpha,) = _need(cfg, alpha=cfg.alpha)
    est = estimate_type(alpha, K=cfg.K)
    params = _base_params(cfg) + [("depth", est.depth),
                                  ("tau_hat", est.tau_hat)]
    rows = [(q, e) for q, e in est.samples]
    return Report("type-estimate", params, ("den", "exponent"), rows)


def _run_beatty(cfg: RunConfig) -> Report:
    (alpha,) = _need(cfg, alpha=cfg.alpha)
    bp = BeattyParams(alpha, cfg.beta)
    params = _base_params(cfg) + [("beta", str(cfg.beta))]
    if cfg.action == "generate":
        (N,) = _need(cfg, N=cfg.N)
        terms = generate(bp, N)
        rows = [(n, int(t)) for n, t in enumerate(terms.tolist(), start=1)]
        return Report("beatty-generate", params + [("N", N)],
                      ("n", "term"), rows)
    (m,) = _need(cfg, m=cfg.m)
    n = is_member(bp, m)
    rows = [(m, n is not None, 0 if n is None else n)]
    return Report("beatty-member", params + [("m", m)],
                  ("m", "member", "witness"), rows)


def _run_sieve(cfg: RunConfig) -> Report:
    (r,) = _need(cfg, q=cfg.residue)
    grid = cfg.grid or ((10 ** 6,))
    table = build_table(grid[-1], segment_size=cfg.segment)
    params = [("q", r.q), ("a", r.a), ("segment", cfg.segment)]
    rows = []
    if cfg.action == "psi":
        for L in grid:
            val = chebyshev_psi_ap(table, L, r)
            mainv = L / euler_phi(r.q)
            rows.append((L, val, mainv, abs(val - mainv) / L))
        return Report("sieve-psi", params, ("L", "psi", "main", "rel_dev"), rows)
    for x in grid:
        rows.append((x, prime_pi_ap(table, x, r)))
    return Report("sieve-pi", params, ("x", "count"), rows)


def _run_count(cfg: RunConfig) -> Report:
    (alpha, r) = _need(cfg, alpha=cfg.alpha, q=cfg.residue)
    grid = cfg.grid or (10 ** 4, 10 ** 5, 10 ** 6)
    bp = BeattyParams(alpha, cfg.beta)
    cap = floor_affine(alpha, grid[-1], cfg.beta)[0]
    table = build_table(max(r.q * cap + r.a, 100), segment_size=cfg.segment)
    tol = cfg.tol if cfg.tol is not None else 0.03
    rep = verify_sweep(bp, r, grid, cfg.mode, table, target=cfg.target, tol=tol)
    params = _base_params(cfg) + [
        ("beta", str(cfg.beta)), ("q", r.q), ("a", r.a), ("mode", cfg.mode),
        ("target", cfg.target), ("tol", tol), ("segment", cfg.segment)]
    for key, val in rep.observed.items():
        params.append((key, val))
    rows = [(row.N, row.lhs, row.main, row.abs_err, row.rel_err)
            for row in rep.rows]
    return Report("count-sweep", params,
                  ("N", "lhs", "main", "abs_err", "rel_err"),
                  rows, verdict=rep.passed)


def _expsum_table(cfg: RunConfig, limit: int):
    return build_table(max(limit, 100), segment_size=cfg.segment)


def _run_expsum(cfg: RunConfig) -> Report:
    (alpha, r) = _need(cfg, alpha=cfg.alpha, q=cfg.residue)
    (M,) = _need(cfg, M=cfg.M)
    params = _base_params(cfg) + [("q", r.q), ("a", r.a), ("M", M)]
    if cfg.action == "eval":
        K = cfg.K if cfg.K is not None else 8
        table = _expsum_table(cfg, r.q * M + r.a)
        ns = np.arange(1, M + 1, dtype=np.int64)
        lam_sum = math.fsum(table.mangoldt_values(r.q * ns + r.a).tolist())
        rows = []
        for k in range(1, K + 1):
            s = exp_sum_shifted(table, M, r, alpha, k)
            ratio = abs(s) / lam_sum if lam_sum else 0.0
            rows.append((k, s.real, s.imag, abs(s), lam_sum, ratio))
        return Report("expsum-eval", params + [("K", K)],
                      ("k", "re", "im", "abs", "bound", "ratio"), rows)
    if cfg.action == "identity-check":
        if cfg.k == 0:
            raise UsageError("--k: must be nonzero")
        table = _expsum_table(cfg, r.q * M + r.a)
        chk = substitution_identity_check(table, M, r, alpha, cfg.k)
        tol = cfg.tol if cfg.tol is not None else 1e-9
        rows = [(cfg.k, chk.lhs.real, chk.lhs.imag, chk.rhs.real, chk.rhs.imag,
                 chk.residual, chk.relative)]
        return Report("expsum-identity-check", params + [("tol", tol)],
                      ("k", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                       "residual", "relative"),
                      rows, verdict=chk.relative <= tol)
    # bound-ratio: progression sum over n <= M against the generic bound
    if cfg.k == 0:
        raise UsageError("--k: must be nonzero")
    theta = (alpha * cfg.k) / r.q
    table = _expsum_table(cfg, M)
    rows_raw = bound_ratio_sweep(table, M, r, theta, max_den=cfg.den_max)
    rows = [(row.den, row.num, row.abs_sum, row.bound, row.ratio,
             row.hypothesis_ok) for row in rows_raw]
    best = min(rows_raw, key=lambda row: row.bound)
    return Report("expsum-bound-ratio",
                  params + [("k", cfg.k), ("min_bound_den", best.den)],
                  ("den", "num", "abs", "bound", "ratio", "hyp_ok"), rows)


def _run_psi_delta(cfg: RunConfig) -> Report:
    (alpha,) = _need(cfg, alpha=cfg.alpha)
    gamma = float(alpha)
    if cfg.delta is None:
        raise UsageError("--delta is required for psi-delta inspect")
    K = cfg.K if cfg.K is not None else 64
    pd = build_psi_delta(gamma, float(cfg.delta), K)
    bounds = pd.coefficient_bounds()
    rows = []
    worst = 0.0
    for i in range(K):
        mag = abs(pd.g[i])
        ratio = mag / bounds[i]
        worst = max(worst, ratio)
        rows.append((i + 1, pd.g[i].real, pd.g[i].imag, mag, bounds[i], ratio))
    params = _base_params(cfg) + [
        ("delta", float(cfg.delta)), ("K", K), ("mean", pd.mean),
        ("tail_bound", pd.tail_bound())]
    return Report("psi-delta", params,
                  ("k", "g_re", "g_im", "abs", "bound", "ratio"),
                  rows, verdict=worst <= 1.0 + 1e-12)


def _run_discrepancy(cfg: RunConfig) -> Report:
    (alpha, M) = _need(cfg, alpha=cfg.alpha, M=cfg.M)
    shift = cfg.delta if cfg.delta is not None else Fraction(0)
    D = discrepancy_beatty(alpha, shift, M)
    expo = decay_exponent(D, M)
    params = _base_params(cfg) + [("delta", str(shift)), ("M", M)]
    rows = [(M, D, expo)]
    return Report("discrepancy", params, ("M", "D", "exponent"), rows)


_RUNNERS = {
    "cfrac": _run_cfrac,
    "type-estimate": _run_type_estimate,
    "beatty": _run_beatty,
    "sieve": _run_sieve,
    "count": _run_count,
    "expsum": _run_expsum,
    "psi-delta": _run_psi_delta,
    "discrepancy": _run_discrepancy,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg = parse_config(argv)
        report = _RUNNERS[cfg.command](cfg)
        emit_report(report, cfg.out, cfg.format)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except BeattyKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    if report.verdict is False:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
