"""
Discrepancy of rotation orbits, and a generic progression bound
===============================================================

How evenly do the fractional parts {gamma m} fill [0, 1)?  The extreme
discrepancy answers over every open subinterval at once, and for
quadratic gamma it decays almost like 1/M.  The second half sweeps the
generic Lambda-sum bound over convergent denominators of the phase.
"""

import math

import numpy as np

from beattykit import (best_convergent_below, bound_ratio_sweep, build_table,
                       decay_exponent, discrepancy, discrepancy_beatty,
                       parse_irrational, ResidueClass)

# the perfectly spread set {i/M} and a random set, for calibration
M = 1000
print(f"D of the grid i/M:      {discrepancy(np.arange(M) / M):.6f}")
rng = np.random.default_rng(5)
print(f"D of {M} uniform draws: {discrepancy(rng.random(M)):.6f}"
      f"  (random noise sits near sqrt(log/M) ~ {math.sqrt(math.log(M)/M):.4f})")

# rotation orbits beat random: close to the 1/M floor
print("\n{sqrt2 m} discrepancy:")
gam = parse_irrational("sqrt:2")
for M in (100, 1000, 10_000, 100_000):
    D = discrepancy_beatty(gam, 0, M)
    print(f"  M = {M:>6}: D = {D:.3e}   log D/log M = "
          f"{decay_exponent(D, M):.4f}")

# the golden rotation is the best equidistributed of all
phi = parse_irrational("quad:1/2+sqrt:5")
D = discrepancy_beatty(phi, 0, 10_000)
print(f"\n{{phi m}}, M = 1e4: D*M = {D * 10_000:.3f} (within a few of optimal)")

# a rational rotation never equidistributes
third = parse_irrational("dec:0.333333333333333333333333")
D = discrepancy_beatty(third, 0, 9999)
print(f"near-1/3 rotation: D = {D:.4f} (stuck near 1/3)")

# generic bound for |sum_{n <= L} Lambda(n) e(theta n)| when theta is
# d/e-close to a reduced fraction with denominator d: sweep d over the
# convergents of theta and compare with the computed sum
table = build_table(200_000)
theta = parse_irrational("sqrt:2").inverse()
rows = bound_ratio_sweep(table, 200_000, ResidueClass(0, 1), theta)
print(f"\nbound sweep for theta = 1/sqrt2, L = 2e5:")
print(f"  {'d':>7} {'|sum|':>12} {'bound':>12} {'ratio':>10}  hyp")
for row in rows:
    print(f"  {row.den:>7} {row.abs_sum:>12.1f} {row.bound:>12.1f}"
          f" {row.ratio:>10.2e}  {row.hypothesis_ok}")
best = min(rows, key=lambda r: r.bound)
p, q = best_convergent_below(theta, int(math.isqrt(200_000)) + 1)
print(f"bound is smallest near d ~ sqrt(L): d = {best.den} (sqrt L ~ 447)")
