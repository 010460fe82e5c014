"""
Exact irrationals and their continued fractions
===============================================

Parse a few quadratic irrationals, expand them into continued fractions,
and watch the convergents sharpen.  Everything here is exact: the partial
quotients come out of integer surd arithmetic, not floating point.
"""

from fractions import Fraction

from beattykit import (best_convergent_below, cf_expand, estimate_type,
                       parse_irrational)

for text in ("sqrt:2", "quad:1/2+sqrt:5", "sqrt:61"):
    x = parse_irrational(text)
    cf = cf_expand(x, 12)
    print(f"{text:18s} = {float(x):.12f}")
    print(f"  partial quotients {cf.quotients}")
    if cf.period is not None:
        start, length = cf.period
        print(f"  periodic from index {start}, period length {length}")
    for p, q in cf.convergents[:6]:
        err = abs(float(x) - p / q)
        print(f"  {p:>9d}/{q:<9d}  err {err:.3e}  (1/q^2 = {1/q**2:.3e})")
    print()

# A decimal input carries explicit precision; the expansion stops rather
# than guess once the interval can no longer certify a quotient.
pi_ish = parse_irrational("dec:3.14159265358979323846@200")
print("dec pi, 200 bits:", cf_expand(pi_ish, 8).quotients)

# best rational approximation with a bounded denominator
p, q = best_convergent_below(parse_irrational("sqrt:2"), 10 ** 6)
print(f"best denominator <= 1e6 for sqrt2: {p}/{q}")
print(f"  |sqrt2 - p/q| * q^2 = {abs(2 ** 0.5 - p / q) * q * q:.6f}")

# the approximation-type estimate: ~1 for quadratics (best possible)
est = estimate_type(parse_irrational("sqrt:2"), 20)
print(f"type estimate for sqrt2 after 20 quotients: {est.tau_hat:.4f}")
print("last (q_k, e_k) samples:",
      [(q, round(e, 4)) for q, e in est.samples[-3:]])
