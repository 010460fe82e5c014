"""Exact arithmetic in real quadratic fields.

A value is stored as (u + v*sqrt(d)) / w with integers u, v, w and a
squarefree radicand d > 1.  Canonical form has w > 0, gcd(u, v, w) = 1 and
v != 0, so equality is structural and every sign, comparison and floor
decision reduces to integer arithmetic.  Nothing is rounded until a float
is explicitly requested, and the floats we do hand out (fractional parts,
phases) are accurate to a few ulp because the integer part is removed
exactly first.

The module also hosts the raw kernels used by the bulk paths.  Vectorised
callers evaluate ((A*n + B) + (C*n + E)*sqrt(d)) / W in 80-bit extended
precision and fall back to the exact scalar kernel only for points whose
fractional part lands inside a guard band around an integer, so returned
floors are always correct.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = ["QuadraticSurd", "make_real", "squarefree_split", "exact_floor",
           "exact_floor_frac", "bulk_floor_frac"]

_ONE_BELOW = math.nextafter(1.0, 0.0)
# covers the sqrt approximation plus four roundings at 64-bit mantissa
_LD_EPS_TERM = np.longdouble(5e-19)
_BASE_GUARD = np.longdouble(1e-13)


def squarefree_split(d: int):
    """Write d = f*f*d0 with d0 squarefree; returns (f, d0)."""
    if d <= 0:
        raise ValueError("radicand must be positive")
    f, d0, p = 1, d, 2
    while p * p <= d0:
        q, r = divmod(d0, p * p)
        if r == 0:
            d0, f = q, f * p
            continue
        p += 1 if p == 2 else 2
    return f, d0


def _cmp_c_vsqrt(c: int, v: int, d: int) -> int:
    """Sign of c - v*sqrt(d); nonzero whenever v != 0 since d is not a square."""
    if v == 0:
        return (c > 0) - (c < 0)
    if v > 0:
        if c <= 0:
            return -1
        a, b = c * c, v * v * d
        return (a > b) - (a < b)
    if c >= 0:
        return 1
    a, b = c * c, v * v * d
    return (b > a) - (b < a)


def exact_floor(U: int, V: int, W: int, d: int) -> int:
    """floor((U + V*sqrt(d)) / W) by pure integer arithmetic."""
    if W < 0:
        U, V, W = -U, -V, -W
    if V == 0:
        return U // W
    s = math.isqrt(V * V * d)
    # bracket the numerator in a unit interval, then fix up exactly
    lo = U + s if V > 0 else U - s - 1
    t = lo // W
    while _cmp_c_vsqrt((t + 1) * W - U, V, d) < 0:
        t += 1
    while _cmp_c_vsqrt(t * W - U, V, d) > 0:
        t -= 1
    return t


def _frac_from_parts(Ur: int, V: int, W: int, d: int) -> float:
    # value (Ur + V*sqrt(d)) / W already known to lie in [0, 1)
    if V == 0:
        return Ur / W
    vvd = V * V * d
    s = math.isqrt(vvd)
    num = vvd - s * s
    # sqrt(vvd) = s + rho with rho = num / (s + sqrt(vvd)); the ratio num/s**2
    # is small enough to evaluate in floats at every scale
    rho = num / (s + s * math.sqrt(1.0 + num / s / s))
    if V > 0:
        r = (Ur + s + rho) / W
    else:
        r = (Ur - s - 1 + (1.0 - rho)) / W
    if r >= 1.0:
        return _ONE_BELOW
    return 0.0 if r < 0.0 else r


def exact_floor_frac(U: int, V: int, W: int, d: int):
    """(floor, frac) of (U + V*sqrt(d)) / W; the frac is a float in [0, 1)."""
    if W < 0:
        U, V, W = -U, -V, -W
    t = exact_floor(U, V, W, d)
    return t, _frac_from_parts(U - t * W, V, W, d)


def _sqrt_longdouble(d: int):
    # 85 guard bits keep the isqrt truncation below the 64-bit mantissa
    s = math.isqrt(d << 170)
    return np.longdouble(s) / np.longdouble(1 << 85)


def bulk_floor_frac(A: int, B: int, C: int, E: int, W: int, d: int, ns):
    """Vectorised floor/frac of ((A*n + B) + (C*n + E)*sqrt(d)) / W.

    Returns (floors, fracs, err) where err bounds the absolute error of any
    frac that was not recomputed exactly.  Floors are always exact: anything
    inside the guard band around an integer goes through the scalar kernel.
    """
    if W < 0:
        A, B, C, E, W = -A, -B, -C, -E, -W
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size == 0:
        return np.empty(0, np.int64), np.empty(0, np.float64), 0.0
    lo_n, hi_n = int(ns.min()), int(ns.max())
    mag = max(abs(A * lo_n + B), abs(A * hi_n + B),
              abs(C * lo_n + E), abs(C * hi_n + E))
    if mag >= 1 << 62:
        # coefficients out of int64 range; do everything exactly
        fls = []
        fracs = np.empty(ns.size, np.float64)
        for i, n in enumerate(ns.tolist()):
            fl_i, fracs[i] = exact_floor_frac(A * n + B, C * n + E, W, d)
            fls.append(fl_i)
        if max(fls) >= 1 << 63 or min(fls) < -(1 << 63):
            raise ValueError("floor exceeds the int64 result contract")
        return np.array(fls, np.int64), fracs, 5e-16

    P = A * ns + B
    Q = C * ns + E
    sq = _sqrt_longdouble(d)
    Pl = P.astype(np.longdouble)
    Ql = Q.astype(np.longdouble)
    val = (Pl + Ql * sq) / np.longdouble(W)
    fl = np.floor(val)
    fr = val - fl
    err = (np.abs(Pl) + np.abs(Ql) * sq) / np.longdouble(W) * _LD_EPS_TERM
    guard = 2.0 * err + _BASE_GUARD
    bad = np.flatnonzero((fr <= guard) | (fr >= 1.0 - guard))
    floors = fl.astype(np.int64)
    fracs = fr.astype(np.float64)
    if bad.size:
        for i in bad.tolist():
            n = int(ns[i])
            floors[i], fracs[i] = exact_floor_frac(A * n + B, C * n + E, W, d)
    return floors, fracs, float(err.max()) + 2e-16


def _reduce(u: int, v: int, w: int):
    if w < 0:
        u, v, w = -u, -v, -w
    g = math.gcd(math.gcd(abs(u), abs(v)), w)
    if g > 1:
        u, v, w = u // g, v // g, w // g
    return u, v, w


def make_real(u: int, v: int, w: int, d: int):
    """Canonical (u + v*sqrt(d)) / w; a QuadraticSurd, or a Fraction when rational."""
    if w == 0:
        raise ZeroDivisionError("zero denominator in quadratic surd")
    if v == 0:
        return Fraction(u, w)
    f, d0 = squarefree_split(d)
    v = v * f
    if d0 == 1:
        return Fraction(u + v, w)
    u, v, w = _reduce(u, v, w)
    out = object.__new__(QuadraticSurd)
    out.u, out.v, out.w, out.d = u, v, w, d0
    return out


class QuadraticSurd:
    """Exact element (u + v*sqrt(d)) / w of the real quadratic field Q(sqrt(d)).

    The public constructor follows the (p + sqrt(d)) / q presentation; the
    general form arises through arithmetic.  Values that canonicalise to a
    rational (square radicand, or v = 0) are rejected here, while arithmetic
    results are allowed to collapse to Fraction.
    """

    __slots__ = ("u", "v", "w", "d")

    def __init__(self, p: int, q: int, d: int, v: int = 1):
        val = make_real(p, v, q, d)
        if isinstance(val, Fraction):
            raise ValueError(
                f"(p + {v}*sqrt({d}))/{q} is rational; use Fraction for rational values")
        self.u, self.v, self.w, self.d = val.u, val.v, val.w, val.d

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticSurd":
        return cls(0, 1, d)

    # -- basic queries ----------------------------------------------------

    def sign(self) -> int:
        # u + v*sqrt(d) > 0  iff  v*sqrt(d) > -u
        return -_cmp_c_vsqrt(-self.u, self.v, self.d)

    def is_positive(self) -> bool:
        return self.sign() > 0

    def conjugate(self):
        return make_real(self.u, -self.v, self.w, self.d)

    def floor(self) -> int:
        return exact_floor(self.u, self.v, self.w, self.d)

    def frac_float(self) -> float:
        return self.floor_frac()[1]

    def floor_frac(self):
        return exact_floor_frac(self.u, self.v, self.w, self.d)

    def frac_exact(self):
        """self - floor(self) as an exact field element."""
        return self - self.floor()

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, Fraction):
            a, b = o.numerator, o.denominator
            return make_real(self.u * b + a * self.w, self.v * b, self.w * b, self.d)
        if o.d != self.d:
            raise ValueError("cannot add surds with different radicands")
        return make_real(self.u * o.w + o.u * self.w,
                         self.v * o.w + o.v * self.w,
                         self.w * o.w, self.d)

    __radd__ = __add__

    def __neg__(self):
        return make_real(-self.u, -self.v, self.w, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, Fraction):
            a, b = o.numerator, o.denominator
            if a == 0:
                return Fraction(0)
            return make_real(self.u * a, self.v * a, self.w * b, self.d)
        if o.d != self.d:
            raise ValueError("cannot multiply surds with different radicands")
        return make_real(self.u * o.u + self.v * o.v * self.d,
                         self.u * o.v + self.v * o.u,
                         self.w * o.w, self.d)

    __rmul__ = __mul__

    def inverse(self):
        den = self.u * self.u - self.v * self.v * self.d  # nonzero: d not a square
        return make_real(self.u * self.w, -self.v * self.w, den, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(o, Fraction):
            return self * (1 / o)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None or isinstance(o, QuadraticSurd):
            return NotImplemented
        return self.inverse() * o

    # -- comparisons ------------------------------------------------------

    def _cmp(self, other) -> int:
        diff = self - other
        if isinstance(diff, Fraction):
            return (diff > 0) - (diff < 0)
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, QuadraticSurd):
            return (self.u, self.v, self.w, self.d) == (other.u, other.v, other.w, other.d)
        if isinstance(other, (int, Fraction)):
            return False  # canonical surds are irrational
        return NotImplemented

    def __hash__(self):
        return hash((self.u, self.v, self.w, self.d))

    # -- affine evaluation at integer arguments ---------------------------

    def affine_coeffs(self, eta=0):
        """Integer data (A, B, C, E, W): self*n + eta = ((A*n+B) + (C*n+E)*sqrt(d)) / W."""
        if isinstance(eta, QuadraticSurd):
            if eta.d != self.d:
                raise ValueError("offset lives in a different quadratic field")
            W = math.lcm(self.w, eta.w)
            return (self.u * (W // self.w), eta.u * (W // eta.w),
                    self.v * (W // self.w), eta.v * (W // eta.w), W)
        eta = Fraction(eta)
        W = math.lcm(self.w, eta.denominator)
        return (self.u * (W // self.w), eta.numerator * (W // eta.denominator),
                self.v * (W // self.w), 0, W)

    def affine_floor_frac(self, n: int, eta=0):
        """Exact (floor, frac) of self*n + eta for one integer n."""
        A, B, C, E, W = self.affine_coeffs(eta)
        return exact_floor_frac(A * n + B, C * n + E, W, self.d)

    def affine_floor_frac_many(self, ns, eta=0):
        """(floors, fracs, frac error bound) of self*n + eta over an integer array."""
        A, B, C, E, W = self.affine_coeffs(eta)
        return bulk_floor_frac(A, B, C, E, W, self.d, ns)

    def phases_many(self, ns, eta=0):
        """Fractional parts of self*n + eta via the exact kernel, one n at a time.

        Slower than the bulk path but accurate to a few ulp regardless of the
        size of n, which is what phase arguments of exponential sums need.
        """
        A, B, C, E, W = self.affine_coeffs(eta)
        d = self.d
        ns = np.asarray(ns, dtype=np.int64)
        out = np.empty(ns.size, np.float64)
        for i, n in enumerate(ns.tolist()):
            U, V = A * n + B, C * n + E
            t = exact_floor(U, V, W, d)
            out[i] = _frac_from_parts(U - t * W, V, W, d)
        return out

    # -- conversions ------------------------------------------------------

    def approx_fraction(self, bits: int = 128) -> Fraction:
        """A rational within 2**-bits of the exact value."""
        sh = bits + 4
        s = math.isqrt((self.v * self.v * self.d) << (2 * sh))
        if self.v < 0:
            s = -s
        return Fraction((self.u << sh) + s, self.w << sh)

    def __float__(self):
        return float(self.approx_fraction(96))

    def __repr__(self):
        return f"QuadraticSurd(({self.u}{self.v:+d}*sqrt({self.d}))/{self.w})"
