"""Exact angles in [0, 2pi).

Every Angle is stored in one of two canonical forms:

* ``rational_pi``: theta = q * pi with q a Fraction in [0, 2);
* ``arccos``: cos(theta) is a real algebraic number whose minimal polynomial
  is *not* that of a root-of-unity cosine, plus the sign of sin(theta).

Scaled and shifted angles are normalized into one of these forms on
construction (Chebyshev composition for scaling, a resultant for angle
sums), so equality is always decidable: two canonical angles of different
kinds are never equal.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import gcd

from mpmath import iv

from ..errors import BadParameter, PrecisionExhausted
from . import polyops as P
from .realalg import RealAlg, _width_floor, select_root


# --- root-of-unity cosines ---------------------------------------------

@lru_cache(maxsize=None)
def _cos_roots(n: int) -> tuple[RealAlg, ...]:
    """Roots of the minimal polynomial of cos(2pi/n), ordered by
    increasing angle (decreasing cosine)."""
    mu = P.cos_minpoly(n)
    if n <= 2:
        return (RealAlg.rational(1 if n == 1 else -1),)
    roots = RealAlg.roots_of_irreducible(mu, -1, 1)
    return tuple(reversed(roots))


def _cos_of_rational_pi(q: Fraction) -> RealAlg:
    # theta = 2 pi k / n in lowest terms
    k, n = (q / 2).numerator, (q / 2).denominator
    k %= n
    if 2 * k > n:
        k = n - k
    if n <= 2:
        return _cos_roots(n)[0]
    coprime = [j for j in range(1, (n + 1) // 2) if gcd(j, n) == 1]
    r = _cos_roots(n)[coprime.index(k)]
    return RealAlg(r.poly, r._lo, r._hi)


@lru_cache(maxsize=None)
def _totients_upto(limit: int) -> tuple[int, ...]:
    phi = list(range(limit + 1))
    for i in range(2, limit + 1):
        if phi[i] == i:
            for j in range(i, limit + 1, i):
                phi[j] -= phi[j] // i
    return tuple(phi)


def _root_of_unity_order(mu) -> int | None:
    """n such that mu is the minimal polynomial of cos(2pi/n), else None."""
    d = len(mu) - 1
    # 2cos(2pi k/n) is an algebraic integer: mu(w/2) must be monic up to scale
    scaled = P.primitive(tuple(Fraction(c, 2 ** i) for i, c in enumerate(mu)))
    if scaled[-1] != 1:
        return None
    if d == 1:
        for n in (1, 2, 3, 4, 6):
            if P.cos_minpoly(n) == tuple(mu):
                return n
        return None
    limit = 8 * d * d
    phi = _totients_upto(limit)
    for n in range(3, limit + 1):
        if phi[n] == 2 * d and P.cos_minpoly(n) == tuple(mu):
            return n
    return None


# --- certified helpers ---------------------------------------------------

def _sqrt_interval(lo: Fraction, hi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Enclosure of sqrt over [lo, hi] (clamped at 0)."""
    scale = 1 << (2 * bits)

    def down(v):
        if v <= 0:
            return Fraction(0)
        return Fraction(math.isqrt(v.numerator * scale // v.denominator), 1 << bits)

    def up(v):
        if v <= 0:
            return Fraction(0)
        return Fraction(math.isqrt(-(-v.numerator * scale // v.denominator)) + 1, 1 << bits)

    return down(lo), up(hi)


def _imul(a, b):
    c = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(c), max(c)


_IV_LOCK = threading.Lock()


def _iv_cos_pi(m: Fraction, prec: int):
    # mpmath's interval context carries global precision; serialize access
    with _IV_LOCK:
        old = iv.prec
        iv.prec = prec
        try:
            return iv.cos(iv.pi * iv.mpf(m.numerator) / iv.mpf(m.denominator))
        finally:
            iv.prec = old


def _mpf_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    v = Fraction(man) * (Fraction(2) ** exp)
    return -v if sign else v


@total_ordering
class Angle:
    """An exact angle theta in [0, 2pi)."""

    __slots__ = ("kind", "q", "_cos", "sin_sign")

    def __init__(self, kind, q=None, cos=None, sin_sign=0):
        self.kind = kind
        self.q = q
        self._cos = cos
        self.sin_sign = sin_sign

    # -- constructors --------------------------------------------------
    @classmethod
    def rational_pi(cls, num, den=1) -> "Angle":
        if den == 0:
            raise BadParameter("zero denominator")
        q = Fraction(num, den) % 2
        s = 0 if q in (0, 1) else (1 if q < 1 else -1)
        return cls("rational_pi", q=q, sin_sign=s)

    @classmethod
    def from_cos(cls, cos: RealAlg, sin_sign: int) -> "Angle":
        """Angle with the given cosine (in [-1, 1]) and sign of sine."""
        if cos.compare_rational(1) == 0:
            return cls.rational_pi(0)
        if cos.compare_rational(-1) == 0:
            return cls.rational_pi(1)
        if cos.compare_rational(1) > 0 or cos.compare_rational(-1) < 0:
            raise BadParameter("cosine outside [-1, 1]")
        if sin_sign not in (1, -1):
            raise BadParameter("sin_sign must be +1 or -1 for an interior cosine")
        n = _root_of_unity_order(cos.poly)
        if n is not None:
            roots = _cos_roots(n)
            idx = roots.index(cos)
            coprime = [j for j in range(1, (n + 1) // 2) if gcd(j, n) == 1]
            k = coprime[idx] if n > 2 else 0
            q = Fraction(2 * k, n)
            return cls.rational_pi(q if sin_sign > 0 else 2 - q)
        return cls("arccos", cos=cos, sin_sign=sin_sign)

    @classmethod
    def arccos(cls, value, sin_sign: int = 1) -> "Angle":
        """Angle with rational cosine ``value``."""
        return cls.from_cos(RealAlg.rational(Fraction(value)), sin_sign)

    @classmethod
    def from_minpoly(cls, minpoly, lo, hi, sin_sign: int) -> "Angle":
        """Angle whose cosine is the unique root of ``minpoly`` in [lo, hi]."""
        lo, hi = Fraction(lo), Fraction(hi)
        found = []
        for fac, _ in P.factor_irreducible(P.primitive(minpoly)):
            if len(fac) == 2:
                r = Fraction(-fac[0], fac[1])
                if lo <= r <= hi:
                    found.append(RealAlg.rational(r))
                continue
            if P.peval(fac, lo) == 0 or P.peval(fac, hi) == 0:
                continue
            found.extend(RealAlg.roots_of_irreducible(fac, lo, hi))
        if len(found) != 1:
            raise BadParameter(f"interval [{lo}, {hi}] holds {len(found)} roots, expected 1")
        return cls.from_cos(found[0], sin_sign)

    # -- basic data ------------------------------------------------------
    @property
    def cos(self) -> RealAlg:
        if self._cos is None:
            self._cos = _cos_of_rational_pi(self.q)
        return self._cos

    @property
    def is_rational_pi(self) -> bool:
        return self.kind == "rational_pi"

    def is_zero(self) -> bool:
        return self.is_rational_pi and self.q == 0

    def _half(self) -> int:
        if self.is_rational_pi:
            return 0 if self.q <= 1 else 1
        return 0 if self.sin_sign > 0 else 1

    def fold(self) -> "Angle":
        """Representative in [0, pi] with the same cosine."""
        if self._half() == 0:
            return self
        if self.is_rational_pi:
            return Angle.rational_pi(2 - self.q)
        return Angle("arccos", cos=self.cos, sin_sign=1)

    def negate(self) -> "Angle":
        """2pi - theta."""
        if self.is_rational_pi:
            return Angle.rational_pi(-self.q)
        return Angle("arccos", cos=self.cos, sin_sign=-self.sin_sign)

    def __float__(self) -> float:
        if self.is_rational_pi:
            return float(self.q) * math.pi
        t = math.acos(max(-1.0, min(1.0, float(self.cos))))
        return t if self.sin_sign > 0 else 2 * math.pi - t

    # -- ordering ------------------------------------------------------
    def compare(self, other: "Angle") -> int:
        if self.is_rational_pi and other.is_rational_pi:
            return (self.q > other.q) - (self.q < other.q)
        h1, h2 = self._half(), other._half()
        if h1 != h2:
            return -1 if h1 < h2 else 1
        if self.is_rational_pi != other.is_rational_pi:
            rat, alg = (self, other) if self.is_rational_pi else (other, self)
            if rat.q.denominator > 24:
                # avoid the high-degree minimal polynomial of cos(q pi)
                c = _cmp_cos_rational_pi(rat.fold().q, alg.cos)
                c = c if rat is self else -c
                return -c if h1 == 0 else c
        c = self.cos._cmp(other.cos)
        # upper half: theta decreases with cosine; lower half: increases
        return -c if h1 == 0 else c

    def __eq__(self, other):
        if not isinstance(other, Angle):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.is_rational_pi:
            return self.q == other.q
        return self.sin_sign == other.sin_sign and self.cos == other.cos

    def __lt__(self, other):
        if not isinstance(other, Angle):
            return NotImplemented
        return self.compare(other) < 0

    def __hash__(self):
        if self.is_rational_pi:
            return hash(("q", self.q))
        return hash(("c", self.cos.poly, self.sin_sign))

    def __repr__(self):
        if self.is_rational_pi:
            return f"Angle({self.q}*pi)"
        return f"Angle(arccos root of {self.cos.poly}, sin {'+' if self.sin_sign > 0 else '-'}, ~{float(self):.6f})"

    def __str__(self):
        if self.is_rational_pi:
            q = self.q
            if q == 0:
                return "0"
            num = "pi" if q.numerator == 1 else f"{q.numerator}*pi"
            return num if q.denominator == 1 else f"{num}/{q.denominator}"
        c = self.cos
        sign = "" if self.sin_sign > 0 else "-"
        if len(c.poly) == 2:
            r = Fraction(-c.poly[0], c.poly[1])
            return f"{sign}arccos({r.numerator}/{r.denominator})" if r.denominator > 1 else f"{sign}arccos({r})"
        return f"{sign}arccos(root of {list(c.poly)} near {float(c):.6f})"

    # -- arithmetic ----------------------------------------------------
    def scale(self, d: int) -> "Angle":
        """d * theta mod 2pi."""
        if d < 1:
            raise BadParameter("scale factor must be a positive integer")
        if self.is_rational_pi:
            return Angle.rational_pi(self.q * d)
        if d == 1:
            return self
        x0 = self.cos
        T = P.chebyshev_t(d)
        cands = RealAlg.real_roots(P.image_poly(x0.poly, T), -1, 1)

        def enclosure(k):
            x0.refine_to(Fraction(1, 2 ** (8 + 4 * k)))
            return P.peval_interval(T, x0._lo, x0._hi)

        y = select_root(cands, enclosure)
        s = self.sin_sign * x0.sign_of(P.chebyshev_u(d - 1))
        return Angle.from_cos(y, s)

    def shift(self, offset) -> "Angle":
        """theta + offset*pi mod 2pi for a rational ``offset``."""
        off = Fraction(offset) % 2
        if self.is_rational_pi:
            return Angle.rational_pi(self.q + off)
        if off == 0:
            return self
        x0 = self.cos
        if off == 1:
            neg = tuple(c * (-1) ** i for i, c in enumerate(x0.poly))
            y = RealAlg(P.primitive(neg), -x0._hi, -x0._lo) if not x0.is_rational else RealAlg.rational(-x0.exact())
            return Angle.from_cos(y, -self.sin_sign)
        ca = Angle.rational_pi(off).cos
        sa = Angle.rational_pi(Fraction(1, 2) - off).cos   # sin(off*pi)
        cands = RealAlg.real_roots(P.angle_sum_poly(x0.poly, ca.poly), -1, 1)
        sgn = self.sin_sign

        def parts(k):
            w = Fraction(1, 2 ** (8 + 4 * k))
            for r in (x0, ca, sa):
                r.refine_to(w)
            X = (x0._lo, x0._hi)
            sq_hi = max(X[0] ** 2, X[1] ** 2)
            sq_lo = 0 if X[0] <= 0 <= X[1] else min(X[0] ** 2, X[1] ** 2)
            st = _sqrt_interval(1 - sq_hi, 1 - sq_lo, 16 + 4 * k)
            if sgn < 0:
                st = (-st[1], -st[0])
            return X, (ca._lo, ca._hi), st, (sa._lo, sa._hi)

        def enclosure(k):
            X, C, St, Sa = parts(k)
            a = _imul(X, C)
            b = _imul(St, Sa)
            return a[0] - b[1], a[1] - b[0]

        y = select_root(cands, enclosure)
        k = 0
        while True:
            X, C, St, Sa = parts(k)
            a = _imul(St, C)
            b = _imul(X, Sa)
            lo, hi = a[0] + b[0], a[1] + b[1]
            if lo > 0:
                s = 1
                break
            if hi < 0:
                s = -1
                break
            if hi - lo < _width_floor():
                raise PrecisionExhausted("sign of shifted sine undecided")
            k += 1
        return Angle.from_cos(y, s)

    def divide(self, d: int) -> "Angle":
        """theta / d, using the representative theta in [0, 2pi)."""
        if d < 1:
            raise BadParameter("divisor must be a positive integer")
        if self.is_rational_pi:
            return Angle.rational_pi(self.q / d)
        if d == 1:
            return self
        bound = Angle.rational_pi(Fraction(2, d)).cos
        U = P.chebyshev_u(d - 1)
        out = []
        for y in _cos_preimages(self.cos, d):
            if d > 2 and not y > bound:
                continue
            if y.sign_of(U) != self.sin_sign:
                continue
            out.append(y)
        if len(out) != 1:
            raise ArithmeticError("principal division failed to isolate a unique preimage")
        return Angle.from_cos(out[0], 1)

    def preimages(self, d: int) -> list["Angle"]:
        """All phi in (0, pi] with d*phi congruent to +-theta mod 2pi, sorted."""
        if d < 1:
            raise BadParameter("d must be a positive integer")
        if self.is_rational_pi:
            out = set()
            for base in (self.q, -self.q):
                for k in range(-d - 1, 2 * d + 2):
                    v = (base + 2 * k) / d
                    if 0 < v <= 1:
                        out.add(v)
            return [Angle.rational_pi(v) for v in sorted(out)]
        return sorted(Angle.from_cos(y, 1) for y in _cos_preimages(self.cos, d))

    # -- certified numerics ------------------------------------------
    def over_pi_interval(self, width) -> tuple[Fraction, Fraction]:
        """Rational enclosure of theta/pi of at most the given width."""
        width = Fraction(width)
        if self.is_rational_pi:
            return self.q, self.q
        x0 = self.cos
        lo, hi = Fraction(0), Fraction(1)
        floor = _width_floor()
        while hi - lo > width:
            step = (hi - lo) / 3
            decided = False
            for m in (lo + step, lo + 2 * step):
                for extra in (0, 32, 96):
                    bits = max(64, int(-math.log2(float(step))) + 40 + extra)
                    x0.refine_to(Fraction(1, 2 ** bits))
                    c = _iv_cos_pi(m, bits + 20)
                    cl, ch = (_mpf_to_fraction(e) for e in c._mpi_)
                    if ch < x0._lo:
                        hi = m      # cos(pi m) < x0  =>  m > theta/pi
                        decided = True
                        break
                    if cl > x0._hi:
                        lo = m
                        decided = True
                        break
                if decided:
                    break
            if not decided:
                if step < floor:
                    raise PrecisionExhausted("arccos enclosure undecided")
                raise PrecisionExhausted("arccos enclosure stalled")
        if self.sin_sign < 0:
            lo, hi = 2 - hi, 2 - lo
        return lo, hi


def _cmp_cos_rational_pi(m: Fraction, x0: RealAlg) -> int:
    """Sign of cos(m pi) - x0, where x0 is not a root-of-unity cosine."""
    bits = 64
    while True:
        x0.refine_to(Fraction(1, 2 ** bits))
        cl, ch = (_mpf_to_fraction(e) for e in _iv_cos_pi(m, bits + 20)._mpi_)
        if ch < x0._lo:
            return -1
        if cl > x0._hi:
            return 1
        if bits > _MAX_CMP_BITS:
            raise PrecisionExhausted("cosine comparison undecided")
        bits *= 2


_MAX_CMP_BITS = 1 << 14


def _cos_preimages(x0: RealAlg, d: int) -> list[RealAlg]:
    """Roots y in (-1, 1) with T_d(y) = x0."""
    T = P.chebyshev_t(d)
    comp = P.pcompose(x0.poly, T)
    out = []
    for y in RealAlg.real_roots(comp, -1, 1):
        if _maps_to(y, T, x0):
            out.append(y)
    return out


def _maps_to(y: RealAlg, g, x0: RealAlg) -> bool:
    """Whether g(y) == x0, given that g(y) is a root of x0.poly."""
    if x0.is_rational:
        return True
    if y.is_rational:
        return x0.compare_rational(P.peval(g, y.exact())) == 0
    while True:
        lo, hi = P.peval_interval(g, y._lo, y._hi)
        if x0._lo < lo and hi < x0._hi:
            return True
        if hi < x0._lo or lo > x0._hi:
            return False
        y.refine()


def angle_compare(a: Angle, b: Angle) -> int:
    """-1, 0 or 1 as a is less than, equal to or greater than b."""
    return a.compare(b)


def angle_scale(a: Angle, d: int) -> Angle:
    return a.scale(d)


HALF_PI = Angle.rational_pi(1, 2)
PI = Angle.rational_pi(1)
