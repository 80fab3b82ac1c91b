"""Laurent polynomials over Q or F_p, and classes in Q(t)/Z[t^{+-1}].

A single container serves both coefficient rings: ``modulus=None`` means
rational coefficients, an integer ``p`` means residues mod p.
"""
from __future__ import annotations

import math
from fractions import Fraction

from . import polyops as P


def _fmt_coef(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Finitely supported map exponent -> nonzero coefficient."""

    __slots__ = ("coeffs", "modulus", "_hash")

    def __init__(self, coeffs=None, modulus: int | None = None):
        clean = {}
        for e, c in (coeffs or {}).items():
            if modulus is None:
                c = Fraction(c)
            else:
                c = Fraction(c)
                if c.denominator % modulus == 0:
                    raise ZeroDivisionError(f"coefficient {c} is not defined mod {modulus}")
                c = c.numerator * pow(c.denominator, -1, modulus) % modulus
            if c:
                clean[int(e)] = c
        self.coeffs = clean
        self.modulus = modulus
        self._hash = None

    # -- constructors --------------------------------------------------
    @classmethod
    def from_list(cls, coeffs, low: int = 0, modulus=None) -> "LaurentPoly":
        """Coefficients listed from exponent ``low`` upward."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, modulus)

    @classmethod
    def const(cls, c, modulus=None) -> "LaurentPoly":
        return cls({0: c}, modulus)

    @classmethod
    def monomial(cls, k: int = 1, c=1, modulus=None) -> "LaurentPoly":
        return cls({k: c}, modulus)

    def _like(self, coeffs) -> "LaurentPoly":
        return LaurentPoly(coeffs, self.modulus)

    # -- shape ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def high(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    @property
    def span(self) -> int:
        """Breadth high - low (the degree after normalization)."""
        return self.high - self.low

    def dense(self) -> tuple[int, tuple]:
        """(low, coefficient tuple from ``low`` upward)."""
        if not self.coeffs:
            return 0, ()
        lo = self.low
        return lo, tuple(self.coeffs.get(e, 0) for e in range(lo, self.high + 1))

    def is_polynomial(self) -> bool:
        return not self.coeffs or self.low >= 0

    def is_unit(self) -> bool:
        """Unit of Z[t^{+-1}] (or F_p[t^{+-1}] when reduced mod p)."""
        if len(self.coeffs) != 1:
            return False
        c = next(iter(self.coeffs.values()))
        return self.modulus is not None or c in (1, -1)

    # -- arithmetic ----------------------------------------------------
    def _check(self, other):
        if isinstance(other, LaurentPoly):
            if other.modulus != self.modulus:
                raise ValueError("mixing Laurent polynomials over different rings")
            return other
        return LaurentPoly.const(other, self.modulus)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = LaurentPoly.const(1, self.modulus)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """t^k * self."""
        return self._like({e + k: c for e, c in self.coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """Involution t -> t^{-1}."""
        return self._like({-e: c for e, c in self.coeffs.items()})

    def reduce(self, p: int) -> "LaurentPoly":
        if self.modulus is not None:
            if self.modulus != p:
                raise ValueError("already reduced modulo a different prime")
            return self
        return LaurentPoly(self.coeffs, p)

    def normalize(self) -> "LaurentPoly":
        """Representative of the class modulo units: lowest exponent 0 and
        positive (over F_p: unit) leading coefficient."""
        if not self.coeffs:
            return self
        out = self.shift(-self.low)
        lead = out.coeffs[out.high]
        if self.modulus is None:
            return -out if lead < 0 else out
        inv = pow(lead, -1, self.modulus)
        return out._like({e: c * inv for e, c in out.coeffs.items()})

    def __call__(self, x):
        return sum((c * x ** e for e, c in self.coeffs.items()), Fraction(0) if self.modulus is None else 0)

    # -- comparison / display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(other, self.modulus)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, frozenset(self.coeffs.items())))
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = Fraction(self.coeffs[e])
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}" if e > 0 else f"t^({e})")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            else:
                body = _fmt_coef(mag) + ("*" + mono if mono else "")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        if self.modulus is not None:
            s += f" (mod {self.modulus})"
        return s

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> dict:
        return {str(e): _fmt_coef(self.coeffs[e]) for e in sorted(self.coeffs)}


def poly_normalize(f: LaurentPoly) -> LaurentPoly:
    return f.normalize()


def _as_poly(f: LaurentPoly) -> tuple:
    lo, c = f.dense()
    if lo < 0:
        raise ValueError("negative exponents")
    return (0,) * lo + c


def _series_div(n: tuple, d: tuple, m: int, p=None) -> tuple:
    """First m coefficients of n/d as a power series (d(0) != 0)."""
    inv0 = Fraction(1) / d[0] if p is None else pow(int(d[0]), -1, p)
    n = list(n) + [0] * max(0, m - len(n))
    out = []
    for i in range(m):
        acc = n[i] - sum(out[j] * d[i - j] for j in range(max(0, i - len(d) + 1), i))
        c = acc * inv0
        out.append(c % p if p is not None else c)
    return tuple(out)


class RatFnClass:
    """Element of Q(t)/Z[t^{+-1}] or, with a modulus, F_p(t)/F_p[t^{+-1}].

    Canonical form: value = num/den + poly where num, den are polynomials,
    deg num < deg den, den(0) != 0, gcd(num, den) = 1, and
      * over Q: num, den integral with joint content 1 and den leading
        coefficient > 0; ``poly`` a Laurent polynomial with coefficients
        in [0, 1) (the part of the Laurent tail not absorbed by Z);
      * mod p: den monic and ``poly`` = 0.
    The class is zero iff num = 0 and poly = 0.
    """

    __slots__ = ("num", "den", "poly", "modulus")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, poly: LaurentPoly, modulus=None):
        self.num, self.den, self.poly, self.modulus = num, den, poly, modulus

    @classmethod
    def zero(cls, modulus=None) -> "RatFnClass":
        z = LaurentPoly({}, modulus)
        return cls(z, LaurentPoly.const(1, modulus), z, modulus)

    @classmethod
    def of(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFnClass":
        """Class of num/den (both over the same ring)."""
        p = num.modulus
        if den.modulus != p:
            raise ValueError("numerator and denominator over different rings")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return cls.zero(p)
        k = num.low - den.low
        n = _as_poly(num.shift(-num.low))
        d = _as_poly(den.shift(-den.low))
        if p is None:
            return cls._canon_q(n, d, k)
        return cls._canon_p(n, d, k, p)

    @classmethod
    def _canon_q(cls, n, d, k):
        g = P.pgcd(n, d)
        if len(g) > 1:
            n, d = P.pdivmod(n, g)[0], P.pdivmod(d, g)[0]
        n = tuple(Fraction(c) for c in n)
        d = tuple(Fraction(c) for c in d)
        poly: dict = {}
        if k >= 0:
            y = (0,) * k + n
        else:
            m = -k
            u0 = _series_div(n, d, m)
            for i, c in enumerate(u0):
                if c:
                    poly[i - m] = c
            y = P.psub(n, P.pmul(u0, d))
            y = P.trim(y[m:])
        q, r = P.pdivmod(y, d) if len(d) > 1 else (P.pscale(y, 1 / d[0]), ())
        for i, c in enumerate(q):
            if c:
                poly[i] = poly.get(i, 0) + c
        poly = {e: c - math.floor(c) for e, c in poly.items()}
        r = P.trim(r)
        if not r:
            return cls(LaurentPoly({}), LaurentPoly.const(1), LaurentPoly(poly))
        # joint integral scaling
        den_l = 1
        for c in r + d:
            den_l = den_l * Fraction(c).denominator // math.gcd(den_l, Fraction(c).denominator)
        ri = [int(Fraction(c) * den_l) for c in r]
        di = [int(Fraction(c) * den_l) for c in d]
        g2 = 0
        for c in ri + di:
            g2 = math.gcd(g2, c)
        if di[-1] < 0:
            g2 = -g2
        ri = [c // g2 for c in ri]
        di = [c // g2 for c in di]
        return cls(LaurentPoly.from_list(ri), LaurentPoly.from_list(di), LaurentPoly(poly))

    @classmethod
    def _canon_p(cls, n, d, k, p):
        n = P.reduce_mod(n, p)
        d = P.reduce_mod(d, p)
        if not n:
            return cls.zero(p)
        if not d:
            from ..errors import BadReduction
            raise BadReduction(f"denominator vanishes mod {p}")
        # powers of t are units; strip them into k
        while n[0] == 0:
            n, k = n[1:], k + 1
        while d[0] == 0:
            d, k = d[1:], k - 1
        g = P.pgcd_mod(n, d, p)
        if len(g) > 1:
            n = P.pdivmod_mod(n, g, p)[0]
            d = P.pdivmod_mod(d, g, p)[0]
        if len(d) == 1:
            return cls.zero(p)
        if k >= 0:
            n = (0,) * k + n
        else:
            m = -k
            # n/(t^m d) = u0/t^m + y/d with u0 the truncated series of n/d
            u0 = P.reduce_mod(_series_div(n, d, m, p), p)
            y = P.reduce_mod(P.psub(n, P.pmul(u0, d)), p)
            n = P.trim(y[m:])
        r = P.pdivmod_mod(n, d, p)[1]
        if not r:
            return cls.zero(p)
        inv = pow(d[-1], -1, p)
        r = tuple(c * inv % p for c in r)
        d = tuple(c * inv % p for c in d)
        return cls(LaurentPoly.from_list(r, modulus=p), LaurentPoly.from_list(d, modulus=p),
                   LaurentPoly({}, p), p)

    # -- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero() and self.poly.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def key(self):
        return (self.modulus, self.num, self.den, self.poly)

    def __eq__(self, other):
        if not isinstance(other, RatFnClass):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def coefficient_bound(self) -> int:
        """max |coefficient| over the integral pair num, den."""
        cs = list(self.num.coeffs.values()) + list(self.den.coeffs.values())
        return max((abs(int(c)) for c in cs), default=0)

    def reduce_mod(self, p: int) -> "RatFnClass":
        """Image in F_p(t)/F_p[t^{+-1}] of the canonical num/den."""
        from ..errors import BadReduction
        if self.modulus is not None:
            raise ValueError("already a mod-p class")
        if any(Fraction(c).denominator % p == 0 for c in self.poly.coeffs.values()):
            raise BadReduction(f"Laurent part has denominators divisible by {p}")
        if self.num.is_zero():
            return RatFnClass.zero(p)
        if all(c % p == 0 for c in self.den.coeffs.values()):
            raise BadReduction(f"denominator vanishes mod {p}")
        return RatFnClass.of(self.num.reduce(p), self.den.reduce(p))

    def __str__(self):
        if self.is_zero():
            return "0"
        strip = (lambda f: str(LaurentPoly(f.coeffs))) if self.modulus else str
        parts = []
        if not self.num.is_zero():
            parts.append(f"({strip(self.num)})/({strip(self.den)})")
        if not self.poly.is_zero():
            parts.append(f"[{self.poly}]")
        s = " + ".join(parts)
        return s + (f" (mod {self.modulus})" if self.modulus else "")

    def __repr__(self):
        return f"RatFnClass({self})"

    def to_json(self) -> dict:
        return {
            "num": self.num.to_json(),
            "den": self.den.to_json(),
            "poly": self.poly.to_json(),
            "modulus": self.modulus,
        }
