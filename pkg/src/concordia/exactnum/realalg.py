"""Real algebraic numbers with certified rational isolating intervals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering

from .. import config
from ..errors import PrecisionExhausted
from . import polyops as P


@dataclass(frozen=True)
class CertifiedInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def sign(self) -> int | None:
        """Sign of every point in the interval, or None if 0 is inside."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None


def _width_floor() -> Fraction:
    return Fraction(1, 2 ** config.settings().max_bits)


@lru_cache(maxsize=4096)
def _sturm(poly: tuple) -> tuple:
    return tuple(P.sturm_sequence(poly))


def _sign(v) -> int:
    return (v > 0) - (v < 0)


@total_ordering
class RealAlg:
    """A real root of an irreducible primitive integer polynomial.

    ``poly`` is canonical (primitive, positive leading coefficient), so two
    RealAlg values can only be equal when their polynomials coincide.  For
    linear polynomials the interval is the exact rational root.
    """

    __slots__ = ("poly", "_lo", "_hi")

    def __init__(self, poly, lo, hi):
        self.poly = tuple(poly)
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)

    # -- construction -------------------------------------------------
    @classmethod
    def rational(cls, q) -> "RealAlg":
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q)

    @classmethod
    def roots_of_irreducible(cls, poly, lo, hi) -> list["RealAlg"]:
        """All roots of an irreducible polynomial in the open interval
        (lo, hi), sorted ascending."""
        poly = P.primitive(poly)
        lo, hi = Fraction(lo), Fraction(hi)
        if len(poly) == 2:
            r = Fraction(-poly[0], poly[1])
            return [cls.rational(r)] if lo < r < hi else []
        seq = list(_sturm(poly))
        out = []
        stack = [(lo, hi)]
        while stack:
            a, b = stack.pop()
            n = P.sturm_count(seq, a, b)
            if n == 0:
                continue
            if n == 1:
                out.append(cls(poly, a, b))
                continue
            m = (a + b) / 2
            stack.append((m, b))
            stack.append((a, m))
        out.sort(key=lambda r: r._lo)
        return out

    @classmethod
    def real_roots(cls, f, lo, hi) -> list["RealAlg"]:
        """Distinct roots of an arbitrary nonzero polynomial in (lo, hi)."""
        roots = []
        for fac, _ in P.factor_irreducible(P.primitive(f)):
            roots.extend(cls.roots_of_irreducible(fac, lo, hi))
        roots.sort()
        return roots

    # -- intervals ----------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return len(self.poly) == 2

    @property
    def interval(self) -> CertifiedInterval:
        return CertifiedInterval(self._lo, self._hi)

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    def exact(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational number")
        return self._lo

    def refine(self) -> None:
        """Halve the isolating interval (no-op for rationals)."""
        if self.is_rational:
            return
        if self._hi - self._lo < _width_floor():
            raise PrecisionExhausted("isolating interval reached the precision floor")
        m = (self._lo + self._hi) / 2
        sm = _sign(P.peval(self.poly, m))
        slo = _sign(P.peval(self.poly, self._lo))
        if sm == slo:
            self._lo = m
        else:
            self._hi = m

    def refine_to(self, width) -> CertifiedInterval:
        width = Fraction(width)
        while self._hi - self._lo > width:
            self.refine()
        return self.interval

    def __float__(self) -> float:
        if self.is_rational:
            return float(self._lo)
        self.refine_to(Fraction(1, 2 ** 60))
        return float((self._lo + self._hi) / 2)

    # -- exact queries ------------------------------------------------
    def is_root_of(self, f) -> bool:
        f = P.trim(f)
        if not f:
            return True
        return not P.pmod(f, self.poly)

    def sign_of(self, f) -> int:
        """Sign of f(self) for a rational polynomial f."""
        f = P.trim(f)
        if not f:
            return 0
        if self.is_rational:
            return _sign(P.peval(f, self._lo))
        f = P.pmod(f, self.poly)
        if not f:
            return 0
        while True:
            lo, hi = P.peval_interval(f, self._lo, self._hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.refine()

    def compare_rational(self, q) -> int:
        q = Fraction(q)
        if self.is_rational:
            return _sign(self._lo - q)
        while True:
            if self._hi <= q:
                return -1
            if self._lo >= q:
                return 1
            self.refine()

    def _cmp(self, other: "RealAlg") -> int:
        if self.is_rational:
            return -other.compare_rational(self._lo)
        if other.is_rational:
            return self.compare_rational(other._lo)
        if self.poly == other.poly:
            lo = max(self._lo, other._lo)
            hi = min(self._hi, other._hi)
            if lo < hi and P.sturm_count(list(_sturm(self.poly)), lo, hi) == 1:
                return 0
        while True:
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            if self._hi - self._lo >= other._hi - other._lo:
                self.refine()
            else:
                other.refine()

    def __eq__(self, other):
        if not isinstance(other, RealAlg):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other):
        if not isinstance(other, RealAlg):
            return NotImplemented
        return self._cmp(other) < 0

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        if self.is_rational:
            return f"RealAlg({self._lo})"
        return f"RealAlg(root of {self.poly} in [{self._lo}, {self._hi}])"


def select_root(candidates, enclosure):
    """Pick the unique candidate root lying in a shrinking enclosure.

    ``candidates`` is a list of RealAlg; ``enclosure(k)`` returns a
    certified interval around the target after k refinement steps.  The
    target must be one of the candidates.
    """
    floor = _width_floor()
    k = 0
    while True:
        lo, hi = enclosure(k)
        alive = []
        for c in candidates:
            if c.is_rational:
                if lo <= c.exact() <= hi:
                    alive.append(c)
                continue
            while c._hi - c._lo > max(hi - lo, floor):
                c.refine()
            if c._hi >= lo and c._lo <= hi:
                alive.append(c)
        if len(alive) == 1:
            return alive[0]
        if not alive:
            raise ArithmeticError("target is not among the candidate roots")
        if hi - lo < floor:
            raise PrecisionExhausted("could not separate candidate roots")
        candidates = alive
        k += 1
