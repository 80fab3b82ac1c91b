"""Levine-Tristram signatures, jump functions and abelian rho-invariants.

For each diagonal block of a Seifert matrix the unit-circle zeros of the
Alexander polynomial are isolated in the coordinate x = cos(theta); the
signature is constant on the gaps between them and is computed once per
gap at a rational cosine, where the Hermitian form lives over Q(sqrt(x^2-1)).
Signatures at the zeros themselves come from exact elimination over the
number field generated by the root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import BadParameter
from .exactnum import polyops as P
from .exactnum.angle import Angle
from .exactnum.laurent import LaurentPoly
from .exactnum.numberfield import levine_tristram_inertia
from .exactnum.realalg import RealAlg
from .seifert import KnotSum, block_alexander


def simplest_between(lo, hi) -> Fraction:
    """Rational with the smallest denominator strictly inside (lo, hi);
    ``hi`` may be None for +infinity."""
    lo = Fraction(lo)
    fl = math.floor(lo)
    if hi is None or fl + 1 < hi:
        return Fraction(fl + 1)
    hi = Fraction(hi)
    if lo >= hi:
        raise ValueError("empty interval")
    # both ends lie in [fl, fl + 1]: continue on the reciprocal of the fraction part
    inner_hi = None if lo == fl else 1 / (lo - fl)
    return fl + 1 / simplest_between(1 / (hi - fl), inner_hi)


@dataclass
class BlockProfile:
    """Signature data of one block, ordered by increasing theta in (0, pi)."""
    roots: list            # RealAlg cosines, decreasing
    gap_sigma: list        # len(roots) + 1 values
    samples: list          # rational cosine used for each gap
    root_sigma: dict = field(default_factory=dict)


def _cos_poly(block) -> tuple:
    f = LaurentPoly.from_list(block_alexander(block)).normalize()
    return P.symmetric_to_cos(f.dense()[1])


@lru_cache(maxsize=4096)
def block_profile(block) -> BlockProfile:
    G = _cos_poly(block)
    roots = sorted(RealAlg.real_roots(G, -1, 1), reverse=True) if len(G) > 1 else []
    edges = [RealAlg.rational(1)] + roots + [RealAlg.rational(-1)]
    samples = []
    for hi_r, lo_r in zip(edges, edges[1:]):
        # find a rational strictly between lo_r < hi_r
        while not lo_r._hi < hi_r._lo:
            if lo_r._hi - lo_r._lo >= hi_r._hi - hi_r._lo:
                lo_r.refine()
            else:
                hi_r.refine()
        samples.append(simplest_between(lo_r._hi, hi_r._lo))
    samples[-1] = Fraction(-1)   # theta = pi is never a zero (Delta(-1) is odd)
    sig = []
    for x in samples:
        pos, neg, null = levine_tristram_inertia(block, RealAlg.rational(x))
        assert null == 0, "gap sample landed on a zero"
        sig.append(pos - neg)
    return BlockProfile(roots, sig, samples)


def _root_index(prof: BlockProfile, x: RealAlg):
    """('root', i) if x equals roots[i], else ('gap', j)."""
    for i, r in enumerate(prof.roots):
        c = x._cmp(r)
        if c == 0:
            return "root", i
        if c > 0:
            return "gap", i
    return "gap", len(prof.roots)


def _block_sigma(block, x: RealAlg) -> int:
    prof = block_profile(block)
    kind, i = _root_index(prof, x)
    if kind == "gap":
        return prof.gap_sigma[i]
    if i not in prof.root_sigma:
        pos, neg, _ = levine_tristram_inertia(block, prof.roots[i])
        prof.root_sigma[i] = pos - neg
    return prof.root_sigma[i]


def _check_angle(theta: Angle) -> Angle:
    if theta.is_zero():
        raise BadParameter("the signature is not evaluated at theta = 0")
    return theta.fold()


def sigma_at(A, theta: Angle) -> int:
    """sigma(e^{i theta}); at zeros of Delta the degenerate form's signature."""
    if isinstance(A, KnotSum):
        return sum(c * sigma_at(K, theta) for K, c in A.terms)
    x = _check_angle(theta).cos
    return sum(_block_sigma(b, x) for b in A.blocks)


class JumpFunction:
    """Finitely supported delta on (0, pi], extended evenly and 2pi-periodically."""

    __slots__ = ("items", "_map")

    def __init__(self, items=()):
        acc: dict = {}
        for a, v in items:
            a = _check_angle(a)
            acc[a] = acc.get(a, 0) + int(v)
        self.items = tuple(sorted(((a, v) for a, v in acc.items() if v), key=lambda kv: kv[0]))
        self._map = dict(self.items)

    @property
    def support(self) -> list[Angle]:
        return [a for a, _ in self.items]

    def __call__(self, theta: Angle) -> int:
        if theta.is_zero():
            return 0
        return self._map.get(theta.fold(), 0)

    def __len__(self):
        return len(self.items)

    def __bool__(self):
        return bool(self.items)

    def __eq__(self, other):
        return isinstance(other, JumpFunction) and self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __add__(self, other):
        return JumpFunction(self.items + other.items)

    def __neg__(self):
        return JumpFunction((a, -v) for a, v in self.items)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, k: int) -> "JumpFunction":
        return JumpFunction((a, k * v) for a, v in self.items)

    def __repr__(self):
        inner = ", ".join(f"{a!r}: {v}" for a, v in self.items)
        return f"JumpFunction({{{inner}}})"


def jump_function(A) -> JumpFunction:
    """delta(theta) = sigma(theta+) - sigma(theta-) on (0, pi)."""
    if isinstance(A, KnotSum):
        out = JumpFunction()
        for K, c in A.terms:
            out = out + jump_function(K).scaled(c)
        return out
    items = []
    for b in A.blocks:
        items.extend(_block_jumps(b))
    return JumpFunction(items)


@lru_cache(maxsize=4096)
def _block_jumps(block) -> tuple:
    prof = block_profile(block)
    out = []
    for i, r in enumerate(prof.roots):
        d = prof.gap_sigma[i + 1] - prof.gap_sigma[i]
        if d:
            out.append((Angle.from_cos(RealAlg(r.poly, r._lo, r._hi), 1), d))
    return tuple(out)


def sigma_pi(A) -> int:
    return sigma_at(A, Angle.rational_pi(1))


# --- rho invariants -------------------------------------------------------

@dataclass
class RhoValue:
    """Certified value of an abelian rho-invariant.

    ``exact`` is set for Z_p; for Z the value is the enclosure [lo, hi]
    together with the gap terms (sigma, theta_lo, theta_hi) on (0, pi).
    Each gap also appears mirrored in (pi, 2pi), so it contributes
    2 * sigma * (theta_hi - theta_lo) / 2pi to the full-circle average.
    """
    exact: Fraction | None = None
    lo: Fraction | None = None
    hi: Fraction | None = None
    width: Fraction | None = None
    terms: list = field(default_factory=list)

    def contains(self, q) -> bool:
        q = Fraction(q)
        if self.exact is not None:
            return self.exact == q
        return self.lo <= q <= self.hi


def rho_z(A, width=Fraction(1, 10 ** 9)) -> RhoValue:
    """Normalized integral of sigma over the circle, certified to ``width``."""
    width = Fraction(width)
    delta = jump_function(A)
    total = sum(v for _, v in delta.items)
    # rho = sigma(pi-) - sum_j delta_j theta_j / pi
    mass = sum(abs(v) for _, v in delta.items) or 1
    w = width / mass
    lo = hi = Fraction(total)
    for a, v in delta.items:
        tl, th = a.over_pi_interval(w)
        if v > 0:
            lo -= v * th
            hi -= v * tl
        else:
            lo -= v * tl
            hi -= v * th
    # gap terms: each upper-half gap (theta_k, theta_k+1) has a mirror
    # image in the lower half, hence multiplicity 2 on the full circle
    marks = [Angle.rational_pi(0)] + delta.support + [Angle.rational_pi(1)]
    terms = []
    level = 0
    for k in range(len(marks) - 1):
        if k > 0:
            level += delta.items[k - 1][1]
        if level:
            terms.append((level, marks[k], marks[k + 1]))
    return RhoValue(lo=lo, hi=hi, width=width, terms=terms)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % k for k in range(2, math.isqrt(p) + 1))


def rho_zp(A, p: int) -> Fraction:
    """(1/p) * sum of sigma over the p-th roots of unity."""
    if not _is_prime(p):
        raise BadParameter(f"{p} is not prime")
    s = 0
    for i in range(1, p):
        s += sigma_at(A, Angle.rational_pi(2 * i, p))
    return Fraction(s, p)


def cheeger_gromov_bound(crossing_number: int) -> int:
    """The universal bound 7 * 10^7 * c(K) on |rho^(2)| for the zero-surgery."""
    if crossing_number < 3:
        raise BadParameter("crossing number of a nontrivial knot is at least 3")
    return 7 * 10 ** 7 * crossing_number
