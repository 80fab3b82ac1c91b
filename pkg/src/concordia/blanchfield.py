"""Blanchfield pairing from a Seifert matrix, and the linking form of the
branched double cover.

Convention: B(t) = (t - 1) (A - t A^T)^{-1} and Bl(v, w) = conj(v)^T B(t) w,
where conj applies t -> t^{-1} to coordinates.  Nontriviality of a
self-pairing does not depend on this choice of convention.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BadReduction, DegeneratePresentation, DimensionMismatch, TrivialPairing
from .exactnum.laurent import LaurentPoly, RatFnClass
from .exactnum.smith import smith_normal_form
from .seifert import SeifertMatrix, _interpolate, det_int


def as_axis(v) -> tuple:
    """Coerce a coordinate vector (ints, dicts or LaurentPoly) to LaurentPoly entries."""
    out = []
    for c in v:
        if isinstance(c, LaurentPoly):
            out.append(c)
        elif isinstance(c, dict):
            out.append(LaurentPoly({int(e): Fraction(x) for e, x in c.items()}))
        else:
            out.append(LaurentPoly.const(c))
    return tuple(out)


def basis_vector(n: int, i: int, shift: int = 0) -> tuple:
    return tuple(LaurentPoly.monomial(shift) if j == i else LaurentPoly() for j in range(n))


@lru_cache(maxsize=1024)
def _adjugate(entries) -> tuple:
    """Adjugate of M(t) = A - t A^T as a matrix of integer polynomials."""
    n = len(entries)
    if n == 1:
        return (((1,),),)
    pts = range(n)
    cof = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            vals = []
            for t in pts:
                M = [[entries[r][c] - t * entries[c][r] for c in range(n) if c != i]
                     for r in range(n) if r != j]
                vals.append((-1) ** (i + j) * det_int(M))
            cof[i][j] = _interpolate(vals)   # adj[i][j] = cofactor C_{j i}
    return tuple(tuple(row) for row in cof)


def pairing_raw(A: SeifertMatrix):
    """(N, D) with B(t) = N / D: N = (t - 1) adj(A - t A^T), D = det(A - t A^T)."""
    n = A.size
    adj = _adjugate(A.entries)
    tm1 = LaurentPoly.from_list([-1, 1])
    N = [[tm1 * LaurentPoly.from_list(adj[i][j]) for j in range(n)] for i in range(n)]
    return N, LaurentPoly.from_list(A.alexander_raw)


def pairing_matrix(A: SeifertMatrix):
    N, D = pairing_raw(A)
    return [[RatFnClass.of(x, D) for x in row] for row in N]


def _check(A: SeifertMatrix, v) -> tuple:
    v = as_axis(v)
    if len(v) != A.size:
        raise DimensionMismatch(f"vector of length {len(v)} for a matrix of size {A.size}")
    return v


def _self_numerator(N, v) -> LaurentPoly:
    n = len(v)
    total = LaurentPoly()
    for i in range(n):
        if v[i].is_zero():
            continue
        vb = v[i].bar()
        for j in range(n):
            if not v[j].is_zero():
                total = total + vb * N[i][j] * v[j]
    return total


def self_pairing(A: SeifertMatrix, v) -> RatFnClass:
    v = _check(A, v)
    if A.size == 0:
        return RatFnClass.zero()
    N, D = pairing_raw(A)
    return RatFnClass.of(_self_numerator(N, v), D)


def self_pairing_mod_p(A: SeifertMatrix, v, p: int) -> RatFnClass:
    """Self-pairing computed over F_p(t)/F_p[t^{+-1}]."""
    v = _check(A, v)
    if A.size == 0:
        return RatFnClass.zero(p)
    N, D = pairing_raw(A)
    Dp = D.reduce(p)
    if Dp.is_zero():
        raise BadReduction(f"denominator vanishes mod {p}")
    try:
        num = _self_numerator(N, v).reduce(p)
    except ZeroDivisionError as exc:
        raise BadReduction(str(exc)) from None
    return RatFnClass.of(num, Dp)


def _primes():
    p = 2
    while True:
        if all(p % k for k in range(2, int(p ** 0.5) + 1)):
            yield p
        p += 1


def good_primes(A: SeifertMatrix, v, count: int) -> list[int]:
    """The ``count`` smallest primes with nonzero mod-p self-pairing.

    Primes above every coefficient of the integral pair num/den (and of
    Delta) are accepted without recomputation; smaller primes are checked.
    """
    b = self_pairing(A, v)
    if b.is_zero():
        raise TrivialPairing("Bl(v, v) = 0")
    bound = max(b.coefficient_bound(),
                max(abs(c) for c in A.alexander_raw))
    out = []
    for p in _primes():
        if len(out) >= count:
            break
        if p > bound or not self_pairing_mod_p(A, v, p).is_zero():
            out.append(p)
    return out


def witness(A: SeifertMatrix):
    """A vector with nonzero self-pairing, or None when Delta is a unit.

    Search order: e_i; e_i + e_j; e_i + t e_j.  If all of these pair
    trivially then B vanishes entrywise, because (t^2 - 1) is coprime to
    Delta; so the search is complete.
    """
    n = A.size
    if A.alexander().is_unit():
        return None
    N, D = pairing_raw(A)

    def nonzero(v):
        return not RatFnClass.of(_self_numerator(N, v), D).is_zero()

    for i in range(n):
        v = basis_vector(n, i)
        if nonzero(v):
            return v
    for shift in (0, 1):
        for i in range(n):
            for j in range(n):
                if i == j or (shift == 0 and j < i):
                    continue
                v = tuple(a + b for a, b in zip(basis_vector(n, i), basis_vector(n, j, shift)))
                if nonzero(v):
                    return v
    raise AssertionError("no witness found although Delta is not a unit")


@dataclass
class LinkingForm:
    """Q/Z-valued linking form on H_1 of the branched double cover."""
    factors: list          # invariant factors > 1
    generators: list       # integer vectors (columns of U^{-1})
    form: list             # matrix of Fractions in [0, 1)
    inverse: list          # (A + A^T)^{-1} over Q

    @property
    def order(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out

    def pair(self, x, y) -> Fraction:
        n = len(self.inverse)
        if len(x) != n or len(y) != n:
            raise DimensionMismatch("vector length does not match the presentation")
        s = sum(Fraction(x[i]) * self.inverse[i][j] * Fraction(y[j]) for i in range(n) for j in range(n))
        return s - (s.numerator // s.denominator)


def _inverse_q(M):
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def double_cover_linking(A: SeifertMatrix) -> LinkingForm:
    n = A.size
    M = [[A.entries[i][j] + A.entries[j][i] for j in range(n)] for i in range(n)]
    if n == 0:
        return LinkingForm([], [], [], [])
    if det_int(M) == 0:
        raise DegeneratePresentation("det(A + A^T) = 0")
    factors, U, V, D = smith_normal_form(M)
    Uinv = _inverse_q(U)
    inv = _inverse_q(M)
    gens, facs = [], []
    for k, d in enumerate(factors):
        if d > 1:
            facs.append(d)
            gens.append([int(Uinv[i][k]) for i in range(n)])
    lf = LinkingForm(facs, gens, [], inv)
    lf.form = [[lf.pair(g, h) for h in gens] for g in gens]
    return lf
