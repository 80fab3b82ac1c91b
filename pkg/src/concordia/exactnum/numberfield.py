"""Exact arithmetic in Q(x0) and its imaginary quadratic extension.

The Levine-Tristram form at an angle with cosine x0 has entries in
L = Q(x0)(D) where D = z - conj(z) satisfies D^2 = 4 x0^2 - 4 < 0.  Elements
of L are pairs (a, b) meaning a + b D with a, b in Q(x0); complex
conjugation sends D to -D, so a Hermitian matrix has diagonal entries in
Q(x0) and its signature is read off an exact congruence diagonalization.
"""
from __future__ import annotations

from fractions import Fraction

from . import polyops as P
from .realalg import RealAlg


def _pxgcd_inverse(f, mu):
    """Inverse of f modulo the irreducible polynomial mu over Q."""
    r0, r1 = P.trim(mu), P.trim(f)
    s0, s1 = (), (Fraction(1),)
    while r1:
        q, r = P.pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, P.psub(s0, P.pmul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    return P.pscale(s0, Fraction(1) / r0[0])


class Field:
    """Q(x0) for a real algebraic x0; Q itself when x0 is rational.

    Elements are Fractions when x0 is rational and coefficient tuples
    reduced modulo the minimal polynomial otherwise.
    """

    def __init__(self, x0: RealAlg):
        self.x0 = x0
        self.rational = x0.is_rational
        self.mu = x0.poly

    def const(self, q):
        q = Fraction(q)
        if self.rational:
            return q
        return (q,) if q else ()

    def gen(self):
        if self.rational:
            return self.x0.exact()
        return P.pmod((0, 1), self.mu)

    def add(self, a, b):
        return a + b if self.rational else P.padd(a, b)

    def sub(self, a, b):
        return a - b if self.rational else P.psub(a, b)

    def neg(self, a):
        return -a if self.rational else P.pneg(a)

    def mul(self, a, b):
        if self.rational:
            return a * b
        return P.pmod(P.pmul(a, b), self.mu)

    def inv(self, a):
        if self.rational:
            return 1 / a
        return _pxgcd_inverse(a, self.mu)

    def is_zero(self, a) -> bool:
        return a == 0 if self.rational else not a

    def sign(self, a) -> int:
        if self.rational:
            return (a > 0) - (a < 0)
        return self.x0.sign_of(a)


class QuadExt:
    """L = F(D) with D^2 = r; elements are pairs (a, b)."""

    def __init__(self, field: Field, r):
        self.F = field
        self.r = r

    def add(self, u, v):
        F = self.F
        return (F.add(u[0], v[0]), F.add(u[1], v[1]))

    def sub(self, u, v):
        F = self.F
        return (F.sub(u[0], v[0]), F.sub(u[1], v[1]))

    def mul(self, u, v):
        F = self.F
        a = F.add(F.mul(u[0], v[0]), F.mul(F.mul(u[1], v[1]), self.r))
        b = F.add(F.mul(u[0], v[1]), F.mul(u[1], v[0]))
        return (a, b)

    def conj(self, u):
        return (u[0], self.F.neg(u[1]))

    def is_zero(self, u) -> bool:
        return self.F.is_zero(u[0]) and self.F.is_zero(u[1])

    def scale(self, u, k):
        F = self.F
        return (F.mul(u[0], k), F.mul(u[1], k))


def hermitian_inertia(L: QuadExt, H) -> tuple[int, int, int]:
    """(n_plus, n_minus, nullity) of a Hermitian matrix over L."""
    F = L.F
    H = [list(row) for row in H]
    n = len(H)
    active = list(range(n))
    pos = neg = 0
    D = (F.const(0), F.const(1))
    one = (F.const(1), F.const(0))
    while active:
        piv = next((i for i in active if not F.is_zero(H[i][i][0])), None)
        if piv is None:
            pair = next(((i, j) for ii, i in enumerate(active) for j in active[ii + 1:]
                         if not L.is_zero(H[i][j])), None)
            if pair is None:
                break
            i, j = pair
            c = one if not F.is_zero(H[i][j][0]) else D
            cb = L.conj(c)
            for k in active:
                H[k][i] = L.add(H[k][i], L.mul(c, H[k][j]))
            for k in active:
                H[i][k] = L.add(H[i][k], L.mul(cb, H[j][k]))
            piv = i
        d = H[piv][piv][0]
        s = F.sign(d)
        if s > 0:
            pos += 1
        else:
            neg += 1
        dinv = F.inv(d)
        rest = [k for k in active if k != piv]
        col = {j: H[j][piv] for j in rest}
        row = {k: H[piv][k] for k in rest}
        for j in rest:
            if L.is_zero(col[j]):
                continue
            cj = L.scale(col[j], dinv)
            Hj = H[j]
            for k in rest:
                if not L.is_zero(row[k]):
                    Hj[k] = L.sub(Hj[k], L.mul(cj, row[k]))
        active = rest
    return pos, neg, n - pos - neg


def levine_tristram_inertia(A, x0: RealAlg) -> tuple[int, int, int]:
    """Inertia of (1-w)A + (1-conj w)A^T at w = x0 + i sqrt(1 - x0^2)."""
    n = len(A)
    F = Field(x0)
    x = F.gen()
    r = F.sub(F.mul(F.const(4), F.mul(x, x)), F.const(4))
    L = QuadExt(F, r)
    one_minus_x = F.sub(F.const(1), x)
    H = [[None] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            s = A[j][k] + A[k][j]
            kk = Fraction(A[k][j] - A[j][k], 2)
            H[j][k] = (F.mul(one_minus_x, F.const(s)), F.const(kk))
    return hermitian_inertia(L, H)
