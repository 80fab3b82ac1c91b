"""Dense univariate polynomial helpers.

Polynomials are tuples of coefficients ordered from the constant term up,
with no trailing zeros; the zero polynomial is ``()``.  Coefficients are
``int`` or ``Fraction`` over Q, or ints in ``range(p)`` for the ``*_mod``
variants.  Factoring and resultants are delegated to sympy.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

import sympy

Poly = tuple


def trim(c: Sequence) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    return len(f) - 1


def padd(f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def pneg(f: Poly) -> Poly:
    return tuple(-c for c in f)


def psub(f: Poly, g: Poly) -> Poly:
    return padd(f, pneg(g))


def pscale(f: Poly, k) -> Poly:
    if k == 0:
        return ()
    return tuple(c * k for c in f)


def pmul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return trim(out)


def ppow(f: Poly, n: int) -> Poly:
    out: Poly = (1,)
    for _ in range(n):
        out = pmul(out, f)
    return out


def pdivmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Division with remainder over Q."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in f]
    lead = Fraction(g[-1])
    dg = len(g) - 1
    q = [Fraction(0)] * max(len(f) - dg, 0)
    for k in range(len(f) - dg - 1, -1, -1):
        c = r[k + dg] / lead
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] -= c * b
    return trim(q), trim(r[:dg])


def pmod(f: Poly, g: Poly) -> Poly:
    return pdivmod(f, g)[1]


def pmonic(f: Poly) -> Poly:
    if not f:
        return ()
    lead = Fraction(f[-1])
    return tuple(Fraction(c) / lead for c in f)


def pgcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q (``()`` when both are zero)."""
    a, b = trim(f), trim(g)
    while b:
        a, b = b, pmod(a, b)
    return pmonic(a)


def pderiv(f: Poly) -> Poly:
    return trim(i * c for i, c in enumerate(f) if i > 0)


def peval(f: Poly, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def pcompose(f: Poly, g: Poly) -> Poly:
    """f(g(x))."""
    acc: Poly = ()
    for c in reversed(f):
        acc = padd(pmul(acc, g), (c,) if c else ())
    return acc


def content(f: Poly) -> Fraction:
    """Positive rational c with f/c a primitive integer polynomial."""
    if not f:
        return Fraction(0)
    fr = [Fraction(c) for c in f]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    g = 0
    for c in fr:
        g = gcd(g, int(c * den))
    return Fraction(g, den)


def primitive(f: Poly) -> Poly:
    """Primitive integer polynomial with positive leading coefficient."""
    f = trim(f)
    if not f:
        return ()
    c = content(f)
    if f[-1] < 0:
        c = -c
    return tuple(int(Fraction(x) / c) for x in f)


def squarefree(f: Poly) -> Poly:
    f = trim(f)
    if len(f) <= 1:
        return primitive(f)
    g = pgcd(f, pderiv(f))
    return primitive(pdivmod(f, g)[0])


# --- interval evaluation -------------------------------------------------

def peval_interval(f: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of f over [lo, hi] by interval Horner evaluation."""
    if lo == hi:
        v = peval(f, lo)
        return v, v
    a = b = Fraction(0)
    for c in reversed(f):
        cands = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(cands) + c, max(cands) + c
    return a, b


# --- Sturm sequences -----------------------------------------------------

def sturm_sequence(f: Poly) -> list[Poly]:
    seq = [trim(f), pderiv(f)]
    while seq[-1]:
        r = pmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(pneg(r))
    return seq


def _sign_changes(values) -> int:
    prev = 0
    n = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            n += 1
        prev = s
    return n


def sturm_count(seq: list[Poly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct roots in the half-open interval (lo, hi]."""
    return _sign_changes(peval(p, lo) for p in seq) - _sign_changes(peval(p, hi) for p in seq)


# --- special families ----------------------------------------------------

@lru_cache(maxsize=None)
def chebyshev_t(n: int) -> Poly:
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    return psub(pmul((0, 2), chebyshev_t(n - 1)), chebyshev_t(n - 2))


@lru_cache(maxsize=None)
def chebyshev_u(n: int) -> Poly:
    """U_n with U_n(cos t) sin t = sin((n+1) t)."""
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 2)
    return psub(pmul((0, 2), chebyshev_u(n - 1)), chebyshev_u(n - 2))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    f: Poly = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            f = pdivmod(f, cyclotomic(d))[0]
    return tuple(int(c) for c in f)


def symmetric_to_cos(f: Poly) -> Poly:
    """For palindromic f of degree 2h, the polynomial G with
    t^{-h} f(t) = G((t + 1/t)/2)."""
    f = trim(f)
    if not f:
        return ()
    if len(f) % 2 == 0:
        raise ValueError("palindromic polynomial of even degree expected")
    h = (len(f) - 1) // 2
    out: Poly = (f[h],)
    for k in range(1, h + 1):
        if f[h + k] != f[h - k]:
            raise ValueError("polynomial is not palindromic")
        out = padd(out, pscale(chebyshev_t(k), 2 * f[h + k]))
    return out


@lru_cache(maxsize=None)
def cos_minpoly(n: int) -> Poly:
    """Primitive minimal polynomial of cos(2 pi / n)."""
    if n == 1:
        return (-1, 1)
    if n == 2:
        return (1, 1)
    return primitive(symmetric_to_cos(cyclotomic(n)))


# --- sympy bridge --------------------------------------------------------

_X = sympy.Symbol("x")
_Y = sympy.Symbol("y")


def _to_sympy(f: Poly, var=_X) -> sympy.Poly:
    return sympy.Poly(list(reversed([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in f])) or [0], var, domain="QQ")


def _from_sympy(p: sympy.Poly) -> Poly:
    return trim(Fraction(int(c.p), int(c.q)) if not isinstance(c, int) else c
                for c in reversed(p.all_coeffs()))


@lru_cache(maxsize=4096)
def factor_irreducible(f: Poly) -> tuple[tuple[Poly, int], ...]:
    """Irreducible factors over Q as primitive integer polynomials."""
    f = primitive(f)
    if len(f) <= 1:
        return ()
    _, facs = sympy.factor_list(_to_sympy(f).as_expr(), _X)
    out = []
    for fac, mult in facs:
        p = primitive(_from_sympy(sympy.Poly(fac, _X)))
        if len(p) > 1:
            out.append((p, mult))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=4096)
def image_poly(mu: Poly, g: Poly) -> Poly:
    """Primitive polynomial vanishing at g(a) for every root a of mu."""
    m = _to_sympy(mu, _X).as_expr()
    rel = _Y - _to_sympy(g, _X).as_expr()
    res = sympy.resultant(m, rel, _X)
    return primitive(_from_sympy(sympy.Poly(res, _Y)))


@lru_cache(maxsize=4096)
def angle_sum_poly(mu: Poly, nu: Poly) -> Poly:
    """Primitive polynomial vanishing at cos(a + b) for all a, b whose
    cosines are roots of mu and nu respectively (both sign choices of the
    sines are covered)."""
    c = sympy.Symbol("c")
    m = _to_sympy(mu, _X).as_expr()
    n = _to_sympy(nu, c).as_expr()
    rel = (_Y - _X * c) ** 2 - (1 - _X ** 2) * (1 - c ** 2)
    r1 = sympy.resultant(rel, m, _X)
    r2 = sympy.resultant(r1, n, c)
    return primitive(_from_sympy(sympy.Poly(sympy.expand(r2), _Y)))


# --- arithmetic mod p ----------------------------------------------------

def reduce_mod(f: Poly, p: int) -> Poly:
    out = []
    for c in f:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"coefficient {c} has denominator divisible by {p}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return trim(out)


def padd_mod(f: Poly, g: Poly, p: int) -> Poly:
    return reduce_mod(padd(f, g), p)


def pmul_mod(f: Poly, g: Poly, p: int) -> Poly:
    return reduce_mod(pmul(f, g), p)


def pdivmod_mod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    for k in range(len(f) - dg - 1, -1, -1):
        c = r[k + dg] * inv % p
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] = (r[k + j] - c * b) % p
    return trim(q), trim(r[:dg])


def pgcd_mod(f: Poly, g: Poly, p: int) -> Poly:
    a, b = trim(f), trim(g)
    while b:
        a, b = b, pdivmod_mod(a, b, p)[1]
    if not a:
        return ()
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)
