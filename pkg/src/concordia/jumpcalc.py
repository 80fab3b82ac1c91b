"""Jump functions as formal objects: combination, reparametrization,
the f_n accumulator, avoidance sets, evaluation and periodicity."""
from __future__ import annotations

from .errors import BadParameter, DimensionMismatch
from .exactnum.angle import Angle
from .signature import JumpFunction


def jf_combine(coeffs, fs) -> JumpFunction:
    coeffs, fs = list(coeffs), list(fs)
    if len(coeffs) != len(fs):
        raise DimensionMismatch("coefficient and function lists differ in length")
    items = []
    for c, f in zip(coeffs, fs):
        items.extend((a, c * v) for a, v in f.items)
    return JumpFunction(items)


def jf_reparam(f: JumpFunction, d: int) -> JumpFunction:
    """The function theta -> f(d * theta), restricted to (0, pi]."""
    d = abs(int(d))
    if d == 0:
        raise BadParameter("reparametrization by 0 is the zero map; handle winding 0 separately")
    if d == 1:
        return f
    items = []
    for psi, v in f.items:
        for phi in psi.preimages(d):
            items.append((phi, v))
    return JumpFunction(items)


def f_n_accumulate(delta_R: JumpFunction, d: int, n: int) -> JumpFunction:
    """f_n = delta_R(theta) + delta_R(d theta) + ... + delta_R(d^n theta)."""
    if n < 0:
        return JumpFunction()
    if abs(d) < 2:
        raise BadParameter("f_n is defined for |d| >= 2")
    total = delta_R
    cur = delta_R
    for _ in range(n):
        cur = jf_reparam(cur, d)
        total = total + cur
    return total


def avoidance_set(delta_R: JumpFunction, d: int, n: int) -> list[Angle]:
    """Sorted union of the supports of f_n and f_{n-1} (f_{-1} = 0)."""
    if n < 0:
        raise BadParameter("n must be nonnegative")
    pts = set(f_n_accumulate(delta_R, d, n).support)
    pts |= set(f_n_accumulate(delta_R, d, n - 1).support)
    return sorted(pts)


def jf_eval(f: JumpFunction, theta: Angle) -> int:
    """f at any angle, using evenness and 2pi-periodicity."""
    return f(theta)


def unfold(f: JumpFunction) -> dict:
    """The function on [0, 2pi) as a dict Angle -> value."""
    out = {}
    for a, v in f.items:
        out[a] = v
        out[a.negate()] = v
    return out


def jf_has_period(f: JumpFunction, period: Angle) -> bool:
    """Whether the unfolded function is invariant under theta -> theta + period."""
    if not period.is_rational_pi:
        raise BadParameter("periods must be rational multiples of pi")
    full = unfold(f)
    for a, v in full.items():
        if full.get(a.shift(period.q), 0) != v:
            return False
    return True
