"""Pattern descriptors and the satellite calculus on jump data.

For a pattern P of winding number d with R = P(U),
    delta_{P(K)}(theta) = delta_R(theta) + delta_K(d * theta).
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import AxisWithNonzeroWinding, BadParameter, DimensionMismatch
from .jumpcalc import jf_reparam
from .seifert import SeifertMatrix, unknot
from .signature import JumpFunction, jump_function


@dataclass(frozen=True)
class PatternDescriptor:
    winding: int
    pattern_knot: SeifertMatrix | None
    delta_R: JumpFunction
    axis: tuple | None = None          # tuple of LaurentPoly coordinates
    name: str | None = None
    axis_authoritative: bool = True
    is_identity: bool = False


def make_pattern(pattern_knot: SeifertMatrix | None, winding: int, axis=None,
                 name: str | None = None, delta_R: JumpFunction | None = None) -> PatternDescriptor:
    winding = int(winding)
    if axis is not None:
        if winding != 0:
            raise AxisWithNonzeroWinding("an axis class exists only for winding number 0")
        if pattern_knot is None:
            raise BadParameter("an axis needs the pattern knot's Seifert matrix")
        if len(axis) != pattern_knot.size:
            raise DimensionMismatch(f"axis has {len(axis)} coordinates, matrix size is {pattern_knot.size}")
        from .blanchfield import as_axis
        axis = as_axis(axis)
    if pattern_knot is not None:
        computed = jump_function(pattern_knot)
        if delta_R is not None and delta_R != computed:
            raise BadParameter("delta_R disagrees with the pattern knot's jump function")
        delta_R = computed
    elif delta_R is None:
        raise BadParameter("either a pattern knot or delta_R is required")
    if name is None and pattern_knot is not None and pattern_knot.name:
        name = f"{pattern_knot.name}-pattern(d={winding})"
    return PatternDescriptor(winding, pattern_knot, delta_R, axis, name)


def identity_pattern() -> PatternDescriptor:
    return PatternDescriptor(1, unknot(), JumpFunction(), None, "identity", True, True)


def satellite_jump(P: PatternDescriptor, delta_K: JumpFunction) -> JumpFunction:
    if P.winding == 0:
        return P.delta_R
    return P.delta_R + jf_reparam(delta_K, P.winding)


def pattern_compose(P: PatternDescriptor, Q: PatternDescriptor) -> PatternDescriptor:
    """Descriptor of P o Q, i.e. K -> P(Q(K))."""
    if Q.is_identity:
        return P
    if P.is_identity:
        return Q
    d = P.winding * Q.winding
    delta = satellite_jump(P, Q.delta_R)
    q_trivial = Q.pattern_knot is not None and Q.pattern_knot.size == 0
    if P.winding == 0 or q_trivial:
        knot = P.pattern_knot
    else:
        knot = None
    axis = P.axis if P.winding == 0 else None
    name = f"({P.name})o({Q.name})" if P.name and Q.name else None
    return PatternDescriptor(d, knot, delta, axis, name,
                             axis_authoritative=axis is None or q_trivial)


def pattern_iterate(P: PatternDescriptor, n: int) -> PatternDescriptor:
    if n < 0:
        raise BadParameter("iteration count must be nonnegative")
    out = identity_pattern()
    for _ in range(n):
        out = pattern_compose(P, out)
    if n >= 1 and P.name:
        out = replace(out, name=f"{P.name}^{n}")
    return out
