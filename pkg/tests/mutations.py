"""Scripted mutations of a nonzero-winding certificate for the trefoil pattern
with d = 2, n = 1, m = 3, each paired with the condition it must trip."""
import copy
from fractions import Fraction

from concordia.exactnum import Angle
from concordia.independence import FamilyMember, quartic_knot
from concordia.seifert import block_sum, catalog_get
from concordia.signature import JumpFunction, jump_function

T = catalog_get("trefoil")


def rp(n, d=1):
    return Angle.rational_pi(n, d)


def _mutant(cert, fn):
    c = copy.copy(cert)
    c.family = list(cert.family)
    fn(c.family)
    return c


def _trefoil_member():
    return FamilyMember(knot=T, marked_angle=rp(1, 3))


def _set(i, m):
    def f(fam):
        fam[i] = m
    return f


def _swap(i, j):
    def f(fam):
        fam[i], fam[j] = fam[j], fam[i]
    return f


def _widen(i, extra):
    def f(fam):
        K = fam[i].knot
        fam[i] = FamilyMember(knot=block_sum(K, extra), marked_angle=fam[i].marked_angle)
    return f


def _formal(phi, value=2):
    return FamilyMember(jumps=JumpFunction([(phi, value)]), marked_angle=phi)


def _marked(i, phi):
    def f(fam):
        fam[i] = FamilyMember(knot=fam[i].knot, marked_angle=phi)
    return f


MUTATIONS = [
    ("angle into S, member 0", _set(0, _trefoil_member()), "prop14.avoidance"),
    ("angle into S, member 1", _set(1, _trefoil_member()), "prop14.avoidance"),
    ("angle into S, member 2", _set(2, _trefoil_member()), "prop14.avoidance"),
    ("shifted angle into S", _set(0, _formal(rp(2, 3))), "prop14.avoidance_shift"),
    ("duplicate angle 0 -> 1", lambda fam: fam.__setitem__(1, fam[0]), "prop14.distinct"),
    ("duplicate angle 1 -> 2", lambda fam: fam.__setitem__(2, fam[1]), "prop14.distinct"),
    ("swap members 0 and 1", _swap(0, 1), "prop14.ordering"),
    ("swap members 1 and 2", _swap(1, 2), "prop14.ordering"),
    ("support widened by trefoil", _widen(0, T), "prop14.singleton"),
    ("support widened by T(2,5)", _widen(2, catalog_get("T2_5")), "prop14.singleton"),
    ("angle above pi/2", _set(0, FamilyMember(knot=quartic_knot(1, 2),
                                              marked_angle=jump_function(quartic_knot(1, 2)).support[0])),
     "prop14.bound"),
    ("marked angle off the jump", _marked(1, Angle.arccos(Fraction(4, 5))), "prop14.singleton"),
]
