"""Generators and verifiers for linear-independence certificates.

Certificates only record that the exact angle, avoidance and magnitude
hypotheses of the independence arguments hold for a concrete family; the
concordance conclusions themselves are not computed here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import config
from .blanchfield import good_primes, self_pairing, witness
from .errors import BadParameter, RealizationBudgetExceeded, UnitAlexander
from .exactnum.angle import Angle
from .jumpcalc import avoidance_set, f_n_accumulate
from .satellite import PatternDescriptor, make_pattern
from .seifert import KnotSum, SeifertMatrix, crossing_number
from .signature import JumpFunction, cheeger_gromov_bound, jump_function, sigma_at, _is_prime


# --- single-jump realization ----------------------------------------------

def genus_one_knot(k: int) -> SeifertMatrix:
    """[[-1, 1], [0, -k]]: Delta = k t^2 - (2k-1) t + k, one jump at
    arccos(1 - 1/(2k))."""
    return SeifertMatrix([[-1, 1], [0, -k]], f"g1_k{k}")


def quartic_knot(alpha: int, b: int) -> SeifertMatrix:
    """Genus-2 knot with Delta = a t^4 + b t^3 + c t^2 + b t + a, where
    a = -alpha and c = 1 - 2a - 2b.  For alpha >= 1 and b >= 1 the cosine
    polynomial has exactly one root in (-1, 1)."""
    u, q = alpha, b - 4 * alpha
    rows = [[1, 1, 0, 0], [0, q, 1, 0], [0, 1, 0, 1], [0, 0, 0, u]]
    return SeifertMatrix(rows, f"q4_a{alpha}_b{b}")


def _singleton(A) -> tuple[Angle, int] | None:
    jf = jump_function(A)
    if len(jf) != 1:
        return None
    return jf.items[0]


def _genus_one_candidates(lo: float, hi: float):
    # cos(phi_k) = 1 - 1/(2k) must lie in (cos hi, cos lo)
    chi, clo = math.cos(hi), math.cos(lo)
    if chi >= 0.5 + 1e-12 and clo >= 0.5 + 1e-12 and 1 - chi <= 0:
        return
    k0 = 1 if 1 - chi <= 0 else max(1, math.floor(1 / (2 * (1 - chi))) - 1)
    k1 = math.inf if 1 - clo <= 0 else math.ceil(1 / (2 * (1 - clo))) + 1
    k = k0
    while k <= k1:
        yield k
        k += 1


def _quartic_candidates(lo: float, hi: float):
    # root u = 1 - cos(theta) satisfies b = 1/(2u) + 2 alpha (2 - u)
    u_lo, u_hi = 1 - math.cos(lo), 1 - math.cos(hi)
    alpha = 1
    while True:
        def bval(u):
            return 1 / (2 * u) + 2 * alpha * (2 - u)
        b_lo = bval(u_hi) if u_hi > 0 else math.inf
        b_hi = bval(u_lo) if u_lo > 0 else math.inf
        start = max(1, math.floor(b_lo) - 1)
        stop = math.ceil(b_hi) + 1 if b_hi != math.inf else start + 64
        for b in range(start, stop + 1):
            yield alpha, b
        alpha += 1


def realize_single_jump(lo: Angle, hi: Angle, forbidden=(), accept=None, budget: int | None = None):
    """A knot whose jump function on (0, pi) is supported at exactly one
    angle phi in the open interval (lo, hi), phi not in ``forbidden``.

    ``accept(phi)`` may impose further conditions.  Returns (knot, phi);
    the singleton property is recomputed exactly before returning.
    """
    if lo.compare(hi) >= 0:
        raise BadParameter("target interval is empty")
    if hi.compare(Angle.rational_pi(1)) > 0:
        raise BadParameter("target must lie in (0, pi)")
    budget = budget or config.settings().budget
    forbidden = set(a.fold() for a in forbidden)
    flo, fhi = float(lo), float(hi)
    tried = 0

    def check(A):
        got = _singleton(A)
        if got is None:
            return None
        phi, v = got
        if v == 0 or not (lo < phi < hi) or phi in forbidden:
            return None
        if accept is not None and not accept(phi):
            return None
        return phi

    if flo < math.pi / 3 + 1e-9:
        for k in _genus_one_candidates(flo, min(fhi, math.pi / 3 + 1e-6)):
            tried += 1
            if tried > budget:
                break
            A = genus_one_knot(k)
            phi = check(A)
            if phi is not None:
                return A, phi
    for alpha, b in _quartic_candidates(flo, fhi):
        tried += 1
        if tried > budget:
            break
        A = quartic_knot(alpha, b)
        phi = check(A)
        if phi is not None:
            return A, phi
    raise RealizationBudgetExceeded(
        f"no singleton-jump knot found in ({flo:.6f}, {fhi:.6f}) within {budget} candidates")


# --- certificates -----------------------------------------------------------

@dataclass
class FamilyMember:
    knot: SeifertMatrix | KnotSum | None = None
    jumps: JumpFunction | None = None       # formal jump data when no knot is given
    marked_angle: Angle | None = None
    prime: int | None = None

    def delta(self) -> JumpFunction:
        if self.knot is not None:
            return jump_function(self.knot)
        return self.jumps if self.jumps is not None else JumpFunction()


@dataclass
class IndependenceCertificate:
    kind: str
    pattern: PatternDescriptor | None
    params: dict
    family: list
    notes: list = field(default_factory=list)


@dataclass
class Verdict:
    violations: list = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return not self.violations

    def add(self, condition: str, detail: str):
        self.violations.append((condition, detail))

    def conditions(self) -> set:
        return {c for c, _ in self.violations}


def _fmt(a: Angle) -> str:
    return str(a)


# --- winding zero ---------------------------------------------------------

def gen_prop13_family(P: PatternDescriptor, m: int, budget=None) -> IndependenceCertificate:
    if P.winding != 0:
        raise BadParameter("this construction needs winding number 0")
    if m < 1:
        raise BadParameter("m must be at least 1")
    forbidden = P.delta_R.support
    hi = Angle.rational_pi(1)
    family = []
    for _ in range(m):
        K, phi = realize_single_jump(Angle.rational_pi(0), hi, forbidden, budget=budget)
        family.append(FamilyMember(knot=K, marked_angle=phi))
        hi = phi
    return IndependenceCertificate("prop13", P, {"d": 0, "m": m}, family,
                                   ["angles strictly decreasing; delta_R vanishes at each"])


def _check_pattern(P, v: Verdict, tag: str):
    if P is None:
        v.add(f"{tag}.wellformed", "certificate has no pattern")
        return False
    if P.pattern_knot is not None and jump_function(P.pattern_knot) != P.delta_R:
        v.add(f"{tag}.wellformed", "delta_R does not match the pattern knot")
    return True


def _check_singletons(cert, v: Verdict, tag: str) -> list:
    """Common per-member checks; returns the list of (phi, delta) pairs."""
    out = []
    for i, mem in enumerate(cert.family):
        delta = mem.delta()
        phi = mem.marked_angle
        if phi is None:
            v.add(f"{tag}.wellformed", f"member {i} has no marked angle")
            continue
        if delta.support != [phi]:
            v.add(f"{tag}.singleton", f"member {i}: support {[_fmt(a) for a in delta.support]} "
                                      f"is not exactly {{{_fmt(phi)}}}")
        if delta(phi) == 0:
            v.add(f"{tag}.nonzero", f"member {i}: jump at {_fmt(phi)} is 0")
        out.append((phi, delta))
    return out


def _check_distinct(pairs, v: Verdict, tag: str):
    seen = {}
    for i, (phi, _) in enumerate(pairs):
        if phi in seen:
            v.add(f"{tag}.distinct", f"members {seen[phi]} and {i} share angle {_fmt(phi)}")
        else:
            seen[phi] = i


def verify_prop13(cert: IndependenceCertificate) -> Verdict:
    v = Verdict()
    if cert.kind != "prop13":
        v.add("prop13.wellformed", f"kind is {cert.kind!r}")
        return v
    if not cert.family:
        v.add("prop13.wellformed", "empty family")
        return v
    if not _check_pattern(cert.pattern, v, "prop13"):
        return v
    P = cert.pattern
    if P.winding != 0:
        v.add("prop13.winding", f"winding number {P.winding} != 0")
    pairs = _check_singletons(cert, v, "prop13")
    _check_distinct(pairs, v, "prop13")
    for i, (phi, _) in enumerate(pairs):
        if P.delta_R(phi) != 0:
            v.add("prop13.avoidance", f"member {i}: delta_R({_fmt(phi)}) = {P.delta_R(phi)}")
    return v


# --- nonzero winding ------------------------------------------------------

def _prop14_points(phi: Angle, d: int, n: int):
    theta = phi.divide(d ** n)
    return theta, theta.shift(Fraction(2, d ** (n + 1)))


def gen_prop14_family(P: PatternDescriptor, n: int, m: int, budget=None) -> IndependenceCertificate:
    d = abs(P.winding)
    if d < 2:
        raise BadParameter("this construction needs |winding| >= 2")
    if n < 0 or m < 1:
        raise BadParameter("need n >= 0 and m >= 1")
    S = set(avoidance_set(P.delta_R, d, n))
    hi = min(Angle.rational_pi(2, d), Angle.rational_pi(1, 2))

    def ok(phi):
        theta, shifted = _prop14_points(phi, d, n)
        return theta.fold() not in S and shifted.fold() not in S

    family = []
    for _ in range(m):
        K, phi = realize_single_jump(Angle.rational_pi(0), hi, accept=ok, budget=budget)
        family.append(FamilyMember(knot=K, marked_angle=phi))
        hi = phi
    return IndependenceCertificate(
        "prop14", P, {"d": d, "n": n, "m": m}, family,
        ["marked angles phi_i; verification evaluates at phi_i/d^n and phi_i/d^n + 2pi/d^(n+1)"])


def verify_prop14(cert: IndependenceCertificate) -> Verdict:
    v = Verdict()
    if cert.kind != "prop14":
        v.add("prop14.wellformed", f"kind is {cert.kind!r}")
        return v
    if not cert.family:
        v.add("prop14.wellformed", "empty family")
        return v
    if not _check_pattern(cert.pattern, v, "prop14"):
        return v
    P = cert.pattern
    d = abs(P.winding)
    n = int(cert.params.get("n", -1))
    if d < 2:
        v.add("prop14.winding", f"|winding| = {d} < 2")
        return v
    if n < 0:
        v.add("prop14.wellformed", "parameter n missing or negative")
        return v
    if cert.params.get("d") is not None and int(cert.params["d"]) != d:
        v.add("prop14.wellformed", f"params.d = {cert.params['d']} but pattern winding is {d}")
    fn = f_n_accumulate(P.delta_R, d, n)
    fn1 = f_n_accumulate(P.delta_R, d, n - 1)
    pairs = _check_singletons(cert, v, "prop14")
    _check_distinct(pairs, v, "prop14")
    bound = min(Angle.rational_pi(2, d), Angle.rational_pi(1, 2))
    for i, (phi, _) in enumerate(pairs):
        if not (Angle.rational_pi(0) < phi < bound):
            v.add("prop14.bound", f"member {i}: {_fmt(phi)} not in (0, min(2pi/d, pi/2))")
    for i in range(1, len(pairs)):
        if not pairs[i - 1][0] > pairs[i][0]:
            v.add("prop14.ordering", f"members {i - 1}, {i}: angles not strictly decreasing")
    for i, (phi, _) in enumerate(pairs):
        if phi.is_zero():
            continue
        theta, shifted = _prop14_points(phi, d, n)
        if fn(theta) or fn1(theta):
            v.add("prop14.avoidance", f"member {i}: phi/d^n = {_fmt(theta)} lies in S")
        if fn(shifted) or fn1(shifted):
            v.add("prop14.avoidance_shift", f"member {i}: phi/d^n + 2pi/d^(n+1) = {_fmt(shifted)} lies in S")
    # each member jumps at its own angle and at none of the others, before and after the shift
    for j, (phi_j, _) in enumerate(pairs):
        for i, (_, delta_i) in enumerate(pairs):
            val = delta_i(phi_j)
            if i == j and val == 0:
                v.add("prop14.evaluation", f"delta_J{j}(phi_{j}) = 0")
            if i != j and val != 0:
                v.add("prop14.evaluation", f"delta_J{i}(phi_{j}) = {val} != 0")
        shifted = phi_j.shift(Fraction(2, d))
        for i, (_, delta_i) in enumerate(pairs):
            if delta_i(shifted):
                v.add("prop14.shift_evaluation", f"delta_J{i}(phi_{j} + 2pi/d) = {delta_i(shifted)} != 0")
    return v


# --- prime-separated families ---------------------------------------------

def _evaluation_angles(primes) -> set:
    out = set()
    for p in primes:
        for r in range(1, p):
            out.add(Angle.rational_pi(2 * r, p).fold())
    return out


def _ceil_half_bound(m, n, L) -> Fraction:
    return Fraction(m * n) * Fraction(L) / 2


def gen_lemma43_family(primes, n: int, L, budget=None):
    """Knots J^i (as formal connected sums) and a report per prime."""
    primes = [int(p) for p in primes]
    if not primes:
        raise BadParameter("need at least one prime")
    if len(set(primes)) != len(primes):
        raise BadParameter("primes must be distinct")
    if any(not _is_prime(p) for p in primes):
        raise BadParameter("all entries must be prime")
    if n < 1:
        raise BadParameter("n must be at least 1")
    L = Fraction(L)
    if L <= 0:
        raise BadParameter("L must be positive")
    m = len(primes)
    half = _ceil_half_bound(m, n, L)
    evals = _evaluation_angles(primes)
    knots, report = [], []
    for p in primes:
        alpha = Angle.rational_pi(2, p).fold()
        others = [a for a in evals if a != alpha]
        gap = min([abs(alpha.q - a.q) for a in others] + [alpha.q])
        eps = gap / 2
        lo = Angle.rational_pi(alpha.q - eps)
        K, phi = realize_single_jump(lo, alpha, budget=budget)
        dK = jump_function(K)(phi)
        if alpha.q == 1:
            terms = [(K, 1)]
            level = dK
            phi2, K2 = None, None
        else:
            hi = Angle.rational_pi(alpha.q + eps)
            K2, phi2 = realize_single_jump(alpha, hi, budget=budget)
            dK2 = jump_function(K2)(phi2)
            g = math.gcd(dK, dK2)
            # sigma = dK * dK2 / g on (phi, phi2) and 0 beyond phi2
            terms = [(K, dK2 // g), (K2, -dK // g)]
            level = dK * dK2 // g
        sign = 1 if level > 0 else -1
        level = abs(level)
        N = math.floor(half / level) + 1
        J = KnotSum([(A, sign * c * N) for A, c in terms], f"J0_{p}")
        knots.append(J)
        report.append({
            "prime": p, "phi": phi, "phi_prime": phi2, "block": [(A.name, c * sign) for A, c in terms],
            "block_sigma": level, "copies": N, "sigma_at_omega": sigma_at(J, Angle.rational_pi(2, p)),
            "bound": half,
        })
    verdict = verify_lemma43(knots, primes, n, L)
    if not verdict.accepted:
        raise AssertionError(f"generated family failed verification: {verdict.violations}")
    return knots, report


def verify_lemma43(knots, primes, n: int, L) -> Verdict:
    v = Verdict()
    primes = [int(p) for p in primes]
    if len(knots) != len(primes):
        v.add("lemma43.wellformed", f"{len(knots)} knots for {len(primes)} primes")
        return v
    if len(set(primes)) != len(primes):
        v.add("lemma43.wellformed", "primes are not distinct")
        return v
    m = len(primes)
    L = Fraction(L)
    half = _ceil_half_bound(m, n, L)
    for i, (J, p) in enumerate(zip(knots, primes)):
        s_plus = sigma_at(J, Angle.rational_pi(2, p))
        s_minus = sigma_at(J, Angle.rational_pi(-2, p))
        if s_plus != s_minus:
            v.add("lemma43.bound", f"J^{i}: sigma(omega) = {s_plus} != sigma(omega^-1) = {s_minus}")
        if not s_plus > half:
            v.add("lemma43.bound", f"J^{i}: sigma(omega_{i}) = {s_plus} is not > {half}")
        for r in range(2, p - 1):
            s = sigma_at(J, Angle.rational_pi(2 * r, p))
            if s:
                v.add("lemma43.own_prime", f"J^{i}: sigma(omega_{i}^{r}) = {s}")
        for j, q in enumerate(primes):
            if j == i:
                continue
            for r in range(1, q):
                s = sigma_at(J, Angle.rational_pi(2 * r, q))
                if s:
                    v.add("lemma43.cross_prime", f"J^{i}: sigma(omega_{j}^{r}) = {s} (p = {q})")
    return v


# --- fixed Seifert form families ------------------------------------------

@dataclass
class FixedSeifertFamily:
    pattern: PatternDescriptor
    pairing: object                 # RatFnClass of Bl(eta, eta)
    primes: list
    n: int
    L: Fraction
    companions: list                # KnotSum J_i
    satellites: list                # (name, Seifert matrix) of P(J_i)
    report: list


def gen_fixed_seifert_family(A: SeifertMatrix, m: int, n: int = 1, L=None,
                             crossing: int | None = None, budget=None) -> FixedSeifertFamily:
    if m < 1:
        raise BadParameter("m must be at least 1")
    if A.alexander().is_unit():
        raise UnitAlexander("the Alexander polynomial is a unit")
    eta = witness(A)
    pairing = self_pairing(A, eta)
    assert not pairing.is_zero()
    P = make_pattern(A, 0, axis=eta, name=f"{A.name or 'K'} in S^1 x D^2")
    primes = good_primes(A, eta, m)
    if L is None:
        c = crossing if crossing is not None else (crossing_number(A.name) if A.name else None)
        if not c:
            raise BadParameter("L or a crossing number is required")
        L = cheeger_gromov_bound(c)
    L = Fraction(L)
    companions, report = gen_lemma43_family(primes, n, L, budget=budget)
    # winding number zero: P(J) has the Seifert form of P(U) = A
    satellites = [(f"P({J.name})", P.pattern_knot) for J in companions]
    return FixedSeifertFamily(P, pairing, primes, n, L, companions, satellites, report)


def verify_fixed_seifert(fam: FixedSeifertFamily) -> Verdict:
    v = Verdict()
    P = fam.pattern
    A = P.pattern_knot
    if P.winding != 0:
        v.add("a4.winding", f"winding number {P.winding} != 0")
    if A is None or A.alexander().is_unit():
        v.add("a4.alexander", "pattern knot missing or with unit Alexander polynomial")
        return v
    if P.axis is None or self_pairing(A, P.axis).is_zero():
        v.add("a4.pairing", "axis self-pairing is zero")
        return v
    if self_pairing(A, P.axis) != fam.pairing:
        v.add("a4.pairing", "recorded pairing does not match the recomputed one")
    expected = good_primes(A, P.axis, len(fam.primes))
    if list(fam.primes) != expected:
        v.add("a4.primes", f"primes {list(fam.primes)} differ from the good primes {expected}")
    for name, S in fam.satellites:
        if S != A:
            v.add("a4.seifert_form", f"{name} does not carry the pattern's Seifert form")
    if len(fam.satellites) != len(fam.companions):
        v.add("a4.wellformed", "one satellite per companion expected")
    v.violations.extend(verify_lemma43(fam.companions, fam.primes, fam.n, fam.L).violations)
    return v


def verify(cert) -> Verdict:
    """Dispatch on the certificate type."""
    if isinstance(cert, FixedSeifertFamily):
        return verify_fixed_seifert(cert)
    if cert.kind == "prop13":
        return verify_prop13(cert)
    if cert.kind == "prop14":
        return verify_prop14(cert)
    if cert.kind == "lemma43":
        p = cert.params
        return verify_lemma43([m.knot for m in cert.family], p["primes"], p["n"], p["L"])
    v = Verdict()
    v.add("wellformed", f"unknown certificate kind {cert.kind!r}")
    return v


def lemma43_certificate(knots, primes, n, L, report=()) -> IndependenceCertificate:
    notes = [f"p={r['prime']}: {r['copies']} copies of a block with sigma {r['block_sigma']} "
             f"on its interval; bound {r['bound']}" for r in report]
    return IndependenceCertificate(
        "lemma43", None, {"primes": list(primes), "n": n, "L": Fraction(L)},
        [FamilyMember(knot=J) for J in knots], notes)
