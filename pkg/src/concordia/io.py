"""JSON encodings of every library value, plus canonical load/store.

Exact quantities never pass through floats: rationals are strings "p/q"
(or "n" for integers), polynomials are exponent -> coefficient maps, and
angles carry either q in theta = q pi or a minimal polynomial with an
isolating interval.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import ParseError, SchemaError
from .exactnum.angle import Angle
from .exactnum.laurent import LaurentPoly, RatFnClass
from .exactnum.realalg import RealAlg
from .blanchfield import LinkingForm
from .independence import (FamilyMember, FixedSeifertFamily, IndependenceCertificate,
                           Verdict)
from .satellite import PatternDescriptor, make_pattern
from .seifert import KnotSum, SeifertMatrix, catalog_get
from .signature import JumpFunction, RhoValue

_RAT = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


# --- scalars ----------------------------------------------------------------

def rat_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rat(v, field: str = "value") -> Fraction:
    if isinstance(v, bool):
        raise SchemaError(field, "expected a rational, got a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if not isinstance(v, str):
        raise SchemaError(field, f"expected a rational string, got {type(v).__name__}")
    m = _RAT.match(v)
    if not m:
        raise ParseError(f"{field}: malformed rational {v!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"{field}: zero denominator in {v!r}")
    return Fraction(num, den)


def _int(v, field: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(field, f"expected an integer, got {v!r}")
    return v


def _get(obj, key: str, field: str):
    if not isinstance(obj, dict):
        raise SchemaError(field, "expected an object")
    if key not in obj:
        raise SchemaError(f"{field}.{key}", "missing")
    return obj[key]


def _decimal(q: Fraction, digits: int, up: bool) -> str:
    """q rounded outward to ``digits`` decimal places."""
    scale = 10 ** digits
    n = q * scale
    k = -((-n.numerator) // n.denominator) if up else n.numerator // n.denominator
    sign = "-" if k < 0 else ""
    k = abs(k)
    return f"{sign}{k // scale}.{k % scale:0{digits}d}"


# --- angles -----------------------------------------------------------------

def _canonical_interval(c: RealAlg) -> tuple[Fraction, Fraction]:
    # the default isolating interval depends only on the polynomial
    if len(c.poly) == 2:
        return c._lo, c._hi
    for r in RealAlg.roots_of_irreducible(c.poly, -1, 1):
        if r == c:
            return r._lo, r._hi
    raise AssertionError("cosine not found among its conjugates")


def angle_to_json(a: Angle) -> dict:
    if a.is_rational_pi:
        return {"kind": "rational_pi", "num": a.q.numerator, "den": a.q.denominator}
    lo, hi = _canonical_interval(a.cos)
    return {"kind": "arccos", "minpoly": list(a.cos.poly),
            "interval": [rat_str(lo), rat_str(hi)], "sin_sign": a.sin_sign}


def angle_from_json(obj, field: str = "angle") -> Angle:
    kind = _get(obj, "kind", field)
    if kind == "rational_pi":
        num = _int(_get(obj, "num", field), f"{field}.num")
        den = _int(_get(obj, "den", field), f"{field}.den")
        if den == 0:
            raise SchemaError(f"{field}.den", "zero denominator")
        return Angle.rational_pi(num, den)
    if kind == "arccos":
        poly = _get(obj, "minpoly", field)
        if not isinstance(poly, list) or len(poly) < 2:
            raise SchemaError(f"{field}.minpoly", "expected at least two integer coefficients")
        poly = [_int(c, f"{field}.minpoly") for c in poly]
        iv = _get(obj, "interval", field)
        if not isinstance(iv, list) or len(iv) != 2:
            raise SchemaError(f"{field}.interval", "expected [lo, hi]")
        lo, hi = (parse_rat(x, f"{field}.interval") for x in iv)
        s = _int(obj.get("sin_sign", 1), f"{field}.sin_sign")
        return Angle.from_minpoly(poly, lo, hi, s)
    if kind == "scaled":
        base = angle_from_json(_get(obj, "angle", field), f"{field}.angle")
        return base.scale(_int(_get(obj, "factor", field), f"{field}.factor"))
    if kind == "shifted":
        base = angle_from_json(_get(obj, "angle", field), f"{field}.angle")
        return base.shift(parse_rat(_get(obj, "offset", field), f"{field}.offset"))
    raise SchemaError(f"{field}.kind", f"unknown angle kind {kind!r}")


# --- polynomials ------------------------------------------------------------

def laurent_from_json(obj, field: str = "poly", modulus=None) -> LaurentPoly:
    if not isinstance(obj, dict):
        raise SchemaError(field, "expected an exponent -> coefficient object")
    coeffs = {}
    for e, c in obj.items():
        try:
            exp = int(e)
        except ValueError:
            raise SchemaError(field, f"exponent {e!r} is not an integer") from None
        coeffs[exp] = parse_rat(c, f"{field}[{e}]")
    return LaurentPoly(coeffs, modulus)


def ratfn_from_json(obj, field: str = "pairing") -> RatFnClass:
    p = obj.get("modulus") if isinstance(obj, dict) else None
    num = laurent_from_json(_get(obj, "num", field), f"{field}.num", p)
    den = laurent_from_json(_get(obj, "den", field), f"{field}.den", p)
    poly = laurent_from_json(obj.get("poly", {}), f"{field}.poly", p)
    if den.is_zero():
        raise SchemaError(f"{field}.den", "zero denominator")
    return RatFnClass.of(num + poly * den, den)


def axis_to_json(axis):
    return None if axis is None else [c.to_json() for c in axis]


def axis_from_json(obj, field: str = "axis"):
    if obj is None:
        return None
    if not isinstance(obj, list):
        raise SchemaError(field, "expected a list of Laurent polynomials")
    return tuple(laurent_from_json(c, f"{field}[{i}]") for i, c in enumerate(obj))


# --- knots --------------------------------------------------------------------

def knot_to_json(K) -> dict:
    return K.to_json()


def knot_from_json(obj, field: str = "knot"):
    """SeifertMatrix from {"name", "seifert"}, a KnotSum from {"summands"},
    or a catalog lookup from {"name"} alone."""
    if isinstance(obj, str):
        return catalog_get(obj)
    if not isinstance(obj, dict):
        raise SchemaError(field, "expected a knot record")
    if "summands" in obj:
        terms = []
        for i, s in enumerate(obj["summands"]):
            K = knot_from_json(_get(s, "knot", f"{field}.summands[{i}]"), f"{field}.summands[{i}].knot")
            terms.append((K, _int(_get(s, "multiplicity", f"{field}.summands[{i}]"),
                                  f"{field}.summands[{i}].multiplicity")))
        return KnotSum(terms, obj.get("name"))
    if "seifert" not in obj:
        if "name" in obj:
            return catalog_get(obj["name"])
        raise SchemaError(f"{field}.seifert", "missing")
    rows = obj["seifert"]
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise SchemaError(f"{field}.seifert", "expected a list of integer rows")
    return SeifertMatrix([[_int(x, f"{field}.seifert") for x in r] for r in rows], obj.get("name"))


# --- jump functions, rho, linking forms -------------------------------------

def jumps_to_json(f: JumpFunction) -> list:
    return [{"angle": angle_to_json(a), "jump": v} for a, v in f.items]


def jumps_from_json(obj, field: str = "jumps") -> JumpFunction:
    if not isinstance(obj, list):
        raise SchemaError(field, "expected a list of {angle, jump} records")
    return JumpFunction(
        (angle_from_json(_get(r, "angle", f"{field}[{i}]"), f"{field}[{i}].angle"),
         _int(_get(r, "jump", f"{field}[{i}]"), f"{field}[{i}].jump"))
        for i, r in enumerate(obj))


def rho_to_json(r: RhoValue) -> dict:
    if r.exact is not None:
        return {"exact": rat_str(r.exact)}
    digits = max(12, len(str(r.width.denominator)) + 3)
    return {
        "interval": [_decimal(r.lo, digits, False), _decimal(r.hi, digits, True)],
        "width": rat_str(r.width),
        "terms": [{"sigma": s, "from": angle_to_json(a), "to": angle_to_json(b), "multiplicity": 2}
                  for s, a, b in r.terms],
    }


def rho_from_json(obj, field: str = "rho") -> RhoValue:
    if "exact" in obj:
        return RhoValue(exact=parse_rat(obj["exact"], f"{field}.exact"))
    lo, hi = obj["interval"]
    terms = [(t["sigma"], angle_from_json(t["from"]), angle_from_json(t["to"])) for t in obj.get("terms", [])]
    return RhoValue(lo=Fraction(lo), hi=Fraction(hi), width=parse_rat(obj.get("width", "0")), terms=terms)


def linking_to_json(lf: LinkingForm) -> dict:
    return {"factors": list(lf.factors),
            "generators": [list(g) for g in lf.generators],
            "form": [[rat_str(x) for x in row] for row in lf.form]}


# --- patterns -------------------------------------------------------------------

def pattern_to_json(P: PatternDescriptor) -> dict:
    out = {
        "name": P.name,
        "winding": P.winding,
        "pattern_knot": None if P.pattern_knot is None else P.pattern_knot.to_json(),
        "delta_R": jumps_to_json(P.delta_R),
        "axis": axis_to_json(P.axis),
    }
    if not P.axis_authoritative:
        out["axis_authoritative"] = False
    return out


def pattern_from_json(obj, field: str = "pattern") -> PatternDescriptor:
    if isinstance(obj, str):
        raise SchemaError(field, "expected a pattern record")
    winding = _int(_get(obj, "winding", field), f"{field}.winding")
    pk = obj.get("pattern_knot")
    knot = None if pk is None else knot_from_json(pk, f"{field}.pattern_knot")
    delta = obj.get("delta_R")
    delta = None if delta is None else jumps_from_json(delta, f"{field}.delta_R")
    axis = axis_from_json(obj.get("axis"), f"{field}.axis")
    P = make_pattern(knot, winding, axis=axis, name=obj.get("name"), delta_R=delta)
    if obj.get("axis_authoritative") is False:
        from dataclasses import replace
        P = replace(P, axis_authoritative=False)
    return P


# --- certificates and verdicts ----------------------------------------------

def certificate_to_json(cert) -> dict:
    if isinstance(cert, FixedSeifertFamily):
        return {
            "kind": "fixed_seifert",
            "pattern": pattern_to_json(cert.pattern),
            "pairing": cert.pairing.to_json(),
            "primes": list(cert.primes),
            "n": cert.n,
            "L": rat_str(cert.L),
            "companions": [J.to_json() for J in cert.companions],
            "satellites": [{"name": n, "seifert": [list(r) for r in S.entries]} for n, S in cert.satellites],
        }
    params = {k: (rat_str(v) if isinstance(v, Fraction) else v) for k, v in cert.params.items()}
    members = []
    for m in cert.family:
        rec = {"knot": None if m.knot is None else m.knot.to_json(),
               "marked_angle": None if m.marked_angle is None else angle_to_json(m.marked_angle)}
        if m.knot is None and m.jumps is not None:
            rec["jumps"] = jumps_to_json(m.jumps)
        members.append(rec)
    return {
        "kind": cert.kind,
        "pattern": None if cert.pattern is None else pattern_to_json(cert.pattern),
        "params": params,
        "family": members,
        "notes": list(cert.notes),
    }


def certificate_from_json(obj, field: str = "certificate"):
    kind = _get(obj, "kind", field)
    if kind == "fixed_seifert":
        P = pattern_from_json(_get(obj, "pattern", field), f"{field}.pattern")
        return FixedSeifertFamily(
            pattern=P,
            pairing=ratfn_from_json(_get(obj, "pairing", field), f"{field}.pairing"),
            primes=[_int(p, f"{field}.primes") for p in _get(obj, "primes", field)],
            n=_int(_get(obj, "n", field), f"{field}.n"),
            L=parse_rat(_get(obj, "L", field), f"{field}.L"),
            companions=[knot_from_json(J, f"{field}.companions[{i}]")
                        for i, J in enumerate(_get(obj, "companions", field))],
            satellites=[(s.get("name"), knot_from_json(s, f"{field}.satellites[{i}]"))
                        for i, s in enumerate(_get(obj, "satellites", field))],
            report=[],
        )
    if kind not in ("prop13", "prop14", "lemma43"):
        raise SchemaError(f"{field}.kind", f"unknown certificate kind {kind!r}")
    pat = obj.get("pattern")
    P = None if pat is None else pattern_from_json(pat, f"{field}.pattern")
    params = dict(obj.get("params", {}))
    if kind == "lemma43":
        params["primes"] = [_int(p, f"{field}.params.primes") for p in _get(params, "primes", f"{field}.params")]
        params["n"] = _int(_get(params, "n", f"{field}.params"), f"{field}.params.n")
        params["L"] = parse_rat(_get(params, "L", f"{field}.params"), f"{field}.params.L")
    else:
        for k in ("d", "n", "m"):
            if k in params:
                params[k] = _int(params[k], f"{field}.params.{k}")
    family = []
    for i, rec in enumerate(_get(obj, "family", field)):
        where = f"{field}.family[{i}]"
        if not isinstance(rec, dict):
            raise SchemaError(where, "expected a family member record")
        knot = rec.get("knot")
        knot = None if knot is None else knot_from_json(knot, f"{where}.knot")
        jumps = rec.get("jumps")
        jumps = None if jumps is None else jumps_from_json(jumps, f"{where}.jumps")
        ma = rec.get("marked_angle")
        ma = None if ma is None else angle_from_json(ma, f"{where}.marked_angle")
        family.append(FamilyMember(knot=knot, jumps=jumps, marked_angle=ma))
    return IndependenceCertificate(kind, P, params, family, list(obj.get("notes", [])))


def verdict_to_json(v: Verdict) -> dict:
    return {"accepted": v.accepted,
            "violations": [{"condition": c, "detail": d} for c, d in v.violations]}


# --- files --------------------------------------------------------------------

_ENCODERS = (
    (SeifertMatrix, knot_to_json),
    (KnotSum, knot_to_json),
    (Angle, angle_to_json),
    (JumpFunction, jumps_to_json),
    (RhoValue, rho_to_json),
    (LinkingForm, linking_to_json),
    (PatternDescriptor, pattern_to_json),
    (IndependenceCertificate, certificate_to_json),
    (FixedSeifertFamily, certificate_to_json),
    (Verdict, verdict_to_json),
    (LaurentPoly, LaurentPoly.to_json),
    (RatFnClass, RatFnClass.to_json),
    (Fraction, rat_str),
)


def to_record(value):
    """JSON-ready form of any library value (plain data passes through)."""
    for cls, enc in _ENCODERS:
        if isinstance(value, cls):
            return enc(value)
    if isinstance(value, (list, tuple)):
        return [to_record(x) for x in value]
    if isinstance(value, dict):
        return {str(k): to_record(x) for k, x in value.items()}
    return value


def dumps(value) -> str:
    return json.dumps(to_record(value), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


_DECODERS = {
    "knot": knot_from_json,
    "angle": angle_from_json,
    "jumps": jumps_from_json,
    "pattern": pattern_from_json,
    "certificate": certificate_from_json,
    "rho": rho_from_json,
    "pairing": ratfn_from_json,
}


def decode(obj, kind: str | None = None):
    """Decode a parsed JSON value, guessing its kind from its shape."""
    if kind is None:
        if isinstance(obj, list):
            kind = "jumps"
        elif isinstance(obj, dict) and obj.get("kind") in ("prop13", "prop14", "lemma43", "fixed_seifert"):
            kind = "certificate"
        elif isinstance(obj, dict) and "kind" in obj:
            kind = "angle"
        elif isinstance(obj, dict) and "winding" in obj:
            kind = "pattern"
        elif isinstance(obj, dict) and ("seifert" in obj or "summands" in obj):
            kind = "knot"
        elif isinstance(obj, dict) and ("exact" in obj or "interval" in obj):
            kind = "rho"
        elif isinstance(obj, dict) and "den" in obj:
            kind = "pairing"
        else:
            raise SchemaError("record", "cannot tell what kind of record this is")
    if kind not in _DECODERS:
        raise SchemaError("record", f"unknown record kind {kind!r}")
    return _DECODERS[kind](obj)


def io_load(path, kind: str | None = None):
    with open(path) as fh:
        return decode(loads_json(fh.read()), kind)


def io_store(path, record) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(record))
