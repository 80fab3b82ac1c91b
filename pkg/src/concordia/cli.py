"""Command-line interface.

    concordia knot show|alex|sig|jumps
    concordia rho --group z|zp
    concordia blanchfield self|primes|witness|linking
    concordia satellite apply|compose|iterate
    concordia cert gen-prop13|gen-prop14|gen-l43|gen-seifert-family|verify

Exit status: 0 on success, 1 on a domain error (or a rejected certificate),
2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import blanchfield as bl
from . import config, independence as ind, io
from .errors import ConcordiaError, SchemaError
from .exactnum.angle import Angle
from .satellite import make_pattern, pattern_compose, pattern_iterate, satellite_jump
from .seifert import catalog_get
from .signature import RhoValue, jump_function, rho_z, rho_zp, sigma_at


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- text formatting ---------------------------------------------------------

def angle_text(a: Angle) -> str:
    return str(a)


_PI_FORM = re.compile(r"^\s*([+-]?\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$")
_ARCCOS = re.compile(r"^\s*arccos\(\s*([^)]+)\)\s*$")


def parse_angle(text: str) -> Angle:
    """'pi', '2*pi/5', 'pi/3', 'arccos(3/4)', a bare rational q (meaning q*pi)
    or an angle JSON object."""
    text = text.strip()
    if text.startswith("{"):
        return io.angle_from_json(io.loads_json(text))
    m = _PI_FORM.match(text)
    if m:
        num = int(m.group(1) or 1)
        den = int(m.group(2) or 1)
        if den == 0:
            raise UsageError(f"bad angle {text!r}")
        return Angle.rational_pi(num, den)
    m = _ARCCOS.match(text)
    if m:
        return Angle.arccos(io.parse_rat(m.group(1), "angle"))
    try:
        return Angle.rational_pi(io.parse_rat(text, "angle"))
    except ConcordiaError:
        raise UsageError(f"bad angle {text!r}") from None


def laurent_text(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


# --- argument helpers -------------------------------------------------------

def _load_knot(args):
    if getattr(args, "file", None):
        return io.io_load(args.file, "knot")
    if getattr(args, "seifert", None):
        return io.knot_from_json({"name": None, "seifert": io.loads_json(args.seifert)})
    if getattr(args, "knot", None):
        return catalog_get(args.knot)
    raise UsageError("one of --knot, --file or --seifert is required")


def _load_pattern(text: str):
    """A pattern JSON file, or NAME:d for a catalog pattern knot with winding d."""
    if os.path.exists(text):
        return io.io_load(text, "pattern")
    if ":" in text:
        name, d = text.rsplit(":", 1)
        try:
            d = int(d)
        except ValueError:
            raise UsageError(f"bad pattern {text!r}") from None
        return make_pattern(catalog_get(name), d)
    raise UsageError(f"pattern {text!r} is neither a file nor NAME:winding")


def _axis(args, A):
    if args.axis is None:
        return bl.basis_vector(A.size, 0)
    raw = io.loads_json(args.axis)
    if not isinstance(raw, list):
        raise SchemaError("axis", "expected a list")
    return tuple(io.laurent_from_json(c, f"axis[{i}]") if isinstance(c, dict)
                 else io.laurent_from_json({"0": c}, f"axis[{i}]") for i, c in enumerate(raw))


def _out(args, text_value, json_value):
    if args.format == "json":
        text = io.dumps(json_value)
    else:
        text = text_value if text_value.endswith("\n") else text_value + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(io.dumps(json_value))
    sys.stdout.write(text)


def _jumps_text(f) -> str:
    if not f:
        return "(no jumps)"
    return "\n".join(f"{angle_text(a)}\t{v:+d}" for a, v in f.items)


# --- subcommand handlers ------------------------------------------------------

def cmd_knot(args) -> int:
    K = _load_knot(args)
    if args.action == "show":
        lines = [f"name: {K.name}"] + [" ".join(f"{x:3d}" for x in r) for r in getattr(K, "entries", ())]
        _out(args, "\n".join(lines), K)
    elif args.action == "alex":
        f = K.alexander()
        _out(args, str(f), {"alexander": f.to_json()})
    elif args.action == "sig":
        theta = parse_angle(args.angle)
        s = sigma_at(K, theta)
        _out(args, str(s), {"angle": io.angle_to_json(theta), "sigma": s})
    else:
        f = jump_function(K)
        _out(args, _jumps_text(f), f)
    return 0


def cmd_rho(args) -> int:
    K = _load_knot(args)
    if args.group == "zp":
        if args.p is None:
            raise UsageError("--p is required for --group zp")
        r = RhoValue(exact=rho_zp(K, args.p))
        _out(args, io.rat_str(r.exact), r)
    else:
        r = rho_z(K, io.parse_rat(args.width, "width"))
        rec = io.rho_to_json(r)
        _out(args, f"[{rec['interval'][0]}, {rec['interval'][1]}]  (width {rec['width']})", r)
    return 0


def cmd_blanchfield(args) -> int:
    K = _load_knot(args)
    if args.action == "witness":
        v = bl.witness(K)
        if v is None:
            _out(args, "none", {"witness": None})
        else:
            _out(args, "(" + ", ".join(str(c) or "0" for c in v) + ")", {"witness": io.axis_to_json(v)})
    elif args.action == "self":
        b = bl.self_pairing(K, _axis(args, K))
        _out(args, str(b), b)
    elif args.action == "primes":
        ps = bl.good_primes(K, _axis(args, K), args.count)
        _out(args, " ".join(map(str, ps)), {"primes": ps})
    else:
        lf = bl.double_cover_linking(K)
        text = f"H_1 = {' + '.join(f'Z/{d}' for d in lf.factors) or '0'}"
        if lf.form:
            text += "\nform: " + "; ".join(" ".join(io.rat_str(x) for x in row) for row in lf.form)
        _out(args, text, lf)
    return 0


def cmd_satellite(args) -> int:
    if args.action == "apply":
        if len(args.pattern) != 1:
            raise UsageError("apply takes exactly one --pattern")
        P = _load_pattern(args.pattern[0])
        K = _load_knot(args)
        f = satellite_jump(P, jump_function(K))
        _out(args, _jumps_text(f), f)
        return 0
    if args.action == "compose":
        if len(args.pattern) < 2:
            raise UsageError("compose needs two --pattern arguments")
        P = _load_pattern(args.pattern[0])
        for text in args.pattern[1:]:
            P = pattern_compose(P, _load_pattern(text))
    else:
        P = pattern_iterate(_load_pattern(args.pattern[0]), args.n)
    text = f"name: {P.name}\nwinding: {P.winding}\ndelta_R:\n{_jumps_text(P.delta_R)}"
    _out(args, text, P)
    return 0


def _cert_text(cert) -> str:
    if isinstance(cert, ind.FixedSeifertFamily):
        lines = [f"pattern: {cert.pattern.name} (winding 0)",
                 f"axis: {laurent_text(cert.pattern.axis)}",
                 f"Bl(axis, axis) = {cert.pairing}",
                 f"primes: {cert.primes}  n = {cert.n}  L = {cert.L}"]
        for J, (name, _) in zip(cert.companions, cert.satellites):
            lines.append(f"{name}: companion {J!r}")
        return "\n".join(lines)
    lines = [f"kind: {cert.kind}"]
    for k, v in cert.params.items():
        lines.append(f"{k}: {v}")
    for i, m in enumerate(cert.family):
        name = getattr(m.knot, "name", None) or repr(m.knot)
        angle = "" if m.marked_angle is None else f" at {angle_text(m.marked_angle)}"
        lines.append(f"  [{i}] {name}{angle}")
    return "\n".join(lines)


def _verdict_text(v) -> str:
    if v.accepted:
        return "accepted"
    return "rejected\n" + "\n".join(f"  {c}: {d}" for c, d in v.violations)


def cmd_cert(args) -> int:
    a = args.action
    if a == "verify":
        cert = io.io_load(args.path, "certificate")
        v = ind.verify(cert)
        _out(args, _verdict_text(v), v)
        return 0 if v.accepted else 1
    if a == "gen-prop13":
        cert = ind.gen_prop13_family(_load_pattern(args.pattern), args.m)
    elif a == "gen-prop14":
        cert = ind.gen_prop14_family(_load_pattern(args.pattern), args.n, args.m)
    elif a == "gen-l43":
        primes = [int(p) for p in args.primes.split(",") if p.strip()]
        L = io.parse_rat(args.L, "L")
        knots, report = ind.gen_lemma43_family(primes, args.n, L)
        cert = ind.lemma43_certificate(knots, primes, args.n, L, report)
    else:
        K = _load_knot(args)
        L = None if args.L is None else io.parse_rat(args.L, "L")
        cert = ind.gen_fixed_seifert_family(K, args.m, n=args.n, L=L)
    _out(args, _cert_text(cert), cert)
    return 0


# --- parser -----------------------------------------------------------------------

def _knot_args(p):
    g = p.add_argument_group("knot input")
    g.add_argument("--knot", help="catalog knot name")
    g.add_argument("--file", help="knot JSON file")
    g.add_argument("--seifert", help="Seifert matrix as a JSON array of rows")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--precision", default=argparse.SUPPRESS,
                        help="interval precision ladder in bits, e.g. 64,128,256")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="realization search budget")

    root = _Parser(prog="concordia", description="Signature, Blanchfield and satellite calculus for knots.",
                   parents=[common])
    sub = root.add_subparsers(dest="command", required=True, parser_class=_Parser)

    knot = sub.add_parser("knot", parents=[common], help="knot invariants")
    knot.add_argument("action", choices=("show", "alex", "sig", "jumps"))
    _knot_args(knot)
    knot.add_argument("--angle", default="pi", help="angle for 'sig' (default pi)")
    knot.set_defaults(func=cmd_knot)

    rho = sub.add_parser("rho", parents=[common], help="abelian rho-invariants")
    rho.add_argument("--group", choices=("z", "zp"), required=True)
    rho.add_argument("--p", type=int)
    rho.add_argument("--width", default="1/1000000000")
    _knot_args(rho)
    rho.set_defaults(func=cmd_rho)

    b = sub.add_parser("blanchfield", parents=[common], help="Blanchfield pairing and linking forms")
    b.add_argument("action", choices=("self", "primes", "witness", "linking"))
    _knot_args(b)
    b.add_argument("--axis", help="vector as a JSON list of integers or exponent maps (default e1)")
    b.add_argument("--count", type=int, default=3)
    b.set_defaults(func=cmd_blanchfield)

    s = sub.add_parser("satellite", parents=[common], help="satellite calculus on jump data")
    s.add_argument("action", choices=("apply", "compose", "iterate"))
    s.add_argument("--pattern", action="append", required=True,
                   help="pattern JSON file or NAME:winding (repeat for compose)")
    _knot_args(s)
    s.add_argument("--n", type=int, default=1)
    s.set_defaults(func=cmd_satellite)

    c = sub.add_parser("cert", parents=[common], help="independence certificates")
    c.add_argument("action", choices=("gen-prop13", "gen-prop14", "gen-l43", "gen-seifert-family", "verify"))
    c.add_argument("path", nargs="?", help="certificate file for 'verify'")
    c.add_argument("--pattern")
    _knot_args(c)
    c.add_argument("--m", type=int, default=3)
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--primes", default="5,7")
    c.add_argument("--L")
    c.add_argument("-o", "--output", help="also write the JSON record here")
    c.set_defaults(func=cmd_cert)
    return root


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.format = getattr(args, "format", "text")
        if args.command == "cert":
            if args.action == "verify" and not args.path:
                raise UsageError("cert verify needs a certificate path")
            if args.action in ("gen-prop13", "gen-prop14") and not args.pattern:
                raise UsageError(f"cert {args.action} needs --pattern")
            if args.action == "gen-l43" and args.L is None:
                raise UsageError("cert gen-l43 needs --L")
        changes = {}
        if getattr(args, "precision", None):
            changes["ladder"] = args.precision
        if getattr(args, "budget", None):
            changes["budget"] = args.budget
        if changes:
            try:
                config.configure(**changes)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except SystemExit as exc:        # --help
        return int(exc.code or 0)
    except ConcordiaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
