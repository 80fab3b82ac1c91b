import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from concordia import io
from concordia.blanchfield import basis_vector, double_cover_linking, self_pairing
from concordia.errors import ParseError, SchemaError
from concordia.exactnum import Angle
from concordia.independence import verify
from concordia.satellite import make_pattern
from concordia.seifert import KnotSum, catalog_get
from concordia.signature import jump_function, rho_z

FIXTURES = Path(__file__).parent / "fixtures"
T = catalog_get("trefoil")


def round_trip(value, kind=None):
    text = io.dumps(value)
    back = io.decode(io.loads_json(text), kind)
    assert io.dumps(back) == text
    return back


def test_rationals():
    assert io.rat_str(Fraction(-8, 5)) == "-8/5"
    assert io.rat_str(3) == "3"
    assert io.parse_rat("-8/5") == Fraction(-8, 5)
    assert io.parse_rat(" 4 ") == 4
    assert io.parse_rat(7) == 7
    with pytest.raises(ParseError):
        io.parse_rat("1/0")
    with pytest.raises(ParseError):
        io.parse_rat("0.5")
    with pytest.raises(SchemaError):
        io.parse_rat(0.5)


def test_knot_round_trip_is_byte_identical():
    text = io.dumps(T)
    assert json.loads(text) == {"name": "trefoil", "seifert": [[-1, 1], [0, -1]]}
    assert round_trip(T) == T
    s = KnotSum([(T, 3), (catalog_get("5_2"), -1)], "mix")
    assert round_trip(s) == s


def test_knot_by_name():
    assert io.knot_from_json({"name": "figure_eight"}) == catalog_get("figure_eight")


@pytest.mark.parametrize("angle", [
    Angle.rational_pi(1, 3), Angle.rational_pi(5, 3), Angle.arccos(Fraction(3, 4)),
    Angle.arccos(Fraction(3, 4)).divide(3), Angle.arccos(Fraction(-2, 7), -1),
])
def test_angle_round_trip(angle):
    assert round_trip(angle, "angle") == angle


def test_angle_interval_is_canonical():
    a = Angle.arccos(Fraction(3, 4)).divide(3)
    before = io.dumps(a)
    a.cos.refine_to(Fraction(1, 2 ** 200))
    assert io.dumps(a) == before


def test_scaled_and_shifted_input():
    base = {"kind": "arccos", "minpoly": [-3, 4], "interval": ["3/4", "3/4"], "sin_sign": 1}
    assert io.angle_from_json({"kind": "scaled", "angle": base, "factor": 2}) == Angle.arccos(Fraction(1, 8))
    sh = io.angle_from_json({"kind": "shifted", "angle": {"kind": "rational_pi", "num": 1, "den": 6},
                             "offset": "1/2"})
    assert sh == Angle.rational_pi(2, 3)


def test_angle_schema_errors():
    with pytest.raises(SchemaError) as exc:
        io.angle_from_json({"kind": "rational_pi", "num": 1})
    assert exc.value.field == "angle.den"
    with pytest.raises(SchemaError):
        io.angle_from_json({"kind": "degrees", "value": 3})


def test_jumps_pattern_rho_linking():
    round_trip(jump_function(catalog_get("T2_5")), "jumps")
    P = make_pattern(T, 0, axis=basis_vector(2, 0))
    back = round_trip(P, "pattern")
    assert back.axis == P.axis and back.delta_R == P.delta_R
    rec = io.to_record(rho_z(T))
    assert Fraction(rec["interval"][0]) <= Fraction(-4, 3) <= Fraction(rec["interval"][1])
    assert rec["width"] == "1/1000000000"
    assert io.to_record(double_cover_linking(T)) == {"factors": [3], "generators": [[0, -1]],
                                                     "form": [["1/3"]]}
    b = self_pairing(T, basis_vector(2, 0))
    assert round_trip(b, "pairing") == b


def test_no_floats_in_exact_records():
    def walk(x):
        if isinstance(x, float):
            raise AssertionError("float in an exact record")
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)
    for value in (T, jump_function(catalog_get("5_2")), make_pattern(T, 2), rho_z(T)):
        walk(io.to_record(value))


def test_parse_error_location(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{\n  "name": "x",\n  "seifert": [[1, 2]\n}')
    with pytest.raises(ParseError) as exc:
        io.io_load(p)
    assert exc.value.line == 4


def test_store_load(tmp_path):
    p = tmp_path / "k.json"
    io.io_store(p, T)
    assert io.io_load(p) == T
    assert p.read_text() == io.dumps(T)


@pytest.mark.parametrize("name, accepted", [("prop14_good.json", True), ("prop13_good.json", True),
                                            ("bad.json", False)])
def test_certificate_fixtures(name, accepted):
    cert = io.io_load(FIXTURES / name)
    assert verify(cert).accepted is accepted
    assert io.dumps(cert) == (FIXTURES / name).read_text()


@settings(max_examples=40, deadline=None)
@given(st.fractions(-1, 1, max_denominator=50), st.sampled_from([1, -1]), st.integers(1, 3))
def test_angle_round_trip_property(c, s, d):
    a = Angle.arccos(c, s).scale(d)
    assert io.angle_from_json(json.loads(json.dumps(io.angle_to_json(a)))) == a
