import json

import pytest

from concordia.errors import BadParameter, NotFound, NotSeifert, SchemaError
from concordia.exactnum import LaurentPoly
from concordia.seifert import (KnotSum, SeifertMatrix, alexander_poly, block_sum, catalog_get,
                               catalog_records, concordance_inverse, crossing_number, mirror,
                               reverse, torus_knot_2q, unknot)


def poly(*c):
    return LaurentPoly.from_list(c)


def test_validation():
    with pytest.raises(NotSeifert):
        SeifertMatrix([[1, 2], [3]])
    with pytest.raises(NotSeifert):
        SeifertMatrix([[1]])
    with pytest.raises(NotSeifert):
        SeifertMatrix([[1, 2], [0, 1]])          # det(A - A^T) = 4
    assert SeifertMatrix([[-1, 1], [0, -1]]).genus == 1


@pytest.mark.parametrize("name, want", [
    ("trefoil", poly(1, -1, 1)),
    ("figure_eight", poly(1, -3, 1)),
    ("T2_5", poly(1, -1, 1, -1, 1)),
    ("5_2", poly(2, -3, 2)),
    ("6_1", poly(2, -5, 2)),
    ("unknot", poly(1)),
])
def test_catalog_alexander(name, want):
    assert alexander_poly(catalog_get(name)) == want


def test_torus_knot_band_matrix():
    assert torus_knot_2q(5) == catalog_get("T2_5")
    assert alexander_poly(torus_knot_2q(7)) == poly(1, -1, 1, -1, 1, -1, 1)
    with pytest.raises(BadParameter):
        torus_knot_2q(4)


def test_block_sum_multiplies_alexander():
    T, E = catalog_get("trefoil"), catalog_get("figure_eight")
    S = block_sum(T, E)
    assert S.size == 4
    assert alexander_poly(S) == alexander_poly(T) * alexander_poly(E)
    assert len(S.blocks) == 2


def test_mirror_reverse_inverse():
    T = catalog_get("trefoil")
    assert mirror(T).entries == ((1, 0), (-1, 1))
    assert reverse(T).entries == ((-1, 0), (1, -1))
    assert concordance_inverse(T) == mirror(reverse(T))
    assert alexander_poly(mirror(T)) == alexander_poly(T)


def test_knot_sum_merges_and_materializes():
    T = catalog_get("trefoil")
    s = KnotSum([(T, 2), (T, -1), (unknot(), 5)])
    assert s.terms == ((T, 1),)
    assert s.materialize() == T
    assert KnotSum([(T, 3)]).materialize().size == 6
    with pytest.raises(BadParameter):
        KnotSum([(T, 10 ** 6)]).materialize()


def test_catalog_lookup_and_overlay(tmp_path, monkeypatch):
    assert crossing_number("trefoil") == 3
    with pytest.raises(NotFound):
        catalog_get("no_such_knot")
    extra = tmp_path / "cat.json"
    extra.write_text(json.dumps([{"name": "mine", "seifert": [[-1, 1], [0, -3]], "crossing_number": 7}]))
    monkeypatch.setenv("CONCORDIA_CATALOG", str(extra))
    assert catalog_get("mine").alexander() == poly(3, -5, 3)
    assert "trefoil" in catalog_records()
    extra.write_text(json.dumps({"not": "a list"}))
    with pytest.raises(SchemaError):
        catalog_records()


def test_every_catalog_record_is_valid():
    for name, rec in catalog_records().items():
        A = catalog_get(name)
        assert A.alexander()(1) in (1, -1)
        assert rec["crossing_number"] >= 0
