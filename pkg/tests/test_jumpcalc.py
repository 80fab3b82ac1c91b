import pytest
from hypothesis import given, settings, strategies as st

from concordia.errors import BadParameter, DimensionMismatch
from concordia.exactnum import Angle
from concordia.jumpcalc import (avoidance_set, f_n_accumulate, jf_combine, jf_eval, jf_has_period,
                                jf_reparam, unfold)
from concordia.seifert import catalog_get
from concordia.signature import jump_function

from oracles import check_reparam_by_sampling


def rp(n, d=1):
    return Angle.rational_pi(n, d)


DT = jump_function(catalog_get("trefoil"))


def test_combine():
    E = jump_function(catalog_get("T2_5"))
    f = jf_combine([2, -1], [DT, E])
    assert dict(f.items) == {rp(1, 3): -4, rp(1, 5): 2, rp(3, 5): 2}
    with pytest.raises(DimensionMismatch):
        jf_combine([1], [DT, E])


def test_reparam_trefoil():
    f = jf_reparam(DT, 2)
    assert dict(f.items) == {rp(1, 6): -2, rp(5, 6): -2}
    assert jf_reparam(DT, -2) == f
    assert jf_reparam(DT, 1) == DT
    with pytest.raises(BadParameter):
        jf_reparam(DT, 0)


def test_f1_for_trefoil_pattern():
    f1 = f_n_accumulate(DT, 2, 1)
    assert dict(f1.items) == {rp(1, 6): -2, rp(1, 3): -2, rp(5, 6): -2}
    assert f_n_accumulate(DT, 2, 0) == DT
    assert not f_n_accumulate(DT, 2, -1)


def test_avoidance_set():
    assert avoidance_set(DT, 2, 1) == [rp(1, 6), rp(1, 3), rp(5, 6)]
    assert avoidance_set(DT, 2, 0) == [rp(1, 3)]
    with pytest.raises(BadParameter):
        avoidance_set(DT, 2, -1)


def test_eval_is_even_and_periodic():
    assert jf_eval(DT, rp(5, 3)) == -2
    assert jf_eval(DT, rp(7, 3)) == -2
    assert jf_eval(DT, rp(1, 2)) == 0
    assert jf_eval(DT, rp(0)) == 0


def test_unfold_and_period():
    full = unfold(DT)
    assert full == {rp(1, 3): -2, rp(5, 3): -2}
    f = jf_reparam(DT, 3)
    assert jf_has_period(f, rp(2, 3))
    assert not jf_has_period(DT, rp(2, 3))
    assert jf_has_period(DT, rp(2))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["trefoil", "T2_5", "5_2", "6_1"]), st.integers(2, 4), st.integers(0, 2))
def test_iterated_support_has_period(name, d, n):
    # f_n(theta) - f_{n-1}(theta) = delta(d^n theta) has period 2pi / d^n
    delta = jump_function(catalog_get(name))
    top = f_n_accumulate(delta, d, n) - f_n_accumulate(delta, d, n - 1)
    assert jf_has_period(top, rp(2, d ** n))


@pytest.mark.parametrize("name", ["trefoil", "figure_eight", "T2_5", "5_2", "6_1", "T2_7"])
@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_reparam_matches_direct_sampling(name, d):
    check_reparam_by_sampling(catalog_get(name), d)
