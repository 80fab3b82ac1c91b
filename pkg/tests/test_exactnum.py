import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from concordia.errors import BadParameter, BadReduction
from concordia.exactnum import (Angle, LaurentPoly, RatFnClass, RealAlg, angle_compare,
                                angle_scale, smith_normal_form)
from concordia.exactnum import polyops as P


def lp(*coeffs, low=0, modulus=None):
    return LaurentPoly.from_list(coeffs, low, modulus)


# --- polynomials ---------------------------------------------------------------

def test_chebyshev_identities():
    # T_n(cos x) = cos(n x), U_{n-1}(cos x) sin x = sin(n x)
    for n in range(1, 7):
        for x in (0.3, 1.1, 2.5):
            assert P.peval(P.chebyshev_t(n), math.cos(x)) == pytest.approx(math.cos(n * x))
            assert P.peval(P.chebyshev_u(n - 1), math.cos(x)) * math.sin(x) == pytest.approx(math.sin(n * x))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 12, 15])
def test_cos_minpoly_vanishes_at_root_of_unity_cosine(n):
    assert P.peval(P.cos_minpoly(n), math.cos(2 * math.pi / n)) == pytest.approx(0, abs=1e-9)


def test_symmetric_to_cos_trefoil():
    # t^-1 (t^2 - t + 1) = 2x - 1 with x = (t + 1/t) / 2
    G = P.symmetric_to_cos((1, -1, 1))
    assert P.primitive(G) == (-1, 2)


def test_sturm_counts_roots():
    f = P.pmul(P.pmul((-1, 2), (1, 2)), (-3, 1))     # roots 1/2, -1/2, 3
    seq = P.sturm_sequence(f)
    assert P.sturm_count(seq, Fraction(-1), Fraction(1)) == 2
    assert P.sturm_count(seq, Fraction(0), Fraction(4)) == 2


# --- real algebraic numbers ---------------------------------------------------

def test_realalg_roots_and_comparison():
    r = RealAlg.real_roots((-2, 0, 1), 0, 2)          # sqrt 2
    assert len(r) == 1
    s2 = r[0]
    assert s2.compare_rational(Fraction(141, 100)) > 0
    assert s2.compare_rational(Fraction(142, 100)) < 0
    assert float(s2) == pytest.approx(math.sqrt(2))
    s3 = RealAlg.real_roots((-3, 0, 1), 0, 2)[0]
    assert s2 < s3
    assert s2 == RealAlg.real_roots((-2, 0, 1), 0, 2)[0]


def test_realalg_refine_shrinks_interval():
    s2 = RealAlg.real_roots((-2, 0, 1), 0, 2)[0]
    iv = s2.refine_to(Fraction(1, 2 ** 80))
    assert iv.width <= Fraction(1, 2 ** 80)
    assert iv.contains(s2._lo)


# --- angles ---------------------------------------------------------------------

def test_angle_canonical_forms():
    assert Angle.arccos(Fraction(1, 2)) == Angle.rational_pi(1, 3)
    assert Angle.arccos(0) == Angle.rational_pi(1, 2)
    assert Angle.arccos(-1) == Angle.rational_pi(1)
    assert Angle.arccos(Fraction(1, 2), -1) == Angle.rational_pi(5, 3)
    a = Angle.arccos(Fraction(3, 4))
    assert not a.is_rational_pi
    assert Angle.rational_pi(7, 3) == Angle.rational_pi(1, 3)


def test_angle_from_root_of_unity_minpoly_becomes_rational():
    # cos(2 pi / 5) is the positive root of 4x^2 + 2x - 1
    a = Angle.from_minpoly((-1, 2, 4), 0, 1, 1)
    assert a == Angle.rational_pi(2, 5)


@pytest.mark.parametrize("q, d, want", [
    (Fraction(1, 6), 2, Fraction(1, 3)),
    (Fraction(5, 6), 2, Fraction(5, 3)),
    (Fraction(2, 5), 5, Fraction(0)),
    (Fraction(1, 7), 14, Fraction(0)),
])
def test_scale_rational(q, d, want):
    assert angle_scale(Angle.rational_pi(q), d) == Angle.rational_pi(want)


def test_scale_arccos_double_angle():
    b = Angle.arccos(Fraction(3, 4)).scale(2)
    assert b == Angle.arccos(Fraction(1, 8))
    assert b.sin_sign == 1


def test_scale_arccos_crosses_into_lower_half():
    a = Angle.arccos(Fraction(-3, 4))       # about 0.77 pi
    b = a.scale(2)                           # about 1.54 pi
    assert b.sin_sign == -1
    assert float(b) == pytest.approx((2 * math.acos(-0.75)) % (2 * math.pi))


def test_shift_by_rational_pi():
    a = Angle.arccos(Fraction(3, 4))
    b = a.shift(Fraction(1, 2))
    assert float(b) == pytest.approx(math.acos(0.75) + math.pi / 2)
    assert b.shift(Fraction(3, 2)) == a
    assert Angle.rational_pi(1, 6).shift(Fraction(1, 2)) == Angle.rational_pi(2, 3)


def test_divide_and_preimages():
    a = Angle.arccos(Fraction(1, 8))
    assert a.divide(2) == Angle.arccos(Fraction(3, 4))
    pre = Angle.rational_pi(1, 3).preimages(2)
    assert pre == [Angle.rational_pi(1, 6), Angle.rational_pi(5, 6)]
    assert Angle.rational_pi(1).preimages(2) == [Angle.rational_pi(1, 2)]


def test_preimages_arccos_match_floats():
    a = Angle.arccos(Fraction(3, 4))
    th = math.acos(0.75)
    pre = sorted(float(x) for x in a.preimages(3))
    cands = [(th + 2 * math.pi * k) / 3 for k in range(3)]
    cands += [(-th + 2 * math.pi * k) / 3 for k in range(1, 4)]
    want = sorted(v for v in cands if 0 < v <= math.pi)
    assert pre == pytest.approx(want)


def test_large_denominator_comparison_is_fast_and_right():
    a = Angle.arccos(Fraction(3, 4))                # 0.230053... pi
    assert a < Angle.rational_pi(Fraction(230054, 1000000))
    assert a > Angle.rational_pi(Fraction(230053, 1000000))


def test_over_pi_interval_encloses():
    a = Angle.arccos(Fraction(3, 4))
    lo, hi = a.over_pi_interval(Fraction(1, 10 ** 12))
    assert hi - lo <= Fraction(1, 10 ** 12)
    assert float(lo) <= math.acos(0.75) / math.pi <= float(hi)


def test_zero_denominator_rejected():
    with pytest.raises(BadParameter):
        Angle.rational_pi(1, 0)


rational_angles = st.builds(lambda n, d: Angle.rational_pi(n, d),
                            st.integers(0, 40), st.integers(1, 12))
arccos_angles = st.builds(lambda c, s: Angle.arccos(c, s),
                          st.fractions(-1, 1, max_denominator=30), st.sampled_from([1, -1]))
angles = st.one_of(rational_angles, arccos_angles)


@settings(max_examples=60, deadline=None)
@given(angles, angles, angles)
def test_compare_is_a_total_order(a, b, c):
    assert angle_compare(a, b) == -angle_compare(b, a)
    if angle_compare(a, b) <= 0 and angle_compare(b, c) <= 0:
        assert angle_compare(a, c) <= 0
    assert (angle_compare(a, b) == 0) == (a == b)


@settings(max_examples=60, deadline=None)
@given(angles, angles)
def test_compare_agrees_with_floats(a, b):
    fa, fb = float(a), float(b)
    if abs(fa - fb) > 1e-9:
        assert angle_compare(a, b) == (1 if fa > fb else -1)


@settings(max_examples=40, deadline=None)
@given(angles, st.integers(1, 4), st.integers(1, 4))
def test_scale_composes(a, d1, d2):
    assert angle_scale(angle_scale(a, d1), d2) == angle_scale(a, d1 * d2)


@settings(max_examples=40, deadline=None)
@given(angles)
def test_fold_of_negation(a):
    if not a.is_zero():
        assert a.negate().fold() == a.fold()


# --- Laurent polynomials and rational function classes -----------------------

def test_laurent_arithmetic_and_bar():
    f = lp(1, -1, 1)                          # 1 - t + t^2
    g = lp(1, 1, low=-1)                      # t^-1 + 1
    assert f * g == lp(1, 0, 0, 1, low=-1)
    assert f.bar() == lp(1, -1, 1, low=-2)
    assert str(f) == "t^2 - t + 1"
    assert (f - f).is_zero()


def test_laurent_normalize_and_units():
    f = lp(-1, 1, -1, low=3)
    assert f.normalize() == lp(1, -1, 1)
    assert lp(-1, low=5).is_unit()
    assert not lp(2).is_unit()


def test_laurent_mod_p():
    f = lp(3, 5, 7, modulus=3)
    assert f == lp(0, 2, 1, modulus=3)
    with pytest.raises(ZeroDivisionError):
        LaurentPoly({0: Fraction(1, 3)}, 3)


def test_ratfn_zero_iff_divisible():
    d = lp(1, -1, 1)
    assert RatFnClass.of(d * lp(2, 3, low=-1), d).is_zero()
    assert not RatFnClass.of(lp(1), d).is_zero()
    assert RatFnClass.of(lp(1), lp(2)) == RatFnClass.of(lp(1), lp(2))
    # 1/2 is not a Laurent polynomial over Z
    assert not RatFnClass.of(lp(1), lp(2)).is_zero()


def test_ratfn_class_ignores_laurent_part():
    d = lp(1, -1, 1)
    a = RatFnClass.of(lp(0, -1), d)
    b = RatFnClass.of(lp(0, -1) + d * lp(5, 0, -2, low=-1), d)
    assert a == b
    assert str(a) == "(-t)/(t^2 - t + 1)"


def test_ratfn_mod_p_reduction():
    d = lp(1, -1, 1)
    a = RatFnClass.of(lp(0, -1), d)
    assert a.reduce_mod(2) == RatFnClass.of(lp(0, 1, modulus=2), lp(1, 1, 1, modulus=2))
    with pytest.raises(BadReduction):
        RatFnClass.of(lp(1), lp(3)).reduce_mod(3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
       st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_ratfn_zero_criterion(nums, qs):
    d = lp(2, -3, 2)
    q = lp(*qs)
    n = lp(*nums)
    assert RatFnClass.of(d * q, d).is_zero()
    # a numerator of lower degree is a multiple of d only when it is zero
    assert RatFnClass.of(lp(*nums[:2]), d).is_zero() == lp(*nums[:2]).is_zero()
    assert RatFnClass.of(n + d * q, d) == RatFnClass.of(n, d)


# --- Smith normal form -----------------------------------------------------------

def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


@pytest.mark.parametrize("M, want", [
    ([[-2, 1], [1, -2]], [1, 3]),
    ([[1, 0], [0, 1]], [1, 1]),
    ([[2, 1], [1, -2]], [1, 5]),
    ([[2, 4], [6, 8]], [2, 4]),
])
def test_smith_examples(M, want):
    factors, U, V, D = smith_normal_form(M)
    assert factors == want
    assert _matmul(_matmul(U, M), V) == D


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_smith_product_is_abs_det(M):
    from concordia.seifert import det_int
    det = det_int(M)
    factors, U, V, D = smith_normal_form(M)
    assert _matmul(_matmul(U, M), V) == D
    if det:
        prod = 1
        for f in factors:
            prod *= f
        assert prod == abs(det)
        assert all(factors[i + 1] % factors[i] == 0 for i in range(len(factors) - 1))
