import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from twisted_thue.algnum import NumberField
from twisted_thue.embeddings import house
from twisted_thue.errors import ZeroElement
from twisted_thue.heights import abs_log_height, mahler_measure


def test_mahler_small_cases():
    assert mahler_measure([1, -1]) == 1
    assert mahler_measure([2, -3]) == 3
    with mpmath.workprec(200):
        assert abs(mahler_measure([1, -1, -1]) - (1 + mpmath.sqrt(5)) / 2) < 1e-30


def test_mahler_upper_rounded():
    with mpmath.workprec(400):
        exact = (1 + mpmath.sqrt(5)) / 2
        assert mahler_measure([1, -1, -1]) >= exact


@given(st.integers(-10 ** 6, 10 ** 6).filter(bool), st.integers(1, 10 ** 6))
def test_height_of_rationals(p, q):
    f = Fraction(p, q)
    K = NumberField([1, 0, 0, -2])
    h = abs_log_height(K.rational(f)).value
    assert abs(h - math.log(max(abs(f.numerator), f.denominator))) < 1e-12


def test_height_of_one_and_zero(stender21):
    K, _ = stender21
    assert abs_log_height(K.one).value == 0
    assert abs_log_height(-K.one).value == 0
    with pytest.raises(ZeroElement):
        abs_log_height(K.zero)


exponents = st.integers(-10, 10)


@given(exponents, st.integers(0, 1), st.integers(-10, 10).filter(bool))
def test_unit_height_identities(stender21, k, sign, n):
    K, B = stender21
    gamma = (-1) ** sign * K.gen ** k
    if k == 0:
        return
    h = abs_log_height(gamma).value
    tol = mpmath.mpf(2) ** -20
    assert abs(abs_log_height(1 / gamma).value - h) < tol
    assert abs(abs_log_height(gamma ** n).value - abs(n) * h) < tol


def test_stender_unit_height_value(stender21):
    K, _ = stender21
    h = abs_log_height(K.gen).value
    # log M(eps) / 4 with M = |eps_1|^2 for the pair outside the unit circle
    assert float(h) == pytest.approx(1.2206287129168, rel=1e-12)


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_house_controlled_by_height_for_integers(stender21, coords):
    K, B = stender21
    g = K.element(coords)
    if g.is_zero():
        return
    E = B.embeddings
    h = abs_log_height(g).value
    assert E.ctx.log(house(g, E)) / K.degree <= h + E.ctx.ldexp(1, -90)
