from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, strategies as st

from twisted_thue.algnum import NumberField, minpoly_integer
from twisted_thue.embeddings import compute_embeddings, embed, house, is_almost_totally_imaginary, polynomial_roots
from twisted_thue.errors import ValidationError
from twisted_thue.heights import abs_log_height, mahler_measure
from twisted_thue.stender import StenderParams, base_coefficients

CUBE2 = NumberField([1, 0, 0, -2])
TOTREAL = NumberField([1, 0, -3, -1])
STENDER = NumberField(base_coefficients(StenderParams(2, 1)))
SEXTIC = NumberField([1, 0, 0, 0, 0, 1, 1])
FIELDS = [CUBE2, TOTREAL, STENDER, SEXTIC, NumberField([2, 0, 1, 1])]


def real_root_count(coeffs):
    return sympy.Poly(coeffs, sympy.Symbol("X")).count_roots()


@pytest.mark.parametrize("K", FIELDS, ids=str)
def test_signature_matches_sturm_count(K):
    E = compute_embeddings(K, 128)
    r1, r2 = E.signature
    assert r1 == real_root_count(list(K.coeffs))
    assert r1 + 2 * r2 == K.degree
    assert is_almost_totally_imaginary(E) == (r1 <= 1)


@pytest.mark.parametrize("K", FIELDS, ids=str)
def test_signature_stable_under_precision(K):
    assert compute_embeddings(K, 64).signature == compute_embeddings(K, 256).signature


@pytest.mark.parametrize("K", FIELDS, ids=str)
def test_enclosures_against_mpmath_polyroots(K):
    E = compute_embeddings(K, 128)
    with mpmath.workprec(200):
        ref = mpmath.polyroots(list(K.coeffs), maxsteps=200, extraprec=200)
        for v, r in zip(E.values, E.radii):
            dist = min(abs(mpmath.mpc(v) - z) for z in ref)
            assert dist <= r + mpmath.mpf(2) ** -150


@pytest.mark.parametrize("K", FIELDS, ids=str)
def test_layout_and_conjugate_pairing(K):
    E = compute_embeddings(K, 128)
    r1, _ = E.signature
    vals = E.values
    assert all(vals[j].imag == 0 for j in range(r1))
    assert [vals[j].real for j in range(r1)] == sorted(vals[j].real for j in range(r1))
    for j in range(r1, K.degree, 2):
        assert vals[j].imag > 0
        assert E.pairing[j] == j + 1 and E.pairing[j + 1] == j
        assert abs(vals[j + 1] - vals[j].conjugate()) <= 2 * E.radii[j]
    for i in range(K.degree):
        for j in range(i + 1, K.degree):
            assert abs(vals[i] - vals[j]) > 4 * (E.radii[i] + E.radii[j])


@pytest.mark.parametrize("K", FIELDS, ids=str)
def test_reconstructed_polynomial(K):
    E = compute_embeddings(K, 128)
    ctx = E.ctx
    poly = [ctx.mpc(K.coeffs[0])]
    for v in E.values:
        poly = [a - v * b for a, b in zip(poly + [0], [0] + poly)]
    for got, want in zip(poly, K.coeffs):
        assert abs(got - want) < ctx.ldexp(1, -100) * 10 ** K.degree * max(map(abs, K.coeffs))


def test_cube_root_of_two():
    E = compute_embeddings(CUBE2, 128)
    assert E.signature == (1, 1)
    v, r = E.values[0].real, E.radii[0]
    assert abs(v - E.ctx.cbrt(2)) <= r
    assert abs(v ** 3 - 2) < 1e-30
    assert float(v) == pytest.approx(1.259921, abs=1e-6)


def test_stender_field_has_no_real_embedding():
    E = compute_embeddings(STENDER, 128)
    assert E.signature == (0, 2)
    # f > 0 on a real grid, as a second check besides the Sturm count
    f = list(STENDER.coeffs)
    grid = [Fraction(k, 8) for k in range(-400, 400)]
    assert all(sum(c * x ** (4 - i) for i, c in enumerate(f)) > 0 for x in grid)


def test_embed_basic():
    E = compute_embeddings(STENDER, 128)
    assert all(v == 1 for v in embed(STENDER.one, E).values)
    assert embed(STENDER.gen, E).values == E.values
    assert house(STENDER.one, E) == 1
    assert abs(house(STENDER.rational(Fraction(-7, 3)), E) - E.ctx.mpf(7) / 3) < 1e-30


def test_house_and_mahler_cross_check():
    E = compute_embeddings(STENDER, 128)
    moduli = [abs(v) for v in E.values]
    assert abs(house(STENDER.gen, E) - max(moduli)) < 1e-30
    prod = 1
    for x in moduli:
        prod *= max(1, x)
    assert abs(mahler_measure(list(STENDER.coeffs)) - prod) < 1e-25


small = st.lists(st.integers(-4, 4), min_size=4, max_size=4)


@given(small)
def test_house_below_height_exponential(coords):
    K = STENDER
    a = K.element(coords)
    if a.is_zero():
        return
    E = compute_embeddings(K, 128)
    h = abs_log_height(a).value
    assert house(a, E) <= E.ctx.exp(K.degree * h) * (1 + E.ctx.ldexp(1, -90))


def test_precision_floor():
    with pytest.raises(ValidationError):
        compute_embeddings(CUBE2, 32)


def test_linear_polynomial_roots():
    R = polynomial_roots([2, -3], 128)
    assert abs(R.values[0] - 1.5) <= R.radii[0]
