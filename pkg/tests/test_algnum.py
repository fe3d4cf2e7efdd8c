from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from twisted_thue.algnum import (
    NumberField, add, charpoly, inverse, is_primitive_element, minpoly_integer, mul, norm,
    parse_rational, format_rational,
)
from twisted_thue.embeddings import compute_embeddings, embed
from twisted_thue.errors import DivisionByZero, FieldMismatch, ValidationError
from twisted_thue.stender import StenderParams, unit_epsilon

FIELDS = [
    NumberField([1, -16, 130, 16, 1]),
    NumberField([1, 0, 0, -2]),
    NumberField([2, 0, 1, 1]),
    NumberField([3, 1, 0, 4, -2, 1]),
]
X = sympy.Symbol("X")

small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def elements(field):
    return st.lists(small, min_size=field.degree, max_size=field.degree).map(field.element)


field_and = st.sampled_from(FIELDS).flatmap(
    lambda K: st.tuples(elements(K), elements(K), elements(K))
)


def sympy_reduce(coords, field):
    """Independent route: sympy polynomial remainder modulo f."""
    f = sympy.Poly(list(field.coeffs), X, domain="QQ")
    return sympy.Poly(list(reversed(coords)), X, domain="QQ").rem(f)


def to_coords(poly, d):
    c = [Fraction(int(q.p), int(q.q)) for q in reversed(poly.all_coeffs())]
    return tuple(c + [Fraction(0)] * (d - len(c)))


@given(field_and)
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(field_and)
def test_mul_matches_sympy_remainder(triple):
    a, b, _ = triple
    K = a.field
    prod = sympy_reduce(a.coords, K) * sympy_reduce(b.coords, K)
    f = sympy.Poly(list(K.coeffs), X, domain="QQ")
    assert (a * b).coords == to_coords(prod.rem(f), K.degree)


@given(field_and)
def test_norm_multiplicative(triple):
    a, b, _ = triple
    assert norm(a * b) == norm(a) * norm(b)


@given(field_and)
def test_inverse_roundtrip(triple):
    a, _, _ = triple
    if a.is_zero():
        with pytest.raises(DivisionByZero):
            inverse(a)
        return
    assert a * inverse(a) == a.field.one
    assert inverse(inverse(a)) == a


@given(field_and)
def test_minpoly_primitive_and_divides_degree(triple):
    a, _, _ = triple
    mp = minpoly_integer(a)
    assert mp[0] > 0
    assert sympy.gcd_list(mp) == 1
    assert a.field.degree % (len(mp) - 1) == 0
    assert a.field.polynomial_at(mp, a).is_zero()


@given(field_and)
def test_charpoly_vanishes_at_embeddings(triple):
    a, _, _ = triple
    K = a.field
    E = compute_embeddings(K, 128)
    cp = charpoly(a)
    emb = embed(a, E)
    ctx = E.ctx
    tol = ctx.ldexp(1, -64) * max(1, max(abs(v) for v in emb.values)) ** K.degree * 10 ** 3
    for v in emb.values:
        acc = 0
        for c in cp:
            acc = acc * v + ctx.mpf(c.numerator) / c.denominator
        assert abs(acc) < tol


@given(field_and)
def test_minpoly_matches_sympy(triple):
    a, _, _ = triple
    K = a.field
    t = sympy.Symbol("t")
    g = sum(sympy.Rational(c.numerator, c.denominator) * t**k for k, c in enumerate(a.coords))
    res = sympy.Poly(sympy.resultant(sympy.Poly(list(K.coeffs), t).as_expr(), X - g, t), X)
    sqf = sympy.Poly(sympy.sqf_part(res), X)
    _, prim = sympy.Poly(sqf.clear_denoms()[1], X).primitive()
    coeffs = [int(c) for c in prim.all_coeffs()]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    assert minpoly_integer(a) == coeffs


def test_stender_epsilon_identities():
    eps = unit_epsilon(StenderParams(2, 1))
    K = eps.field
    theta = K.gen
    assert add(K.element([4, 2]), K.element([0, 0, Fraction(1, 2)])) == eps
    assert mul(mul(theta, theta), mul(theta, theta)) == K.rational(-68)
    assert eps * inverse(eps) == K.one
    assert minpoly_integer(eps) == [1, -16, 130, 16, 1]
    assert norm(eps) == 1
    assert is_primitive_element(eps ** 2)


def test_inverse_embeds_to_reciprocals():
    eps = unit_epsilon(StenderParams(2, 1))
    E = compute_embeddings(eps.field, 128)
    direct = embed(inverse(eps), E).values
    recip = [1 / v for v in embed(eps, E).values]
    assert all(abs(u - v) < E.ctx.ldexp(1, -100) for u, v in zip(direct, recip))


def test_charpoly_special_cases():
    K = FIELDS[2]
    assert charpoly(K.zero) == [1, 0, 0, 0]
    assert charpoly(K.rational(Fraction(1, 2))) == [1, Fraction(-3, 2), Fraction(3, 4), Fraction(-1, 8)]
    assert charpoly(K.gen) == [1, 0, Fraction(1, 2), Fraction(1, 2)]
    assert minpoly_integer(K.rational(Fraction(-3, 4))) == [4, 3]
    assert not is_primitive_element(K.rational(5))
    assert is_primitive_element(K.gen)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        FIELDS[0].gen + FIELDS[1].gen


@pytest.mark.parametrize("coeffs, pointer", [
    ([1, 0, 1], "/min_poly"),
    ([-1, 0, 0, 2], "/min_poly/0"),
    ([1, 0, 0, 0], "/min_poly/3"),
    ([2, 0, 0, 4], "/min_poly"),
    ([1, -3, 3, -1], "/min_poly"),
])
def test_field_validation(coeffs, pointer):
    with pytest.raises(ValidationError) as exc:
        NumberField(coeffs)
    assert exc.value.pointer == pointer


def test_irreducibility_witness():
    K = NumberField([1, 0, 0, -2])
    assert K.irreducibility == "verified" and K.witness_prime is not None
    # (X^2+1)(X^2+2): reducible, so no prime can witness irreducibility
    red = NumberField([1, 0, 3, 0, 2])
    assert red.irreducibility == "asserted"
    with pytest.raises(ValidationError):
        NumberField([1, 0, 3, 0, 2], require_verified=True)


def test_rational_strings():
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_rational(7) == 7
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    for bad in ("3/0", "x", "1/2/3", True, 1.5):
        with pytest.raises(ValidationError):
            parse_rational(bad, "/p")
