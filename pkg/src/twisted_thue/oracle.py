"""Brute-force reference solver, kept independent of the library's solving path.

Forms come from resultants computed by sympy (not from the multiplication-matrix
characteristic polynomials used by ``twist``), and the search is a plain nested
loop over exponents, y and x.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

import sympy

_t, _X = sympy.symbols("t X")


def _poly(coeffs):
    return sympy.Poly([sympy.Rational(str(Fraction(c))) for c in coeffs], _t, domain="QQ")


def _element(coords):
    # coordinates are on 1, t, ..., t^(d-1)
    return _poly(list(reversed([Fraction(c) for c in coords])))


def _power(g, k, f):
    if k < 0:
        g = sympy.invert(g, f)
        k = -k
    out = sympy.Poly(1, _t, domain="QQ")
    for _ in range(k):
        out = (out * g).rem(f)
    return out


def form_from_element(min_poly, g):
    """Primitive integer minimal polynomial of g(t) mod min_poly(t), or None if its degree is low."""
    f = _poly(min_poly)
    d = f.degree()
    g = g.rem(f)
    res = sympy.resultant(f.as_expr(), _X - g.as_expr(), _t)
    p = sympy.Poly(res, _X, domain="QQ")
    sqf = sympy.quo(p, sympy.gcd(p, p.diff(_X)))
    if sqf.degree() < d:
        return None
    _, prim = sympy.Poly(sqf, _X).clear_denoms(convert=True)
    coeffs = [int(c) for c in prim.primitive()[1].all_coeffs()]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)


def twisted_form(min_poly, alpha, units, torsion, exponents, torsion_index=0):
    f = _poly(min_poly)
    g = _element(alpha)
    g = (g * _power(_element(torsion), torsion_index, f)).rem(f)
    for u, k in zip(units, exponents):
        g = (g * _power(_element(u), k, f)).rem(f)
    return form_from_element(min_poly, g)


def value(coeffs, x, y):
    d = len(coeffs) - 1
    return sum(c * x ** (d - i) * y ** i for i, c in enumerate(coeffs))


def search_forms(forms, m, xy):
    """forms: iterable of (key, coeffs).  Returns sorted (key, x, y, value) with xy != 0."""
    out = []
    for key, coeffs in forms:
        for y in range(-xy, xy + 1):
            if y == 0:
                continue
            for x in range(-xy, xy + 1):
                if x == 0:
                    continue
                v = value(coeffs, x, y)
                if abs(v) <= m:
                    out.append((key, x, y, v))
    return sorted(out)


def oracle_search(min_poly, alpha, units, torsion, torsion_order, m, xy, A):
    """All (torsion, exponents, x, y, value) with max |exponent| <= A, |x|, |y| <= xy, xy != 0.

    Degenerate twists (alpha*eps not primitive) are skipped.
    """
    forms = []
    for t in range(torsion_order):
        for e in product(range(-A, A + 1), repeat=len(units)):
            coeffs = twisted_form(min_poly, alpha, units, torsion, e, t)
            if coeffs is not None:
                forms.append(((t, tuple(e)), coeffs))
    return [(k[0], k[1], x, y, v) for k, x, y, v in search_forms(forms, m, xy)]


@lru_cache(maxsize=None)
def stender_form(D, c, n):
    """F_n built in Q(theta) from eps^(n+1) with eps = D^2 + D theta + theta^2/2."""
    theta_poly = (1, 0, 0, 0, 4 * (D**4 + c))
    f = _poly(theta_poly)
    eps = _element((D**2, D, Fraction(1, 2), 0))
    return form_from_element(theta_poly, _power(eps, n + 1, f))


def stender_search(D, c, m, xy, n_cap):
    forms = [(n, stender_form(D, c, n)) for n in range(-n_cap, n_cap + 1) if n != -1]
    return [(n, x, y, v) for n, x, y, v in search_forms(forms, m, xy)]
