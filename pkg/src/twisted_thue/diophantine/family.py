"""Capped enumeration of all twists alpha*eps over an almost totally imaginary field."""

from itertools import product

from ..errors import DegenerateTwist
from ..forms import FamilyResult, SolutionTriple, evaluate, reciprocal_form, twist
from ..units import ExponentVector
from .bounds import compose_bounds
from .imaginary import enumerate_form


def exponent_box(rank, cap, torsion_order):
    """Exponent vectors with max-norm <= cap, every torsion index, in a fixed order."""
    for t in range(torsion_order):
        for e in product(range(-cap, cap + 1), repeat=rank):
            yield ExponentVector(e, t)


def solve_family_general(field, B, alpha, m, caps, provider=None, report=None):
    """All (x, y, eps) with xy != 0, |x|, |y| <= caps.xy, exponents <= caps.A and |F_eps(x, y)| <= m.

    Twists with Q(alpha eps) != K are listed in ``skipped``.  Completeness is
    ``certified`` only if a bound report exists whose exponent and (x, y) bounds
    lie inside the caps, and no form needed truncation.
    """
    if report is None and provider is not None and m >= 2:
        report = compose_bounds(field, B, alpha, m, provider)
    solutions, skipped = [], []
    truncated = False
    xy_covered = report is not None and report.xy_bound <= caps.xy
    for e in exponent_box(B.rank, caps.A, B.torsion_order):
        try:
            F = twist(alpha, e, B)
        except DegenerateTwist:
            skipped.append(e)
            continue
        pairs, cut = enumerate_form(F, m, caps.xy)
        truncated = truncated or (cut and not xy_covered)
        solutions.extend(SolutionTriple(x, y, e, evaluate(F, x, y)) for x, y in pairs)
    solutions.sort(key=SolutionTriple.key)
    certified = report is not None and not truncated and report.A_bound <= caps.A
    return FamilyResult(solutions, "certified" if certified else "capped", skipped)


def solve_form_by_halves(F, m, cap):
    """Pairs with |x| <= |y| from F directly and |x| > |y| from the reciprocal form, mapped back."""
    near = [(x, y) for x, y in enumerate_form(F, m, cap)[0] if abs(x) <= abs(y)]
    G = reciprocal_form(F)
    far = [(v, u) for u, v in enumerate_form(G, m, cap)[0] if abs(v) > abs(u)]
    return sorted(near + far)
