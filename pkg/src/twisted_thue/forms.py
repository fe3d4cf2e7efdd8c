"""Binary forms attached to twisted elements, and the reciprocal involution."""

from dataclasses import dataclass, field
from typing import NamedTuple

from .algnum import minpoly_integer
from .errors import DegenerateTwist, ValidationError, ZeroConstantTerm
from .polys import content
from .units import ExponentVector, unit_from_exponents


@dataclass(frozen=True)
class BinaryForm:
    """a_0 X^d + a_1 X^(d-1) Y + ... + a_d Y^d with integer coefficients.

    ``absorbed_sign`` is the sign dropped to make the leading coefficient
    positive when the form came from a coefficient reversal.
    """

    coeffs: tuple
    absorbed_sign: int = field(default=1, compare=False)

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 2:
            raise ValidationError("a binary form needs degree at least 1", "/coeffs")
        if coeffs[0] <= 0:
            raise ValidationError("leading coefficient must be positive", "/coeffs/0")
        if content(coeffs) != 1:
            raise ValidationError("coefficients must have content 1", "/coeffs")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x, y):
        return evaluate(self, x, y)

    def to_json(self):
        return list(self.coeffs)


class SearchCaps(NamedTuple):
    """Enumeration limits: |x|, |y| <= xy and max-norm of exponents <= A (n for one unit)."""

    xy: int
    A: int = 0

    @property
    def n(self):
        return self.A


@dataclass(frozen=True)
class SolutionTriple:
    x: int
    y: int
    epsilon: ExponentVector
    value: int

    def key(self):
        return (self.epsilon.torsion_index, self.epsilon.exponents, self.x, self.y)

    def to_json(self):
        return {
            "x": self.x,
            "y": self.y,
            "epsilon": {"torsion": self.epsilon.torsion_index, "exponents": list(self.epsilon.exponents)},
            "value": self.value,
        }

    @classmethod
    def from_json(cls, obj):
        eps = obj["epsilon"]
        return cls(int(obj["x"]), int(obj["y"]),
                   ExponentVector(tuple(eps["exponents"]), int(eps.get("torsion", 0))), int(obj["value"]))


def homogenize(p):
    """Integer polynomial (leading first) to a BinaryForm."""
    return BinaryForm(tuple(p))


def twisted_element(alpha, e, B):
    return alpha * unit_from_exponents(B, e)


def twist(alpha, e, B):
    """The form a_0 prod (X - sigma_i(alpha eps) Y), built from the exact minimal polynomial."""
    gamma = twisted_element(alpha, e, B)
    mp = minpoly_integer(gamma)
    if len(mp) - 1 < alpha.field.degree:
        raise DegenerateTwist(f"alpha*eps has degree {len(mp) - 1} < {alpha.field.degree} for exponents {e.exponents}")
    return BinaryForm(tuple(mp))


def evaluate(F, x, y):
    acc = 0
    ypow = 1
    for c in F.coeffs:
        acc = acc * x + c * ypow
        ypow *= y
    return acc


def reciprocal_form(F):
    """G with G(y, x) = absorbed_sign * F(x, y), normalized to a positive leading coefficient."""
    if F.coeffs[-1] == 0:
        raise ZeroConstantTerm("F(0, 1) = 0 has no reciprocal form")
    rev = tuple(reversed(F.coeffs))
    sign = 1 if rev[0] > 0 else -1
    return BinaryForm(tuple(sign * c for c in rev), absorbed_sign=sign)


class Residual(NamedTuple):
    value: object
    radius: object


def norm_form_residual(F, x, y, embedded):
    """|F(x, y) - a_0 prod_j (x - sigma_j(alpha eps) y)| with a radius for the float side.

    ``embedded`` holds the values sigma_j(alpha eps) with error radii (an Embedded).
    """
    values, radii = embedded.values, embedded.radii
    v0 = values[0]
    ctx = v0.context
    x, y = int(x), int(y)
    prod = ctx.mpc(F.coeffs[0])
    upper = ctx.mpf(abs(F.coeffs[0]))
    plain = ctx.mpf(abs(F.coeffs[0]))
    for v, r in zip(values, radii):
        factor = x - v * y
        prod *= factor
        plain *= abs(factor)
        upper *= abs(factor) + abs(y) * r
    eps = ctx.ldexp(ctx.mpf(1), -(ctx.prec - 4))
    radius = (upper - plain) + 2 * len(values) * eps * upper
    return Residual(abs(evaluate(F, x, y) - prod), radius)


class FamilyResult(NamedTuple):
    solutions: list
    completeness: str
    skipped: list
