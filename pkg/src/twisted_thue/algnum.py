"""Exact arithmetic in K = Q(alpha) on the power basis 1, alpha, ..., alpha^(d-1).

The defining polynomial may be non-monic: reduction uses
alpha^d = -(a1 alpha^(d-1) + ... + ad) / a0 with exact rationals throughout.
"""

from fractions import Fraction
from functools import cached_property

from . import polys
from .errors import DivisionByZero, FieldMismatch, ValidationError

WITNESS_SEARCH_PRIMES = 25


def _as_fraction(q):
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    raise TypeError(f"expected int or Fraction, got {type(q).__name__}")


class NumberField:
    """The field Q(alpha) cut out by an irreducible primitive integer polynomial.

    ``coeffs`` lists a0, ..., ad with a0 > 0.  Irreducibility is certified when
    the polynomial is irreducible modulo one of the first 25 primes not dividing
    a0 * disc(f); the witness prime is kept.  Otherwise the status is
    ``"asserted"``, unless ``require_verified`` is set, in which case
    construction fails.
    """

    def __init__(self, coeffs, require_verified=False):
        coeffs = tuple(int(a) for a in coeffs)
        if len(coeffs) < 4:
            raise ValidationError("degree must be at least 3", "/min_poly")
        if coeffs[0] <= 0:
            raise ValidationError("leading coefficient must be positive", "/min_poly/0")
        if coeffs[-1] == 0:
            raise ValidationError("constant coefficient must be nonzero", f"/min_poly/{len(coeffs) - 1}")
        if polys.content(coeffs) != 1:
            raise ValidationError("coefficients must have gcd 1", "/min_poly")
        self.coeffs = coeffs
        self.degree = len(coeffs) - 1
        self.witness_prime = self._find_witness()
        self.irreducibility = "verified" if self.witness_prime else "asserted"
        if require_verified and self.witness_prime is None:
            raise ValidationError(
                f"no irreducibility witness among the first {WITNESS_SEARCH_PRIMES} admissible primes",
                "/irreducibility",
            )

    def _find_witness(self):
        disc = polys.discriminant(list(self.coeffs))
        if disc == 0:
            raise ValidationError("defining polynomial is not squarefree", "/min_poly")
        bad = abs(self.coeffs[0] * disc.numerator)
        tried = 0
        for p in polys.primes():
            if bad % p == 0:
                continue
            if polys.irreducible_mod_p(list(self.coeffs), p):
                return p
            tried += 1
            if tried >= WITNESS_SEARCH_PRIMES:
                return None

    def __repr__(self):
        return f"NumberField({list(self.coeffs)})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def leading(self):
        return self.coeffs[0]

    @cached_property
    def _powers(self):
        """Coordinates of alpha^k for k = 0 .. 2d-2."""
        d = self.degree
        a0 = Fraction(self.coeffs[0])
        tail = [-Fraction(a) / a0 for a in self.coeffs[1:]]  # alpha^d = sum tail[i] alpha^(d-1-i)
        rows = []
        for k in range(d):
            row = [Fraction(0)] * d
            row[k] = Fraction(1)
            rows.append(row)
        top = [tail[d - 1 - j] for j in range(d)]
        rows.append(top)
        for _ in range(d + 1, 2 * d - 1):
            prev = rows[-1]
            shifted = [Fraction(0)] + prev[:-1]
            carry = prev[-1]
            rows.append([s + carry * t for s, t in zip(shifted, top)])
        return rows

    def element(self, coords):
        coords = [_as_fraction(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError("too many coordinates")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return AlgElement(self, tuple(coords))

    def rational(self, q):
        return self.element([_as_fraction(q)])

    @property
    def zero(self):
        return self.element([])

    @property
    def one(self):
        return self.element([1])

    @property
    def gen(self):
        return self.element([0, 1])

    def polynomial_at(self, poly, a):
        """Evaluate a polynomial (leading first, rational coefficients) at an element."""
        acc = self.zero
        for c in poly:
            acc = acc * a + self.rational(_as_fraction(c))
        return acc


class AlgElement:
    """An element of a NumberField, stored as exact rational coordinates."""

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    # -- helpers
    def _coerce(self, other):
        if isinstance(other, AlgElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("elements belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __repr__(self):
        return f"AlgElement({[str(c) for c in self.coords]})"

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.field.coeffs, self.coords))

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    # -- ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.field.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        conv[i + j] += a * b
        powers = self.field._powers
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = powers[k]
                out = [o + c * r for o, r in zip(out, row)]
        return AlgElement(self.field, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.field.one
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- linear-algebra views
    def multiplication_matrix(self):
        """Matrix of x -> self*x; column j holds the coordinates of self*alpha^j."""
        d = self.field.degree
        cols = [(self * self.field.element([0] * j + [1])).coords for j in range(d)]
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        d = self.field.degree
        rhs = [1] + [0] * (d - 1)
        sol = polys.solve(self.multiplication_matrix(), rhs)
        return AlgElement(self.field, tuple(sol))

    @cached_property
    def _charpoly(self):
        return tuple(polys.charpoly_matrix(self.multiplication_matrix()))

    def charpoly(self):
        return list(self._charpoly)

    def minpoly(self):
        return minpoly_integer(self)

    def norm(self):
        cp = self._charpoly
        d = self.field.degree
        return cp[-1] if d % 2 == 0 else -cp[-1]

    def trace(self):
        return -self._charpoly[1]


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def inverse(a):
    return a.inverse()


def charpoly(a):
    """Monic characteristic polynomial of multiplication by ``a`` (leading first)."""
    return a.charpoly()


def minpoly_integer(a):
    """Primitive integer minimal polynomial with positive leading coefficient."""
    if "_minpoly" not in a.__dict__:
        sf = polys.squarefree_part(a.charpoly())
        a.__dict__["_minpoly"] = tuple(polys.primitive_integer(sf))
    return list(a.__dict__["_minpoly"])


def norm(a):
    return a.norm()


def is_primitive_element(a):
    return len(minpoly_integer(a)) - 1 == a.field.degree


def parse_rational(text, pointer=None):
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction; reject zero denominators."""
    if isinstance(text, bool):
        raise ValidationError("expected a rational", pointer)
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValidationError("expected a rational string 'p/q' or an integer", pointer)
    num, sep, den = text.strip().partition("/")
    try:
        n = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValidationError(f"malformed rational {text!r}", pointer) from None
    if q == 0:
        raise ValidationError(f"zero denominator in {text!r}", pointer)
    return Fraction(n, q)


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

