"""The quartic family Q((1+i)(D^4+c)^(1/4)) with its explicit fundamental unit.

Two independent routes produce the coefficients of
(X - eps_1^n)(X - eps_2^n)(X - eps_3^n)(X - eps_4^n) = X^4 + a_n X^3 + b_n X^2 + c_n X + 1:
exact integer recurrences run forward and backward from the initial values, and
rounding of the elementary symmetric functions of certified powers of the roots.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import polys
from ._mp import context
from .algnum import NumberField
from .embeddings import polynomial_roots
from .fieldspec import dump_field_spec
from .errors import DegenerateIndex, PrecisionExhausted, ValidationError
from .forms import BinaryForm, SolutionTriple
from .units import ExponentVector, UnitBasis


@dataclass(frozen=True)
class StenderParams:
    D: int
    c: int

    def __post_init__(self):
        if int(self.D) != self.D or self.D < 2:
            raise ValidationError("D must be an integer >= 2", "/D")
        if self.c not in (1, -1):
            raise ValidationError("c must be 1 or -1", "/c")


@dataclass(frozen=True)
class FamilyCoeffs:
    n: int
    a: int
    b: int
    c: int

    def polynomial(self):
        return [1, self.a, self.b, self.c, 1]


def base_coefficients(p):
    D, c = p.D, p.c
    return [1, -4 * D**2, 8 * D**4 + 2 * c, 4 * c * D**2, 1]


def base_polynomial(p):
    """The field generated by eps, as a NumberField on its minimal polynomial."""
    return NumberField(base_coefficients(p))


def theta_field(p):
    """Q(theta) with theta^4 = -4(D^4 + c)."""
    return NumberField([1, 0, 0, 0, 4 * (p.D**4 + p.c)])


def unit_epsilon(p):
    """eps = D^2 + D theta + theta^2 / 2 in Q(theta)."""
    K = theta_field(p)
    return K.element([p.D**2, p.D, Fraction(1, 2), 0])


def palindromic_defect(p):
    """X^4 f(-c/X) - f(X) as an exact polynomial (zero when the symmetry holds)."""
    f = base_coefficients(p)
    mirrored = [f[4 - k] * (-p.c) ** k for k in range(5)]
    return polys.sub(mirrored, f)


# ---------------------------------------------------------------------------
# recurrences

def a_recurrence(p):
    """Coefficients (r1, r2, r3, r4) with a_{n+4} = r1 a_{n+3} + r2 a_{n+2} + r3 a_{n+1} + r4 a_n."""
    D, c = p.D, p.c
    return (4 * D**2, -(8 * D**4 + 2 * c), -4 * c * D**2, -1)


def a_initials(p):
    """a_{-1}, a_0, a_1, a_2."""
    D, c = p.D, p.c
    return (4 * c * D**2, -4, -4 * D**2, 4 * c)


def b_recurrence(p):
    """Coefficients with b_{n+6} = sum_k r_k b_{n+6-k}, k = 1..6."""
    D, c = p.D, p.c
    s = 8 * D**4 + 2 * c
    t = 16 * c * D**4 + 1
    u = 16 * D**4 - 4 * c
    return (s, t, u, t, s, -1)


def printed_b3(p):
    D, c = p.D, p.c
    return 512 * D**12 + 1768 * D**8 * c + 264 * D**4 + 2 * c


def corrected_b3(p):
    D, c = p.D, p.c
    return 512 * D**12 + 768 * D**8 * c + 264 * D**4 + 2 * c


def b_initials(p):
    """b_{-2}, ..., b_3 (the last one with coefficient 768 on D^8 c)."""
    D, c = p.D, p.c
    b2 = 64 * D**8 + 64 * c * D**4 + 6
    b1 = 8 * D**4 + 2 * c
    return (b2, b1, 6, b1, b2, corrected_b3(p))


def _run(rec, initials, first, n):
    """Value at index n of the sequence with ``initials`` at indices first, first+1, ...

    The last recurrence coefficient is +-1, so the recurrence runs backward exactly.
    """
    k = len(rec)
    window = list(initials)
    lo = first
    while n >= lo + k:
        nxt = sum(r * window[-1 - i] for i, r in enumerate(rec))
        window = window[1:] + [nxt]
        lo += 1
    while n < lo:
        # s_{lo-1+k} = sum_{i<k-1} rec[i] s_{lo+k-2-i} + rec[k-1] s_{lo-1}
        rest = sum(rec[i] * window[k - 2 - i] for i in range(k - 1))
        prev = (window[-1] - rest) * rec[-1]
        window = [prev] + window[:-1]
        lo -= 1
    return window[n - lo]


def a_sequence(p, n):
    return _run(a_recurrence(p), a_initials(p), -1, n)


def b_sequence(p, n):
    return _run(b_recurrence(p), b_initials(p), -2, n)


def coeffs_by_recurrence(p, n):
    a = a_sequence(p, n)
    return FamilyCoeffs(n, a, b_sequence(p, n), (-p.c) ** abs(n) * a)


# ---------------------------------------------------------------------------
# direct route

def coeffs_direct(p, n, bits=256):
    """Round the symmetric functions of eps_i^n computed from certified roots of f."""
    roots = polynomial_roots(base_coefficients(p), bits)
    ctx = context(bits)
    eps = ctx.ldexp(ctx.mpf(1), -(ctx.prec - 4))
    powers, radii = [], []
    for z, r in zip(roots.values, roots.radii):
        w = z ** n
        rel = abs(n) * r / (abs(z) - r)
        powers.append(w)
        radii.append(abs(w) * (ctx.expm1(rel) + 4 * (abs(n) + 1) * eps))
    # e_k of the powers with a majorant e_k(|w| + rho) - e_k(|w|) for the error
    e = [ctx.mpc(1)]
    e_up = [ctx.mpf(1)]
    e_abs = [ctx.mpf(1)]
    for w, rho in zip(powers, radii):
        e = [a - w * b for a, b in zip(e + [0], [0] + e)]
        e_up = [a + (abs(w) + rho) * b for a, b in zip(e_up + [0], [0] + e_up)]
        e_abs = [a + abs(w) * b for a, b in zip(e_abs + [0], [0] + e_abs)]
    out = []
    for k in (1, 2, 3):
        err = (e_up[k] - e_abs[k]) + 8 * eps * e_up[k]
        nearest = int(ctx.nint(e[k].real))
        if abs(e[k] - nearest) + err >= ctx.mpf(1) / 2:
            raise PrecisionExhausted(f"symmetric function e_{k} of eps^{n} not certified at {bits} bits")
        out.append(nearest)
    # the polynomial is X^4 + e_1 X^3 + ... with e built from (X - w); signs are already in e
    return FamilyCoeffs(n, out[0], out[1], out[2])


def check_printed_b3(p, bits=512):
    """Compare the printed closed form of b_3 with the direct route and the corrected form."""
    direct = coeffs_direct(p, 3, bits).b
    printed = printed_b3(p)
    return {
        "D": p.D,
        "c": p.c,
        "printed": printed,
        "direct": direct,
        "corrected": corrected_b3(p),
        "printed_holds": printed == direct,
        "corrected_holds": corrected_b3(p) == direct,
    }


# ---------------------------------------------------------------------------
# forms, units, solving

def family_form(p, n):
    """F_n(X, Y) = Y^4 f_n(X/Y), whose roots are eps_i^(n+1)."""
    if n == -1:
        raise DegenerateIndex("F_{-1} = (X - Y)^4 is excluded")
    fc = coeffs_by_recurrence(p, n + 1)
    return BinaryForm((1, fc.a, fc.b, fc.c, 1))


def stender_unit_basis(p, precision_bits=128):
    """The eps-field, its generator alpha = eps, and the basis {eps} with torsion -1."""
    K = base_polynomial(p)
    return K, UnitBasis(K, [K.gen], K.rational(-1), 2, precision_bits=precision_bits)


def field_spec(p):
    """Field-spec JSON for the eps-field, with alpha = eps the generator."""
    K, B = stender_unit_basis(p)
    return dump_field_spec(K, K.gen, B)


def solve_family(p, m, caps, report=None):
    """All (x, y, n) with xy != 0, n != -1, |x|, |y| <= caps.xy, |n| <= caps.n and |F_n(x, y)| <= m.

    Each F_n has no real root, so the per-y windows inside the no-real-root box make every
    n-slice complete.  The result is ``certified`` only when ``report`` bounds the
    exponent by caps.n and every such box fits inside caps.xy.
    """
    from .diophantine.imaginary import enumerate_form
    from .forms import FamilyResult

    if m < 0:
        return FamilyResult([], "certified", [])
    out = []
    truncated = False
    for n in range(-caps.n, caps.n + 1):
        if n == -1:
            continue
        F = family_form(p, n)
        pairs, cut = enumerate_form(F, m, caps.xy)
        truncated = truncated or cut
        ev = ExponentVector((n,))
        out.extend(SolutionTriple(x, y, ev, F(x, y)) for x, y in pairs)
    out.sort(key=SolutionTriple.key)
    certified = report is not None and not truncated and report.A_bound <= caps.n
    return FamilyResult(out, "certified" if certified else "capped", [-1] if caps.n >= 1 else [])
