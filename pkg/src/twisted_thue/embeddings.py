"""Certified complex roots and the embeddings of a number field.

Roots are found by Aberth iteration started from Newton-polygon radii and then
enclosed in disks using Smith's residual bound: the disk around z_i of radius
n |p(z_i)| / |a0 prod_{j != i} (z_i - z_j)| contains a root, and pairwise
disjoint disks contain exactly one root each.  Rounding of the residual is
accounted for with a Horner error term.
"""

import math
from dataclasses import dataclass

from ._mp import as_fraction, context, to_mpf, up
from .errors import FieldMismatch, PrecisionExhausted, ValidationError


@dataclass(frozen=True)
class RootEnclosures:
    """Disks (value, radius) each containing exactly one root of a polynomial."""

    values: tuple
    radii: tuple
    precision_bits: int

    @property
    def radius(self):
        return max(self.radii)

    @property
    def ctx(self):
        return context(self.precision_bits)

    def __len__(self):
        return len(self.values)


def _newton_polygon_guesses(coeffs, ctx):
    n = len(coeffs) - 1
    low = list(reversed(coeffs))

    def logabs(c):
        c = abs(c)
        if hasattr(c, "numerator"):
            return math.log(c.numerator) - math.log(c.denominator)
        return math.log(c)

    pts = [(i, logabs(c)) for i, c in enumerate(low) if c != 0]
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop while the middle point lies on or below the chord
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    guesses = []
    for (i, li), (j, lj) in zip(hull, hull[1:]):
        k = j - i
        u = ctx.exp(ctx.mpf((li - lj) / k))
        for t in range(k):
            angle = 2 * math.pi * t / k + 2 * math.pi * i / n + 0.7
            guesses.append(u * ctx.expj(ctx.mpf(angle)))
    return guesses


def _horner(a, z):
    p = a[0]
    dp = 0
    for c in a[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(a, z, ctx):
    n = len(z)
    tol = ctx.ldexp(ctx.mpf(1), -(ctx.prec - 6))
    settled = 0
    for _ in range(400 + 4 * ctx.prec):
        worst = ctx.mpf(0)
        for i in range(n):
            p, dp = _horner(a, z[i])
            if p == 0:
                continue
            if dp == 0:
                z[i] += ctx.ldexp(abs(z[i]) + 1, -ctx.prec // 2)
                worst = ctx.mpf(1)
                continue
            ratio = p / dp
            s = ctx.fsum(1 / (z[i] - z[j]) for j in range(n) if j != i)
            w = ratio / (1 - ratio * s)
            z[i] -= w
            rel = abs(w) / max(abs(z[i]), ctx.ldexp(ctx.mpf(1), -4 * ctx.prec))
            worst = max(worst, rel)
        if worst <= tol:
            settled += 1
            if settled >= 2:
                break
        else:
            settled = 0
    return z


def _smith_radii(a, z, ctx):
    n = len(z)
    eps = ctx.ldexp(ctx.mpf(1), -ctx.prec)
    inflate = 1 + ctx.ldexp(ctx.mpf(1), -(ctx.prec - 2 * n - 8))
    absa = [abs(c) for c in a]
    radii = []
    for i in range(n):
        p, _ = _horner(a, z[i])
        mag = ctx.mpf(0)
        for c in absa:
            mag = mag * abs(z[i]) + c
        err = 4 * n * eps * mag
        denom = absa[0]
        for j in range(n):
            if j != i:
                denom *= abs(z[i] - z[j])
        if denom == 0:
            raise PrecisionExhausted("coincident root approximations")
        radii.append(n * (abs(p) + err) / denom * inflate)
    return radii


def polynomial_roots(coeffs, bits):
    """Enclose every root of an integer or rational polynomial (leading first).

    The returned order is canonical: real roots ascending, then conjugate pairs by
    ascending real part with the positive imaginary member first.  Real
    classification is certified for real polynomials.
    """
    ctx = context(bits)
    coeffs = list(coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("polynomial must have positive degree")
    a = [to_mpf(ctx, c) for c in coeffs]
    if n == 1:
        root = -a[1] / a[0]
        r = abs(root) * ctx.ldexp(ctx.mpf(1), -(ctx.prec - 2)) + ctx.ldexp(ctx.mpf(1), -4 * ctx.prec)
        return RootEnclosures((ctx.mpc(root),), (r,), bits)
    if coeffs[-1] == 0:
        raise ValueError("zero root not supported; divide out X first")
    z = _aberth(a, _newton_polygon_guesses(coeffs, ctx), ctx)
    radii = _smith_radii(a, z, ctx)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= 4 * (radii[i] + radii[j]):
                raise PrecisionExhausted(f"roots not separated at {bits} bits")
    reals, uppers = [], []
    partner = {}
    for i in range(n):
        if abs(z[i].imag) <= radii[i]:
            reals.append(i)
            continue
        if z[i].imag < 0:
            continue
        conj = ctx.conj(z[i])
        cands = [j for j in range(n) if j != i and abs(z[j] - conj) <= radii[i] + radii[j]]
        if len(cands) != 1:
            raise PrecisionExhausted("conjugate pairing not certified")
        partner[i] = cands[0]
        uppers.append(i)
    if len(reals) + 2 * len(uppers) != n:
        raise PrecisionExhausted("conjugate pairing not certified")
    reals.sort(key=lambda i: z[i].real)
    uppers.sort(key=lambda i: (z[i].real, z[i].imag))
    values, out_radii = [], []
    for i in reals:
        # snapping to the axis moves the center by at most |Im z_i| <= r_i
        values.append(ctx.mpc(z[i].real, 0))
        out_radii.append(2 * radii[i])
    for i in uppers:
        j = partner[i]
        r = 2 * max(radii[i], radii[j])
        # average the pair so the stored values are exact conjugates
        re = (z[i].real + z[j].real) / 2
        im = (z[i].imag - z[j].imag) / 2
        values.extend([ctx.mpc(re, im), ctx.mpc(re, -im)])
        out_radii.extend([r, r])
    return RootEnclosures(tuple(values), tuple(out_radii), bits)


@dataclass(frozen=True)
class EmbeddingSet:
    """The d embeddings of a field as certified values of sigma_j(alpha)."""

    field: object
    roots: RootEnclosures
    signature: tuple
    pairing: tuple

    @property
    def values(self):
        return self.roots.values

    @property
    def radii(self):
        return self.roots.radii

    @property
    def radius(self):
        return self.roots.radius

    @property
    def precision_bits(self):
        return self.roots.precision_bits

    @property
    def ctx(self):
        return self.roots.ctx

    def is_real(self, j):
        return self.pairing[j] == j


def compute_embeddings(field, precision_bits=128):
    if precision_bits < 64:
        raise ValidationError("precision_bits must be at least 64", "/precision_bits")
    roots = polynomial_roots(field.coeffs, precision_bits)
    r1 = sum(1 for v in roots.values if v.imag == 0)
    r2 = (field.degree - r1) // 2
    pairing = list(range(field.degree))
    for j in range(r1, field.degree, 2):
        pairing[j], pairing[j + 1] = j + 1, j
    return EmbeddingSet(field, roots, (r1, r2), tuple(pairing))


@dataclass(frozen=True)
class Embedded:
    """Images of one element under every embedding, with per-value error radii."""

    values: tuple
    radii: tuple

    @property
    def radius(self):
        return max(self.radii)

    def __getitem__(self, j):
        return self.values[j]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def embed(a, E):
    """Evaluate the coordinate polynomial of ``a`` at every sigma_j(alpha)."""
    if a.field != E.field:
        raise FieldMismatch("element and embeddings belong to different fields")
    ctx = E.ctx
    eps = ctx.ldexp(ctx.mpf(1), -ctx.prec)
    d = len(a.coords)
    coeffs = [to_mpf(ctx, c) for c in reversed(a.coords)]
    abscoeffs = [abs(c) for c in coeffs]
    values, radii = [], []
    for z, r in zip(E.values, E.radii):
        v = ctx.mpc(0)
        for c in coeffs:
            v = v * z + c
        az = abs(z)
        shifted = ctx.mpf(0)
        plain = ctx.mpf(0)
        for c in abscoeffs:
            shifted = shifted * (az + r) + c
            plain = plain * az + c
        values.append(v)
        radii.append((shifted - plain) + 4 * d * eps * shifted + eps * abs(v))
    return Embedded(tuple(values), tuple(radii))


def house(a, E):
    if a.is_rational():
        q = abs(a.coords[0])
        v = to_mpf(E.ctx, q)
        return v if as_fraction(v) == q else up(E.ctx, v)
    emb = embed(a, E)
    return max(abs(v) + r for v, r in zip(emb.values, emb.radii))


def is_almost_totally_imaginary(E):
    return E.signature[0] <= 1
