"""Unit-lattice data: the house constant, the embedding lemma and norm reduction.

A UnitBasis is supplied by the caller (fundamental units are not computed here)
and validated: exact unit norms, exact torsion order, correct rank, and a
regulator consistent with the log matrix.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from ._mp import down, to_mpf, up
from .algnum import AlgElement
from .embeddings import Embedded, compute_embeddings, embed, house
from .errors import PrecisionExhausted, RankDeficient, ValidationError, ZeroElement


@dataclass(frozen=True)
class ExponentVector:
    """Exponents of a unit on the fundamental units, plus a torsion index."""

    exponents: tuple
    torsion_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @property
    def C(self):
        return max([1] + [abs(e) for e in self.exponents])

    def __neg__(self):
        return ExponentVector(tuple(-e for e in self.exponents), self.torsion_index)


class UnitBasis:
    def __init__(self, field, fundamental_units, torsion_generator=None, torsion_order=2,
                 regulator=None, precision_bits=128, embeddings=None):
        self.field = field
        self.fundamental_units = tuple(fundamental_units)
        self.torsion_generator = field.rational(-1) if torsion_generator is None else torsion_generator
        self.torsion_order = int(torsion_order)
        self.embeddings = embeddings or compute_embeddings(field, precision_bits)
        self._validate_exact()
        r1, r2 = self.embeddings.signature
        self.rank = len(self.fundamental_units)
        if self.rank != r1 + r2 - 1:
            raise ValidationError(
                f"expected {r1 + r2 - 1} fundamental units for signature ({r1}, {r2}), got {self.rank}",
                "/fundamental_units",
            )
        if self.rank < 1:
            raise ValidationError("unit rank must be at least 1", "/fundamental_units")
        self.unit_embeddings = tuple(embed(u, self.embeddings) for u in self.fundamental_units)
        self.torsion_embedding = embed(self.torsion_generator, self.embeddings)
        ctx = self.ctx
        self.log_matrix = ctx.matrix(
            [[ctx.log(abs(emb[j])) for emb in self.unit_embeddings] for j in range(field.degree)]
        )
        # |log|v| - log|v_true|| <= -log(1 - r/|v|) for an enclosure of radius r < |v|
        self.log_error = up(ctx, max(
            -ctx.log(1 - r / abs(v)) for emb in self.unit_embeddings for v, r in zip(emb.values, emb.radii)
        ) + ctx.ldexp(ctx.mpf(1), -(ctx.prec - 4)))
        self.computed_regulator = self._regulator_from_logs()
        tol = ctx.ldexp(ctx.mpf(1), -(ctx.prec // 2))
        if self.computed_regulator <= tol:
            raise RankDeficient("log matrix of the units has rank below r")
        if regulator is not None:
            given = ctx.mpf(regulator)
            if abs(given - self.computed_regulator) > self.computed_regulator / 100:
                raise ValidationError(
                    f"regulator {regulator} disagrees with the log matrix value "
                    f"{ctx.nstr(self.computed_regulator, 15)} by more than 1%",
                    "/regulator",
                )
        self.regulator = self.computed_regulator

    @property
    def ctx(self):
        return self.embeddings.ctx

    @property
    def degree(self):
        return self.field.degree

    def _validate_exact(self):
        for i, u in enumerate(self.fundamental_units):
            if u.field != self.field:
                raise ValidationError("unit lives in another field", f"/fundamental_units/{i}")
            if abs(u.norm()) != 1:
                raise ValidationError(f"norm {u.norm()} is not +-1", f"/fundamental_units/{i}")
            if not all(c.denominator == 1 for c in u.charpoly()):
                raise ValidationError("not an algebraic integer", f"/fundamental_units/{i}")
        w = self.torsion_order
        if w < 2:
            raise ValidationError("torsion order must be at least 2", "/torsion_order")
        z = self.torsion_generator
        if z ** w != self.field.one:
            raise ValidationError("torsion_generator^w != 1", "/torsion_generator")
        if any(z ** k == self.field.one for k in range(1, w) if w % k == 0):
            raise ValidationError("torsion generator has smaller order", "/torsion_order")

    def _regulator_from_logs(self):
        E = self.embeddings
        ctx = self.ctx
        places = [j for j in range(self.degree) if E.pairing[j] >= j]
        rows = []
        for j in places[: self.rank]:
            weight = 1 if E.is_real(j) else 2
            rows.append([weight * self.log_matrix[j, i] for i in range(self.rank)])
        return abs(ctx.det(ctx.matrix(rows)))

    def exponent_vector(self, exponents, torsion_index=0):
        ev = ExponentVector(tuple(exponents), torsion_index)
        if len(ev.exponents) != self.rank:
            raise ValueError(f"expected {self.rank} exponents")
        return ev


def unit_from_exponents(B, e):
    """zeta^t * prod eps_i^(e_i), computed exactly by binary powering."""
    result = B.torsion_generator ** (e.torsion_index % B.torsion_order)
    for u, k in zip(B.fundamental_units, e.exponents):
        if k:
            result = result * u ** k
    return result


def embed_unit(B, e):
    """Embeddings of a unit from the embedded fundamental units (no cancellation)."""
    ctx = B.ctx
    values, radii = [], []
    for j in range(B.degree):
        v = B.torsion_embedding[j] ** (e.torsion_index % B.torsion_order)
        rel = ctx.mpf(0)
        for emb, k in zip(B.unit_embeddings, e.exponents):
            if k:
                w, r = emb.values[j], emb.radii[j]
                v *= w ** k
                rel += abs(k) * r / (abs(w) - r)
        values.append(v)
        rel += B.degree * ctx.ldexp(ctx.mpf(1), -(ctx.prec - 8)) * (1 + sum(map(abs, e.exponents)))
        radii.append(abs(v) * ctx.expm1(rel))
    return Embedded(tuple(values), tuple(radii))


def house_bound_constant(B):
    """c1 = sum_i log max(house(eps_i), house(1/eps_i)), so that exp(-c1 C) <= |phi(gamma)| <= exp(c1 C).

    Both houses enter: the lower bound on |phi(gamma)| is an upper bound on
    |phi(1/gamma)|, whose factors are the inverse units.
    """
    ctx = B.ctx
    total = ctx.mpf(0)
    for u in B.fundamental_units:
        total += ctx.log(up(ctx, max(house(u, B.embeddings), house(u.inverse(), B.embeddings))))
    return up(ctx, total)


def left_inverse(B):
    """Least-squares left inverse (M^T M)^-1 M^T of the d x r log matrix."""
    ctx = B.ctx
    M = B.log_matrix
    return ctx.inverse(M.T * M) * M.T


def embedding_lemma_kappa3(B):
    """Smallest k with C <= k * max_phi log|phi(gamma)| for every unit gamma (mod torsion).

    With L a left inverse of the log matrix, c = L l for the log vector l of gamma,
    and l ranges over the sum-zero vectors with max entry 1; the extreme points of
    that set put d-1 entries at 1 and one at -(d-1), which gives
    max_i max_k |sum_phi L[i, phi] - d L[i, k]|.
    """
    ctx = B.ctx
    L = left_inverse(B)
    d = B.degree
    worst = ctx.mpf(0)
    for i in range(B.rank):
        row = [L[i, k] for k in range(d)]
        total = ctx.fsum(row)
        worst = max(worst, max(abs(total - d * x) for x in row))
    return up(ctx, worst)


def embedding_lemma_constant(B):
    """kappa4 with max_phi log|phi(gamma)| >= kappa4 C and min_phi log|phi(gamma)| <= -kappa4 C."""
    ctx = B.ctx
    k3 = embedding_lemma_kappa3(B)
    if k3 == 0:
        raise RankDeficient("degenerate left inverse")
    # L is a left inverse of the computed matrix only; L M_true = I + E with |E|_inf <= |L|_inf r log_error
    L = left_inverse(B)
    norm_L = max(ctx.fsum(abs(L[i, k]) for k in range(B.degree)) for i in range(B.rank))
    slack = norm_L * B.rank * B.log_error
    if slack >= ctx.mpf(1) / 2:
        raise PrecisionExhausted("log matrix too inaccurate for the embedding lemma")
    return down(ctx, (1 - slack) / k3)


def norm_reduction_constants(B):
    """(delta, c2bis) for the balanced representative of a class modulo units.

    After rounding the exact real solution, each log|sigma_j(rho)| differs from
    log|N|/d by at most delta = max_j sum_i |M[j, i]| / 2, hence
    max_j |sigma_j(rho)| <= m^(1/d) e^delta <= m^c2bis with c2bis = 1/d + delta/log 2
    for every m >= 2.
    """
    ctx = B.ctx
    M = B.log_matrix
    # rounding error per exponent at most 1/2 + 2^(-prec/2): valid while exponents stay below 2^(prec/4)
    half = ctx.mpf(1) / 2 + ctx.ldexp(ctx.mpf(1), -(ctx.prec // 2))
    delta = max(ctx.fsum(abs(M[j, i]) + B.log_error for i in range(B.rank)) for j in range(B.degree)) * half
    delta = up(ctx, delta)
    return delta, up(ctx, ctx.mpf(1) / B.degree + delta / ctx.log(2))


class Reduction(NamedTuple):
    exponents: ExponentVector
    rho: AlgElement
    achieved: object
    c2bis: object


def _round_half_to_zero(x, ctx):
    f = int(ctx.floor(x))
    frac = x - f
    if frac > 0.5:
        return f + 1
    if frac < 0.5:
        return f
    return f if x > 0 else f + 1


def reduce_by_units(gamma, B, m):
    """Find a unit eps with eps*gamma balanced: all |sigma_j(eps gamma)| near |N gamma|^(1/d).

    Returns the exponents of eps, rho = eps*gamma, the achieved
    max_j |log(m^(-1/d) |sigma_j(rho)|)| and the exponent c2bis of the
    guaranteed bound max_j |sigma_j(rho)| <= m^c2bis.  Torsion is ignored.
    """
    if gamma.is_zero():
        raise ZeroElement("cannot reduce zero")
    ctx = B.ctx
    d = B.degree
    emb = embed(gamma, B.embeddings)
    for v, r in zip(emb.values, emb.radii):
        if abs(v) <= r:
            raise PrecisionExhausted("embedding of gamma not bounded away from zero")
    logs = [ctx.log(abs(v)) for v in emb.values]
    mean = ctx.fsum(logs) / d
    target = ctx.matrix([-(x - mean) for x in logs])
    exact = left_inverse(B) * target
    ev = ExponentVector(tuple(_round_half_to_zero(exact[i], ctx) for i in range(B.rank)))
    rho = unit_from_exponents(B, ev) * gamma
    rho_emb = embed_unit(B, ev)
    shift = ctx.log(to_mpf(ctx, m)) / d
    achieved = max(abs(ctx.log(abs(u * v)) - shift) for u, v in zip(rho_emb.values, emb.values))
    _, c2bis = norm_reduction_constants(B)
    return Reduction(ev, rho, up(ctx, achieved), c2bis)


def log_vector(values):
    return [math.log(abs(complex(v))) for v in values]
