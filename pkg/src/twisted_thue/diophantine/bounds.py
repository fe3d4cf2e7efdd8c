"""Explicit constants for the effective bound max{A, B} <= kappa log m and the solution box.

Every constant is computed in one private mpmath context, rounded up (or down
for the two lower-bound constants kappa4 and kappa_min), and registered with a
short description of the estimate it comes from and the constants it uses.
The registration order is a topological order of the dependency graph.

The lower bound for linear forms in logarithms is pluggable: a provider maps
(s, D) to the constant of |Lambda| >= exp(-kappa(s, D) H_1 ... H_s log C_0).
"""

import json
import math
from dataclasses import dataclass, field
from typing import Protocol

from .._mp import context, decimal, down, up
from ..algnum import minpoly_integer
from ..embeddings import is_almost_totally_imaginary
from ..errors import NotAlmostTotallyImaginary, ProviderMissing, ValidationError
from ..heights import abs_log_height
from ..units import embedding_lemma_constant, house_bound_constant, norm_reduction_constants

BITS = 128


class LinFormBoundProvider(Protocol):
    name: str

    def kappa(self, s, D):
        ...


class MatveevProvider:
    """kappa(s, D) = 2^(6s+20) s^4.5 D^(s+2) (1 + log D)."""

    name = "matveev-default"

    def kappa(self, s, D):
        ctx = context(BITS)
        s, D = ctx.mpf(s), ctx.mpf(D)
        return up(ctx, ctx.mpf(2) ** (6 * s + 20) * s ** ctx.mpf(4.5) * D ** (s + 2) * (1 + ctx.log(D)))


class TableProvider:
    """Constants read from a table {"s,D": value} with an optional fallback provider.

    Lookups use the smallest tabulated entry dominating (s, D) in both arguments,
    which keeps the result valid because the constant is nondecreasing in both.
    """

    def __init__(self, table, fallback=None, name="table"):
        self.table = {tuple(int(v) for v in k.split(",")): float(val) for k, val in table.items()}
        self.fallback = fallback
        self.name = name

    @classmethod
    def from_file(cls, path, fallback=None):
        with open(path) as fh:
            data = json.load(fh)
        return cls(data.get("kappa", data), fallback, name=f"file:{path}")

    def kappa(self, s, D):
        ctx = context(BITS)
        cands = [v for (ts, tD), v in self.table.items() if ts >= s and tD >= D]
        if cands:
            return ctx.mpf(min(cands))
        if self.fallback is None:
            raise ProviderMissing(f"no tabulated constant dominates s={s}, D={D}")
        return self.fallback.kappa(s, D)


def largest_fixed_point(a, b, rel_tol=1e-9):
    """Largest t > 0 with t <= a + b log t, by bisection; rounded up.

    If no t >= max(1, b) satisfies the inequality, max(1, b) is returned.
    """
    ctx = context(BITS)
    a, b = ctx.mpf(a), ctx.mpf(b)

    def g(t):
        return a + b * ctx.log(t) - t

    lo = max(ctx.mpf(1), b)
    if g(lo) < 0:
        return up(ctx, lo)
    hi = 2 * lo
    while g(hi) >= 0:
        lo, hi = hi, 2 * hi
    while hi - lo > rel_tol * hi:
        mid = (lo + hi) / 2
        if g(mid) >= 0:
            lo = mid
        else:
            hi = mid
    return up(ctx, hi)


@dataclass
class Constant:
    value: object
    lemma_tag: str
    inputs: list

    def to_json(self):
        return {"value": decimal(self.value, 25), "lemma_tag": self.lemma_tag, "inputs": list(self.inputs)}


@dataclass
class BoundReport:
    m: int
    provider: str
    constants: dict = field(default_factory=dict)
    kappa1: object = None
    solution_box: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def add(self, name, value, tag, inputs=()):
        for dep in inputs:
            if dep not in self.constants:
                raise KeyError(f"{name} depends on unregistered {dep}")
        if not (value > 0) or not math.isfinite(float(value)):
            raise ArithmeticError(f"constant {name} is not positive and finite: {value}")
        self.constants[name] = Constant(value, tag, list(inputs))
        return value

    def __getitem__(self, name):
        return self.constants[name].value

    @property
    def A_bound(self):
        return self.solution_box["A_bound"]

    @property
    def B_bound(self):
        return self.solution_box["B_bound"]

    @property
    def xy_bound(self):
        return self.solution_box["xy_bound"]

    def dependency_graph(self):
        return [[dep, name] for name, c in self.constants.items() for dep in c.inputs]

    def is_acyclic(self):
        order = {name: i for i, name in enumerate(self.constants)}
        return all(order[a] < order[b] for a, b in self.dependency_graph())

    def to_json(self):
        box = self.solution_box
        return {
            "m": self.m,
            "provider": self.provider,
            "constants": {k: c.to_json() for k, c in self.constants.items()},
            "kappa1": decimal(self.kappa1, 25),
            "solution_box": {
                "A_bound": decimal(box["A_bound"], 25),
                "B_bound": decimal(box["B_bound"], 25),
                "log_xy_bound": decimal(box["log_xy_bound"], 25),
                "xy_bound": decimal(box["xy_bound"], 25),
            },
            "dependency_graph": self.dependency_graph(),
            "notes": self.notes,
        }


def _chain(rep, prefix, d, r, r1, h_alpha, lead, unit_heights, c1, kappa4, c2bis, kfll1, kfll2, log_m):
    """Constants for solutions with |x| <= |y| of the family built on an element of height h_alpha
    whose minimal polynomial has leading coefficient ``lead``.  Returns kappa1 for this chain."""
    ctx = context(BITS)
    P = prefix
    log2 = ctx.log(2)
    dd = d * (d - 1)
    sum_h = ctx.fsum(unit_heights)
    H_u = max(ctx.mpf(1), 2 * max(unit_heights))

    rep.add(P + "h_alpha", max(h_alpha, ctx.ldexp(1, -BITS // 2)), "absolute logarithmic height of the twisted base element")
    c3 = rep.add(P + "c3", up(ctx, max(1, h_alpha + sum_h)),
                 "h(alpha eps) <= c3 A from h(alpha) plus the unit heights", [P + "h_alpha", "unit_height_sum"])
    c4 = rep.add(P + "c4", down(ctx, kappa4 / (2 * d * max(1, h_alpha))),
                 "A~ >= c4 A from the embedding lemma and the house of alpha eps", ["kappa4", P + "h_alpha"])
    c7 = rep.add(P + "c7", up(ctx, c2bis + ctx.log(lead) / log2 + ctx.ldexp(1, -BITS // 2)),
                 "h(rho) <= c7 log m for the balanced factor of beta", ["c2bis"])
    c8 = rep.add(P + "c8", up(ctx, max(1, c7, sum_h)),
                 "B~ <= c8 (B + log m) from beta = rho eta", [P + "c7", "unit_height_sum"])
    c9 = rep.add(P + "c9", up(ctx, max(1, d / kappa4, d * c7 / kappa4)),
                 "B <= c9 (B~ + log m) from the embedding lemma applied to eta", ["kappa4", P + "c7"])
    k_sep = rep.add(P + "kappa_sep", up(ctx, dd * (2 * c3 + log2)),
                    "distinct conjugates of alpha eps differ by at least exp(-kappa_sep A)", [P + "c3"])
    k_min = rep.add(P + "kappa_min", down(ctx, kappa4 / 2),
                    "lower exponent for the extreme embeddings once A and B exceed the threshold", ["kappa4"])
    k_maj = rep.add(P + "kappa_maj", up(ctx, c1 + max(d * h_alpha, d * c7, c2bis)),
                    "upper exponent for the extreme embeddings once A and B exceed the threshold",
                    ["c1", P + "h_alpha", P + "c7", "c2bis"])
    k5 = rep.add(P + "kappa5", up(ctx, max(1, 2 / log2, 2 * d * h_alpha / (kappa4 * log2), 2 * d * c7 / kappa4,
                                           2 * c2bis / kappa4, 2 / k_min)),
                 "threshold: A, B >= kappa5 log m makes all four extreme-embedding estimates valid",
                 ["kappa4", P + "h_alpha", P + "c7", "c2bis", P + "kappa_min"])

    # A small, B large: six-term equation with sigma_b, tau_b and a third embedding
    kA4 = rep.add(P + "kappa_A4", up(ctx, c1 + d * h_alpha + log2 + k_sep),
                  "log of the ratio of differences of conjugates of alpha eps, per unit of A",
                  ["c1", P + "h_alpha", P + "kappa_sep"])
    kA3 = rep.add(P + "kappa_A3", up(ctx, max(H_u, 2 * c7 + 4 * c3 * k5 + 2)),
                  "height bound per (1 + log m) for the last algebraic number when A is small",
                  ["unit_height_max", P + "c7", P + "c3", P + "kappa5"])
    K72 = kfll1["D3"] * H_u ** r * kA3
    tA = largest_fixed_point(2 + kA4 * k5 / (2 * k_min), K72 / (2 * k_min))
    rep.add(P + "t_small_A", tA, "largest fixed point of the B/(1+log m) inequality when A is small",
            ["kappa_FLL1_D3", P + "kappa_A4", P + "kappa_A3", P + "kappa5", P + "kappa_min"])
    kB72 = rep.add(P + "kappa_small_A", up(ctx, max(k5, (tA - 2) * (1 + 1 / log2))),
                   "max{A, B} <= kappa log m when A <= kappa5 log m", [P + "t_small_A", P + "kappa5"])

    # B small, A large: six-term equation with sigma_a, tau_a and a third embedding
    kB4 = rep.add(P + "kappa_B4", up(ctx, 1 + c2bis + c1 * k5 + dd * (2 * c8 * (k5 + 1) + 1)),
                  "log of the ratio of differences of conjugates of beta, per unit of log m",
                  ["c2bis", "c1", P + "kappa5", P + "c8"])
    kB3 = rep.add(P + "kappa_B3", up(ctx, max(H_u, 2 * h_alpha / log2 + 4 * c8 * (k5 + 1) + 2)),
                  "height bound per (1 + log m) for the last algebraic number when B is small",
                  ["unit_height_max", P + "h_alpha", P + "c8", P + "kappa5"])
    KB = kfll1["D3"] * H_u ** r * kB3
    tB = largest_fixed_point(2 + kB4 / (2 * k_min), KB / (2 * k_min))
    rep.add(P + "t_small_B", tB, "largest fixed point of the A/(1+log m) inequality when B is small",
            ["kappa_FLL1_D3", P + "kappa_B4", P + "kappa_B3", P + "kappa_min"])
    kA73 = rep.add(P + "kappa_small_B", up(ctx, max(k5, (tB - 2) * (1 + 1 / log2))),
                   "max{A, B} <= kappa log m when B <= kappa5 log m", [P + "t_small_B", P + "kappa5"])

    # both large
    k_sa = rep.add(P + "kappa_sigma_a_beta", down(ctx, k_min / 2),
                   "|sigma_a(beta)| >= exp(kappa A) when |x| <= |y|", [P + "kappa_min"])
    k16 = rep.add(P + "kappa16", up(ctx, (k_maj + 2 / k5) / k_min),
                  "A <= kappa16 B from the expression of y", [P + "kappa_maj", P + "kappa5", P + "kappa_min"])
    rep.add(P + "kappa17", up(ctx, k_maj + 2 / k5),
            "log max{|x|, |y|} <= kappa17 B from the expression of y", [P + "kappa_maj", P + "kappa5"])

    H9 = max(ctx.mpf(1), 2 * max(unit_heights), 2 * h_alpha)
    K9 = kfll2["D2"] * H9 ** (r + 1)
    t9 = largest_fixed_point(ctx.log(4) / k_min + (K9 / k_min) * ctx.log(max(1, k16)), K9 / k_min)
    rep.add(P + "t_unicity", t9, "largest fixed point of B <= a + b log B when tau_b is not unique",
            ["kappa_FLL2_D2", P + "h_alpha", P + "kappa_min", P + "kappa16"])
    k_uni = rep.add(P + "kappa_unicity", up(ctx, max(1, k16) * t9 / log2),
                    "max{A, B} <= kappa log m when another embedding shares the minimal |phi(beta)|",
                    [P + "t_unicity", P + "kappa16"])

    k_hA = rep.add(P + "kappa_H10", up(ctx, max(H_u, 4 * c3 + 2 + 2 * c7 / k5)),
                   "height bound per unit of A for the last algebraic number in the B-versus-A step",
                   ["unit_height_max", P + "c3", P + "c7", P + "kappa5"])
    K10 = kfll1["D3"] * H_u ** r * k_hA
    t10 = largest_fixed_point(2 + kA4 / (2 * k_min), K10 / (2 * k_min))
    rep.add(P + "t_B_over_A", t10, "largest fixed point of the 2 + B/A inequality",
            ["kappa_FLL1_D3", P + "kappa_A4", P + "kappa_H10", P + "kappa_min"])
    k_BA = rep.add(P + "kappa_B_over_A", up(ctx, max(ctx.ldexp(1, -BITS // 2), t10 - 2)), "B <= kappa A",
                   [P + "t_B_over_A"])

    k_h11 = rep.add(P + "kappa_H11", up(ctx, max(H_u, 2 * h_alpha / log2 + 2 * c7)),
                    "height bound per (1 + log m) for the last algebraic number in the final step",
                    ["unit_height_max", P + "h_alpha", P + "c7"])
    K11 = kfll1["D2"] * H_u ** r * k_h11
    scale = (1 + k_BA) * 2 / k_min
    t11 = largest_fixed_point(2 + scale * ctx.log(6), scale * K11)
    rep.add(P + "t_final", t11, "largest fixed point of the (A + B)/(1 + log m) inequality",
            ["kappa_FLL1_D2", P + "kappa_B_over_A", P + "kappa_min", P + "kappa_H11"])
    k_final = rep.add(P + "kappa_final", up(ctx, (t11 - 2) * (1 + 1 / log2)),
                      "max{A, B} <= kappa log m when A and B are both large and tau_b is real",
                      [P + "t_final"])

    branches = [k5, kB72, kA73, k_uni]
    inputs = [P + "kappa5", P + "kappa_small_A", P + "kappa_small_B", P + "kappa_unicity"]
    if r1 == 1:
        branches.append(k_final)
        inputs.append(P + "kappa_final")
    k_tot = rep.add(P + "kappa_total", up(ctx, max(branches)),
                    "max{A, B} <= kappa_total log m over all cases", inputs)

    k_y = rep.add(P + "kappa_y", up(ctx, 1 + c2bis + (c1 + k_sep) * k_tot),
                  "log |y| <= kappa_y log m once A, B <= kappa_total log m",
                  ["c2bis", "c1", P + "kappa_sep", P + "kappa_total"])
    k_x = rep.add(P + "kappa_x", up(ctx, 1 + max(c2bis + c1 * k_tot, c1 * k_tot + d * h_alpha / log2 + k_y)),
                  "log |x| <= kappa_x log m once A, B <= kappa_total log m",
                  ["c2bis", "c1", P + "kappa_total", P + "h_alpha", P + "kappa_y"])
    return rep.add(P + "kappa1bis", up(ctx, max(k_x, k_y, c3 * k_tot)),
                   "max{|x|, |y|, exp h(alpha eps)} <= m^kappa1bis for |x| <= |y|",
                   [P + "kappa_x", P + "kappa_y", P + "c3", P + "kappa_total"]), k_tot


def compose_bounds(field, B, alpha, m, provider=None):
    """The full chain for alpha and for alpha^-1 (which covers |x| > |y| through the reciprocal family)."""
    if provider is None:
        raise ProviderMissing("a linear-forms bound provider is required")
    if int(m) != m or m < 2:
        raise ValidationError("m must be an integer >= 2", "/m")
    E = B.embeddings
    if not is_almost_totally_imaginary(E):
        raise NotAlmostTotallyImaginary(f"signature {E.signature} has more than one real embedding")
    ctx = context(BITS)
    d = field.degree
    r = B.rank
    r1 = E.signature[0]
    rep = BoundReport(int(m), provider.name)
    rep.notes = {
        "signature": list(E.signature),
        "irreducibility": field.irreducibility,
        "third_embedding_rule": "embedding outside the excluded pair maximizing |phi(alpha eps) - tau(alpha eps)|, lowest index on ties",
        "final_step_applies": r1 == 1,
    }
    log_m = ctx.log(m)

    unit_heights = [abs_log_height(u, BITS).value for u in B.fundamental_units]
    rep.add("unit_height_sum", up(ctx, ctx.fsum(unit_heights)), "sum of the heights of the fundamental units")
    rep.add("unit_height_max", up(ctx, max(ctx.mpf(1), 2 * max(unit_heights))),
            "H = max{1, 2 h(eps_i)} bounds the heights of ratios of conjugate units")
    c1 = rep.add("c1", house_bound_constant(B), "two-sided house bound for units, sum of log max(house, house of the inverse)")
    kappa4 = rep.add("kappa4", embedding_lemma_constant(B), "embedding lemma: some |phi(gamma)| >= exp(kappa4 C)")
    rep.add("kappa3", up(ctx, 1 / kappa4), "C <= kappa3 max log |phi(gamma)|", ["kappa4"])
    delta, c2bis = norm_reduction_constants(B)
    rep.add("c2bis", c2bis, "max |sigma_j(rho)| <= m^c2bis after balancing by units")

    s = r + 1
    D2, D3 = d * (d - 1), d * (d - 1) * max(1, d - 2)
    kfll1, kfll2 = {}, {}
    for label, D in (("D2", D2), ("D3", D3)):
        k = provider.kappa(s + 1, D)
        rep.add(f"kappa_provider_{label}", k, f"linear-forms constant for s+1 = {s + 1} logarithms in degree {D}")
        val = up(ctx, 2 * ctx.pi * k * (1 + ctx.log(4 * s * D) / ctx.log(2)) + 1)
        kfll1[label] = rep.add(f"kappa_FLL1_{label}", val,
                               "corollary form with C_1 in place of C_0 (adds the 2 i pi term)",
                               [f"kappa_provider_{label}"])
        kfll2[label] = rep.add(f"kappa_FLL2_{label}", val, "corollary form with C_2 = max |c_j|",
                               [f"kappa_FLL1_{label}"])

    h_alpha = abs_log_height(alpha, BITS).value
    mp_alpha = minpoly_integer(alpha)
    mp_inv = minpoly_integer(alpha.inverse())
    k_direct, tot_direct = _chain(rep, "direct.", d, r, r1, h_alpha, abs(mp_alpha[0]), unit_heights,
                                  c1, kappa4, c2bis, kfll1, kfll2, log_m)
    k_recip, tot_recip = _chain(rep, "reciprocal.", d, r, r1, h_alpha, abs(mp_inv[0]), unit_heights,
                                c1, kappa4, c2bis, kfll1, kfll2, log_m)
    kappa1 = rep.add("kappa1", up(ctx, max(k_direct, k_recip)), "max over alpha and alpha^-1",
                     ["direct.kappa1bis", "reciprocal.kappa1bis"])
    total = max(tot_direct, tot_recip)
    rep.kappa1 = kappa1
    rep.solution_box = {
        "A_bound": up(ctx, total * log_m),
        "B_bound": up(ctx, total * log_m),
        "log_xy_bound": up(ctx, kappa1 * log_m),
        "xy_bound": up(ctx, ctx.exp(kappa1 * log_m)),
    }
    return rep
