"""Per-solution diagnostics: recovering (x, y) from embeddings, the six-term
unit equation, the four privileged embeddings and the size parameters A, B.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .._mp import decimal
from ..embeddings import Embedded, embed
from ..errors import CoincidentEmbeddings, PrecisionExhausted
from ..heights import abs_log_height
from ..forms import Residual
from ..units import embed_unit, reduce_by_units, unit_from_exponents


def eliminate_xy(beta, ae, beta_radii=(0, 0), ae_radii=(0, 0)):
    """(y, x) from beta_i = x - ae_i y at two distinct embeddings."""
    b1, b2 = beta
    u1, u2 = ae
    den = u2 - u1
    if abs(den) <= ae_radii[0] + ae_radii[1]:
        raise CoincidentEmbeddings("the two values of alpha*eps are not certifiably distinct")
    y = (b1 - b2) / den
    x = (b1 * u2 - b2 * u1) / den
    return y, x


def siegel_residual(u, v, u_radii=(0, 0, 0), v_radii=(0, 0, 0)):
    """|u1 v2 - u1 v3 + u2 v3 - u2 v1 + u3 v1 - u3 v2| with a first-order radius."""
    u1, u2, u3 = u
    v1, v2, v3 = v
    value = abs(u1 * v2 - u1 * v3 + u2 * v3 - u2 * v1 + u3 * v1 - u3 * v2)
    au = [abs(z) for z in u]
    av = [abs(z) for z in v]
    radius = 0
    for i in range(3):
        others_v = sum(av[j] + v_radii[j] for j in range(3) if j != i)
        others_u = sum(au[j] + u_radii[j] for j in range(3) if j != i)
        radius += u_radii[i] * others_v + v_radii[i] * others_u
    return Residual(value, radius)


@dataclass(frozen=True)
class PrivilegedEmbeddings:
    sigma_a: int
    tau_a: int
    sigma_b: int
    tau_b: int
    tau_b_nonunique: bool
    tau_a_generic: bool
    tau_b_generic: bool

    def to_json(self):
        return dict(self.__dict__)


def _extreme(emb, pairing, largest, name, strict=True):
    """Index of the extreme modulus; returns (index, tie_outside_class, tie_with_conjugate)."""
    mods = [abs(v) for v in emb.values]
    rad = emb.radii
    if largest:
        best = max(range(len(mods)), key=lambda j: (mods[j], -j))
        ties = [j for j in range(len(mods)) if mods[j] + rad[j] >= mods[best] - rad[best]]
    else:
        best = min(range(len(mods)), key=lambda j: (mods[j], j))
        ties = [j for j in range(len(mods)) if mods[j] - rad[j] <= mods[best] + rad[best]]
    cls = {best, pairing[best]}
    outside = [j for j in ties if j not in cls]
    if outside and strict:
        raise PrecisionExhausted(f"{name}: moduli of embeddings {sorted(ties)} not separated")
    idx = min(cls)
    return idx, bool(outside), pairing[best] != best


def select_privileged(ae, beta, pairing):
    """sigma_a / tau_a maximize / minimize |phi(alpha eps)|, sigma_b / tau_b the same for beta.

    Conjugate embeddings always tie; the lower index is taken.  A tie across
    different conjugate classes raises PrecisionExhausted except for tau_b,
    where it (or a complex tau_b) sets tau_b_nonunique.
    """
    sigma_a, _, _ = _extreme(ae, pairing, True, "sigma_a")
    tau_a, _, _ = _extreme(ae, pairing, False, "tau_a")
    sigma_b, _, _ = _extreme(beta, pairing, True, "sigma_b")
    tau_b, outside, complex_tau = _extreme(beta, pairing, False, "tau_b", strict=False)
    return PrivilegedEmbeddings(
        sigma_a, tau_a, sigma_b, tau_b,
        tau_b_nonunique=outside or complex_tau,
        tau_a_generic=tau_a not in (sigma_a, pairing[sigma_a]),
        tau_b_generic=tau_b not in (sigma_b, pairing[sigma_b]),
    )


def third_embedding(ae, exclude, anchor):
    """Embedding outside ``exclude`` maximizing |phi(alpha eps) - anchor(alpha eps)| (lowest index on ties)."""
    cands = [j for j in range(len(ae.values)) if j not in exclude]
    if not cands:
        raise CoincidentEmbeddings("no third embedding available")
    target = ae.values[anchor]
    return max(cands, key=lambda j: (abs(ae.values[j] - target), -j))


@dataclass(frozen=True)
class ParameterProfile:
    A_tilde: object
    A: int
    B_tilde: object
    B: int
    rho_height: object
    b_exponents: tuple

    def to_json(self):
        return {
            "A_tilde": decimal(self.A_tilde, 20),
            "A": self.A,
            "B_tilde": decimal(self.B_tilde, 20),
            "B": self.B,
            "rho_height": decimal(self.rho_height, 20),
            "b_exponents": list(self.b_exponents),
        }


class SolutionData(NamedTuple):
    profile: ParameterProfile
    ae: object
    beta: object
    privileged: object


def parameter_profile(alpha, B, x, y, e, m, bits=None):
    """A, A~, B, B~ and h(rho) for one solution (x, y, eps); beta = x - alpha eps y = rho eta."""
    bits = bits or B.embeddings.precision_bits
    ae_elem = alpha * unit_from_exponents(B, e)
    beta_elem = x - ae_elem * y
    red = reduce_by_units(beta_elem, B, max(m, 2))
    rho = red.rho
    b = tuple(-k for k in red.exponents.exponents)
    ctx = B.ctx
    A_tilde = max(ctx.mpf(1), abs_log_height(ae_elem, bits).value)
    B_tilde = max(ctx.mpf(1), abs_log_height(beta_elem, bits).value)
    return ParameterProfile(
        A_tilde, e.C, B_tilde, max([1] + [abs(k) for k in b]), abs_log_height(rho, bits).value, b
    )


def solution_data(alpha, B, x, y, e, m):
    """Profile plus the embedded alpha*eps and beta (products of certified factors) and privileged indices."""
    profile = parameter_profile(alpha, B, x, y, e, m)
    E = B.embeddings
    emb_alpha = embed(alpha, E)
    emb_unit = embed_unit(B, e)
    ctx = B.ctx
    ae_vals, ae_rad = [], []
    for a, ra, u, ru in zip(emb_alpha.values, emb_alpha.radii, emb_unit.values, emb_unit.radii):
        ae_vals.append(a * u)
        ae_rad.append((abs(a) + ra) * (abs(u) + ru) - abs(a) * abs(u) + abs(a * u) * ctx.ldexp(1, -(ctx.prec - 4)))
    ae = Embedded(tuple(ae_vals), tuple(ae_rad))
    beta = Embedded(tuple(x - v * y for v in ae_vals), tuple(abs(y) * r for r in ae_rad))
    priv = select_privileged(ae, beta, E.pairing)
    return SolutionData(profile, ae, beta, priv)
