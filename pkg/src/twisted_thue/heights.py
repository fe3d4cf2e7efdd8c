"""Mahler measure and absolute logarithmic height.

Both feed upper-bound constants, so every value returned here is rounded up.
"""

from dataclasses import dataclass

from ._mp import context, up
from .algnum import minpoly_integer
from .embeddings import polynomial_roots
from .errors import ZeroElement


@dataclass(frozen=True)
class HeightValue:
    value: object
    precision_bits: int

    def __float__(self):
        return float(self.value)


def mahler_measure(p, roots=None, bits=128):
    """|a0| * prod max(1, |root|) for a primitive integer polynomial, rounded up.

    ``roots`` may be a precomputed RootEnclosures for ``p``.
    """
    if len(p) == 2:
        return context(bits).mpf(max(abs(p[0]), abs(p[1])))
    if roots is None:
        roots = polynomial_roots(p, bits)
    ctx = roots.ctx
    m = ctx.mpf(abs(p[0]))
    for v, r in zip(roots.values, roots.radii):
        m *= max(ctx.mpf(1), abs(v) + r)
    return up(ctx, m)


def abs_log_height(a, bits=128):
    """h(a) = log M(a) / deg(a), using the degree of the minimal polynomial."""
    if a.is_zero():
        raise ZeroElement("height of zero is undefined")
    mp = minpoly_integer(a)
    ctx = context(bits)
    if len(mp) == 2:
        # rational p/q: log max(|p|, |q|) exactly up to the final rounding
        return HeightValue(up(ctx, ctx.log(max(abs(mp[0]), abs(mp[1])))), bits)
    deg = len(mp) - 1
    value = ctx.log(mahler_measure(mp, bits=bits)) / deg
    return HeightValue(up(ctx, max(value, ctx.mpf(0))), bits)
