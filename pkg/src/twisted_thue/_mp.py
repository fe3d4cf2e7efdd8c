"""Private mpmath contexts keyed by precision, plus one-sided rounding nudges.

Each precision gets its own ``MPContext`` so that no function ever touches the
global ``mpmath.mp`` precision.  Contexts are never mutated after creation.
"""

from fractions import Fraction
from functools import lru_cache

import mpmath

GUARD_BITS = 32


@lru_cache(maxsize=None)
def context(bits):
    if bits < 16:
        raise ValueError("precision must be at least 16 bits")
    ctx = mpmath.MPContext()
    ctx.prec = int(bits)
    return ctx


def to_mpf(ctx, q):
    """Convert an int or Fraction to the nearest ``ctx.mpf``."""
    if isinstance(q, Fraction):
        if q.denominator == 1:
            return ctx.mpf(q.numerator)
        return ctx.mpf(q.numerator) / q.denominator
    return ctx.mpf(q)


def as_fraction(x):
    """Exact rational value of a finite mpf."""
    man, exp = x.man_exp
    return Fraction(man) * Fraction(2) ** exp


def up(ctx, x, slack_bits=8):
    """Nudge a real upward by a few ulps of ``ctx``; an exact zero stays zero."""
    x = ctx.mpf(x)
    if x == 0:
        return x
    eps = ctx.ldexp(ctx.mpf(1), -(ctx.prec - slack_bits))
    return x + abs(x) * eps + ctx.ldexp(ctx.mpf(1), -(4 * ctx.prec))


def down(ctx, x, slack_bits=8):
    x = ctx.mpf(x)
    if x == 0:
        return x
    eps = ctx.ldexp(ctx.mpf(1), -(ctx.prec - slack_bits))
    return x - abs(x) * eps - ctx.ldexp(ctx.mpf(1), -(4 * ctx.prec))


def decimal(x, digits=30):
    """Canonical decimal string for JSON output."""
    return mpmath.nstr(x, digits, min_fixed=-5, max_fixed=30)
