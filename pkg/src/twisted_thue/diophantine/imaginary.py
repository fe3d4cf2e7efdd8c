"""Thue inequalities for a single form, with certified boxes when F(X, 1) has no real root.

With alpha_j the roots of F(X, 1), |x - alpha_j y| >= |Im alpha_j| |y|, so
|F(x, y)| <= m forces |y| <= (m / a_0)^(1/d) prod_pairs |Im alpha_j|^(-2/d).
For fixed y the same product gives a window for x around each Re(alpha_j) y.
"""

from typing import NamedTuple

from .._mp import up
from ..embeddings import polynomial_roots
from ..errors import RealRootPresent
from ..forms import evaluate


class BoxBounds(NamedTuple):
    y_bound: object
    x_bound: object


def root_bits(F):
    """Working precision that separates the roots of F(X, 1) comfortably."""
    height = max(abs(c) for c in F.coeffs).bit_length()
    return max(128, 96 + 2 * F.degree * height)


def form_roots(F, bits=None):
    return polynomial_roots(F.coeffs, bits or root_bits(F))


def _pairs(roots):
    """(re, im_lower, radius) for the upper member of every conjugate pair."""
    ctx = roots.ctx
    out = []
    for v, r in zip(roots.values, roots.radii):
        if v.imag > 0:
            out.append((v.real, v.imag - r, r))
    return out


def real_root_count(roots):
    return sum(1 for v in roots.values if v.imag == 0)


def lemma3_bounds(F, m, roots=None):
    """Certified (y_bound, x_bound) for all solutions of |F(x, y)| <= m, both rounded up."""
    roots = roots or form_roots(F)
    if real_root_count(roots):
        raise RealRootPresent("F(X, 1) has a real root")
    ctx = roots.ctx
    d = F.degree
    a0 = ctx.mpf(abs(F.coeffs[0]))
    scale = (ctx.mpf(m) / a0) ** (ctx.mpf(1) / d) if m > 0 else ctx.mpf(0)
    prod = ctx.mpf(1)
    for _, im_low, _ in _pairs(roots):
        prod *= im_low ** 2
    y_bound = up(ctx, scale * prod ** (-ctx.mpf(1) / d))
    house = max(abs(v) + r for v, r in zip(roots.values, roots.radii))
    x_bound = up(ctx, max(2 * house * y_bound, 2 * scale))
    return BoxBounds(y_bound, x_bound)


def x_window(F, roots, y, m):
    """Integer range (lo, hi) containing every x with |F(x, y)| <= m, or None for no restriction.

    Uses the conjugate pairs (and the real root, if exactly one) of F(X, 1).
    An empty window is returned as (1, 0).
    """
    ctx = roots.ctx
    a0 = abs(F.coeffs[0])
    budget = ctx.mpf(m) / a0
    pairs = _pairs(roots)
    ay = abs(y)
    n_real = real_root_count(roots)
    if n_real > 1 or y == 0:
        return None
    if n_real == 1:
        prod = ctx.mpf(1)
        for _, im_low, _ in pairs:
            prod *= (im_low * ay) ** 2
        j = next(i for i, v in enumerate(roots.values) if v.imag == 0)
        center = roots.values[j].real * y
        width = up(ctx, budget / prod) + ay * roots.radii[j]
        return int(ctx.floor(center - width)) - 1, int(ctx.ceil(center + width)) + 1
    sq = [(im_low * ay) ** 2 for _, im_low, _ in pairs]
    lo, hi = None, None
    for j, (re, im_low, r) in enumerate(pairs):
        others = ctx.mpf(1)
        for k, s in enumerate(sq):
            if k != j:
                others *= s
        slack = up(ctx, budget / others) - sq[j]
        if slack < 0:
            return 1, 0
        width = up(ctx, ctx.sqrt(slack)) + ay * r
        center = re * y
        a = int(ctx.floor(center - width)) - 1
        b = int(ctx.ceil(center + width)) + 1
        lo = a if lo is None else max(lo, a)
        hi = b if hi is None else min(hi, b)
    return lo, hi


def _by_abs(limit):
    yield 0
    for k in range(1, limit + 1):
        yield k
        yield -k


def _window_values(window, limit):
    if window is None:
        lo, hi = -limit, limit
    else:
        lo, hi = max(window[0], -limit), min(window[1], limit)
    return sorted(range(lo, hi + 1), key=lambda x: (abs(x), x))


def solve_fixed_totally_imaginary(F, m, include_axes=False, roots=None):
    """Every (x, y) != (0, 0) with |F(x, y)| <= m inside the certified box.

    Pairs with x = 0 or y = 0 are returned only when ``include_axes`` is set.
    """
    roots = roots or form_roots(F)
    bounds = lemma3_bounds(F, m, roots)
    if m < 0:
        return []
    ctx = roots.ctx
    y_max = int(ctx.floor(bounds.y_bound))
    x_max = int(ctx.floor(bounds.x_bound))
    out = []
    for y in _by_abs(y_max):
        if y == 0 and not include_axes:
            continue
        for x in _window_values(x_window(F, roots, y, m), x_max):
            if (x == 0 and (y == 0 or not include_axes)):
                continue
            if abs(evaluate(F, x, y)) <= m:
                out.append((x, y))
    return sorted(out)


def enumerate_form(F, m, cap, roots=None):
    """Pairs with xy != 0, |x|, |y| <= cap and |F(x, y)| <= m.

    Returns (pairs, truncated); truncated is True when solutions outside the cap
    cannot be excluded (a real root, or a certified box exceeding the cap).
    """
    roots = roots or form_roots(F)
    ctx = roots.ctx
    n_real = real_root_count(roots)
    if n_real == 0:
        bounds = lemma3_bounds(F, m, roots)
        y_max = min(cap, int(ctx.floor(bounds.y_bound)))
        x_max = min(cap, int(ctx.floor(bounds.x_bound)))
        truncated = bounds.y_bound >= cap + 1 or bounds.x_bound >= cap + 1
    else:
        y_max = x_max = cap
        truncated = True
    out = []
    for y in _by_abs(y_max):
        if y == 0:
            continue
        for x in _window_values(x_window(F, roots, y, m), x_max):
            if x != 0 and abs(evaluate(F, x, y)) <= m:
                out.append((x, y))
    return sorted(out), truncated
