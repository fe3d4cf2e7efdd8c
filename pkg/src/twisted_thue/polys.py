"""Dense univariate polynomials and small exact linear algebra.

Polynomials are lists with the leading coefficient first, so ``[a0, a1, ..., ad]``
is ``a0*X**d + ... + ad``.  Coefficients are ints or Fractions; results are
stripped of leading zeros (the zero polynomial is ``[]``).
"""

from fractions import Fraction
from math import gcd, lcm


def strip(p):
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return list(p[i:])


def degree(p):
    return len(strip(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    p = [0] * (n - len(p)) + list(p)
    q = [0] * (n - len(q)) + list(q)
    return strip([a + b for a, b in zip(p, q)])


def neg(p):
    return [-a for a in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    return strip([c * a for a in p])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return strip(out)


def divmod_(p, q):
    """Euclidean division over Q."""
    p, q = strip(p), strip(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = [Fraction(a) for a in p]
    lead = Fraction(q[0])
    dq = len(q) - 1
    quo = []
    while len(p) - 1 >= dq and p:
        c = p[0] / lead
        quo.append(c)
        for j in range(len(q)):
            p[j] -= c * q[j]
        p.pop(0)
    return strip(quo), strip(p)


def monic(p):
    p = strip(p)
    if not p:
        return []
    lead = Fraction(p[0])
    return [Fraction(a) / lead for a in p]


def gcd_(p, q):
    """Monic gcd over Q."""
    p, q = strip(p), strip(q)
    while q:
        _, r = divmod_(p, q)
        p, q = q, r
    return monic(p)


def xgcd(p, q):
    """Return (g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = strip(p), strip(q)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quo, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    lead = Fraction(r0[0])
    return monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)


def deriv(p):
    d = len(p) - 1
    return strip([a * (d - i) for i, a in enumerate(p[:-1])])


def evaluate(p, x):
    acc = 0
    for a in p:
        acc = acc * x + a
    return acc


def content(p):
    g = 0
    for a in p:
        g = gcd(g, int(a))
    return g


def primitive_integer(p):
    """Clear denominators, divide by the content, make the leading coefficient positive."""
    p = strip([Fraction(a) for a in p])
    if not p:
        return []
    den = 1
    for a in p:
        den = lcm(den, a.denominator)
    ints = [int(a * den) for a in p]
    g = content(ints)
    ints = [a // g for a in ints]
    if ints[0] < 0:
        ints = [-a for a in ints]
    return ints


def squarefree_part(p):
    p = strip(p)
    g = gcd_(p, deriv(p))
    quo, _ = divmod_(p, g)
    return quo


def reverse(p):
    """Coefficient reversal X**d p(1/X)."""
    return list(reversed(p))


# ---------------------------------------------------------------------------
# Exact linear algebra over Q

def det(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        pv = m[col][col]
        result *= pv
        for r in range(col + 1, n):
            f = m[r][col] / pv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return sign * result


def solve(matrix, rhs):
    """Solve a square nonsingular system exactly; returns None if singular."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n] for row in m]


def charpoly_matrix(matrix):
    """Characteristic polynomial det(X*I - M) by Faddeev-LeVerrier, leading first."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        c_prev = coeffs[-1]
        prod = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c_prev
        mk = prod
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        ck = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(ck)
    return coeffs


def resultant(p, q):
    """Resultant via the Sylvester determinant."""
    p, q = strip(p), strip(q)
    m, n = len(p) - 1, len(q) - 1
    if m < 0 or n < 0:
        return Fraction(0)
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    for i in range(n):
        rows.append([0] * i + list(p) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(q) + [0] * (size - n - 1 - i))
    return det(rows)


def discriminant(p):
    p = strip(p)
    d = len(p) - 1
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, deriv(p)) / p[0]


# ---------------------------------------------------------------------------
# Polynomials over GF(p), leading coefficient first, entries in range(p)

def _mod_strip(a, p):
    return strip([x % p for x in a])


def _mod_divmod(a, b, p):
    a = _mod_strip(a, p)
    b = _mod_strip(b, p)
    inv = pow(b[0], -1, p)
    quo = []
    while len(a) >= len(b) and a:
        c = a[0] * inv % p
        quo.append(c)
        for j in range(len(b)):
            a[j] = (a[j] - c * b[j]) % p
        a.pop(0)
    return strip(quo), strip(a)


def _mod_mulmod(a, b, f, p):
    return _mod_divmod(mul(a, b), f, p)[1]


def _mod_powmod_x(e, f, p):
    """X**e mod f over GF(p)."""
    result = [1]
    base = [1, 0]
    while e:
        if e & 1:
            result = _mod_mulmod(result, base, f, p)
        base = _mod_mulmod(base, base, f, p)
        e >>= 1
    return result


def _mod_gcd(a, b, p):
    a, b = _mod_strip(a, p), _mod_strip(b, p)
    while b:
        a, b = b, _mod_divmod(a, b, p)[1]
    return a


def _prime_factors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def irreducible_mod_p(f, p):
    """Rabin's test for an integer polynomial whose leading coefficient is a unit mod p."""
    f = _mod_strip(f, p)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [1, 0]
    if _mod_strip(sub(_mod_powmod_x(p ** n, f, p), x), p):
        return False
    for q in _prime_factors(n):
        h = sub(_mod_powmod_x(p ** (n // q), f, p), x)
        g = _mod_gcd(f, h, p)
        if len(g) > 1:
            return False
    return True


def primes():
    """Unbounded prime generator (trial division is plenty for the first few dozen)."""
    found = []
    n = 2
    while True:
        if all(n % q for q in found if q * q <= n):
            found.append(n)
            yield n
        n += 1
