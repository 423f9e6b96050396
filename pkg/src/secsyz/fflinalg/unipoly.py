"""Univariate polynomial arithmetic over F_p.

Polynomials are tuples of ints, constant term first, with no trailing
zeros (the zero polynomial is the empty tuple).  Scalar-speed code for
minimal polynomials, small factorizations and root extraction; the batched
hot paths live in ``rootfind``.
"""

import numpy as np

ZERO = ()
ONE = (1,)


def normalize(coeffs, p):
    c = [int(x) % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f):
    return len(f) - 1 if f else -1


def add(f, g, p):
    n = max(len(f), len(g))
    return normalize(
        [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p
    )


def sub(f, g, p):
    n = max(len(f), len(g))
    return normalize(
        [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], p
    )


def scale(f, c, p):
    return normalize([x * c for x in f], p)


def mul(f, g, p):
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return normalize(out, p)


def divmod_poly(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = degree(g)
    inv_lead = pow(g[-1], p - 2, p)
    q = [0] * max(0, len(f) - dg)
    while len(r) - 1 >= dg and any(r):
        while r and r[-1] % p == 0:
            r.pop()
        if len(r) - 1 < dg:
            break
        c = r[-1] * inv_lead % p
        k = len(r) - 1 - dg
        q[k] = c
        for i in range(dg + 1):
            r[k + i] = (r[k + i] - c * g[i]) % p
        r.pop()
    return normalize(q, p), normalize(r, p)


def mod(f, g, p):
    return divmod_poly(f, g, p)[1]


def monic(f, p):
    if not f:
        return f
    return scale(f, pow(f[-1], p - 2, p), p)


def gcd(f, g, p):
    a, b = f, g
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def powmod(f, e, g, p):
    """f**e mod g."""
    result = mod(ONE, g, p)
    base = mod(f, g, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), g, p)
        base = mod(mul(base, base, p), g, p)
        e >>= 1
    return result


def evaluate(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def derivative(f, p):
    return normalize([i * f[i] for i in range(1, len(f))], p)


def squarefree_part(f, p):
    """Largest squarefree divisor (assumes deg f < p, true at our scales)."""
    d = derivative(f, p)
    if not d:
        raise ValueError("polynomial with zero derivative (degree >= p?)")
    return divmod_poly(f, gcd(f, d, p), p)[0]


def is_squarefree(f, p):
    return degree(gcd(f, derivative(f, p), p)) == 0


def roots(f, p):
    """Distinct roots of f in F_p, ascending."""
    f = normalize(f, p)
    if degree(f) <= 0:
        return []
    # restrict to the product of linear factors: gcd(f, x^p - x)
    xp = powmod((0, 1), p, f, p)
    lin = gcd(sub(xp, (0, 1), p), f, p)
    return sorted(_split_equal_degree(lin, 1, p))


def _split_equal_degree(f, d, p, rng=None):
    """Roots-or-factors driver: f is monic, squarefree, product of deg-d irreducibles.

    For d == 1 returns the list of roots; otherwise the list of factors.
    """
    if rng is None:
        rng = np.random.default_rng(0x5EC5)
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        dg = degree(g)
        if dg <= 0:
            continue
        if dg == d:
            if d == 1:
                out.append((-g[0]) % p)
            else:
                out.append(g)
            continue
        if d == 1 and dg == 1:
            out.append((-g[0]) % p)
            continue
        while True:
            shift = tuple(int(x) for x in rng.integers(0, p, size=d + 1))
            if degree(normalize(shift, p)) < 1:
                continue
            t = powmod(normalize(shift, p), (p**d - 1) // 2, g, p)
            h = gcd(sub(t, ONE, p), g, p)
            if 0 < degree(h) < dg:
                stack.append(h)
                stack.append(divmod_poly(g, h, p)[0])
                break
    return out


def distinct_degree_factor(f, p):
    """List of (d, product of the irreducible factors of degree d)."""
    f = monic(squarefree_part(f, p), p)
    out = []
    h = (0, 1)
    d = 0
    while degree(f) > 0:
        d += 1
        if 2 * d > degree(f):
            out.append((degree(f), f))
            break
        h = powmod(h, p, f, p)
        g = gcd(sub(h, (0, 1), p), f, p)
        if degree(g) > 0:
            out.append((d, g))
            f = divmod_poly(f, g, p)[0]
            h = mod(h, f, p)
    return out


def factor_squarefree(f, p, rng=None):
    """Irreducible factors of a squarefree f (monic factors, any order)."""
    factors = []
    for d, g in distinct_degree_factor(f, p):
        if degree(g) == d:
            factors.append(monic(g, p))
        elif d == 1:
            factors.extend([(int((-r0) % p), 1) for r0 in _split_equal_degree(g, 1, p, rng)])
        else:
            factors.extend(_split_equal_degree(g, d, p, rng))
    return factors


def resultant(f, g, p):
    """res(f, g) over F_p via the Euclidean recursion."""
    a = normalize(f, p)
    b = normalize(g, p)
    if degree(a) < 0 or degree(b) < 0:
        return 0
    res = 1
    while degree(b) > 0:
        r = mod(a, b, p)
        if not r:
            return 0
        res = res * pow(b[-1], degree(a) - degree(r), p) % p
        if (degree(a) * degree(b)) % 2:
            res = (-res) % p
        a, b = b, r
    return res * pow(b[0], degree(a), p) % p


def is_irreducible(f, p):
    f = normalize(f, p)
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    h = (0, 1)
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        if degree(gcd(sub(h, (0, 1), p), f, p)) > 0:
            return False
    return True


def random_irreducible(d, p, rng):
    """A monic irreducible of degree d; for d == 2 prefers x^2 - t."""
    if d == 1:
        return (0, 1)
    if d == 2:
        for t in range(2, p):
            if pow(t, (p - 1) // 2, p) == p - 1:
                return ((-t) % p, 0, 1)
    while True:
        f = tuple(int(x) for x in rng.integers(0, p, size=d)) + (1,)
        if is_irreducible(f, p):
            return f
