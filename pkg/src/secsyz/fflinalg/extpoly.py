"""Scalar univariate polynomials over an ExtField.

Coefficients are ExtField scalar tuples, constant term first, no trailing
zeros.  Used for one-off root extraction over F_{p^d}; the batched version
for large sweeps is in ``rootfind``.
"""

import numpy as np


def normalize(field, f):
    f = [field.el(c) for c in f]
    while f and f[-1] == field.zero:
        f.pop()
    return tuple(f)


def degree(f):
    return len(f) - 1


def add(field, f, g):
    n = max(len(f), len(g))
    z = field.zero
    return normalize(
        field,
        [
            field.add(f[i] if i < len(f) else z, g[i] if i < len(g) else z)
            for i in range(n)
        ],
    )


def sub(field, f, g):
    n = max(len(f), len(g))
    z = field.zero
    return normalize(
        field,
        [
            field.sub(f[i] if i < len(f) else z, g[i] if i < len(g) else z)
            for i in range(n)
        ],
    )


def mul(field, f, g):
    if not f or not g:
        return ()
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a != field.zero:
            for j, b in enumerate(g):
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return normalize(field, out)


def divmod_poly(field, f, g):
    if not g:
        raise ZeroDivisionError
    r = list(f)
    dg = degree(g)
    inv_lead = field.inv(g[-1])
    q = [field.zero] * max(0, len(f) - dg)
    while len(r) - 1 >= dg:
        if r[-1] == field.zero:
            r.pop()
            continue
        c = field.mul(r[-1], inv_lead)
        k = len(r) - 1 - dg
        q[k] = c
        for i in range(dg + 1):
            r[k + i] = field.sub(r[k + i], field.mul(c, g[i]))
        r.pop()
    return normalize(field, q), normalize(field, r)


def mod(field, f, g):
    return divmod_poly(field, f, g)[1]


def monic(field, f):
    if not f:
        return f
    inv = field.inv(f[-1])
    return normalize(field, [field.mul(c, inv) for c in f])


def gcd(field, f, g):
    a, b = f, g
    while b:
        a, b = b, mod(field, a, b)
    return monic(field, a)


def powmod(field, f, e, g):
    result = mod(field, (field.one,), g)
    base = mod(field, f, g)
    while e:
        if e & 1:
            result = mod(field, mul(field, result, base), g)
        base = mod(field, mul(field, base, base), g)
        e >>= 1
    return result


def evaluate(field, f, x):
    acc = field.zero
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def derivative(field, f):
    return normalize(
        field, [field.mul(field.el(i), f[i]) for i in range(1, len(f))]
    )


def roots_in_field(field, f, rng=None):
    """Distinct roots of f lying in the field itself."""
    rng = rng or np.random.default_rng(0xE0075)
    f = normalize(field, f)
    if degree(f) < 1:
        return []
    x = ((field.zero, field.one))
    xq = powmod(field, x, field.q, f)
    lin = gcd(field, sub(field, xq, x), f)
    out = []
    stack = [lin]
    while stack:
        g = stack.pop()
        dg = degree(g)
        if dg < 1:
            continue
        if dg == 1:
            out.append(field.neg(g[0]))
            continue
        while True:
            r = tuple(int(v) for v in rng.integers(0, field.p, size=field.d))
            shifted = ((r, field.one))
            t = powmod(field, shifted, (field.q - 1) // 2, g)
            h = gcd(field, sub(field, t, (field.one,)), g)
            if 0 < degree(h) < dg:
                stack.append(h)
                stack.append(divmod_poly(field, g, h)[0])
                break
    return out
