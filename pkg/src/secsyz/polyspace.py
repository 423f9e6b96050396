"""Monomial bases of polynomial rings, with one fixed global order.

Every graded piece in the pipeline is coordinatized by the degree-m
monomials in n variables listed in *descending graded reverse
lexicographic* order, so that row echelon forms of ideal pieces pivot on
leading monomials and the non-pivot columns are the standard monomials.
"""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def monomials(n, m):
    """Degree-m exponent tuples over n variables, descending grevlex."""
    if m < 0:
        return ()
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), m, n)
    out.sort(key=lambda t: t[::-1])
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n, m):
    return {t: i for i, t in enumerate(monomials(n, m))}


def dim(n, m):
    return len(monomials(n, m))


@lru_cache(maxsize=None)
def variable_shift(n, m, var):
    """Index map i -> position of x_var * monomial_i inside degree m+1."""
    idx = monomial_index(n, m + 1)
    out = np.empty(dim(n, m), dtype=np.int64)
    for i, t in enumerate(monomials(n, m)):
        lifted = list(t)
        lifted[var] += 1
        out[i] = idx[tuple(lifted)]
    return out


@lru_cache(maxsize=None)
def _parents(n, m):
    """For fast evaluation: (parent index in degree m-1, variable) per monomial."""
    idx = monomial_index(n, m - 1)
    rows = []
    for t in monomials(n, m):
        v = next(i for i, e in enumerate(t) if e > 0)
        low = list(t)
        low[v] -= 1
        rows.append((idx[tuple(low)], v))
    return rows


def eval_monomials(n, m, coords, p):
    """Evaluate all degree-m monomials at points given as columns of coords.

    coords: int64 (n, N).  Returns int64 (dim, N), reduced mod p.
    Built degree by degree so the work is one multiply per monomial.
    """
    coords = np.asarray(coords, dtype=np.int64) % p
    npts = coords.shape[1]
    prev = np.ones((1, npts), dtype=np.int64)
    for mm in range(1, m + 1):
        cur = np.empty((dim(n, mm), npts), dtype=np.int64)
        for i, (parent, v) in enumerate(_parents(n, mm)):
            cur[i] = prev[parent] * coords[v] % p
        prev = cur
    return prev


def eval_monomials_ext(n, m, coords, field):
    """Scalar evaluation of all degree-m monomials at one extension point."""
    powers = [[field.one] for _ in range(n)]
    for v in range(n):
        for _ in range(m):
            powers[v].append(field.mul(powers[v][-1], field.el(coords[v])))
    out = []
    for t in monomials(n, m):
        acc = field.one
        for v, e in enumerate(t):
            if e:
                acc = field.mul(acc, powers[v][e])
        out.append(acc)
    return out


def form_multiply(f, g, p):
    """Product of sparse forms given as {exponent tuple: coeff} dicts."""
    out = {}
    for ta, ca in f.items():
        for tb, cb in g.items():
            key = tuple(a + b for a, b in zip(ta, tb))
            out[key] = (out.get(key, 0) + ca * cb) % p
    return {t: c for t, c in out.items() if c}


def form_to_vector(f, n, m, p):
    vec = np.zeros(dim(n, m), dtype=np.int64)
    idx = monomial_index(n, m)
    for t, c in f.items():
        vec[idx[t]] = c % p
    return vec


def vector_to_form(vec, n, m):
    return {
        t: int(c) for t, c in zip(monomials(n, m), vec) if c
    }


def form_partial(f, var, p):
    out = {}
    for t, c in f.items():
        if t[var]:
            low = list(t)
            low[var] -= 1
            out[tuple(low)] = c * t[var] % p
    return {t: c for t, c in out.items() if c}


def form_eval_ext(f, coords, field):
    """Evaluate a sparse form at one point with ExtField coordinates."""
    acc = field.zero
    for t, c in f.items():
        term = field.el(int(c))
        for v, e in enumerate(t):
            if e:
                term = field.mul(term, field.pow(field.el(coords[v]), e))
        acc = field.add(acc, term)
    return acc
