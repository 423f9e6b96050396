"""Exact dense linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries in canonical range [0, p).
All ranks and kernels are exact; elimination runs on a compiled kernel
when available (see ``backend``) with a pure-numpy fallback.
"""

import numpy as np

from secsyz.fflinalg.backend import BACKEND, rref_mod

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p for an odd prime p below 2**26.

    The bound keeps p**2 exactly representable in float64 so the blocked
    elimination and matrix products can delay modular reduction.
    """

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < 3 or p >= 1 << 26:
            raise ValueError(f"prime {p} out of supported range [3, 2^26)")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def reduce(self, arr):
        return np.asarray(arr, dtype=np.int64) % self.p

    def random_matrix(self, shape, rng):
        return rng.integers(0, self.p, size=shape, dtype=np.int64)


def _as_float_work(a, p):
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return (a.astype(np.float64, copy=True)) % p


def rref(a, p):
    """Reduced row echelon form. Returns (R int64, pivot column list)."""
    work = _as_float_work(a, p)
    pivots = rref_mod(work, p)
    return work.astype(np.int64), pivots


def rank(a, p):
    """Rank over F_p (empty matrices have rank 0)."""
    a = np.asarray(a)
    if a.size == 0:
        return 0
    work = _as_float_work(a, p)
    return len(rref_mod(work, p))


def kernel_basis(a, p):
    """Basis of {v : a @ v = 0 mod p}, as rows of an int64 array.

    Asserts rank-nullity and M @ v = 0 for every returned vector.
    """
    a = np.asarray(a)
    m, n = a.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m == 0:
        return np.eye(n, dtype=np.int64)
    red, pivots = rref(a, p)
    r = len(pivots)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        basis[k, pivots] = (-red[:r, c]) % p
    assert r + len(free) == n, "rank-nullity violated"
    if basis.size:
        assert not mat_mul(a, basis.T, p).any(), "kernel vector check failed"
    return basis


def mat_mul(a, b, p):
    """Exact (a @ b) % p via float64 with chunked accumulation."""
    a = np.asarray(a, dtype=np.float64) % p
    b = np.asarray(b, dtype=np.float64) % p
    k = a.shape[1]
    chunk = max(1, int((2**53) // ((p - 1) ** 2 + 1)))
    if k <= chunk:
        return (a @ b % p).astype(np.int64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.float64)
    for s in range(0, k, chunk):
        out += a[:, s : s + chunk] @ b[s : s + chunk]
        out %= p
    return out.astype(np.int64)


def row_space(a, p):
    """Canonical basis (RREF nonzero rows) of the row space."""
    red, pivots = rref(a, p)
    return red[: len(pivots)]

def in_row_space(vectors, basis_matrix, p):
    """True when every row of `vectors` lies in the row space of `basis_matrix`."""
    vectors = np.atleast_2d(np.asarray(vectors))
    if vectors.size == 0:
        return True
    r0 = rank(basis_matrix, p)
    stacked = np.vstack([np.asarray(basis_matrix, dtype=np.int64), vectors])
    return rank(stacked, p) == r0


def solve(a, b, p):
    """One solution x of a @ x = b mod p, or None if inconsistent."""
    a = np.asarray(a)
    b = np.asarray(b)
    m, n = a.shape
    aug = np.hstack([a, b.reshape(m, -1)])
    red, pivots = rref(aug, p)
    width = aug.shape[1] - n
    if any(c >= n for c in pivots):
        return None
    x = np.zeros((n, width), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = red[i, n:]
    return x if b.ndim > 1 else x[:, 0]


__all__ = [
    "BACKEND",
    "PrimeField",
    "is_prime",
    "rref",
    "rank",
    "kernel_basis",
    "mat_mul",
    "row_space",
    "in_row_space",
    "solve",
]
