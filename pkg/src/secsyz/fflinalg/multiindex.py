"""Ordered index bases for wedge and symmetric powers.

A wedge basis on n letters lists strictly increasing p-tuples, a symmetric
basis lists weakly increasing m-tuples, both in lexicographic order, with a
position lookup.  These fix once and for all the coordinate conventions of
the Koszul complexes: removing the j-th letter from a wedge tuple carries
the sign (-1)**j.
"""

from itertools import combinations, combinations_with_replacement
from math import comb


class MultiIndexBasis:
    """An ordered list of index tuples with O(1) position lookup."""

    def __init__(self, kind, n, tuples):
        self.kind = kind
        self.n = n
        self.tuples = list(tuples)
        self.position = {t: i for i, t in enumerate(self.tuples)}
        if len(self.position) != len(self.tuples):
            raise ValueError("duplicate tuples in basis")

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)

    def __getitem__(self, i):
        return self.tuples[i]

    def index(self, t):
        return self.position[tuple(t)]

    def __repr__(self):
        return f"MultiIndexBasis({self.kind}, n={self.n}, size={len(self)})"


def wedge_basis(n, p):
    """Basis of wedge^p of an n-dim space: strictly increasing p-tuples.

    p > n or p < 0 yields the legal empty basis (the space is 0).
    """
    if p < 0 or p > n:
        return MultiIndexBasis(("wedge", n, p), n, [])
    basis = MultiIndexBasis(("wedge", n, p), n, combinations(range(n), p))
    assert len(basis) == comb(n, p)
    return basis


def sym_basis(n, m):
    """Basis of Sym^m of an n-dim space: weakly increasing m-tuples."""
    if n < 1 or m < 0:
        return MultiIndexBasis(("sym", n, m), n, [])
    basis = MultiIndexBasis(
        ("sym", n, m), n, combinations_with_replacement(range(n), m)
    )
    assert len(basis) == comb(n + m - 1, m)
    return basis


def wedge_remove(t, j):
    """Drop position j from wedge tuple t; the caller owns the (-1)**j sign."""
    return t[:j] + t[j + 1 :]


def sym_exponents(t, n):
    """Exponent vector of a weakly increasing tuple over n letters."""
    e = [0] * n
    for i in t:
        e[i] += 1
    return tuple(e)


def sym_from_exponents(e):
    """Inverse of sym_exponents."""
    t = []
    for i, k in enumerate(e):
        t.extend([i] * k)
    return tuple(t)


def sym_derivative(t, n, j):
    """d/dx_j on the sym monomial t: returns (coefficient, lowered tuple).

    Coefficient is the exponent of j in t; the zero derivative is (0, None).
    """
    e = list(sym_exponents(t, n))
    if e[j] == 0:
        return 0, None
    c = e[j]
    e[j] -= 1
    return c, sym_from_exponents(e)


def sym_multiply(t1, t2):
    """Product of two sym monomials (merge of sorted tuples)."""
    return tuple(sorted(t1 + t2))
