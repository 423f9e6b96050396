import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secsyz.fflinalg import unipoly as up


def brute_roots(f, p):
    return [x for x in range(p) if up.evaluate(f, x, p) == 0]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 100), min_size=1, max_size=7), st.integers(0, 10**6))
def test_roots_match_brute_force(coeffs, seed):
    p = 101
    f = up.normalize(coeffs, p)
    if up.degree(f) < 1:
        return
    assert up.roots(f, p) == brute_roots(f, p)


def test_divmod_roundtrip():
    p = 1009
    rng = np.random.default_rng(0)
    for _ in range(40):
        f = up.normalize(rng.integers(0, p, size=8), p)
        g = up.normalize(rng.integers(0, p, size=4), p)
        if not g:
            continue
        q, r = up.divmod_poly(f, g, p)
        assert up.degree(r) < up.degree(g)
        assert up.add(up.mul(q, g, p), r, p) == f


def test_gcd_of_products():
    p = 101
    f = up.mul((1, 1), (2, 0, 1), p)  # (x+1)(x^2+2)
    g = up.mul((1, 1), (5, 1), p)  # (x+1)(x+5)
    assert up.gcd(f, g, p) == (1, 1)


def test_factor_squarefree_reassembles():
    p = 1009
    rng = np.random.default_rng(1)
    for _ in range(20):
        f = up.normalize(rng.integers(0, p, size=6), p)
        if up.degree(f) < 1 or not up.is_squarefree(f, p):
            continue
        factors = up.factor_squarefree(f, p)
        prod = up.ONE
        for h in factors:
            assert up.is_irreducible(h, p)
            prod = up.mul(prod, h, p)
        assert up.monic(prod, p) == up.monic(f, p)


def test_is_irreducible_known_cases():
    # x^2 + 1 irreducible mod 3 (since -1 is not a square mod 3)
    assert up.is_irreducible((1, 0, 1), 3)
    assert not up.is_irreducible((0, 0, 1), 3)  # x^2
    assert not up.is_irreducible((2, 0, 1), 3)  # x^2 - 1 = (x-1)(x+1)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_random_irreducible(d):
    p = 101
    rng = np.random.default_rng(d)
    f = up.random_irreducible(d, p, rng)
    assert up.degree(f) == d and f[-1] == 1
    assert up.is_irreducible(f, p)


def test_squarefree_part():
    p = 101
    f = up.mul(up.mul((1, 1), (1, 1), p), (3, 1), p)  # (x+1)^2 (x+3)
    sf = up.squarefree_part(f, p)
    assert up.monic(sf, p) == up.mul((1, 1), (3, 1), p)
