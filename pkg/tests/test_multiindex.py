from math import comb

import pytest

from secsyz.fflinalg.multiindex import (
    sym_basis,
    sym_derivative,
    sym_exponents,
    sym_multiply,
    wedge_basis,
    wedge_remove,
)


def test_wedge_3_2_enumeration():
    assert wedge_basis(3, 2).tuples == [(0, 1), (0, 2), (1, 2)]


def test_sym_2_2_enumeration():
    assert sym_basis(2, 2).tuples == [(0, 0), (0, 1), (1, 1)]


def test_wedge_10_5_size():
    assert len(wedge_basis(10, 5)) == 252


def test_degenerate_wedge_is_empty():
    assert len(wedge_basis(3, 5)) == 0
    assert len(wedge_basis(4, -1)) == 0


@pytest.mark.parametrize("n", range(1, 21))
def test_sizes_match_binomials(n):
    for p in range(0, n + 1):
        assert len(wedge_basis(n, p)) == comb(n, p)
    for m in range(0, 5):
        assert len(sym_basis(n, m)) == comb(n + m - 1, m)


def test_lookup_bijection():
    b = wedge_basis(7, 3)
    for i, t in enumerate(b):
        assert b.index(t) == i
    s = sym_basis(4, 3)
    for i, t in enumerate(s):
        assert s.index(t) == i


def test_wedge_remove():
    assert wedge_remove((2, 5, 9), 1) == (2, 9)


def test_sym_derivative_and_multiply():
    # d/dx1 of x0*x1^2 = 2*x0*x1
    c, t = sym_derivative((0, 1, 1), 3, 1)
    assert c == 2 and t == (0, 1)
    c0, t0 = sym_derivative((0, 1, 1), 3, 2)
    assert c0 == 0 and t0 is None
    assert sym_multiply((0, 1), (1, 2)) == (0, 1, 1, 2)
    assert sym_exponents((0, 1, 1), 3) == (1, 2, 0)
