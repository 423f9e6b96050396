"""Batched root extraction, checked by exhaustive scans over tiny fields."""

import numpy as np
import pytest

from secsyz.fflinalg import extpoly
from secsyz.fflinalg.extfield import ExtField
from secsyz.fflinalg.rootfind import roots_batched


def brute_roots_ext(field, coeffs):
    """Scan the whole field; only viable for q <= a few thousand."""
    found = []
    for code in range(field.q):
        digits = []
        c = code
        for _ in range(field.d):
            digits.append(c % field.p)
            c //= field.p
        x = field.el(tuple(digits))
        acc = field.zero
        for co in reversed(coeffs):
            acc = field.add(field.mul(acc, x), field.el(co))
        if acc == field.zero:
            found.append(x)
    return sorted(found)


def gathered_roots(field, roots, counts, i):
    return sorted(
        tuple(int(roots[k, j, i]) for k in range(field.d)) for j in range(counts[i])
    )


@pytest.mark.parametrize("p,d", [(7, 1), (7, 2), (13, 1), (13, 2), (5, 3)])
@pytest.mark.parametrize("deg", [1, 2, 3, 4])
def test_roots_match_field_scan(p, d, deg):
    field = ExtField(p, d=d)
    rng = np.random.default_rng(deg * 1000 + p * 10 + d)
    n = 120
    coeffs = rng.integers(0, p, size=(deg + 1, field.d, n)).astype(np.int64)
    # force nonzero polynomials
    coeffs[deg, 0, :] = np.maximum(coeffs[deg, 0, :], 1)
    roots, counts = roots_batched(field, coeffs, rng)
    for i in rng.choice(n, size=25, replace=False):
        scal = [tuple(int(coeffs[j, k, i]) for k in range(field.d)) for j in range(deg + 1)]
        expect = brute_roots_ext(field, scal)
        assert gathered_roots(field, roots, counts, i) == expect


def test_mixed_degrees_in_one_batch():
    field = ExtField(11, d=2)
    rng = np.random.default_rng(0)
    n = 60
    coeffs = rng.integers(0, 11, size=(5, 2, n)).astype(np.int64)
    coeffs[4, :, : n // 2] = 0  # half the batch drops to lower degree
    coeffs[0, 0, :] = np.maximum(coeffs[0, 0, :], 1)
    roots, counts = roots_batched(field, coeffs, rng)
    for i in range(0, n, 7):
        scal = [tuple(int(coeffs[j, k, i]) for k in range(2)) for j in range(5)]
        assert gathered_roots(field, roots, counts, i) == brute_roots_ext(field, scal)


def test_repeated_roots_reported_once():
    field = ExtField(101, d=1)
    rng = np.random.default_rng(1)
    # (x - 3)^2 (x - 5)
    coeffs = np.zeros((4, 1, 1), dtype=np.int64)
    poly = [(-3 * -3 * -5) % 101, (9 + 15 + 15) % 101, (-3 - 3 - 5) % 101, 1]
    coeffs[:, 0, 0] = poly
    roots, counts = roots_batched(field, coeffs, rng)
    assert counts[0] == 2
    assert gathered_roots(field, roots, counts, 0) == [(3,), (5,)]


def test_scalar_extpoly_roots_agree():
    field = ExtField(13, d=2)
    rng = np.random.default_rng(5)
    for _ in range(15):
        coeffs = [tuple(rng.integers(0, 13, size=2)) for _ in range(5)]
        f = extpoly.normalize(field, coeffs)
        if extpoly.degree(f) < 1:
            continue
        got = sorted(extpoly.roots_in_field(field, f))
        assert got == brute_roots_ext(field, [field.el(c) for c in coeffs])


def test_large_prime_quartic_batch():
    # representative of the curve sweep: many quartics over F_{1009^2}
    field = ExtField(1009, d=2)
    rng = np.random.default_rng(9)
    n = 4000
    coeffs = rng.integers(0, 1009, size=(5, 2, n)).astype(np.int64)
    coeffs[4, 0, :] = 1
    coeffs[4, 1, :] = 0
    roots, counts = roots_batched(field, coeffs, rng)
    # verify by evaluation: every reported root must vanish
    for i in rng.choice(n, size=40, replace=False):
        scal = [tuple(int(coeffs[j, k, i]) for k in range(2)) for j in range(5)]
        for j in range(counts[i]):
            x = tuple(int(roots[k, j, i]) for k in range(2))
            acc = field.zero
            for co in reversed(scal):
                acc = field.add(field.mul(acc, x), field.el(co))
            assert acc == field.zero
    # mean number of roots of a random quartic is ~1
    assert 0.8 < counts.mean() < 1.2
