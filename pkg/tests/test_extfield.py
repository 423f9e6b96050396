import numpy as np
import pytest

from secsyz.fflinalg import unipoly
from secsyz.fflinalg.extfield import ExtArray, ExtField, find_nonresidue, sqrt_batched


@pytest.fixture(params=[1, 2, 3])
def field(request):
    return ExtField(101, d=request.param)


def test_field_axioms_scalar(field):
    rng = np.random.default_rng(0)
    for _ in range(50):
        a = field.el(tuple(rng.integers(0, field.p, field.d)))
        b = field.el(tuple(rng.integers(0, field.p, field.d)))
        c = field.el(tuple(rng.integers(0, field.p, field.d)))
        assert field.mul(a, b) == field.mul(b, a)
        assert field.mul(a, field.add(b, c)) == field.add(
            field.mul(a, b), field.mul(a, c)
        )
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == field.one


def test_pow_matches_iterated_mul(field):
    a = field.el((2,) + (1,) * (field.d - 1))
    acc = field.one
    for k in range(10):
        assert field.pow(a, k) == acc
        acc = field.mul(acc, a)


def test_frobenius_is_field_hom(field):
    rng = np.random.default_rng(1)
    for _ in range(20):
        a = field.el(tuple(rng.integers(0, field.p, field.d)))
        b = field.el(tuple(rng.integers(0, field.p, field.d)))
        assert field.frobenius(field.mul(a, b)) == field.mul(
            field.frobenius(a), field.frobenius(b)
        )
        assert field.frobenius(a) == field.pow(a, field.p)
    # frobenius fixes exactly F_p
    assert field.frobenius(field.el(5)) == field.el(5)


def test_multiplicative_order_divides_q_minus_1(field):
    rng = np.random.default_rng(2)
    for _ in range(10):
        a = field.el(tuple(rng.integers(0, field.p, field.d)))
        if a == field.zero:
            continue
        assert field.pow(a, field.q - 1) == field.one


def test_batched_matches_scalar(field):
    rng = np.random.default_rng(3)
    xs = [tuple(rng.integers(0, field.p, field.d)) for _ in range(37)]
    ys = [tuple(rng.integers(0, field.p, field.d)) for _ in range(37)]
    ax, ay = field.array(xs), field.array(ys)
    prod = ax.mul(ay)
    for i in range(37):
        assert prod.scalar(i) == field.mul(field.el(xs[i]), field.el(ys[i]))
    s = ax.add(ay)
    for i in range(37):
        assert s.scalar(i) == field.add(field.el(xs[i]), field.el(ys[i]))
    nz = ax.nonzero_mask()
    inv = ExtArray(field, ax.c[:, nz]).inv()
    ref = [field.inv(field.el(x)) for x, keep in zip(xs, nz) if keep]
    assert inv.scalars() == ref


def test_min_poly_degree():
    f = ExtField(101, d=2)
    assert f.min_poly_degree(f.el(7)) == 1
    assert f.min_poly_degree(f.gen()) == 2


def test_sqrt_batched_correct(field):
    rng = np.random.default_rng(4)
    xs = field.array([tuple(rng.integers(0, field.p, field.d)) for _ in range(200)])
    roots, ok = sqrt_batched(xs)
    squares = roots.mul(roots)
    for i in range(200):
        if ok[i]:
            assert squares.scalar(i) == xs.scalar(i)
    # squares must all be recognized
    sq = xs.mul(xs)
    roots2, ok2 = sqrt_batched(sq)
    assert ok2.all()
    r2 = roots2.mul(roots2)
    for i in range(200):
        assert r2.scalar(i) == sq.scalar(i)
    # roughly half of nonzero elements are squares
    frac = ok.sum() / 200
    assert 0.3 < frac < 0.8


def test_nonresidue_really_is_one(field):
    z = find_nonresidue(field)
    assert field.pow(z, (field.q - 1) // 2) != field.one


def test_modulus_must_be_irreducible():
    with pytest.raises(ValueError):
        ExtField(101, modulus=(1, 2, 1))  # (x+1)^2
    f = unipoly.random_irreducible(2, 101, np.random.default_rng(0))
    assert ExtField(101, modulus=f).d == 2
