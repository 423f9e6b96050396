"""Arithmetic in F_{p^d} = F_p[T]/(m), scalar and numpy-batched.

Scalars are int tuples of length d (coefficients of 1, T, ..., T^{d-1}).
Batches are ExtArray objects wrapping an int64 array of shape (d, N) so
that a condition over F_{p^d} splits into d rows over F_p by reading off
coefficients.  Everything stays in int64; products are reduced eagerly,
which is safe since d * p^2 stays far below 2**63 for p < 2**26.
"""

import numpy as np

from secsyz.fflinalg import unipoly


class ExtField:
    """F_{p^d} with a fixed monic irreducible modulus of degree d."""

    def __init__(self, p, modulus=None, d=None, rng=None):
        self.p = int(p)
        if modulus is None:
            if d is None:
                d = 1
            modulus = unipoly.random_irreducible(
                d, p, rng or np.random.default_rng(0xF1E1D)
            )
        modulus = unipoly.normalize(modulus, p)
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self.d = len(modulus) - 1
        if self.d >= 2 and not unipoly.is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.q = self.p**self.d
        # reduction table: row j = coefficients of T^(d+j) mod modulus
        red = []
        cur = unipoly.mod(tuple([0] * self.d + [1]), modulus, p)
        for _ in range(max(0, self.d - 1)):
            red.append(self._pad(cur))
            cur = unipoly.mod(tuple([0] + list(cur)), modulus, p)
        self._red = (
            np.array(red, dtype=np.int64).reshape(self.d - 1, self.d)
            if self.d > 1
            else None
        )
        # Frobenius x -> x^p is F_p-linear; column j = T^(jp) mod modulus
        frob = np.zeros((self.d, self.d), dtype=np.int64)
        for j in range(self.d):
            tj = unipoly.powmod((0, 1), j * self.p, modulus, p) if j else (1,)
            frob[:, j] = self._pad(tj)
        self._frob = frob

    def _pad(self, poly):
        return list(poly) + [0] * (self.d - len(poly))

    def __repr__(self):
        return f"ExtField(p={self.p}, d={self.d})"

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtField", self.p, self.modulus))

    # scalar operations on coefficient tuples

    def el(self, value):
        if isinstance(value, (int, np.integer)):
            return (int(value) % self.p,) + (0,) * (self.d - 1)
        t = tuple(int(v) % self.p for v in value)
        if len(t) != self.d:
            raise ValueError("coefficient tuple of wrong length")
        return t

    @property
    def zero(self):
        return (0,) * self.d

    @property
    def one(self):
        return self.el(1)

    def gen(self):
        if self.d == 1:
            raise ValueError("prime field has no generator element T")
        return self.el((0, 1) + (0,) * (self.d - 2))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        c = unipoly.mul(a, b, self.p)
        return self.el(self._pad(unipoly.mod(c, self.modulus, self.p)))

    def inv(self, a):
        if all(x == 0 for x in a):
            raise ZeroDivisionError("inverse of 0 in extension field")
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a):
        return tuple(int(v) % self.p for v in (self._frob @ np.array(a)) % self.p)

    def in_prime_field(self, a):
        return all(x == 0 for x in a[1:])

    def min_poly_degree(self, a):
        """Degree over F_p of the subfield generated by a (divides d)."""
        b = a
        for k in range(1, self.d + 1):
            b = self.frobenius(b)
            if b == a:
                return k
        raise AssertionError("frobenius orbit did not close")

    def array(self, scalars):
        n = len(scalars)
        out = np.zeros((self.d, n), dtype=np.int64)
        for i, s in enumerate(scalars):
            out[:, i] = self.el(s)
        return ExtArray(self, out)

    def zeros(self, n):
        return ExtArray(self, np.zeros((self.d, n), dtype=np.int64))

    def embed_ints(self, values):
        out = np.zeros((self.d, len(values)), dtype=np.int64)
        out[0] = np.asarray(values, dtype=np.int64) % self.p
        return ExtArray(self, out)


class ExtArray:
    """A batch of F_{p^d} elements as an int64 (d, N) coefficient array."""

    __slots__ = ("field", "c")

    def __init__(self, field, coeffs):
        self.field = field
        self.c = coeffs

    @property
    def n(self):
        return self.c.shape[1]

    def copy(self):
        return ExtArray(self.field, self.c.copy())

    def __getitem__(self, idx):
        sel = self.c[:, idx]
        if sel.ndim == 1:
            sel = sel[:, None]
        return ExtArray(self.field, sel)

    def scalar(self, i):
        return tuple(int(x) for x in self.c[:, i])

    def scalars(self):
        return [self.scalar(i) for i in range(self.n)]

    def set_where(self, mask, other):
        self.c[:, mask] = other.c[:, mask] if other.n == self.n else other.c

    def add(self, other):
        return ExtArray(self.field, (self.c + other.c) % self.field.p)

    def sub(self, other):
        return ExtArray(self.field, (self.c - other.c) % self.field.p)

    def neg(self):
        return ExtArray(self.field, (-self.c) % self.field.p)

    def mul(self, other):
        f = self.field
        d, p = f.d, f.p
        if d == 1:
            return ExtArray(f, (self.c * other.c) % p)
        a, b = self.c, other.c
        conv = np.zeros((2 * d - 1, a.shape[1]), dtype=np.int64)
        for i in range(d):
            ai = a[i]
            for j in range(d):
                conv[i + j] += ai * b[j] % p
        conv %= p
        out = conv[:d].copy()
        for j in range(d - 1):
            out += f._red[j][:, None] * conv[d + j][None, :] % p
        return ExtArray(f, out % p)

    def scale_int(self, k):
        return ExtArray(self.field, (self.c * (int(k) % self.field.p)) % self.field.p)

    def mul_fp(self, vec):
        """Multiply elementwise by a batch of prime-field scalars."""
        return ExtArray(self.field, (self.c * (np.asarray(vec) % self.field.p)) % self.field.p)

    def pow(self, e):
        f = self.field
        result = f.array([f.one] * self.n) if self.n else f.zeros(0)
        base = self
        e = int(e)
        while e:
            if e & 1:
                result = result.mul(base)
            base = base.mul(base)
            e >>= 1
        return result

    def inv(self):
        if not self.nonzero_mask().all():
            raise ZeroDivisionError("inverse of 0 in batch")
        return self.pow(self.field.q - 2)

    def frobenius(self):
        f = self.field
        return ExtArray(f, (f._frob @ self.c) % f.p)

    def is_zero_mask(self):
        return ~self.c.any(axis=0)

    def nonzero_mask(self):
        return self.c.any(axis=0)

    def in_prime_field_mask(self):
        if self.field.d == 1:
            return np.ones(self.n, dtype=bool)
        return ~self.c[1:].any(axis=0)

    def eq_mask(self, other):
        return (self.c == other.c).all(axis=0)

    def concat(self, other):
        return ExtArray(self.field, np.concatenate([self.c, other.c], axis=1))


def find_nonresidue(field, rng=None):
    """A fixed quadratic non-residue of F_{p^d}."""
    rng = rng or np.random.default_rng(0x5EED)
    half = (field.q - 1) // 2
    for _ in range(10000):
        cand = tuple(int(x) for x in rng.integers(0, field.p, size=field.d))
        if all(x == 0 for x in cand):
            continue
        if field.pow(cand, half) != field.one:
            return cand
    raise RuntimeError("no quadratic non-residue found")


def sqrt_batched(x, nonresidue=None):
    """Tonelli-Shanks square roots for a batch.

    Returns (roots ExtArray, has_root bool mask); entries without a square
    root get root 0 and mask False.  Zero entries get root 0, mask True.
    """
    f = x.field
    q = f.q
    n = x.n
    if n == 0:
        return f.zeros(0), np.zeros(0, dtype=bool)
    Q = q - 1
    S = 0
    while Q % 2 == 0:
        Q //= 2
        S += 1
    z = nonresidue or find_nonresidue(f)
    zero_mask = x.is_zero_mask()
    legendre = x.pow((q - 1) // 2)
    one_arr = f.array([f.one] * n)
    has_root = legendre.eq_mask(one_arr) | zero_mask

    c = f.array([f.pow(z, Q)] * n)
    t = x.pow(Q)
    r = x.pow((Q + 1) // 2)
    m = np.full(n, S, dtype=np.int64)

    active = has_root & ~zero_mask
    for _ in range(S + 1):
        todo = active & ~t.eq_mask(one_arr)
        if not todo.any():
            break
        # least i with t^(2^i) == 1, computed by repeated squaring
        tt = t.copy()
        i = np.zeros(n, dtype=np.int64)
        found = t.eq_mask(one_arr)
        for k in range(1, S + 1):
            tt = tt.mul(tt)
            newly = todo & ~found & tt.eq_mask(one_arr)
            i[newly] = k
            found |= newly
        # b = c^(2^(m - i - 1)), with a per-element count of squarings
        reps = np.where(todo, m - i - 1, 0)
        b = c.copy()
        for k in range(int(reps.max()) if reps.size else 0):
            msk = reps > k
            b.c[:, msk] = b.mul(b).c[:, msk]
        b2 = b.mul(b)
        upd = todo
        m[upd] = i[upd]
        c.c[:, upd] = b2.c[:, upd]
        t.c[:, upd] = t.mul(b2).c[:, upd]
        r.c[:, upd] = r.mul(b).c[:, upd]

    roots = f.zeros(n)
    keep = has_root & ~zero_mask
    roots.c[:, keep] = r.c[:, keep]
    return roots, has_root
