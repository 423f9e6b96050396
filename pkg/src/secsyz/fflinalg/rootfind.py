"""Batched root extraction for small-degree polynomials over F_{p^d}.

Finds all roots lying in the coefficient field for an array of univariate
polynomials at once (degree <= 8 by construction of the callers; typically
quartics).  The driver is the classical gcd with y^q - y followed by
equal-degree splitting, with every step vectorized over the batch and
per-element degrees handled by masking into degree groups.

Used for sweeping every x-coordinate of a plane-curve fiber over F_p or
F_{p^2}, where per-polynomial scalar code would be far too slow.
"""

import numpy as np

from secsyz.fflinalg.extfield import ExtArray, sqrt_batched


class PolyBatch:
    """N polynomials of degree <= cap as an int64 (cap+1, d, N) array."""

    __slots__ = ("field", "coeffs", "deg")

    def __init__(self, field, coeffs, deg=None):
        self.field = field
        self.coeffs = coeffs
        self.deg = self._degrees(coeffs) if deg is None else deg

    @staticmethod
    def _degrees(coeffs):
        nonzero = coeffs.any(axis=1)  # (cap+1, N)
        cap1, n = nonzero.shape
        deg = np.full(n, -1, dtype=np.int64)
        for j in range(cap1):
            deg[nonzero[j]] = j
        return deg

    @classmethod
    def from_ext_coeffs(cls, field, ext_list):
        arr = np.stack([e.c for e in ext_list], axis=0)
        return cls(field, arr % field.p)

    @property
    def n(self):
        return self.coeffs.shape[2]

    @property
    def cap(self):
        return self.coeffs.shape[0] - 1

    def coeff(self, j):
        return ExtArray(self.field, self.coeffs[j])

    def take(self, idx):
        return PolyBatch(self.field, self.coeffs[:, :, idx].copy(), self.deg[idx].copy())

    def lead(self):
        """Leading coefficients as an ExtArray (zero poly gives 0)."""
        f = self.field
        out = np.zeros((f.d, self.n), dtype=np.int64)
        for dv in range(self.cap + 1):
            sel = self.deg == dv
            if sel.any():
                out[:, sel] = self.coeffs[dv][:, sel]
        return ExtArray(f, out)

    def make_monic(self):
        f = self.field
        inv = self.lead()
        nz = self.deg >= 0
        if not nz.all():
            raise ValueError("zero polynomial in batch")
        inv = inv.inv()
        for j in range(self.cap + 1):
            self.coeffs[j] = self.coeff(j).mul(inv).c
        return self

    def truncate(self, new_cap):
        assert (self.deg <= new_cap).all()
        return PolyBatch(self.field, self.coeffs[: new_cap + 1].copy(), self.deg.copy())


def _mulmod_uniform(a, b, g):
    """(a*b) mod g where g is monic of uniform degree D; a, b have deg < D.

    a, b: lists of ExtArray coefficients (length D).  Returns same shape.
    """
    field = g.field
    dmod = g.cap
    n = a[0].n
    width = 2 * dmod - 1
    conv = [field.zeros(n) for _ in range(width)]
    for i in range(dmod):
        ai = a[i]
        if not ai.nonzero_mask().any():
            continue
        for j in range(dmod):
            conv[i + j] = conv[i + j].add(ai.mul(b[j]))
    for k in range(width - 1, dmod - 1, -1):
        ck = conv[k]
        if not ck.nonzero_mask().any():
            continue
        for j in range(dmod):
            conv[k - dmod + j] = conv[k - dmod + j].sub(ck.mul(g.coeff(j)))
    return conv[:dmod]


def _shiftmod_uniform(a, g):
    """(y * a) mod g, g monic uniform degree D, deg a < D."""
    field = g.field
    dmod = g.cap
    n = a[0].n
    out = [field.zeros(n)] + [c.copy() for c in a[:-1]]
    top = a[-1]
    if top.nonzero_mask().any():
        for j in range(dmod):
            out[j] = out[j].sub(top.mul(g.coeff(j)))
    return out


def _pow_y_mod(g, e):
    """y^e mod g (g monic, uniform degree >= 1) as a coefficient list."""
    field = g.field
    dmod = g.cap
    n = g.n
    result = [field.zeros(n) for _ in range(dmod)]
    ones = np.zeros((field.d, n), dtype=np.int64)
    ones[0] = 1
    result[0] = ExtArray(field, ones)
    bits = bin(int(e))[2:]
    for bit in bits:
        result = _mulmod_uniform(result, result, g)
        if bit == "1":
            result = _shiftmod_uniform(result, g)
    return result


def _pow_linear_mod(g, shift, e):
    """(y + shift)^e mod g; shift is an ExtArray batch of constants."""
    field = g.field
    dmod = g.cap
    n = g.n
    base = [field.zeros(n) for _ in range(dmod)]
    base[0] = shift.copy()
    if dmod >= 2:
        ones = np.zeros((field.d, n), dtype=np.int64)
        ones[0] = 1
        base[1] = ExtArray(field, ones)
    else:
        base[0] = base[0].add(_neg_const(field, g))  # y = -g0 mod linear g
    result = [field.zeros(n) for _ in range(dmod)]
    ones = np.zeros((field.d, n), dtype=np.int64)
    ones[0] = 1
    result[0] = ExtArray(field, ones)
    for bit in bin(int(e))[2:]:
        result = _mulmod_uniform(result, result, g)
        if bit == "1":
            result = _mulmod_uniform(result, base, g)
    return result


def _neg_const(field, g):
    return ExtArray(field, (-g.coeffs[0]) % field.p)


def _mod_grouped(a, b, active):
    """a mod b per element on `active`; b nonzero there. Returns PolyBatch."""
    field = a.field
    r = PolyBatch(field, a.coeffs.copy(), a.deg.copy())
    for db in range(b.cap + 1):
        sel = active & (b.deg == db)
        if not sel.any():
            continue
        idx = np.where(sel)[0]
        bsub = b.take(idx)
        inv = ExtArray(field, bsub.coeffs[db]).inv()
        rsub = r.take(idx)
        for k in range(r.cap, db - 1, -1):
            qc = ExtArray(field, rsub.coeffs[k]).mul(inv)
            if not qc.nonzero_mask().any():
                continue
            for j in range(db):
                t = ExtArray(field, rsub.coeffs[k - db + j]).sub(
                    qc.mul(ExtArray(field, bsub.coeffs[j]))
                )
                rsub.coeffs[k - db + j] = t.c
            rsub.coeffs[k] = 0
        r.coeffs[:, :, idx] = rsub.coeffs
    r.deg = PolyBatch._degrees(r.coeffs)
    r.deg[~active] = a.deg[~active]
    return r


def _gcd_batched(a, b):
    """Monic gcd per element (gcd with the zero polynomial is the other one)."""
    field = a.field
    cap = max(a.cap, b.cap)
    A = PolyBatch(field, _with_cap(a, cap), a.deg.copy())
    B = PolyBatch(field, _with_cap(b, cap), b.deg.copy())
    for _ in range(2 * (cap + 2)):
        active = B.deg >= 0
        if not active.any():
            break
        R = _mod_grouped(A, B, active)
        A.coeffs[:, :, active] = B.coeffs[:, :, active]
        A.deg[active] = B.deg[active]
        B.coeffs[:, :, active] = R.coeffs[:, :, active]
        B.deg[active] = R.deg[active]
    else:
        raise RuntimeError("batched gcd did not terminate")
    A.make_monic()
    return A


def _with_cap(pb, cap):
    if pb.cap == cap:
        return pb.coeffs.copy()
    out = np.zeros((cap + 1, pb.field.d, pb.n), dtype=np.int64)
    out[: pb.cap + 1] = pb.coeffs
    return out


def _divexact_grouped(a, b):
    """a / b per element where b | a exactly."""
    field = a.field
    q = np.zeros_like(a.coeffs)
    r = PolyBatch(field, a.coeffs.copy(), a.deg.copy())
    for db in range(b.cap + 1):
        sel = b.deg == db
        if not sel.any():
            continue
        idx = np.where(sel)[0]
        bsub = b.take(idx)
        inv = ExtArray(field, bsub.coeffs[db]).inv()
        rsub = r.take(idx)
        qsub = np.zeros_like(rsub.coeffs)
        for k in range(r.cap, db - 1, -1):
            qc = ExtArray(field, rsub.coeffs[k]).mul(inv)
            qsub[k - db] = qc.c
            if not qc.nonzero_mask().any():
                continue
            for j in range(db + 1):
                t = ExtArray(field, rsub.coeffs[k - db + j]).sub(
                    qc.mul(ExtArray(field, bsub.coeffs[j]))
                )
                rsub.coeffs[k - db + j] = t.c
        if rsub.coeffs.any():
            raise ArithmeticError("inexact batched division")
        q[:, :, idx] = qsub
    return PolyBatch(field, q)


def roots_batched(field, coeff_arrays, rng):
    """All roots in the field, for N polynomials given as (cap+1, d, N) coeffs.

    Returns (roots, counts): roots is int64 (d, cap, N); column slot j of
    polynomial i holds a root when j < counts[i].  Repeated roots are
    reported once.  Zero polynomials are rejected.
    """
    coeffs = np.asarray(coeff_arrays, dtype=np.int64) % field.p
    pb = PolyBatch(field, coeffs)
    n = pb.n
    cap = pb.cap
    roots = np.zeros((field.d, max(cap, 1), n), dtype=np.int64)
    counts = np.zeros(n, dtype=np.int64)
    if (pb.deg < 0).any():
        raise ValueError("zero polynomial in root batch")
    for dv in range(1, cap + 1):
        sel = pb.deg == dv
        if not sel.any():
            continue
        idx = np.where(sel)[0]
        sub = pb.take(idx).truncate(dv)
        sub.make_monic()
        _roots_uniform(field, sub, idx, roots, counts, rng)
    return roots, counts


def _roots_uniform(field, g, idx, roots, counts, rng):
    """Roots of monic g of uniform degree cap >= 1; fills global outputs."""
    dmod = g.cap
    if dmod == 1:
        _emit_linear(field, g, idx, roots, counts)
        return
    if dmod == 2:
        _emit_quadratic(field, g, idx, roots, counts, require_split=False)
        return
    # distinct F_q-roots of g are the roots of gcd(g, y^q - y)
    h = _pow_y_mod(g, field.q)
    hy = [c.copy() for c in h]
    ones = np.zeros((field.d, g.n), dtype=np.int64)
    ones[0] = 1
    hy[1] = hy[1].sub(ExtArray(field, ones))
    u = PolyBatch.from_ext_coeffs(field, hy)
    w = _gcd_batched(g, u)
    _split_completely(field, w, idx, roots, counts, rng)


def _emit_linear(field, g, idx, roots, counts):
    r0 = (-g.coeffs[0]) % field.p
    slot = counts[idx]
    for k in range(field.d):
        roots[k, slot, idx] = r0[k]
    counts[idx] += 1


def _emit_quadratic(field, g, idx, roots, counts, require_split):
    b = ExtArray(field, g.coeffs[1].copy())
    c = ExtArray(field, g.coeffs[0].copy())
    disc = b.mul(b).sub(c.scale_int(4))
    sq, ok = sqrt_batched(disc)
    if require_split and not ok.all():
        raise AssertionError("split factor failed to split")
    inv2 = pow(2, field.p - 2, field.p)
    r1 = b.neg().add(sq).scale_int(inv2)
    r2 = b.neg().sub(sq).scale_int(inv2)
    double = disc.is_zero_mask()
    one_root = ok & double
    two_roots = ok & ~double
    for k in range(field.d):
        sel = np.where(two_roots)[0]
        if sel.size:
            gi = idx[sel]
            roots[k, counts[gi], gi] = r1.c[k, sel]
            roots[k, counts[gi] + 1, gi] = r2.c[k, sel]
        sel1 = np.where(one_root)[0]
        if sel1.size:
            gi = idx[sel1]
            roots[k, counts[gi], gi] = r1.c[k, sel1]
    counts[idx[two_roots]] += 2
    counts[idx[one_root]] += 1


def _split_completely(field, w, idx, roots, counts, rng, depth=0):
    """Roots of monic squarefree w that splits into linear factors over F_q."""
    if depth > 16:
        raise RuntimeError("equal-degree splitting recursion too deep")
    for dv in range(1, w.cap + 1):
        sel = w.deg == dv
        if not sel.any():
            continue
        sub_idx = np.where(sel)[0]
        sub = w.take(sub_idx).truncate(dv)
        gidx = idx[sub_idx]
        if dv == 1:
            _emit_linear(field, sub, gidx, roots, counts)
            continue
        if dv == 2:
            _emit_quadratic(field, sub, gidx, roots, counts, require_split=True)
            continue
        _split_degree_ge3(field, sub, gidx, roots, counts, rng, depth)


def _split_degree_ge3(field, w, gidx, roots, counts, rng, depth):
    n = w.n
    pending = np.ones(n, dtype=bool)
    for _ in range(64):
        if not pending.any():
            return
        act = np.where(pending)[0]
        sub = w.take(act)
        shift = ExtArray(
            field, rng.integers(0, field.p, size=(field.d, len(act))).astype(np.int64)
        )
        s = _pow_linear_mod(sub, shift, (field.q - 1) // 2)
        s0 = [c.copy() for c in s]
        ones = np.zeros((field.d, len(act)), dtype=np.int64)
        ones[0] = 1
        s0[0] = s0[0].sub(ExtArray(field, ones))
        f1 = _gcd_batched(sub, PolyBatch.from_ext_coeffs(field, s0))
        proper = (f1.deg > 0) & (f1.deg < sub.deg)
        if proper.any():
            pidx = np.where(proper)[0]
            fa = f1.take(pidx)
            fb = _divexact_grouped(
                PolyBatch(field, sub.coeffs[:, :, pidx], sub.deg[pidx]), fa
            )
            fb.make_monic()
            sub_gidx = gidx[act[pidx]]
            _split_completely(field, fa, sub_gidx, roots, counts, rng, depth + 1)
            _split_completely(field, fb, sub_gidx, roots, counts, rng, depth + 1)
            pending[act[pidx]] = False
    raise RuntimeError("equal-degree splitting failed to converge")
