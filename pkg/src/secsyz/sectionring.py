"""Graded pieces of coordinate rings/ideals of an embedded curve.

The embedding is by a fixed basis s_0..s_r of H^0(L).  Ideal pieces are
row spaces in the fixed descending-grevlex monomial coordinates, stored in
reduced row echelon form so that pivots are leading monomials and the
non-pivot ("standard") monomials give a transversal basis of each quotient
piece R_m.  Multiplication by a variable is then a single row lookup per
standard monomial.
"""

from dataclasses import dataclass, field

import numpy as np

from secsyz import polyspace
from secsyz.curves import CurveError
from secsyz.fflinalg import mat_mul, rank, row_space, rref
from secsyz.riemannroch import riemann_roch_space


class SectionRingError(Exception):
    pass


class EmbeddedCurve:
    """A curve embedded in P^r by a very ample bundle of degree >= 2g+1."""

    def __init__(self, curve, bundle, rng=None, independence_margin=8):
        self.curve = curve
        self.bundle = bundle
        if bundle.degree_on(curve) < 2 * curve.genus + 1:
            raise SectionRingError(
                f"deg L = {bundle.degree_on(curve)} < 2g+1: not projectively normal"
            )
        self.sections = riemann_roch_space(curve, bundle, rng)
        self.r = self.sections.dim - 1
        self._check_independence(independence_margin)

    def _check_independence(self, margin):
        n = self.r + 1 + margin
        pts = self._usable_points(n, seed=0xA11CE)
        vals = self.evaluate(pts)
        if rank(vals, self.curve.p) != self.r + 1:
            raise SectionRingError("sections not independent at sampled points")

    def _usable_points(self, n, seed):
        """Sampled rational points where the section presentation has no
        denominator zero (affine points for hyperelliptic models)."""
        got = []
        batch = max(2 * n, 32)
        while len(got) < n:
            pts = (
                self.curve.sample_points(batch, seed)
                if self.curve.kind == "plane"
                else self.curve.sample_points(batch, seed, affine_only=True)
            )
            got = [pt for pt in pts if self._point_ok(pt)]
            batch *= 2
            if batch > 1 << 22:
                raise SectionRingError("cannot find enough clean sample points")
        return got[:n]

    def _point_ok(self, pt):
        return True

    def evaluate(self, points):
        """(r+1, N) matrix of section values at rational points."""
        if self.curve.kind == "plane":
            coords = np.array([pt.ints() for pt in points], dtype=np.int64).T
            return self.sections.evaluate_at(coords)
        pairs = [(pt.x[0], pt.y[0]) for pt in points]
        return self.sections.evaluate_at(pairs)


@dataclass
class IdealPiece:
    """I_m as a reduced-row-echelon row space over the degree-m monomials."""

    degree: int
    rows: np.ndarray
    pivots: tuple

    @property
    def dim(self):
        return self.rows.shape[0]


@dataclass
class GradedIdeal:
    nvars: int
    p: int
    pieces: dict = field(default_factory=dict)

    def add(self, m, rows):
        red, piv = rref(rows, self.p) if rows.size else (rows, [])
        red = red[: len(piv)]
        self.pieces[m] = IdealPiece(m, red, tuple(piv))

    def piece(self, m):
        return self.pieces[m]

    def dim(self, m):
        return self.pieces[m].dim

    def standard_monomials(self, m):
        piv = set(self.pieces[m].pivots)
        return [i for i in range(polyspace.dim(self.nvars, m)) if i not in piv]

    def closure_defect(self, m):
        """rank(S_1 * I_m + I_{m+1}) - rank(I_{m+1}); 0 iff multiplication-closed."""
        lifted = lift_rows(self.pieces[m].rows, self.nvars, m, self.p)
        nxt = self.pieces[m + 1].rows
        stacked = np.vstack([nxt, lifted]) if nxt.size else lifted
        return rank(stacked, self.p) - self.pieces[m + 1].dim


def lift_rows(rows, nvars, m, p):
    """All products x_v * (rows of degree m), as degree-(m+1) vectors."""
    if rows.size == 0:
        return np.zeros((0, polyspace.dim(nvars, m + 1)), dtype=np.int64)
    out = np.zeros((rows.shape[0] * nvars, polyspace.dim(nvars, m + 1)), dtype=np.int64)
    for v in range(nvars):
        shift = polyspace.variable_shift(nvars, m, v)
        out[v * rows.shape[0] : (v + 1) * rows.shape[0], shift] = rows
    return out


@dataclass
class RingData:
    """A truncated standard graded algebra presented by its graded pieces.

    dims[m] = dim R_m for 0 <= m <= mmax; mults[m][v] is the matrix of
    multiplication by the v-th degree-one generator from R_m to R_{m+1}.
    """

    p: int
    nvars: int
    dims: list
    mults: list
    meta: dict = field(default_factory=dict)

    @property
    def mmax(self):
        return len(self.dims) - 1

    def mult_by(self, vec, m):
        """Matrix of multiplication by sum(vec[v] * x_v): R_m -> R_{m+1}."""
        out = np.zeros((self.dims[m + 1], self.dims[m]), dtype=np.int64)
        for v, c in enumerate(vec):
            if c % self.p:
                out = (out + int(c) * self.mults[m][v]) % self.p
        return out

    def hilbert_values(self):
        return list(self.dims)


def free_ring_data(p, nvars, mmax):
    """The polynomial ring itself, for the exact-Koszul oracle."""
    dims = [polyspace.dim(nvars, m) for m in range(mmax + 1)]
    mults = []
    for m in range(mmax):
        row = []
        for v in range(nvars):
            mat = np.zeros((dims[m + 1], dims[m]), dtype=np.int64)
            shift = polyspace.variable_shift(nvars, m, v)
            mat[shift, np.arange(dims[m])] = 1
            row.append(mat)
        mults.append(row)
    return RingData(p, nvars, dims, mults, {"kind": "free"})


def quotient_ring_data(ideal, mmax, meta=None):
    """RingData of S/I from RREF ideal pieces for degrees 1..mmax.

    The basis of each R_m is the standard monomials; multiplication by a
    variable reads the normal form off the echelon rows.
    """
    n = ideal.nvars
    p = ideal.p
    std = {0: [0]}
    dims = [1]
    for m in range(1, mmax + 1):
        if m not in ideal.pieces:
            raise SectionRingError(f"missing ideal piece in degree {m}")
        std[m] = ideal.standard_monomials(m)
        dims.append(len(std[m]))
    mults = []
    for m in range(mmax):
        piece = ideal.pieces.get(m + 1)
        piv_to_row = {c: i for i, c in enumerate(piece.pivots)}
        std_pos = {c: i for i, c in enumerate(std[m + 1])}
        std_idx = np.array(std[m + 1], dtype=np.int64)
        row = []
        for v in range(n):
            mat = np.zeros((dims[m + 1], dims[m]), dtype=np.int64)
            shift = polyspace.variable_shift(n, m, v)
            for col, mono in enumerate(std[m]):
                target = int(shift[mono])
                if target in std_pos:
                    mat[std_pos[target], col] = 1
                else:
                    erow = piece.rows[piv_to_row[target]]
                    mat[:, col] = (-erow[std_idx]) % p
            row.append(mat)
        mults.append(row)
    return RingData(p, n, dims, mults, meta or {})
