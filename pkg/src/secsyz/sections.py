"""Arithmetic between section spaces: change of presentation and products.

Two sections are equal on a plane curve iff their cross-multiplied
numerators agree modulo (F), which turns every re-expression into one
linear solve; the hyperelliptic case reduces y^2 by the curve equation and
matches coefficient arrays.  Multiplication tensors share a single matrix
factorization across all basis pairs.
"""

import numpy as np

from secsyz import polyspace
from secsyz.curves import CurveError
from secsyz.fflinalg import solve, unipoly
from secsyz.riemannroch import _f_multiples


def _denom_form(space):
    prod = {(0, 0, 0): 1}
    for f in space.denom_forms:
        from secsyz.riemannroch import _line_as_form

        fd = f if isinstance(f, dict) else _line_as_form(f)
        prod = polyspace.form_multiply(prod, fd, space.curve.p)
    return prod


def _form_degree(form):
    return sum(next(iter(form))) if form else 0


def plane_express_matrix(target):
    """Coefficient matrix whose solve expresses forms in target coordinates.

    Columns: target basis numerators, then F * S_{N-d}; the caller multiplies
    incoming numerators by the target denominator before solving.
    """
    curve = target.curve
    p = curve.p
    n_deg = target.form_degree
    fmul = _f_multiples(curve, n_deg)
    cols = np.vstack([target.basis, fmul]) if fmul.size else target.basis
    return cols.T % p, target.basis.shape[0]


def plane_express(target, numerators, denom_forms=()):
    """Coordinates of sections numer/prod(denom_forms) in the target basis.

    numerators: list of sparse forms.  All inputs must present sections of
    the target bundle: numerator degree + target denominator degree must
    match target form degree + input denominator degree.
    """
    curve = target.curve
    p = curve.p
    din = {(0, 0, 0): 1}
    for f in denom_forms:
        from secsyz.riemannroch import _line_as_form

        fd = f if isinstance(f, dict) else _line_as_form(f)
        din = polyspace.form_multiply(din, fd, p)
    dtar = _denom_form(target)
    lift_deg = _form_degree(din)
    n_deg = target.form_degree + lift_deg
    rhs = []
    for numer in numerators:
        u = polyspace.form_multiply(numer, dtar, p)
        if _form_degree(u) != n_deg and u:
            raise CurveError("numerator degree mismatch in express")
        rhs.append(polyspace.form_to_vector(u, 3, n_deg, p))
    # columns: basis * din, then F * S_{n_deg - d}
    basis_forms = [
        polyspace.form_multiply(polyspace.vector_to_form(b, 3, target.form_degree), din, p)
        for b in target.basis
    ]
    cols = [polyspace.form_to_vector(bf, 3, n_deg, p) for bf in basis_forms]
    fmul = _f_multiples(curve, n_deg)
    mat = np.vstack([np.array(cols, dtype=np.int64), fmul]).T if fmul.size else np.array(cols, dtype=np.int64).T
    sol = solve(mat, np.array(rhs, dtype=np.int64).T, p)
    if sol is None:
        raise CurveError("section does not lie in the target space")
    return sol[: target.dim].T % p


def hyper_pair_mul(curve, pair1, pair2):
    p = curve.p
    a1, b1 = pair1
    a2, b2 = pair2
    a = unipoly.add(
        unipoly.mul(a1, a2, p), unipoly.mul(curve.f, unipoly.mul(b1, b2, p), p), p
    )
    b = unipoly.add(unipoly.mul(a1, b2, p), unipoly.mul(a2, b1, p), p)
    return a, b


def hyper_express(target, pairs, denom_poly=unipoly.ONE):
    """Coordinates of (a + y b)/denom_poly sections in the target basis."""
    curve = target.curve
    p = curve.p
    ht = target.denom_poly
    # equation: sum c_k (a_k + y b_k) * denom = (a + y b) * ht
    deg_bound = 0
    basis_pairs = []
    for k in range(target.dim):
        unit = np.zeros(target.dim, dtype=np.int64)
        unit[k] = 1
        ak, bk = target.section_pair(unit)
        ak = unipoly.mul(ak, denom_poly, p)
        bk = unipoly.mul(bk, denom_poly, p)
        basis_pairs.append((ak, bk))
        deg_bound = max(deg_bound, len(ak), len(bk))
    rhs_pairs = []
    for a, b in pairs:
        ar = unipoly.mul(a, ht, p)
        br = unipoly.mul(b, ht, p)
        rhs_pairs.append((ar, br))
        deg_bound = max(deg_bound, len(ar), len(br))

    def pack(pair):
        a, b = pair
        out = np.zeros(2 * deg_bound, dtype=np.int64)
        out[: len(a)] = a
        out[deg_bound : deg_bound + len(b)] = b
        return out

    mat = np.array([pack(bp) for bp in basis_pairs], dtype=np.int64).T
    rhs = np.array([pack(rp) for rp in rhs_pairs], dtype=np.int64).T
    sol = solve(mat, rhs, p)
    if sol is None:
        raise CurveError("section does not lie in the target space")
    return sol.T % p


def multiplication_tensor(s1, s2, target):
    """T[i, j, :] = coordinates of (basis_i of s1) * (basis_j of s2) in target."""
    curve = s1.curve
    p = curve.p
    if curve.kind == "plane":
        numerators = []
        for i in range(s1.dim):
            ui = polyspace.vector_to_form(s1.basis[i], 3, s1.form_degree)
            for j in range(s2.dim):
                uj = polyspace.vector_to_form(s2.basis[j], 3, s2.form_degree)
                numerators.append(polyspace.form_multiply(ui, uj, p))
        denoms = tuple(s1.denom_forms) + tuple(s2.denom_forms)
        coords = plane_express(target, numerators, denoms)
    else:
        pairs = []
        e1 = np.eye(s1.dim, dtype=np.int64)
        e2 = np.eye(s2.dim, dtype=np.int64)
        for i in range(s1.dim):
            p1 = s1.section_pair(e1[i])
            for j in range(s2.dim):
                p2 = s2.section_pair(e2[j])
                pairs.append(hyper_pair_mul(curve, p1, p2))
        denom = unipoly.mul(s1.denom_poly, s2.denom_poly, p)
        coords = hyper_express(target, pairs, denom)
    return coords.reshape(s1.dim, s2.dim, target.dim)
