"""Exact zero divisors of sections.

The plane case intersects the numerator form with the curve: a random
coordinate frame puts all intersection points at finite distinct
x-coordinates, the x-resultant locates them, branch series give the exact
orders, and a Bezout degree count certifies completeness (else the frame
is rejected and redrawn).  The hyperelliptic case factors the norm
a^2 - f b^2, which needs no genericity at all.
"""

import numpy as np

from secsyz import polyspace
from secsyz.curves import CurveError, PlaneCurve
from secsyz.divisors import Divisor, HyperPoint, PlanePoint
from secsyz.fflinalg import unipoly, extpoly
from secsyz.riemannroch import (
    _hyper_branch,
    _plane_branch,
    canonical_ext,
    factor_with_multiplicity,
    _root_in_canonical,
)
from secsyz.series import Series


def form_on_branch(form, branch, ext):
    prec = branch[0].prec
    out = Series.const(ext, 0, prec)
    pows = {}
    for mono, c in form.items():
        term = Series.const(ext, c, prec)
        for v, e in enumerate(mono):
            if e:
                if (v, e) not in pows:
                    pows[(v, e)] = branch[v].pow(e)
                term = term.mul(pows[(v, e)])
        out = out.add(term)
    return out


def ord_of_form(curve, point, form, cap):
    """Vanishing order of a form along the curve at a closed point (< cap)."""
    branch = _plane_branch(curve, point, cap)
    val = form_on_branch(form, branch, point.ext).valuation()
    return val


def form_curve_divisor(curve, form, rng=None, attempts=12):
    """Exact intersection divisor of a form with the curve."""
    rng = rng or np.random.default_rng(0x21E05)
    p = curve.p
    form = {t: c % p for t, c in form.items() if c % p}
    if not form:
        raise CurveError("zero form has no divisor")
    deg_u = sum(next(iter(form)))
    expected = curve.degree * deg_u
    for _ in range(attempts):
        t = curve._random_frame()
        tinv_pts = t  # original coords of frame points are t @ new coords
        f2 = curve._transform_form(curve.form, t)
        u2 = curve._transform_form(form, t)
        if not (_lead_nonzero_const(f2, p) and _lead_nonzero_const(u2, p)):
            continue
        c2 = PlaneCurve(f2, p, check_smooth=False)
        div = _frame_intersection(c2, u2, tinv_pts, expected, p)
        if div is not None:
            return div
    raise CurveError("form-curve intersection failed in all frames")


def _lead_nonzero_const(f, p):
    dy = max(k[1] for k in f)
    if any(k[0] != 0 or k[2] != 0 for k in f if k[1] == dy):
        return False
    return sum(co for k, co in f.items() if k[1] == dy) % p != 0


def _y_poly(f, x0, p):
    dy = max(k[1] for k in f)
    cy = [0] * (dy + 1)
    for (a, b, _c), co in f.items():
        cy[b] = (cy[b] + co * pow(x0, a, p)) % p
    return unipoly.normalize(cy, p)


def _frame_intersection(c2, u2, t, expected, p):
    """Divisor in original coordinates, or None if the frame is unusable."""
    deg_r_bound = expected + 1
    if deg_r_bound + 1 >= p:
        raise CurveError("prime too small for resultant interpolation")
    xs = list(range(deg_r_bound + 1))
    vals = [
        unipoly.resultant(_y_poly(c2.form, x0, p), _y_poly(u2, x0, p), p) for x0 in xs
    ]
    from secsyz.curves import _lagrange

    rpoly = _lagrange(xs, vals, p)
    if not rpoly:
        return None
    div = Divisor()
    total = 0
    for fac, mult in factor_with_multiplicity(rpoly, p):
        e = unipoly.degree(fac)
        k = canonical_ext(p, e)
        x0 = _root_in_canonical(fac, k) if e > 1 else k.el((-fac[0]) % p)
        fy = extpoly.normalize(k, [k.el(c) for c in _coeffs_at(c2.form, x0, k)])
        uy = extpoly.normalize(k, [k.el(c) for c in _coeffs_at(u2, x0, k)])
        common = extpoly.gcd(k, fy, uy)
        roots = extpoly.roots_in_field(k, common)
        if extpoly.degree(common) != len(roots):
            return None  # a residue field not generated by x: frame too special
        for y0 in roots:
            pt2 = PlanePoint.make(k, (x0, y0, k.one))
            cap = mult + 2
            v = ord_of_form(c2, pt2, u2, cap)
            if v >= cap:
                return None
            if v == 0:
                continue
            orig = _map_point(pt2, t, k)
            div = div + Divisor({orig: v})
            total += v * e
    if total != expected:
        return None
    return div


def _coeffs_at(f, x0, k):
    dy = max(key[1] for key in f)
    cy = [k.zero] * (dy + 1)
    for (a, b, _c), co in f.items():
        term = k.mul(k.el(co), k.pow(x0, a))
        cy[b] = k.add(cy[b], term)
    return cy


def _map_point(pt2, t, k):
    coords = [k.zero, k.zero, k.zero]
    for i in range(3):
        for j in range(3):
            coords[i] = k.add(coords[i], k.mul(k.el(int(t[i, j])), pt2.coords[j]))
    return PlanePoint.make(k, tuple(coords))


def plane_section_zeros(space, coeffs):
    """Effective zero divisor of a section of a plane bundle."""
    curve = space.curve
    u = space.section_form(coeffs)
    if not u:
        raise CurveError("zero section has no zero divisor")
    div_u = form_curve_divisor(curve, u)
    z = div_u - space.denom_divisor - space.bundle.sub
    if not z.is_effective():
        raise CurveError("section zero divisor not effective (bug)")
    if z.degree != space.bundle.degree_on(curve):
        raise CurveError("section zero divisor has wrong degree (bug)")
    return z


def hyper_function_zeros(curve, a, b):
    """(affine zero divisor, pole order at infinity) of a(x) + y*b(x)."""
    p = curve.p
    a = unipoly.normalize(a, p)
    b = unipoly.normalize(b, p)
    if not a and not b:
        raise CurveError("zero function")
    f = curve.f
    norm = unipoly.sub(
        unipoly.mul(a, a, p), unipoly.mul(f, unipoly.mul(b, b, p), p), p
    )
    pole_inf = max(
        2 * unipoly.degree(a) if a else -(10**9),
        2 * curve.genus + 1 + 2 * unipoly.degree(b) if b else -(10**9),
    )
    div = Divisor()
    total = 0
    if unipoly.degree(norm) < 0:
        raise CurveError("identically zero norm: function vanishes on the curve")
    for fac, mult in factor_with_multiplicity(norm, p):
        e = unipoly.degree(fac)
        k = canonical_ext(p, e)
        x0 = _root_in_canonical(fac, k) if e > 1 else k.el((-fac[0]) % p)
        fx0 = extpoly.evaluate(k, [k.el(c) for c in f], x0)
        cap = 2 * mult + 2
        candidates = []
        if fx0 == k.zero:
            candidates.append(HyperPoint.make(k, x0, k.zero))
        else:
            sq = extpoly.roots_in_field(k, (k.neg(fx0), k.zero, k.one))
            if sq:
                candidates.append(HyperPoint.make(k, x0, sq[0]))
                candidates.append(HyperPoint.make(k, x0, k.neg(sq[0])))
            else:
                k2 = canonical_ext(p, 2 * e)
                x0b = _root_in_canonical(fac, k2)
                f2 = extpoly.evaluate(k2, [k2.el(c) for c in f], x0b)
                sq2 = extpoly.roots_in_field(k2, (k2.neg(f2), k2.zero, k2.one))
                if not sq2:
                    raise CurveError("square root missing in quadratic extension")
                candidates.append(HyperPoint.make(k2, x0b, sq2[0]))
        for pt in candidates:
            v = _hyper_ord(curve, pt, a, b, cap)
            if v >= cap:
                raise CurveError("order cap hit in hyperelliptic zeros")
            if v:
                div = div + Divisor({pt: v})
                total += v * pt.degree
    if total != pole_inf:
        raise CurveError("zero/pole degree mismatch in hyperelliptic zeros")
    return div, pole_inf


def _hyper_ord(curve, pt, a, b, cap):
    ext = pt.ext
    x, y = _hyper_branch(curve, pt, cap)
    prec = cap
    sa = Series.const(ext, 0, prec)
    for c in reversed(a):
        sa = sa.mul(x).add(Series.const(ext, c, prec))
    sb = Series.const(ext, 0, prec)
    for c in reversed(b):
        sb = sb.mul(x).add(Series.const(ext, c, prec))
    return sa.add(sb.mul(y)).valuation()


def hyper_section_zeros(space, coeffs):
    """Effective zero divisor of a section of a hyperelliptic bundle."""
    curve = space.curve
    a, b = space.section_pair(coeffs)
    zeros, pole_inf = hyper_function_zeros(curve, a, b)
    p = curve.p
    pinf = HyperPoint.at_infinity(p)
    num_div = zeros - Divisor({pinf: pole_inf})
    h = space.denom_poly
    denom_div = space.denom_divisor - Divisor({pinf: 2 * unipoly.degree(h)})
    z = num_div - denom_div + Divisor({pinf: space.bundle.twist}) - space.bundle.sub
    if not z.is_effective():
        raise CurveError("section zero divisor not effective (bug)")
    if z.degree != space.bundle.degree_on(curve):
        raise CurveError("section zero divisor has wrong degree (bug)")
    return z


def section_zeros(space, coeffs):
    if space.curve.kind == "plane":
        return plane_section_zeros(space, coeffs)
    return hyper_section_zeros(space, coeffs)
