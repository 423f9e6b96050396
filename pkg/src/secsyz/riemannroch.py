"""Riemann-Roch spaces, line bundles, and section arithmetic.

Line bundles are presented as a twist plus a subtracted divisor:
O(m*H)(-E) on a plane curve, O(n*Pinf)(-E) on a hyperelliptic one.  E may
carry negative multiplicities (allowed poles); such bundles are realized
by twisting with explicit auxiliary functions of known divisor (lines for
plane curves, x - x0 for hyperelliptic ones) until the subtracted part is
effective again.

Sections are concrete: a numerator form (plane) or an a(x) + y*b(x) pair
(hyperelliptic) over a shared denominator.  That makes evaluation,
multiplication and zero-divisors all computable, which the gonality and
Koszul layers rely on.
"""

from dataclasses import dataclass, field as dfield
from functools import lru_cache

import numpy as np

from secsyz import polyspace
from secsyz.curves import CurveError, HyperellipticCurve, PlaneCurve
from secsyz.divisors import Divisor, HyperPoint, PlanePoint, prime_ext
from secsyz.fflinalg import kernel_basis, mat_mul, rank, row_space, rref, solve, unipoly, extpoly
from secsyz.fflinalg.extfield import ExtField
from secsyz.series import Series, binomial_shift_powers


@lru_cache(maxsize=None)
def canonical_ext(p, d):
    """One fixed field F_{p^d} per degree, so equal points hash equal."""
    if d == 1:
        return prime_ext(p)
    if d == 2:
        from secsyz.divisors import quadratic_ext

        return quadratic_ext(p)
    return ExtField(p, d=d)


@dataclass(frozen=True)
class LineBundle:
    """O(twist * H)(-sub) on a plane curve, O(twist * Pinf)(-sub) otherwise."""

    twist: int
    sub: Divisor = dfield(default_factory=Divisor)

    def degree_on(self, curve):
        unit = curve.degree if curve.kind == "plane" else 1
        return self.twist * unit - self.sub.degree

    def tensor(self, other):
        return LineBundle(self.twist + other.twist, self.sub + other.sub)

    def inverse(self):
        return LineBundle(-self.twist, -self.sub)

    def subtract(self, divisor):
        return LineBundle(self.twist, self.sub + divisor)

    def power(self, k):
        return LineBundle(self.twist * k, k * self.sub)


def canonical_bundle(curve):
    if curve.kind == "plane":
        return LineBundle(curve.degree - 3)
    return LineBundle(2 * curve.genus - 2)


def trivial_bundle():
    return LineBundle(0)


# ---------------------------------------------------------------------------
# local branch expansions


def _plane_affine(curve, point):
    """Chart data at a smooth closed point: (chart, u_var, v_var, u0, v0).

    chart is the coordinate normalized to 1; v_var is the variable solved
    for as a series in t = u - u0.
    """
    ext = point.ext
    coords = point.coords
    chart = max(i for i in range(3) if coords[i] != ext.zero)
    grad = curve.gradient_at(ext, coords)
    others = [i for i in range(3) if i != chart]
    inv = ext.inv(coords[chart])
    norm = [ext.mul(c, inv) for c in coords]
    # solve for the variable whose affine partial derivative is nonzero
    for v_var in others:
        if grad[v_var] != ext.zero:
            u_var = next(i for i in others if i != v_var)
            return chart, u_var, v_var, norm[u_var], norm[v_var]
    raise CurveError(f"no smooth chart at {point}")


def _plane_branch(curve, point, prec):
    """Series (u(t), v(t)) of the branch at a smooth point, t = u - u0."""
    ext = point.ext
    chart, u_var, v_var, u0, v0 = _plane_affine(curve, point)
    # F restricted to the chart, as {(eu, ev): coeff}
    faff = {}
    for t, c in curve.form.items():
        key = (t[u_var], t[v_var])
        faff[key] = (faff.get(key, 0) + c) % curve.p
    max_u = max(k[0] for k in faff)
    upow = binomial_shift_powers(ext, u0, max_u, prec)
    # F(u0+t, v) = sum_j C_j(t) v^j
    max_v = max(k[1] for k in faff)
    cj = [Series.const(ext, 0, prec) for _ in range(max_v + 1)]
    for (eu, ev), c in faff.items():
        cj[ev] = cj[ev].add(upow[eu].scale(c))
    v = Series.const(ext, v0, prec)
    for _ in range(max(1, prec).bit_length() + 2):
        fval = Series.const(ext, 0, prec)
        fder = Series.const(ext, 0, prec)
        vpow = Series.const(ext, ext.one, prec)
        for j in range(max_v + 1):
            fval = fval.add(cj[j].mul(vpow))
            if j + 1 <= max_v:
                fder = fder.add(cj[j + 1].mul(vpow).scale(j + 1))
            vpow = vpow.mul(v)
        v = v.sub(fval.mul(fder.inverse()))
        if fval.is_zero():
            break
    u = Series(ext, [u0, ext.one], prec)
    branch = [None, None, None]
    branch[chart] = Series.const(ext, ext.one, prec)
    branch[u_var] = u
    branch[v_var] = v
    return branch


def _hyper_branch(curve, point, prec):
    """Series (x(t), y(t)) at a smooth affine point of y^2 = f(x)."""
    ext = point.ext
    assert not point.infinity
    x0, y0 = point.x, point.y
    if y0 != ext.zero:
        # t = x - x0; y = sqrt(f(x0 + t)) via Newton from y0
        fx = _fp_poly_series(ext, curve.f, x0, prec)
        y = Series.const(ext, y0, prec)
        for _ in range(prec.bit_length() + 2):
            y = y.add(fx.mul(y.inverse())).scale(pow(2, curve.p - 2, curve.p))
        x = Series(ext, [x0, ext.one], prec)
        return x, y
    # Weierstrass point: t = y; solve f(x) = t^2 from simple root x0
    t2 = Series(ext, [ext.zero, ext.zero, ext.one], prec)
    x = Series.const(ext, x0, prec)
    fprime = unipoly.derivative(curve.f, curve.p)
    for _ in range(prec.bit_length() + 2):
        fx = _poly_on_series(ext, curve.f, x)
        dfx = _poly_on_series(ext, fprime, x)
        x = x.sub(fx.sub(t2).mul(dfx.inverse()))
    y = Series(ext, [ext.zero, ext.one], prec)
    return x, y


def _fp_poly_series(ext, coeffs, x0, prec):
    """f(x0 + t) for f over F_p, as a series over ext."""
    out = Series.const(ext, 0, prec)
    pows = binomial_shift_powers(ext, x0, len(coeffs) - 1, prec)
    for a, c in enumerate(coeffs):
        if c:
            out = out.add(pows[a].scale(c))
    return out


def _poly_on_series(ext, coeffs, s):
    out = Series.const(ext, 0, prec := s.prec)
    for c in reversed(coeffs):
        out = out.mul(s).add(Series.const(ext, c, prec))
    return out


# ---------------------------------------------------------------------------
# vanishing conditions


def _plane_condition_rows(curve, point, mult, form_degree):
    """F_p rows forcing a degree-`form_degree` form to vanish to order mult."""
    ext = point.ext
    if mult == 1:
        vals = polyspace.eval_monomials_ext(3, form_degree, point.coords, ext)
        return np.array(_ext_rows(vals, ext), dtype=np.int64)
    branch = _plane_branch(curve, point, mult)
    rows = []
    mono_series = _monomial_series(branch, 3, form_degree)
    for k in range(mult):
        coeff_row = [s.c[k] for s in mono_series]
        rows.extend(_ext_rows(coeff_row, ext))
    if not rows:
        return np.zeros((0, polyspace.dim(3, form_degree)), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def _monomial_series(branch, n, m):
    prec = branch[0].prec
    ext = branch[0].field
    pows = []
    for v in range(n):
        col = [Series.const(ext, ext.one, prec)]
        for _ in range(m):
            col.append(col[-1].mul(branch[v]))
        pows.append(col)
    out = []
    for t in polyspace.monomials(n, m):
        s = Series.const(ext, ext.one, prec)
        for v, e in enumerate(t):
            if e:
                s = s.mul(pows[v][e])
        out.append(s)
    return out


def _ext_rows(values, ext):
    """Each ExtField-valued linear condition splits into ext.d F_p rows."""
    rows = []
    for comp in range(ext.d):
        rows.append([int(v[comp]) for v in values])
    return [np.array(r, dtype=np.int64) for r in rows]


def _hyper_condition_rows(curve, point, mult, monos):
    """Rows forcing sum(c_k * mono_k) to vanish to order mult at the point."""
    ext = point.ext
    p = curve.p
    if point.infinity:
        raise CurveError("conditions at infinity are handled by the twist")
    weier = point.y == ext.zero
    needed_prec = 2 * mult if weier else mult
    x, y = _hyper_branch(curve, point, needed_prec)
    xpow = [Series.const(ext, ext.one, needed_prec)]
    maxe = max(e for e, _ in monos)
    for _ in range(maxe):
        xpow.append(xpow[-1].mul(x))
    series = []
    for e, has_y in monos:
        s = xpow[e].mul(y) if has_y else xpow[e]
        series.append(s)
    # orders to force: at a Weierstrass point ord(x - x0) = 2, handled by
    # demanding the first `mult` orders in t where ord t = 1 anyway
    rows = []
    for k in range(mult if not weier else mult):
        coeff_row = [s.c[k] for s in series]
        rows.extend(_ext_rows(coeff_row, ext))
    return np.array(rows, dtype=np.int64) if rows else np.zeros((0, len(monos)), dtype=np.int64)


# ---------------------------------------------------------------------------
# auxiliary divisors of known shape


def line_through(curve, pt_a, pt_b):
    """Line coefficients over F_p through two distinct rational points."""
    p = curve.p
    if pt_a.degree != 1 or pt_b.degree != 1:
        raise CurveError("line_through expects rational points")
    line = _cross_int(pt_a.ints(), pt_b.ints(), p)
    if line is None:
        raise CurveError("coincident points define no line")
    return line


def conjugate_line(point):
    """The F_p line through a degree-2 point and its conjugate."""
    ext = point.ext
    assert ext.d == 2
    a = point.coords
    b = tuple(ext.frobenius(c) for c in a)
    cr = [
        ext.sub(ext.mul(a[1], b[2]), ext.mul(a[2], b[1])),
        ext.sub(ext.mul(a[2], b[0]), ext.mul(a[0], b[2])),
        ext.sub(ext.mul(a[0], b[1]), ext.mul(a[1], b[0])),
    ]
    # cross(P, conj P) is Frobenius-antiinvariant; theta * it lands in F_p
    theta = ext.gen()
    fixed = [ext.mul(theta, c) for c in cr]
    if any(c[1] != 0 for c in fixed):
        raise CurveError("conjugate line construction failed")
    line = tuple(c[0] for c in fixed)
    if all(c == 0 for c in line):
        raise CurveError("degenerate conjugate line")
    return line


def _cross_int(a, b, p):
    out = (
        (a[1] * b[2] - a[2] * b[1]) % p,
        (a[2] * b[0] - a[0] * b[2]) % p,
        (a[0] * b[1] - a[1] * b[0]) % p,
    )
    return None if all(c == 0 for c in out) else out


def tangent_line(curve, point):
    """Tangent line at a smooth rational point, as F_p coefficients."""
    grad = curve.gradient_at(point.ext, point.coords)
    return tuple(g[0] for g in grad)


def line_curve_divisor(curve, line):
    """Exact intersection divisor of a line with a plane curve.

    Parametrizes the line and factors the restricted binary form; each
    irreducible factor of degree e yields a closed point over F_{p^e}.
    """
    p = curve.p
    line = tuple(int(c) % p for c in line)
    # two spanning points of the line
    basis = kernel_basis(np.array([line], dtype=np.int64), p)
    assert basis.shape[0] == 2
    A, B = basis[0], basis[1]
    # restrict: F(s*A + t*B) as univariate in t (s = 1), plus t = infinity
    ext = prime_ext(p)
    d = curve.degree
    coeffs = [0] * (d + 1)
    for mono, c in curve.form.items():
        # expand prod (A_v + t B_v)^{e_v}
        term = [c]
        for v, e in enumerate(mono):
            for _ in range(e):
                term = _lin_mul(term, int(A[v]), int(B[v]), p)
        for k, cv in enumerate(term):
            coeffs[k] = (coeffs[k] + cv) % p
    poly = unipoly.normalize(coeffs, p)
    div = Divisor()
    total = 0
    if unipoly.degree(poly) < d:
        # the point B (t = infinity) lies on the curve with multiplicity
        mult = d - unipoly.degree(poly)
        pt = PlanePoint.make(ext, tuple(int(v) for v in B))
        div = div + Divisor({pt: mult})
        total += mult
    for fac, mult in factor_with_multiplicity(poly, p):
        e = unipoly.degree(fac)
        k = canonical_ext(p, e)
        if e == 1:
            t0 = (-fac[0]) % p
            coords = tuple((int(A[v]) + t0 * int(B[v])) % p for v in range(3))
            pt = PlanePoint.make(ext, coords)
        else:
            root = _root_in_canonical(fac, k)
            coords = tuple(
                k.add(k.el(int(A[v])), k.mul(root, k.el(int(B[v])))) for v in range(3)
            )
            pt = PlanePoint.make(k, coords)
        div = div + Divisor({pt: mult})
        total += mult * e
    if total != d:
        raise CurveError("line-curve intersection miscounted")
    return div


def _lin_mul(term, a, b, p):
    out = [0] * (len(term) + 1)
    for i, c in enumerate(term):
        out[i] = (out[i] + c * a) % p
        out[i + 1] = (out[i + 1] + c * b) % p
    return out


def factor_with_multiplicity(poly, p):
    """[(irreducible monic factor, multiplicity)] by trial division."""
    out = {}
    rest = unipoly.monic(poly, p)
    if unipoly.degree(rest) < 1:
        return []
    sf = unipoly.squarefree_part(rest, p)
    for fac in unipoly.factor_squarefree(sf, p):
        m = 0
        cur = rest
        while True:
            q, r = unipoly.divmod_poly(cur, fac, p)
            if r:
                break
            cur = q
            m += 1
        out[fac] = m
    return sorted(out.items())


def _root_in_canonical(fac, k):
    """A root of the irreducible fac inside the canonical field of its degree."""
    poly = extpoly.normalize(k, [k.el(c) for c in fac])
    roots = extpoly.roots_in_field(k, poly)
    if not roots:
        raise CurveError("no root of an irreducible factor in its own field")
    return sorted(roots)[0]


def aux_form_through(curve, point, rng, avoid=()):
    """An F_p form of small degree vanishing at the closed point, with its
    exact curve divisor.  Lines when possible, else an interpolated form."""
    p = curve.p
    if point.degree == 1:
        pool = curve.sample_points(24, seed=0x11F)
        for other in pool:
            if other == point:
                continue
            line = _cross_int(point.ints(), other.ints(), p)
            if line is None or line in avoid:
                continue
            return line, line_curve_divisor(curve, line), 1
        raise CurveError("no usable line through point")
    if point.degree == 2:
        line = conjugate_line(point)
        return line, line_curve_divisor(curve, line), 1
    # degree >= 3: interpolate a form of degree e through the point
    e = point.degree
    rows = _plane_condition_rows(curve, point, 1, e)
    ker = kernel_basis(rows, p)
    if ker.shape[0] == 0:
        raise CurveError("no auxiliary form through point")
    for row in ker:
        form = polyspace.vector_to_form(row, 3, e)
        div = form_curve_divisor(curve, form)
        if div.multiplicity(point) >= 1:
            return form, div, e
    raise CurveError("auxiliary form does not pass through its point")


class PlaneSections:
    """H^0 of a line bundle on a plane curve, with explicit numerators.

    Sections are cosets u / prod(lines) with u a form of degree
    `form_degree`; the coset is modulo F * S since I(C) = (F).
    """

    def __init__(self, curve, bundle, form_degree, basis, denom_forms, denom_divisor):
        self.curve = curve
        self.bundle = bundle
        self.form_degree = form_degree
        self.basis = basis
        self.denom_forms = tuple(denom_forms)
        self.denom_divisor = denom_divisor

    @property
    def dim(self):
        return self.basis.shape[0]

    def section_form(self, coeffs):
        vec = mat_mul(np.asarray(coeffs).reshape(1, -1), self.basis, self.curve.p)[0]
        return polyspace.vector_to_form(vec, 3, self.form_degree)

    def denom_product_form(self):
        prod = {(0, 0, 0): 1}
        for f in self.denom_forms:
            fd = f if isinstance(f, dict) else _line_as_form(f)
            prod = polyspace.form_multiply(prod, fd, self.curve.p)
        return prod

    def evaluate_at(self, coords):
        """Values of all basis sections at rational points (columns of coords)."""
        p = self.curve.p
        coords = np.asarray(coords, dtype=np.int64)
        monos = polyspace.eval_monomials(3, self.form_degree, coords, p)
        vals = mat_mul(self.basis, monos, p)
        if self.denom_forms:
            dp = self.denom_product_form()
            t = sum(next(iter(dp))) if dp else 0
            dmonos = polyspace.eval_monomials(3, t, coords, p)
            dvec = polyspace.form_to_vector(dp, 3, t, p)
            dvals = mat_mul(dvec.reshape(1, -1), dmonos, p)[0]
            if (dvals == 0).any():
                raise CurveError("denominator vanishes at an evaluation point")
            inv = np.array([pow(int(v), p - 2, p) for v in dvals], dtype=np.int64)
            vals = vals * inv % p
        return vals


class HyperSections:
    """H^0 of a line bundle on a hyperelliptic curve.

    Sections are (a(x) + y*b(x)) / h(x); coordinates run over the monomial
    list `monos` of pairs (exponent, has_y) with poles only at infinity.
    """

    def __init__(self, curve, bundle, pole_order, monos, basis, denom_poly, denom_divisor):
        self.curve = curve
        self.bundle = bundle
        self.pole_order = pole_order
        self.monos = tuple(monos)
        self.basis = basis
        self.denom_poly = denom_poly
        self.denom_divisor = denom_divisor

    @property
    def dim(self):
        return self.basis.shape[0]

    def section_pair(self, coeffs):
        """(a coeff tuple, b coeff tuple) of the numerator a + y*b."""
        p = self.curve.p
        vec = mat_mul(np.asarray(coeffs).reshape(1, -1), self.basis, p)[0]
        deg_bound = max(e for e, _ in self.monos) + 1
        a = [0] * deg_bound
        b = [0] * deg_bound
        for c, (e, has_y) in zip(vec, self.monos):
            if has_y:
                b[e] = int(c)
            else:
                a[e] = int(c)
        return unipoly.normalize(a, p), unipoly.normalize(b, p)

    def evaluate_at(self, pts):
        """Values at affine rational points [(x, y) ints]."""
        p = self.curve.p
        xs = np.array([x for x, _ in pts], dtype=np.int64)
        ys = np.array([y for _, y in pts], dtype=np.int64)
        maxe = max(e for e, _ in self.monos)
        xpow = np.ones((maxe + 1, len(pts)), dtype=np.int64)
        for k in range(1, maxe + 1):
            xpow[k] = xpow[k - 1] * xs % p
        rows = np.stack(
            [xpow[e] * (ys if has_y else 1) % p for e, has_y in self.monos]
        )
        vals = mat_mul(self.basis, rows, p)
        if self.denom_poly != unipoly.ONE:
            dv = np.array(
                [unipoly.evaluate(self.denom_poly, int(x), p) for x in xs],
                dtype=np.int64,
            )
            if (dv == 0).any():
                raise CurveError("denominator vanishes at an evaluation point")
            inv = np.array([pow(int(v), p - 2, p) for v in dv], dtype=np.int64)
            vals = vals * inv % p
        return vals


def _line_as_form(line):
    return {
        (1, 0, 0): int(line[0]),
        (0, 1, 0): int(line[1]),
        (0, 0, 1): int(line[2]),
    }


def _quotient_complement(big_rows, small_rows, p):
    """Rows of rref(big) whose pivots are not pivots of rref(small).

    Valid when span(small) <= span(big); returns coset representatives of
    big/small.
    """
    rb, pb = rref(big_rows, p)
    if small_rows.size == 0:
        return rb[: len(pb)]
    rs, ps = rref(small_rows, p)
    keep = [i for i, c in enumerate(pb) if c not in set(ps)]
    return rb[keep]


def riemann_roch_space(curve, bundle, rng=None):
    """A basis of H^0(curve, bundle); see PlaneSections / HyperSections."""
    rng = rng or np.random.default_rng(0x52AC)
    if curve.kind == "plane":
        return _plane_rr_space(curve, bundle, rng)
    return _hyper_rr_space(curve, bundle, rng)


def _plane_rr_space(curve, bundle, rng):
    p = curve.p
    d = curve.degree
    pos, neg = bundle.sub.effective_parts()
    denom_forms = []
    denom_div = Divisor()
    extra_degree = 0
    for q, mult in neg.items():
        used = []
        for _ in range(mult):
            form, div, deg_f = aux_form_through(curve, q, rng, avoid=tuple(used))
            used.append(form)
            denom_forms.append(form)
            denom_div = denom_div + div
            extra_degree += deg_f
    m = bundle.twist + extra_degree
    if m < 0:
        return PlaneSections(
            curve, bundle, 0, np.zeros((0, 1), dtype=np.int64), (), Divisor()
        )
    cond = pos + denom_div - neg
    if not cond.is_effective():
        raise CurveError("pole cancellation failed")
    nmono = polyspace.dim(3, m)
    rows = [np.zeros((0, nmono), dtype=np.int64)]
    for q, mult in cond.items():
        rows.append(_plane_condition_rows(curve, q, mult, m))
    big = kernel_basis(np.vstack(rows), p)
    # the forms F * S_{m-d} all satisfy the conditions; quotient them away
    small = _f_multiples(curve, m)
    if small.size and big.size and not _rows_in_span(small, big, p):
        raise CurveError("F-multiples violate imposed conditions (bug)")
    basis = _quotient_complement(big, small, p)
    space = PlaneSections(curve, bundle, m, basis, denom_forms, denom_div)
    return space


def _rows_in_span(rows, span_rows, p):
    r0 = rank(span_rows, p)
    return rank(np.vstack([span_rows, rows]), p) == r0


def _f_multiples(curve, m):
    p = curve.p
    d = curve.degree
    if m < d:
        return np.zeros((0, polyspace.dim(3, m)), dtype=np.int64)
    fvec = polyspace.form_to_vector(curve.form, 3, d, p)
    out = np.zeros((polyspace.dim(3, m - d), polyspace.dim(3, m)), dtype=np.int64)
    idx = polyspace.monomial_index(3, m)
    for i, t in enumerate(polyspace.monomials(3, m - d)):
        for ft, fc in curve.form.items():
            key = tuple(a + b for a, b in zip(t, ft))
            out[i, idx[key]] = (out[i, idx[key]] + fc) % p
    return out


def _hyper_rr_space(curve, bundle, rng):
    p = curve.p
    g = curve.genus
    pos, neg = bundle.sub.effective_parts()
    for q in list(pos.points()) + list(neg.points()):
        if q.infinity:
            raise CurveError("subtract infinity via the twist, not the divisor")
    denom = unipoly.ONE
    denom_div = Divisor()
    extra_inf = 0
    for q, mult in neg.items():
        minpoly, zero_div, inf_mult = _x_fiber_divisor(curve, q)
        ordq = zero_div.multiplicity(q)
        assert ordq >= 1
        k = -(-mult // ordq)  # ceil
        for _ in range(k):
            denom = unipoly.mul(denom, minpoly, p)
            denom_div = denom_div + zero_div
            extra_inf += inf_mult
    n = bundle.twist + extra_inf
    monos = [(e, False) for e in range(0, n // 2 + 1)]
    monos += [(e, True) for e in range(0, (n - 2 * g - 1) // 2 + 1)]
    if n < 0 or not monos:
        return HyperSections(
            curve, bundle, n, [(0, False)], np.zeros((0, 1), dtype=np.int64),
            unipoly.ONE, Divisor(),
        )
    cond = pos + denom_div - neg
    if not cond.is_effective():
        raise CurveError("pole cancellation failed")
    rows = [np.zeros((0, len(monos)), dtype=np.int64)]
    for q, mult in cond.items():
        rows.append(_hyper_condition_rows(curve, q, mult, monos))
    basis = kernel_basis(np.vstack(rows), p)
    return HyperSections(curve, bundle, n, monos, basis, denom, denom_div)


def _x_fiber_divisor(curve, point):
    """Divisor data of the function minpoly(x) vanishing on the point's fiber.

    Returns (minpoly of x(point) over F_p, zero divisor, pole order at inf).
    """
    p = curve.p
    ext = point.ext
    # minimal polynomial of the x-coordinate
    ex = ext.min_poly_degree(point.x)
    orbit = [point.x]
    cur = point.x
    for _ in range(ex - 1):
        cur = ext.frobenius(cur)
        orbit.append(cur)
    minpoly = (ext.one,)
    for r in orbit:
        minpoly = extpoly.mul(ext, minpoly, (ext.neg(r), ext.one))
    mp = unipoly.normalize([c[0] for c in minpoly], p)
    assert len(mp) == ex + 1
    # zeros of minpoly(x) on the curve
    kx = canonical_ext(p, ex)
    x0 = _root_in_canonical(mp, kx) if ex > 1 else kx.el((-mp[0]) % p)
    fx0 = extpoly.evaluate(kx, [kx.el(c) for c in curve.f], x0)
    zero_div = Divisor()
    if fx0 == kx.zero:
        q = HyperPoint.make(kx, x0, kx.zero)
        zero_div = Divisor({q: 2})
    else:
        sq = extpoly.roots_in_field(kx, (kx.neg(fx0), kx.zero, kx.one))
        if sq:
            y0 = sq[0]
            q1 = HyperPoint.make(kx, x0, y0)
            q2 = HyperPoint.make(kx, x0, kx.neg(y0))
            zero_div = Divisor({q1: 1, q2: 1})
        else:
            k2 = canonical_ext(p, 2 * ex)
            x0b = _root_in_canonical(mp, k2)
            f2 = extpoly.evaluate(k2, [k2.el(c) for c in curve.f], x0b)
            sq2 = extpoly.roots_in_field(k2, (k2.neg(f2), k2.zero, k2.one))
            if not sq2:
                raise CurveError("no square root over the quadratic extension")
            q = HyperPoint.make(k2, x0b, sq2[0])
            zero_div = Divisor({q: 1})
    assert zero_div.degree == 2 * ex
    return mp, zero_div, 2 * ex


def h0h1(curve, bundle, rng=None):
    """(h^0, h^1) with h^1 from Riemann-Roch."""
    h0 = riemann_roch_space(curve, bundle, rng).dim
    h1 = h0 - bundle.degree_on(curve) + curve.genus - 1
    if h1 < 0:
        raise CurveError("negative h^1: section space too small (bug)")
    return h0, h1
