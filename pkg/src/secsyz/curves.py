"""Explicit smooth curves over F_p: plane models and hyperelliptic models.

A plane curve is a smooth homogeneous F(x,y,z) = 0 of degree d >= 3, genus
(d-1)(d-2)/2.  A hyperelliptic curve is y^2 = f(x) with f squarefree of odd
degree 2g+1, so there is a single rational point at infinity.

Point enumeration sweeps fibers of the x-coordinate with the batched root
finder; closed points of degree 2 are enumerated completely, which is what
the exhaustive gonality certification consumes.
"""

import math
from functools import lru_cache

import numpy as np

from secsyz.divisors import HyperPoint, PlanePoint, prime_ext, quadratic_ext
from secsyz.fflinalg import is_prime, unipoly, extpoly
from secsyz.fflinalg.extfield import ExtArray, sqrt_batched
from secsyz.fflinalg.rootfind import roots_batched
from secsyz.polyspace import form_eval_ext, form_partial


class CurveError(Exception):
    pass


class PointExhaustion(CurveError):
    def __init__(self, requested, available):
        super().__init__(
            f"requested {requested} rational points but the curve has only {available}"
        )
        self.requested = requested
        self.available = available


def _eval_poly_ext(field, coeffs, xs):
    """Horner evaluation of an F_p[x] polynomial on an ExtArray batch."""
    n = xs.n
    acc = field.zeros(n)
    for c in reversed(coeffs):
        acc = acc.mul(xs)
        add = np.zeros((field.d, n), dtype=np.int64)
        add[0] = int(c) % field.p
        acc = acc.add(ExtArray(field, add))
    return acc


class PlaneCurve:
    """Smooth plane curve F(x,y,z) = 0 over F_p."""

    kind = "plane"

    def __init__(self, form, p, check_smooth=True, rng=None):
        if not is_prime(p):
            raise CurveError(f"{p} is not prime")
        self.p = int(p)
        self.form = {
            tuple(int(e) for e in t): int(c) % p for t, c in form.items() if c % p
        }
        if not self.form:
            raise CurveError("zero form")
        degrees = {sum(t) for t in self.form}
        if len(degrees) != 1:
            raise CurveError("form is not homogeneous")
        (self.degree,) = degrees
        if self.degree < 3:
            raise CurveError("need degree >= 3")
        self.genus = (self.degree - 1) * (self.degree - 2) // 2
        self._rng = rng or np.random.default_rng(0xC0DE)
        self._cache = {}
        if check_smooth:
            self.assert_smooth()

    # -- polynomial views ------------------------------------------------

    @property
    def ext1(self):
        return prime_ext(self.p)

    @property
    def ext2(self):
        return quadratic_ext(self.p)

    def y_coefficients(self):
        """F(x,y,1) as a polynomial in y: list over j of F_p[x] coeff tuples."""
        key = "ycoeffs"
        if key not in self._cache:
            d = self.degree
            out = []
            for j in range(d + 1):
                cx = [0] * (d - j + 1)
                for (a, b, c), co in self.form.items():
                    if b == j:
                        cx[a] = (cx[a] + co) % self.p
                out.append(tuple(cx))
            self._cache[key] = out
        return self._cache[key]

    def gradient_forms(self):
        return [form_partial(self.form, v, self.p) for v in range(3)]

    def evaluate(self, ext, coords):
        return form_eval_ext(self.form, [ext.el(c) for c in coords], ext)

    def contains(self, point):
        return self.evaluate(point.ext, point.coords) == point.ext.zero

    def gradient_at(self, ext, coords):
        coords = [ext.el(c) for c in coords]
        return tuple(form_eval_ext(g, coords, ext) for g in self.gradient_forms())

    def is_smooth_at(self, point):
        grad = self.gradient_at(point.ext, point.coords)
        return any(g != point.ext.zero for g in grad)

    # -- smoothness certificate -------------------------------------------

    def assert_smooth(self):
        """Reject singular models.

        Strategy: in two independent random coordinate frames, certify that
        V(F_x, F_y, F_z) has no point in the affine chart via resultants;
        the only point escaping both charts is the intersection of the two
        excluded lines, which is checked directly.  Gradient checks at all
        enumerated points of degree <= 2 run later, during enumeration.
        """
        if math.gcd(self.degree, self.p) != 1:
            raise CurveError("char | degree: Euler argument unavailable, pick another p")
        excluded = []
        frames = 0
        attempts = 0
        while frames < 2 and attempts < 24:
            attempts += 1
            t = self._random_frame()
            ok, line = self._chart_resultant_check(t)
            if ok:
                excluded.append(line)
                frames += 1
        if frames < 2:
            raise CurveError("curve appears singular (resultant certificate failed)")
        # the single projective point on both excluded lines
        pt = _line_intersection(excluded[0], excluded[1], self.p)
        if pt is not None:
            ext = self.ext1
            if self.evaluate(ext, pt) == ext.zero and not any(
                g != ext.zero for g in self.gradient_at(ext, pt)
            ):
                raise CurveError("singular point found")

    def _random_frame(self):
        p = self.p
        while True:
            t = self._rng.integers(0, p, size=(3, 3), dtype=np.int64)
            det = (
                int(t[0, 0]) * (int(t[1, 1]) * int(t[2, 2]) - int(t[1, 2]) * int(t[2, 1]))
                - int(t[0, 1]) * (int(t[1, 0]) * int(t[2, 2]) - int(t[1, 2]) * int(t[2, 0]))
                + int(t[0, 2]) * (int(t[1, 0]) * int(t[2, 1]) - int(t[1, 1]) * int(t[2, 0]))
            ) % p
            if det:
                return t

    def _transform_form(self, f, t):
        """f(T @ (x,y,z)) as a sparse form dict: substitutes x_v -> sum_j T[v,j] x_j."""
        p = self.p
        rows = [
            {(1, 0, 0): int(t[v, 0]), (0, 1, 0): int(t[v, 1]), (0, 0, 1): int(t[v, 2])}
            for v in range(3)
        ]
        out = {}
        from secsyz.polyspace import form_multiply

        for mono, c in f.items():
            term = {(0, 0, 0): c}
            for v, e in enumerate(mono):
                for _ in range(e):
                    term = form_multiply(term, rows[v], p)
            for k, v2 in term.items():
                out[k] = (out.get(k, 0) + v2) % p
        return {k: v for k, v in out.items() if v}

    def _chart_resultant_check(self, t):
        """True when V(G_x,G_y,G_z) avoids the chart z != 0 in frame t."""
        p = self.p
        g = self._transform_form(self.form, t)
        gx, gy, gz = (form_partial(g, v, p) for v in range(3))

        def y_poly(f, x0):
            dy = max(k[1] for k in f)
            cy = [0] * (dy + 1)
            for (a, b, _c), co in f.items():
                cy[b] = (cy[b] + co * pow(x0, a, p)) % p
            return unipoly.normalize(cy, p)

        def lead_is_nonzero_const(f):
            # coefficient of the top y-power at z=1 must be constant in x
            dy = max(k[1] for k in f)
            if any(k[0] != 0 for k in f if k[1] == dy):
                return False
            return sum(co for k, co in f.items() if k[1] == dy) % p != 0

        if not all(map(lead_is_nonzero_const, (gx, gy, gz))):
            return False, None
        bound = 2 * self.degree * self.degree + 2
        if bound >= p:
            raise CurveError("prime too small for the smoothness certificate")
        xs = list(range(bound))
        r1 = [unipoly.resultant(y_poly(gx, x0), y_poly(gy, x0), p) for x0 in xs]
        r2 = [unipoly.resultant(y_poly(gx, x0), y_poly(gz, x0), p) for x0 in xs]
        r1p = _lagrange(xs, r1, p)
        r2p = _lagrange(xs, r2, p)
        if not r1p or not r2p:
            return False, None
        if unipoly.degree(unipoly.gcd(r1p, r2p, p)) > 0:
            return False, None
        # excluded line: z' = 0 in frame t, i.e. the last row of t^{-1}... the
        # line {T^{-1}-chart}: points with third new coordinate zero map to
        # original coordinates x = T @ (a, b, 0); represent by its two spanning
        # points.
        span = (tuple(int(t[i, 0]) for i in range(3)), tuple(int(t[i, 1]) for i in range(3)))
        return True, span

    # -- enumeration -------------------------------------------------------

    def rational_points_arrays(self):
        """All points of C(F_p): ((3, N) int64 coords, list of infinity pts)."""
        key = "rat"
        if key not in self._cache:
            p = self.p
            ext = self.ext1
            xs = ExtArray(ext, np.arange(p, dtype=np.int64)[None, :])
            coeffs = np.stack(
                [_eval_poly_ext(ext, cj, xs).c for cj in self.y_coefficients()]
            )
            roots, counts = roots_batched(ext, coeffs, self._rng)
            cols = []
            for j in range(int(counts.max()) if counts.size else 0):
                sel = np.where(counts > j)[0]
                pts = np.empty((3, len(sel)), dtype=np.int64)
                pts[0] = sel
                pts[1] = roots[0, j, sel]
                pts[2] = 1
                cols.append(pts)
            affine = (
                np.concatenate(cols, axis=1) if cols else np.zeros((3, 0), dtype=np.int64)
            )
            inf_pts = self._infinity_points(degree=1)
            self._cache[key] = (affine, inf_pts)
        return self._cache[key]

    def _infinity_points(self, degree):
        """Closed points on the line z = 0 of the given degree (1 or 2)."""
        p = self.p
        d = self.degree
        cy = [0] * (d + 1)
        for (a, b, c), co in self.form.items():
            if c == 0:
                cy[b] = (cy[b] + co) % p
        out = []
        if degree == 1:
            for r in unipoly.roots(unipoly.normalize(cy, p), p):
                out.append(PlanePoint.make(self.ext1, (1, r, 0)))
            if cy[d] % p == 0:
                out.append(PlanePoint.make(self.ext1, (0, 1, 0)))
        else:
            f2 = self.ext2
            poly = extpoly.normalize(f2, [f2.el(c) for c in cy])
            for r in extpoly.roots_in_field(f2, poly):
                if not f2.in_prime_field(r):
                    out.append(PlanePoint.make(f2, (f2.one, r, f2.zero)))
        return out

    def rational_points(self):
        """C(F_p) as PlanePoint objects, in a fixed enumeration order."""
        key = "ratpts"
        if key not in self._cache:
            affine, inf_pts = self.rational_points_arrays()
            ext = self.ext1
            pts = [
                PlanePoint.make(ext, (int(affine[0, i]), int(affine[1, i]), 1))
                for i in range(affine.shape[1])
            ]
            self._cache[key] = pts + inf_pts
        return self._cache[key]

    def count_rational(self):
        affine, inf_pts = self.rational_points_arrays()
        return affine.shape[1] + len(inf_pts)

    def degree2_points_arrays(self):
        """All degree-2 closed points, one representative per orbit.

        Returns (xs, ys) ExtArrays over F_{p^2} for the affine ones (z = 1)
        plus the list of degree-2 points at infinity.  Coordinates are raw
        representatives, not canonicalized (rank conditions do not care).
        """
        key = "deg2"
        if key not in self._cache:
            p = self.p
            f2 = self.ext2
            half = (p - 1) // 2
            # batch 1: x in F_p, y of exact degree 2 (theta-part in [1, half])
            xs1 = ExtArray(f2, np.vstack([np.arange(p), np.zeros(p, dtype=np.int64)]))
            r1, c1 = self._fiber_roots(f2, xs1)
            keep1_x, keep1_y = [], []
            for j in range(int(c1.max()) if c1.size else 0):
                sel = np.where(
                    (c1 > j) & (r1[1, j, :] >= 1) & (r1[1, j, :] <= half)
                )[0]
                keep1_x.append(xs1.c[:, sel])
                keep1_y.append(r1[:, j, sel])
            # batch 2: x = a + b*theta with b in [1, half]: one rep per x-orbit
            a = np.repeat(np.arange(p, dtype=np.int64), half)
            b = np.tile(np.arange(1, half + 1, dtype=np.int64), p)
            xs2 = ExtArray(f2, np.vstack([a, b]))
            r2, c2 = self._fiber_roots(f2, xs2)
            keep2_x, keep2_y = [], []
            for j in range(int(c2.max()) if c2.size else 0):
                sel = np.where(c2 > j)[0]
                keep2_x.append(xs2.c[:, sel])
                keep2_y.append(r2[:, j, sel])
            xs = np.concatenate(keep1_x + keep2_x, axis=1)
            ys = np.concatenate(keep1_y + keep2_y, axis=1)
            inf2 = self._infinity_points(degree=2)
            self._cache[key] = (ExtArray(f2, xs), ExtArray(f2, ys), inf2)
        return self._cache[key]

    def _fiber_roots(self, field, xs):
        coeffs = np.stack(
            [_eval_poly_ext(field, cj, xs).c for cj in self.y_coefficients()]
        )
        return roots_batched(field, coeffs, self._rng)

    def degree2_points(self):
        """Degree-2 closed points as canonical PlanePoint objects."""
        xs, ys, inf2 = self.degree2_points_arrays()
        f2 = self.ext2
        pts = [
            PlanePoint.make(f2, (xs.scalar(i), ys.scalar(i), f2.one))
            for i in range(xs.n)
        ]
        return pts + inf2

    def count_degree2(self):
        xs, _, inf2 = self.degree2_points_arrays()
        return xs.n + len(inf2)

    def weil_check(self):
        """Hasse-Weil interval check on #C(F_p) and #C(F_{p^2})."""
        g, p = self.genus, self.p
        n1 = self.count_rational()
        if abs(n1 - p - 1) > 2 * g * math.isqrt(p) + 2 * g:
            raise CurveError(f"point count {n1} violates the Weil bound")
        n2 = n1 + 2 * self.count_degree2()
        if abs(n2 - p * p - 1) > 2 * g * p + 2 * g:
            raise CurveError(f"F_p^2 point count {n2} violates the Weil bound")
        return n1, n2

    def sample_points(self, count, seed):
        """Deterministic-under-seed distinct smooth rational points."""
        g, p = self.genus, self.p
        if count > p + 1 + 2 * g * math.isqrt(p) + 2 * g:
            raise PointExhaustion(count, self.count_rational())
        pts = self.rational_points()
        if count > len(pts):
            raise PointExhaustion(count, len(pts))
        order = np.random.default_rng(seed).permutation(len(pts))
        chosen = [pts[i] for i in order[:count]]
        for pt in chosen:
            if not self.is_smooth_at(pt):
                raise CurveError(f"singular sampled point {pt}")
        return chosen


class HyperellipticCurve:
    """y^2 = f(x), f squarefree of odd degree 2g+1, one point at infinity."""

    kind = "hyperelliptic"

    def __init__(self, f_coeffs, p, check_smooth=True, rng=None):
        if not is_prime(p) or p == 2:
            raise CurveError(f"{p} is not an odd prime")
        self.p = int(p)
        self.f = unipoly.normalize(f_coeffs, p)
        d = unipoly.degree(self.f)
        if d < 3 or d % 2 == 0:
            raise CurveError("need odd deg f >= 3")
        self.genus = (d - 1) // 2
        self._rng = rng or np.random.default_rng(0xC0DE)
        self._cache = {}
        if check_smooth and not unipoly.is_squarefree(self.f, p):
            raise CurveError("f is not squarefree: singular model")

    @property
    def ext1(self):
        return prime_ext(self.p)

    @property
    def ext2(self):
        return quadratic_ext(self.p)

    @property
    def infinity(self):
        return HyperPoint.at_infinity(self.p)

    def evaluate_f(self, ext, x):
        return extpoly.evaluate(ext, [ext.el(c) for c in self.f], ext.el(x))

    def contains(self, point):
        if point.infinity:
            return True
        ext = point.ext
        return ext.mul(point.y, point.y) == self.evaluate_f(ext, point.x)

    def involution(self, point):
        if point.infinity:
            return point
        return HyperPoint.make(point.ext, point.x, point.ext.neg(point.y))

    def rational_points(self):
        key = "ratpts"
        if key not in self._cache:
            p = self.p
            ext = self.ext1
            xs = ExtArray(ext, np.arange(p, dtype=np.int64)[None, :])
            fx = _eval_poly_ext(ext, self.f, xs)
            roots, ok = sqrt_batched(fx)
            pts = []
            for i in range(p):
                if not ok[i]:
                    continue
                y = int(roots.c[0, i])
                pts.append(HyperPoint.make(ext, (i,), (y,)))
                if y != 0:
                    pts.append(HyperPoint.make(ext, (i,), (p - y,)))
            self._cache[key] = pts + [self.infinity]
        return self._cache[key]

    def count_rational(self):
        return len(self.rational_points())

    def degree2_points_arrays(self):
        """(xs, ys) over F_{p^2} for affine degree-2 closed points."""
        key = "deg2"
        if key not in self._cache:
            p = self.p
            f2 = self.ext2
            half = (p - 1) // 2
            # x rational, y with nonzero theta-part
            xs1 = ExtArray(f2, np.vstack([np.arange(p), np.zeros(p, dtype=np.int64)]))
            fx1 = _eval_poly_ext(f2, self.f, xs1)
            r1, ok1 = sqrt_batched(fx1)
            sel1 = np.where(ok1 & (r1.c[1] >= 1))[0]
            y1 = r1.c[:, sel1].copy()
            flip = y1[1] > half
            y1[:, flip] = (-y1[:, flip]) % p
            x1 = xs1.c[:, sel1]
            # x of exact degree 2, both square roots
            a = np.repeat(np.arange(p, dtype=np.int64), half)
            b = np.tile(np.arange(1, half + 1, dtype=np.int64), p)
            xs2 = ExtArray(f2, np.vstack([a, b]))
            fx2 = _eval_poly_ext(f2, self.f, xs2)
            r2, ok2 = sqrt_batched(fx2)
            sel2 = np.where(ok2)[0]
            x2a = xs2.c[:, sel2]
            y2a = r2.c[:, sel2]
            nz = np.where((y2a != 0).any(axis=0))[0]
            x2b = x2a[:, nz]
            y2b = (-y2a[:, nz]) % p
            xs = np.concatenate([x1, x2a, x2b], axis=1)
            ys = np.concatenate([y1, y2a, y2b], axis=1)
            self._cache[key] = (ExtArray(f2, xs), ExtArray(f2, ys))
        return self._cache[key]

    def degree2_points(self):
        xs, ys = self.degree2_points_arrays()
        f2 = self.ext2
        return [
            HyperPoint.make(f2, xs.scalar(i), ys.scalar(i)) for i in range(xs.n)
        ]

    def count_degree2(self):
        xs, _ = self.degree2_points_arrays()
        return xs.n

    def weil_check(self):
        g, p = self.genus, self.p
        n1 = self.count_rational()
        if abs(n1 - p - 1) > 2 * g * math.isqrt(p) + 2 * g:
            raise CurveError(f"point count {n1} violates the Weil bound")
        n2 = n1 + 2 * self.count_degree2()
        if abs(n2 - p * p - 1) > 2 * g * p + 2 * g:
            raise CurveError(f"F_p^2 point count {n2} violates the Weil bound")
        return n1, n2

    def sample_points(self, count, seed, affine_only=True):
        p, g = self.p, self.genus
        if count > p + 1 + 2 * g * math.isqrt(p) + 2 * g:
            raise PointExhaustion(count, self.count_rational())
        pts = [pt for pt in self.rational_points() if not pt.infinity or not affine_only]
        if count > len(pts):
            raise PointExhaustion(count, len(pts))
        order = np.random.default_rng(seed).permutation(len(pts))
        return [pts[i] for i in order[:count]]


def _lagrange(xs, ys, p):
    """Interpolating polynomial through (xs[i], ys[i]) over F_p."""
    poly = unipoly.ZERO
    base = unipoly.ONE
    for x0 in xs:
        base = unipoly.mul(base, ((-x0) % p, 1), p)
    for x0, y0 in zip(xs, ys):
        num, rem = unipoly.divmod_poly(base, ((-x0) % p, 1), p)
        assert not rem
        denom = unipoly.evaluate(num, x0, p)
        poly = unipoly.add(poly, unipoly.scale(num, y0 * pow(denom, p - 2, p), p), p)
    return poly


def _line_intersection(span_a, span_b, p):
    """Intersection point of two projective lines given by spanning points."""

    def cross(u, v):
        return (
            (u[1] * v[2] - u[2] * v[1]) % p,
            (u[2] * v[0] - u[0] * v[2]) % p,
            (u[0] * v[1] - u[1] * v[0]) % p,
        )

    la = cross(*span_a)
    lb = cross(*span_b)
    pt = cross(la, lb)
    return None if all(c == 0 for c in pt) else pt
