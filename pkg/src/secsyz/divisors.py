"""Closed points and divisors on a curve over F_p.

Points over F_{p^d} are stored as Galois orbits: one canonical
representative with coordinates in an explicit ExtField, standing for the
orbit of d conjugate geometric points.  A divisor is a finite formal sum
of closed points with nonzero integer multiplicities; its degree weights
each point by the degree of its residue field.
"""

from dataclasses import dataclass
from functools import lru_cache

from secsyz.fflinalg.extfield import ExtField


@lru_cache(maxsize=None)
def prime_ext(p):
    """The degree-1 'extension' F_p itself, shared."""
    return ExtField(p, modulus=(0, 1))


@lru_cache(maxsize=None)
def quadratic_ext(p):
    """F_{p^2} with modulus T^2 - t for the smallest non-residue t."""
    return ExtField(p, d=2)


def _conjugates(ext, coords):
    orbit = [tuple(coords)]
    cur = tuple(coords)
    for _ in range(ext.d - 1):
        cur = tuple(ext.frobenius(c) for c in cur)
        orbit.append(cur)
    return orbit


@dataclass(frozen=True)
class PlanePoint:
    """A closed point of P^2, canonical within its Galois orbit."""

    coords: tuple  # 3 ExtField scalars, first nonzero coordinate is 1
    ext: ExtField

    @staticmethod
    def make(ext, coords):
        coords = tuple(ext.el(c) for c in coords)
        lead = next((c for c in coords if c != ext.zero), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        inv = ext.inv(lead)
        coords = tuple(ext.mul(c, inv) for c in coords)
        rep = min(_conjugates(ext, coords))
        return PlanePoint(rep, ext)

    @property
    def degree(self):
        return self.ext.d

    def conjugate_tuples(self):
        return _conjugates(self.ext, self.coords)

    def is_rational(self):
        return self.ext.d == 1

    def ints(self):
        """Coordinates as plain ints (rational points only)."""
        assert self.ext.d == 1
        return tuple(c[0] for c in self.coords)

    def __repr__(self):
        if self.is_rational():
            return f"P({':'.join(str(c[0]) for c in self.coords)})"
        return f"P(deg{self.degree}; {self.coords})"


@dataclass(frozen=True)
class HyperPoint:
    """A closed point of a hyperelliptic model y^2 = f(x)."""

    x: tuple
    y: tuple
    ext: ExtField
    infinity: bool = False

    @staticmethod
    def make(ext, x, y):
        x, y = ext.el(x), ext.el(y)
        rep = min(_conjugates(ext, (x, y)))
        return HyperPoint(rep[0], rep[1], ext)

    @staticmethod
    def at_infinity(p):
        ext = prime_ext(p)
        return HyperPoint(ext.zero, ext.zero, ext, infinity=True)

    @property
    def degree(self):
        return 1 if self.infinity else self.ext.d

    def conjugate_tuples(self):
        return _conjugates(self.ext, (self.x, self.y))

    def is_rational(self):
        return self.degree == 1

    def __repr__(self):
        if self.infinity:
            return "P(inf)"
        if self.is_rational():
            return f"P({self.x[0]},{self.y[0]})"
        return f"P(deg{self.degree}; {self.x},{self.y})"


class Divisor:
    """Formal sum of closed points with nonzero integer multiplicities."""

    def __init__(self, items=None):
        self._d = {}
        if items:
            for pt, m in dict(items).items():
                if m:
                    self._d[pt] = int(m)

    @staticmethod
    def of(*points):
        div = Divisor()
        for pt in points:
            div._d[pt] = div._d.get(pt, 0) + 1
            if div._d[pt] == 0:
                del div._d[pt]
        return div

    def items(self):
        return self._d.items()

    def points(self):
        return list(self._d)

    def multiplicity(self, pt):
        return self._d.get(pt, 0)

    @property
    def degree(self):
        return sum(m * pt.degree for pt, m in self._d.items())

    def is_effective(self):
        return all(m > 0 for m in self._d.values())

    def effective_parts(self):
        """(positive part, negative part), both effective."""
        pos = Divisor({pt: m for pt, m in self._d.items() if m > 0})
        neg = Divisor({pt: -m for pt, m in self._d.items() if m < 0})
        return pos, neg

    def __add__(self, other):
        out = dict(self._d)
        for pt, m in other._d.items():
            out[pt] = out.get(pt, 0) + m
        return Divisor(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Divisor({pt: -m for pt, m in self._d.items()})

    def __rmul__(self, k):
        return Divisor({pt: k * m for pt, m in self._d.items()})

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._d == other._d

    def __hash__(self):
        return hash(frozenset(self._d.items()))

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def __repr__(self):
        if not self._d:
            return "Divisor(0)"
        return "Divisor(" + " + ".join(
            (f"{m}*" if m != 1 else "") + repr(pt) for pt, m in self._d.items()
        ) + ")"
