"""Truncated power series over an ExtField, for branch expansions.

Tiny scalar arithmetic: precisions stay below ~16 and coefficients are
ExtField scalar tuples.  Used to expand a curve branch at a smooth closed
point and read off vanishing-order conditions.
"""


class Series:
    __slots__ = ("field", "c")

    def __init__(self, field, coeffs, prec):
        z = field.zero
        c = list(coeffs)[:prec]
        c += [z] * (prec - len(c))
        self.field = field
        self.c = c

    @property
    def prec(self):
        return len(self.c)

    @staticmethod
    def const(field, value, prec):
        return Series(field, [field.el(value)], prec)

    @staticmethod
    def t(field, prec):
        return Series(field, [field.zero, field.one], prec)

    def add(self, other):
        f = self.field
        return Series(f, [f.add(a, b) for a, b in zip(self.c, other.c)], self.prec)

    def sub(self, other):
        f = self.field
        return Series(f, [f.sub(a, b) for a, b in zip(self.c, other.c)], self.prec)

    def mul(self, other):
        f = self.field
        n = self.prec
        out = [f.zero] * n
        for i, a in enumerate(self.c):
            if a == f.zero:
                continue
            for j in range(n - i):
                b = other.c[j]
                if b != f.zero:
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Series(f, out, n)

    def scale(self, k):
        f = self.field
        kk = f.el(k)
        return Series(f, [f.mul(kk, a) for a in self.c], self.prec)

    def pow(self, e):
        f = self.field
        out = Series.const(f, f.one, self.prec)
        base = self
        while e:
            if e & 1:
                out = out.mul(base)
            base = base.mul(base)
            e >>= 1
        return out

    def inverse(self):
        f = self.field
        c0 = self.c[0]
        inv0 = f.inv(c0)
        out = [inv0] + [f.zero] * (self.prec - 1)
        for k in range(1, self.prec):
            acc = f.zero
            for i in range(1, k + 1):
                acc = f.add(acc, f.mul(self.c[i], out[k - i]))
            out[k] = f.neg(f.mul(acc, inv0))
        return Series(f, out, self.prec)

    def valuation(self):
        """Index of first nonzero coefficient, or prec when all vanish."""
        for i, a in enumerate(self.c):
            if a != self.field.zero:
                return i
        return self.prec

    def is_zero(self):
        return self.valuation() == self.prec


def binomial_shift_powers(field, x0, max_exp, prec):
    """Series (x0 + t)^a for a = 0..max_exp, truncated at prec."""
    out = [Series.const(field, field.one, prec)]
    base = Series(field, [field.el(x0), field.one], prec)
    for _ in range(max_exp):
        out.append(out[-1].mul(base))
    return out
