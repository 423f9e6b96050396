"""Pure-numpy reduced row echelon form over F_p.

Fallback backend for the compiled kernel in ``_elim``.  Same contract:
``rref_mod(a, p)`` reduces ``a`` (float64, entries already in ``[0, p)``)
to reduced row echelon form in place and returns the pivot column list.

Entries are carried unreduced between pivot steps; a full ``% p`` pass is
only taken when the accumulated update count could push a value past
2**53, the largest integer float64 holds exactly.  One modular inverse is
computed per pivot, nothing else is inverted.
"""

import numpy as np


def _update_budget(p):
    # after t outer-product updates an entry is bounded by (p-1) + t*(p-1)^2
    return max(1, int((2**53 - p) // ((p - 1) ** 2)))


def rref_mod(a, p):
    m, n = a.shape
    if m == 0 or n == 0:
        return []
    budget = _update_budget(p)
    pending = 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        col = a[r:, c] % p
        a[r:, c] = col
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i], :] = a[[i, r], :]
        a[r, c:] %= p
        inv = float(pow(int(a[r, c]), p - 2, p))
        a[r, c:] = (a[r, c:] * inv) % p
        if r + 1 < m:
            mult = a[r + 1 :, c]
            a[r + 1 :, c:] -= np.outer(mult, a[r, c:])
            pending += 1
            if pending >= budget:
                a %= p
                pending = 0
        pivots.append(c)
        r += 1
    a %= p
    # back-substitution above the pivots
    pending = 0
    for k in range(len(pivots) - 1, 0, -1):
        c = pivots[k]
        a[k, c:] %= p
        mult = a[:k, c] % p
        a[:k, c] = mult
        a[:k, c:] -= np.outer(mult, a[k, c:])
        pending += 1
        if pending >= budget:
            a[:k, :] %= p
            pending = 0
    a %= p
    return pivots
