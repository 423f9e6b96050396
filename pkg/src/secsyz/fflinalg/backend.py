"""Backend selection for the elimination kernel.

The compiled Cython kernel is preferred; the pure-numpy implementation in
``_elim_py`` is the fallback.  Set ``SECSYZ_PURE_PYTHON=1`` to force the
fallback (used by the benchmark to compare both).
"""

import os

from secsyz.fflinalg import _elim_py

if os.environ.get("SECSYZ_PURE_PYTHON"):
    rref_mod = _elim_py.rref_mod
    BACKEND = "numpy"
else:
    try:
        from secsyz.fflinalg import _elim

        rref_mod = _elim.rref_mod
        BACKEND = "compiled"
    except ImportError:
        rref_mod = _elim_py.rref_mod
        BACKEND = "numpy"
