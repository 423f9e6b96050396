"""Exact-arithmetic toolkit for syzygies of curves and their secant varieties.

Computes Betti tables (Koszul cohomology dimensions) of smooth curves and
secant varieties embedded by explicit line bundles, gonality-sequence data
with certification, and checks the computed tables against the predicted
vanishing/nonvanishing patterns.  All linear algebra is exact, over a large
prime field chosen as a generic stand-in for characteristic zero.
"""

__version__ = "0.1.0"

from secsyz.fflinalg import PrimeField

__all__ = ["PrimeField", "__version__"]
