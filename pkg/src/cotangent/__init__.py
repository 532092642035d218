"""Exact Poincare series of cotangent (Harrison) cohomology.

Closed formulas for fat points of minimal multiplicity, cones over rational
normal curves, partition curves and quotient surface singularities, together
with a brute-force cochain-complex oracle over the rationals that checks them.
"""

from cotangent.lattice import ConeContext, MultiDegree
from cotangent.series import MultiSeries, UniSeries

__all__ = ["ConeContext", "MultiDegree", "MultiSeries", "UniSeries"]
__version__ = "0.1.0"
