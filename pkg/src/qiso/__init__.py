"""Mechanical verification of explicit compact quantum group computations.

Subpackages are imported lazily by the suites; the core symbolic layer is
re-exported here.
"""

from __future__ import annotations

from .scalar import RatFunc, Scalar, S, mu, s, t, c, sqrt, radical, eval_complex
from .ncalg import GenSet, NCPoly, Presentation, random_ncpoly
from .hopf import HopfData, TensorPoly, haar_su2, su2_hopf, su2_presentation
from .report import Check, Report

__version__ = "0.1.0"

__all__ = [
    "RatFunc", "Scalar", "S", "mu", "s", "t", "c", "sqrt", "radical", "eval_complex",
    "GenSet", "NCPoly", "Presentation", "random_ncpoly",
    "HopfData", "TensorPoly", "haar_su2", "su2_hopf", "su2_presentation",
    "Check", "Report", "__version__",
]
