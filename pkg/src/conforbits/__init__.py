"""Conformal group of E^3 and S^3: similarity and Lorentz models, subgroup
classification up to conjugacy, and numerical orbit analysis."""

from .linalg import EPS, RANK_TOL
from .subalgebra import Model, Subalgebra

__all__ = ["EPS", "RANK_TOL", "Model", "Subalgebra"]
__version__ = "0.1.0"
