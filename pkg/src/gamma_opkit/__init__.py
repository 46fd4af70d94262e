"""Numerical workbench for fundamental operators of Gamma_n- and tetrablock contractions."""

from .linalg import Tolerances, DEFAULT_TOL

__all__ = ["Tolerances", "DEFAULT_TOL"]
__version__ = "0.1.0"
