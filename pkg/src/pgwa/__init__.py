"""Exact computations for the quantum generalized Weyl algebra and its Poisson limit."""
from .scalar import Scalar, cyclotomic_polynomial, root_of_unity_order
from .poly import LaurentPoly, laurent_gcd
from .ore import GWAParams, OreAlgebra, OreElement, algebra_for, commutator, is_central, specialize
from .parse import parse_poly, parse_scalar

__all__ = [
    "Scalar",
    "cyclotomic_polynomial",
    "root_of_unity_order",
    "LaurentPoly",
    "laurent_gcd",
    "GWAParams",
    "OreAlgebra",
    "OreElement",
    "algebra_for",
    "commutator",
    "is_central",
    "specialize",
    "parse_poly",
    "parse_scalar",
]

__version__ = "0.1.0"
