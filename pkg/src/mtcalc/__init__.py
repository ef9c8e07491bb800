"""Exact graded-dimension and characteristic-class computations for
classifying spaces, Madsen–Tillmann spectra and their infinite loop spaces."""

from .errors import (
    ContextMismatch,
    DegreeError,
    InvariantViolation,
    MtcalcError,
    SymmetryViolation,
    UnsupportedError,
)
from .poly import Poly, VariableSpec, symmetrize_reduce
from .series import GeneratorSpec, PoincareSeries, free_commutative_series, ps_add, ps_mul, ps_shift

__version__ = "0.1.0"

__all__ = [
    "ContextMismatch",
    "DegreeError",
    "GeneratorSpec",
    "InvariantViolation",
    "MtcalcError",
    "PoincareSeries",
    "Poly",
    "SymmetryViolation",
    "UnsupportedError",
    "VariableSpec",
    "free_commutative_series",
    "ps_add",
    "ps_mul",
    "ps_shift",
    "symmetrize_reduce",
]
