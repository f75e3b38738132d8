"""Minimal partial inverses over finite fields, with RS and polynomial remainder decoders."""

from .field import GF, FieldError, FieldMismatchError, FieldSpec, find_irreducible, parse_field_spec
from .partial_inverse import (
    Inverse,
    InvalidProblemError,
    InvariantViolation,
    PartialInverseProblem,
    SolverStats,
    ZeroDivisor,
    modular_inverse,
    solve,
    solve_partial_inverse,
    solve_with_remainder,
)
from .poly import Polynomial, format_poly, gcd, parse_poly
from .prc import PrcCode
from .rs import DecodeFailure, DecodeResult, RsCode

__all__ = [
    "GF", "FieldError", "FieldMismatchError", "FieldSpec", "find_irreducible", "parse_field_spec",
    "Inverse", "InvalidProblemError", "InvariantViolation", "PartialInverseProblem", "SolverStats",
    "ZeroDivisor", "modular_inverse", "solve", "solve_partial_inverse", "solve_with_remainder",
    "Polynomial", "format_poly", "gcd", "parse_poly", "PrcCode", "DecodeFailure", "DecodeResult", "RsCode",
]
