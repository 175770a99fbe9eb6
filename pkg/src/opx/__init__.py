"""Exact orthogonal-polynomial toolkit built on weighted Motzkin paths.

Submodules: ``exactnum`` (rationals, surds, one-parameter polynomials),
``powerseries``, ``motzkin``, ``favard``, ``tridiag``, ``families``,
``permoracle``, ``verify`` and ``cli``.
"""

from .exactnum import DomainError, ParamPoly, Surd, UsageError, parse_rational
from .favard import RecurrencePair, build_ops, inverse_coeffs, moments
from .families import parse_family
from .tridiag import TridiagonalOperator, matrix_entry

__all__ = [
    "DomainError",
    "ParamPoly",
    "RecurrencePair",
    "Surd",
    "TridiagonalOperator",
    "UsageError",
    "build_ops",
    "inverse_coeffs",
    "matrix_entry",
    "moments",
    "parse_family",
    "parse_rational",
]

__version__ = "0.1.0"
