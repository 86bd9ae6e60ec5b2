"""Exception hierarchy shared by all modules.

Every mathematically meaningful failure raises a subclass of
:class:`UltraspecError`; parse and input-validation problems get their
own branch so the CLI can map them to distinct exit codes.
"""

from __future__ import annotations


class UltraspecError(Exception):
    """Base class for all library errors."""


# -- scalar arithmetic ------------------------------------------------------

class ZeroDivision(UltraspecError, ZeroDivisionError):
    """Inverting the exact zero, or a value with no known leading term."""


class ImpreciseZero(UltraspecError):
    """A valuation was requested but the value is only known up to O(t^P)."""


# -- sequence space ---------------------------------------------------------

class DependentInput(UltraspecError):
    """Orthogonalization hit a linearly dependent input vector."""


class ZeroDirection(UltraspecError):
    """Projection onto the zero vector is undefined."""


# -- operators --------------------------------------------------------------

class DimensionMismatch(UltraspecError):
    """Operands have incompatible truncation sizes or supports."""


class UnknownTail(UltraspecError):
    """Precision-truncated entries prevent deciding a valuation comparison."""


# -- spectral operators and the Gelfand transform ---------------------------

class FamilyMismatch(UltraspecError):
    """Two spectral operators are attached to different projection families."""


class FamilyTooSmall(UltraspecError):
    """An index outside the projection family was referenced."""


class DimensionTooSmall(UltraspecError):
    """The requested matrix truncation cannot hold the family's support."""


class NonSymmetric(UltraspecError):
    """Eigendecomposition requires a symmetric matrix."""


class IrrationalSpectrum(UltraspecError):
    """The characteristic polynomial has no full rational splitting."""


class DegenerateGram(UltraspecError):
    """An eigenvector with self-pairing zero; impossible over the rationals."""


# -- measures and integration -----------------------------------------------

class InvalidPartition(UltraspecError):
    """Pieces overlap, miss the target, or carry tags outside their piece."""


# -- the singly generated subalgebra ----------------------------------------

class SpectralPoint(UltraspecError):
    """The resolvent was requested at a point of the spectrum."""


class UnknownEigenvalue(UltraspecError):
    """A clopen subset of the spectrum referenced a value not in it."""


class NotIdempotent(UltraspecError):
    """Classification was requested for an operator with H*H != H."""


class MissingValue(UltraspecError):
    """A value table does not cover every point of the spectrum."""


# -- CLI / serialization ----------------------------------------------------

class ParseError(UltraspecError):
    """Malformed textual input; carries position diagnostics when known."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        elif column is not None:
            message = f"column {column}: {message}"
        super().__init__(message)


class ValidationError(UltraspecError):
    """Structurally valid input that violates a dimension or domain rule."""


#: Errors that signal a mathematical failure (CLI exit code 3), as opposed
#: to malformed input (exit code 2).
MATH_ERRORS = (
    ZeroDivision,
    ImpreciseZero,
    DependentInput,
    ZeroDirection,
    DimensionMismatch,
    UnknownTail,
    FamilyMismatch,
    FamilyTooSmall,
    DimensionTooSmall,
    NonSymmetric,
    IrrationalSpectrum,
    DegenerateGram,
    InvalidPartition,
    SpectralPoint,
    UnknownEigenvalue,
    NotIdempotent,
    MissingValue,
)
