"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DellacError(Exception):
    """Root of all errors raised by this package."""


class ValidationError(DellacError, ValueError):
    """An object failed one of its structural invariants.

    ``invariant`` names the violated rule and ``index`` is the offending
    1-based position (row, column or argument index) when there is one.
    """

    invariant = "invalid"

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class ShapeViolation(ValidationError):
    invariant = "shape"


class ColumnCountViolation(ValidationError):
    invariant = "column-count"


class DiagonalViolation(ValidationError):
    invariant = "diagonal"


class SymmetryViolation(ValidationError):
    invariant = "central-symmetry"


class NotSurjective(ValidationError):
    invariant = "surjective"


class ValueBelowIndex(ValidationError):
    invariant = "value-below-index"


class ValueOutOfRange(ValidationError):
    invariant = "value-range"


class ParseError(ValidationError):
    invariant = "encoding"


class PreconditionViolated(DellacError, ValueError):
    """An algorithm was called outside its domain."""


class NonTermination(DellacError, RuntimeError):
    """A T-path exceeded its step bound; the tableau is corrupt."""


class TargetNotInCodomain(DellacError, LookupError):
    pass


class BoxOccupied(DellacError, RuntimeError):
    """Insertion hit a non-empty box. Never raised on valid runs."""


class RowCollision(DellacError, RuntimeError):
    pass


class InternalInconsistency(DellacError, RuntimeError):
    """A case analysis of the labeling algorithm fell through.

    Carries the canonical encoding of the offending tableau.
    """

    def __init__(self, message: str, encoding: str | None = None):
        if encoding:
            message = f"{message} [{encoding}]"
        super().__init__(message)
        self.encoding = encoding


class IllegalReflection(DellacError, ValueError):
    """An expansion mask names a row whose dot is not free."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class CollapseInvalid(DellacError, ValueError):
    pass


class InexactDivision(DellacError, ArithmeticError):
    pass
