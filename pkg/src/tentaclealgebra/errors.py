"""Exception hierarchy for tentaclealgebra.

Library code raises these; only the CLI turns them into exit codes.
"""
from typing import Optional


class TentacleError(Exception):
    """Base class for every error raised by the package."""

    exit_code = 3


class InputError(TentacleError, ValueError):
    """The caller handed over something outside an operation's contract."""

    exit_code = 2


class SchemaError(InputError):
    """A JSON document does not match the expected schema.

    Args:
        message: What is wrong
        path: Dotted field path inside the document, e.g. ``tentacles[0].omega``
        line: Line number for JSON syntax errors
        column: Column number for JSON syntax errors
    """

    def __init__(
        self,
        message: str,
        path: str = "",
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.path = path
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}, column {column}: "
        elif path:
            location = f"{path}: "
        super().__init__(f"{location}{message}")


class PolynomialSyntaxError(InputError):
    """A polynomial string could not be parsed."""


class ZeroPolynomialError(InputError):
    """A degree-like function was asked about the zero polynomial."""


class InvalidPlanError(InputError):
    """A key-form construction plan violates its monotonicity rules."""


class DegenerateRegionError(InputError):
    """Two boundary constants coincide, so the region has empty interior."""


class ComputationError(TentacleError):
    """A well-formed request could not be completed."""

    exit_code = 3


class NoBranchError(ComputationError):
    """The curve has no branch along which |x| tends to infinity."""


class InsufficientPrecisionError(ComputationError):
    """Expansions ran out of terms before two branches separated.

    Retrying with a larger ``term_limit`` may succeed.
    """

    def __init__(self, message: str, term_limit: int):
        self.term_limit = term_limit
        super().__init__(message)


class NonRationalBranchError(ComputationError):
    """A characteristic equation has a real root that is not rational."""


class DegenerateTentacleError(ComputationError):
    """Both boundaries define the same branch."""


class NotRepresentableError(ComputationError):
    """A value is not in the group generated by the key-form values."""


class BoundTooSmallError(ComputationError):
    """An extreme ray of a cone needs a larger search bound."""


class NoLeadingTermError(ComputationError):
    """The zero series has no leading term."""


class DegenerateSampleError(ComputationError):
    """The sampled polynomial vanished at every sample point."""


class UnsupportedInputError(ComputationError):
    """The input leaves the rational setting the algorithms work in."""
