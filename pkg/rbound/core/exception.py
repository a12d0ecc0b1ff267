#
# Exceptions raised by the kernel, the checks and the CLI.
#
from enum import IntEnum


class RBoundException(Exception):
    """Base class of all rbound exceptions."""

    _def_msg = "Unknown rbound error."

    def __init__(self, message=None):
        """Initialize the exception."""
        super().__init__(message if message is not None else self._def_msg)


class DimensionError(RBoundException):
    """Matrix shapes do not fit the operation."""

    _def_msg = "The matrix shapes are not compatible with the operation."


class NonFiniteError(RBoundException):
    """A matrix was constructed from NaN or Inf entries."""

    _def_msg = "Matrix entries must be finite (no NaN/Inf)."


class ContractError(RBoundException):
    """A precondition of an operation was violated."""

    _def_msg = "A precondition of the operation was violated."


class InternalAssertionError(RBoundException):
    """An internal consistency check of a computed result failed."""

    _def_msg = "An internal consistency check failed."


class ImaginaryResidueError(InternalAssertionError):
    """A quantity that must be real carried an imaginary part."""

    _def_msg = "The imaginary residue exceeds the realness threshold."

    def __init__(self, message=_def_msg, residue: float = 0.0,
                 threshold: float = 0.0):
        """Initialize the exception."""
        super().__init__(f"{message} (residue={residue:.3e}, "
                         f"threshold={threshold:.3e})")
        self.residue = residue
        self.threshold = threshold


class ConvergenceError(RBoundException):
    """An iterative kernel did not converge."""

    _def_msg = "The iteration limit was exceeded before convergence."

    def __init__(self, message=_def_msg, residual: float = float("nan"),
                 restart_index: int | None = None):
        """Initialize the exception."""
        text = f"{message} (residual={residual:.3e})"
        if restart_index is not None:
            text += f" [restart {restart_index}]"
        super().__init__(text)
        self.residual = residual
        self.restart_index = restart_index


class StructuralError(RBoundException):
    """A generator superoperator lacks a structural property."""

    _def_msg = "The superoperator has no eigenvalue within the zero threshold."


class InputFormatError(RBoundException):
    """A JSON document could not be turned into a matrix or generator.

    The message carries the source and the offending field, in the same
    spirit as "[file:line]" locations of a parser.
    """

    _def_msg = "The input document is not in the expected format."

    def __init__(self, message=_def_msg, source=None, field=None):
        """Initialize the exception."""
        src = source if source is not None else "unk_source"
        fld = field if field is not None else "unk_field"
        super().__init__(f"{message} [{src}:{fld}]")
        self.source = source
        self.field = field


# ##############################################################################


class ExitCode(IntEnum):
    """Process exit codes of the command line."""

    OK = 0
    INTERNAL = 1
    INPUT = 2
