"""
Exception hierarchy shared by the library, the flows and the CLI.

Every error carries the process exit code the CLI reports for it.
"""

from typing import Optional


class QraoError(Exception):
    """Base class for all errors raised by the toolkit."""

    exit_code = 1


class InvalidArgumentError(QraoError, ValueError):
    """An argument is outside the operation's domain."""

    exit_code = 2


class ParseError(InvalidArgumentError):
    """A text input (edge list, Hamiltonian, ply spec) could not be parsed."""

    def __init__(self, message: str, source: str = "<text>", line: Optional[int] = None):
        self.source = source
        self.line = line
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}")


class PreconditionError(QraoError):
    """Input violates a documented precondition (e.g. non-normalized state)."""

    exit_code = 2


class NotFoundError(QraoError, KeyError):
    """A named resource (fixture, file) does not exist."""

    exit_code = 2

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class UnsupportedOperationError(QraoError):
    """The request is well-formed but outside what is implemented."""

    exit_code = 2


class SizeLimitError(QraoError):
    """The instance exceeds a configured size limit."""

    exit_code = 3


class ConvergenceError(QraoError):
    """An iterative solver stopped before meeting its tolerance."""

    exit_code = 4

    def __init__(self, message: str, residual: float = float("nan")):
        self.residual = residual
        super().__init__(f"{message} (residual={residual:.3e})")


class OptimizationError(QraoError):
    """The optimizer received a non-finite objective value."""

    exit_code = 4

    def __init__(self, message: str, iteration: int = -1):
        self.iteration = iteration
        super().__init__(message)


class InternalInvariantError(QraoError):
    """An internal invariant was violated; indicates a bug, not bad input."""

    exit_code = 1
