"""
Error taxonomy for the tubal-completion toolkit.

Every error carries the process exit code the CLI reports for it.
"""


class TubalError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 3

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message


# Usage errors (exit code 1)

class UsageError(TubalError, ValueError):
    """Invalid command-line usage."""
    exit_code = 1


class ConfigError(UsageError):
    """Solver configuration violates its constraints."""


class RangeError(UsageError):
    """A scalar argument lies outside its admissible range."""


class RankError(UsageError):
    """Target rank outside [1, min(n1, n2)]."""


# I/O and data-consistency errors (exit code 2)

class IoError(TubalError, OSError):
    """A file could not be read or written."""
    exit_code = 2


class FormatError(TubalError, ValueError):
    """A file does not follow its declared format."""
    exit_code = 2


class EmptyDir(FormatError):
    """A frame directory holds no frames."""


class ShapeMismatch(TubalError, ValueError):
    """Operand dimensions do not conform."""
    exit_code = 2


# Numerical errors (exit code 3)

class NumericalError(TubalError, ArithmeticError):
    """Non-finite values or a numerical breakdown."""


class SymmetryViolation(NumericalError):
    """Inverse transform of a spectrum that is not conjugate symmetric."""


class ShapeError(NumericalError, ValueError):
    """Operand shape unsupported by the routine (e.g. wide QR input)."""


class SizeGuard(NumericalError, ValueError):
    """Reference routine called above its size cap."""


class EmptyMask(NumericalError, ValueError):
    """Completion requested with no observed entries."""
