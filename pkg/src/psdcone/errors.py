"""Exception types shared across the package."""


class PsdconeError(Exception):
    """Base class for all errors raised by this package."""


class NonSquareError(PsdconeError):
    """A square matrix was required but the operand is rectangular."""


class AsymmetricMatrixError(PsdconeError):
    """The operand exceeds the symmetry tolerance and was rejected."""


class ConvergenceFailure(PsdconeError):
    """An underlying iterative eigensolver failed to converge."""


class RankDeficientSample(PsdconeError):
    """Sampled sketch has numerical rank below the requested width (strict mode)."""


class AlphaTooSmall(PsdconeError):
    """Scaling factor is numerically zero; the input is already (numerically) PSD."""


class InvalidParams(PsdconeError):
    """Parameters outside the domain of a bound or algorithm."""


class DimensionMismatch(PsdconeError):
    """Operands have incompatible dimensions."""


class DegreeTooHigh(PsdconeError):
    """Polynomial degree exceeds what the requested basis can represent."""


class MatrixFormatError(PsdconeError):
    """Parse failure in a matrix or problem file; carries the location."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
