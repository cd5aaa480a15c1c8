"""Exception taxonomy shared across the package.

Every error raised by gridcast derives from GridcastError so callers (and the
CLI exit-code mapping) can distinguish our failures from genuine bugs.
"""


class GridcastError(Exception):
    """Base class for all gridcast errors."""


class ShapeError(GridcastError):
    """Operands have incompatible shapes."""


class EmptyNeighborhoodError(GridcastError):
    """A softmax neighborhood contained no valid entries."""


class ContractError(GridcastError):
    """A documented precondition was violated by the caller."""


class NumericError(GridcastError):
    """A computation produced non-finite values where finiteness is required."""


class TrainingDivergedError(GridcastError):
    """Training produced a non-finite loss or gradient."""

    def __init__(self, message: str, *, parameter: str | None = None, epoch: int | None = None):
        super().__init__(message)
        self.parameter = parameter
        self.epoch = epoch


class UndefinedLossError(GridcastError):
    """A loss was requested over zero valid entries."""


class UndefinedMetricError(GridcastError):
    """A metric was requested over zero valid entries."""


class ParseError(GridcastError):
    """A data file row could not be parsed."""

    def __init__(self, message: str, *, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class SchemaError(GridcastError):
    """A data or model file does not match the documented schema."""


class IncompatibleModelError(GridcastError):
    """A model file and a dataset disagree on regions or variables."""
