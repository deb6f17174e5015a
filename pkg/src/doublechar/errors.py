"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: InputError -> 2,
InconsistencyError -> 3, OracleError -> 4.
"""


class DoubleCharError(Exception):
    """Base class for all toolkit errors."""


class InputError(DoubleCharError):
    """Invalid or unvalidatable input data (files, labels, parameters)."""


class InconsistencyError(DoubleCharError):
    """An exact identity that must hold mathematically failed to hold."""


class SpanError(InconsistencyError):
    """A character is not a nonnegative Laurent combination of the simples.

    Carries the offending residual so bad tables can be diagnosed.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class OracleError(DoubleCharError):
    """The independent oracle and the closed-form route disagree."""
