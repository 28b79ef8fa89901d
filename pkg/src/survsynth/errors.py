"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: usage problems exit 1,
data/domain problems exit 2, fit/runtime problems exit 3.
"""


class SurvSynthError(Exception):
    """Base class for all package errors."""


class SchemaError(SurvSynthError):
    """A column is missing, duplicated, or typed inconsistently."""


class ParseError(SurvSynthError):
    """A cell could not be parsed; carries the offending row index."""


class DomainError(SurvSynthError):
    """A value violates a domain constraint (negative time, bad event flag, ...)."""


class LayoutError(SurvSynthError):
    """An encoded matrix does not match the encoder layout."""


class ConfigError(SurvSynthError):
    """An invalid or inconsistent configuration was supplied."""


class FitError(SurvSynthError):
    """A model fit failed to converge; carries the last iterate."""

    def __init__(self, message, beta=None, grad_norm=None):
        super().__init__(message)
        self.beta = beta
        self.grad_norm = grad_norm


class TrainingError(SurvSynthError):
    """Generator training produced a non-finite objective."""

    def __init__(self, message, epoch=None):
        super().__init__(message)
        self.epoch = epoch
