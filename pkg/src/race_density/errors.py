"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, DataError -> 3,
AccuracyError -> 4.
"""


class RaceDensityError(Exception):
    """Base class for package errors."""


class ConfigError(RaceDensityError):
    """Invalid parameters or a violated hypothesis of a certified bound."""


class DataError(RaceDensityError):
    """Malformed, inconsistent, or insufficient input data."""


class AccuracyError(RaceDensityError):
    """An internal accuracy target could not be met."""
