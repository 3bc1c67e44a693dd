"""Certified logarithmic densities for simultaneous sign patterns in prime races.

The package evaluates the truncated characteristic-function lattice sum
S(eps, C, T) for the two-dimensional limiting distribution attached to a pair
of prime-counting error terms mod q, together with three certified error
radii (discretization, lattice truncation, zero-product truncation), an
explanatory single-zero model, and an independent Monte-Carlo oracle.
"""

from .characters import CharacterLabel, CharacterTable, character_value, partition_characters
from .errors import AccuracyError, ConfigError, DataError, RaceDensityError

__version__ = "0.1.0"

__all__ = [
    "CharacterLabel",
    "CharacterTable",
    "character_value",
    "partition_characters",
    "RaceDensityError",
    "ConfigError",
    "DataError",
    "AccuracyError",
    "__version__",
]
