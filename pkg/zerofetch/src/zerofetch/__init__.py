"""Data acquisition and high-precision oracles for the race-density package.

Downloads Dirichlet L-function zero ordinates from the LMFDB API with a
replayable local cache, computes the analytic constants Re L'/L(1, chi) and
-b1~(0, chi) independently (Hurwitz-zeta route), and emits the oracle
fixtures (J0, erf, truncated-product spot values) that the primary test
suite consumes.  Everything is written in the primary package's JSON
schemas; nothing here imports the primary package.
"""

from .manifest import FetchManifest, RetryPolicy
from .constants import compute_constants, write_constants_file
from .client import fetch_zeros

__all__ = [
    "FetchManifest",
    "RetryPolicy",
    "compute_constants",
    "write_constants_file",
    "fetch_zeros",
]

__version__ = "0.1.0"
