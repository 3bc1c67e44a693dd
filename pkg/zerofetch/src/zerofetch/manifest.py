"""Fetch manifests: what to download, from where, and how to retry."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .labels import is_prime

DEFAULT_ENDPOINT = "https://www.lmfdb.org/api/lfunc_lfunctions/"


@dataclass(frozen=True)
class RetryPolicy:
    attempts: int = 4
    backoff_seconds: float = 0.5
    backoff_factor: float = 2.0

    def delays(self):
        d = self.backoff_seconds
        for _ in range(self.attempts - 1):
            yield d
            d *= self.backoff_factor


@dataclass
class FetchManifest:
    modulus: int
    height: float = 10000.0
    convention: str = "conrey"
    cache_dir: Path = field(default_factory=lambda: Path(".zerofetch-cache"))
    endpoint: str = DEFAULT_ENDPOINT
    retry: RetryPolicy = field(default_factory=RetryPolicy)

    def __post_init__(self):
        self.cache_dir = Path(self.cache_dir)
        if not is_prime(self.modulus) or self.modulus < 3:
            raise ValueError(f"modulus {self.modulus} must be an odd prime")
        if self.height < 10:
            raise ValueError("requested height must be >= 10")
        if self.convention != "conrey":
            raise ValueError("only the conrey upstream convention is supported")

    def cache_key(self, conrey_index: int) -> str:
        # content-addressed by (modulus, character, height)
        return f"q{self.modulus}_n{conrey_index}_h{self.height:g}.json"
