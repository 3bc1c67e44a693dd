"""Dirichlet characters modulo a prime, indexed by a primitive root.

For a prime modulus q with primitive root g, character j (0 <= j <= q-2) is
determined by chi_j(g) = e^{2 pi i j/(q-1)}, so chi_j(a) = e^{2 pi i j k/(q-1)}
where a = g^k.  For q = 11 the least primitive root is g = 2 and this labeling
agrees with SageMath's.  Values are kept as exact integer exponents of the
fixed root of unity, so multiplicativity and conjugation are exact; complex
values are materialized on demand.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConfigError

__all__ = [
    "CharacterLabel",
    "CharacterTable",
    "character_value",
    "partition_characters",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CharacterLabel:
    """One character chi_j mod q, with its conjugation data."""

    index: int
    is_real: bool
    conjugate_index: int


class CharacterTable:
    """Multiplicative characters mod a prime q via discrete logs base g.

    Immutable after construction; safe to share across threads.
    """

    def __init__(self, modulus: int, primitive_root: int | None = None):
        if not _is_prime(modulus) or modulus < 3:
            raise ConfigError(
                f"modulus {modulus} is not an odd prime; only prime moduli "
                "are supported (labeling needs a cyclic unit group)"
            )
        self.modulus = modulus
        self.order = modulus - 1
        self.primitive_root = (
            self._least_primitive_root() if primitive_root is None else primitive_root
        )
        self.dlog = self._build_dlog(self.primitive_root)

    def _least_primitive_root(self) -> int:
        q = self.modulus
        for g in range(2, q):
            if len({pow(g, k, q) for k in range(q - 1)}) == q - 1:
                return g
        raise ConfigError(f"no primitive root found mod {modulus}")  # pragma: no cover

    def _build_dlog(self, g: int) -> dict[int, int]:
        q = self.modulus
        dlog: dict[int, int] = {}
        x = 1
        for k in range(q - 1):
            if x in dlog:
                raise ConfigError(f"{g} is not a primitive root mod {q}")
            dlog[x] = k
            x = (x * g) % q
        return dlog

    # -- labels ---------------------------------------------------------

    def label(self, j: int) -> CharacterLabel:
        if not 0 <= j <= self.order - 1:
            raise ConfigError(f"character index {j} outside [0, {self.order - 1}]")
        conj = (-j) % self.order
        return CharacterLabel(index=j, is_real=(2 * j) % self.order == 0, conjugate_index=conj)

    def labels(self, include_principal: bool = False) -> list[CharacterLabel]:
        start = 0 if include_principal else 1
        return [self.label(j) for j in range(start, self.order)]

    # -- evaluation -----------------------------------------------------

    def exponent(self, j: int, a: int) -> int:
        """k such that chi_j(a) = e^{2 pi i k/(q-1)}; exact integer arithmetic."""
        a_red = a % self.modulus
        if a_red == 0 or math.gcd(a_red, self.modulus) != 1:
            raise ConfigError(f"residue {a} is not reduced mod {self.modulus}")
        if not 0 <= j <= self.order - 1:
            raise ConfigError(f"character index {j} outside [0, {self.order - 1}]")
        return (j * self.dlog[a_red]) % self.order

    def value(self, j: int, a: int) -> complex:
        return self._root_of_unity(self.exponent(j, a))

    def re_value(self, j: int, a: int) -> float:
        return math.cos(2.0 * math.pi * self.exponent(j, a) / self.order)

    @lru_cache(maxsize=None)
    def _root_of_unity(self, k: int) -> complex:
        n = self.order
        # exact values at the four axis points keep symmetry tests exact
        if k % n == 0:
            return 1 + 0j
        if 2 * k % n == 0:
            return -1 + 0j
        if 4 * k % n == 0:
            return 1j if k % n == n // 4 else -1j
        return cmath.exp(2j * math.pi * k / n)

    def parity(self, j: int) -> int:
        """chi_j(-1) as +-1."""
        return 1 if self.exponent(j, self.modulus - 1) == 0 else -1


def character_value(table: CharacterTable, j: int | CharacterLabel, a: int) -> complex:
    """chi_j(a) as a unit-modulus complex number."""
    idx = j.index if isinstance(j, CharacterLabel) else j
    return table.value(idx, a)


def partition_characters(
    table: CharacterTable,
) -> tuple[list[CharacterLabel], list[CharacterLabel]]:
    """Split the nonprincipal characters into (R(q), H(q)).

    R(q) holds the nonprincipal real characters, H(q) exactly one character
    from each complex-conjugate pair.  |R| + 2|H| = q - 2 for prime q.
    """
    reals: list[CharacterLabel] = []
    half: list[CharacterLabel] = []
    for lab in table.labels():
        if lab.is_real:
            reals.append(lab)
        elif lab.index < lab.conjugate_index:
            half.append(lab)
    return reals, half
