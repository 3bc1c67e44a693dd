"""Independent Monte-Carlo oracle for the limiting random vector X(q; a).

X1 = sum_k alpha_k Re Z_k and X2 = sum_k alpha_k Re(e^{-i phase_k} Z_k) over
the merged zero multiset below the truncation height, with Z_k independent
uniform points on the unit circle drawn by a counter-based hash of
(seed, sample index, zero index).  Identical specs give identical estimates
for any thread count: tallies are integers accumulated per fixed sample
block, and the phase stream depends only on indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .characters import partition_characters
from .errors import ConfigError, DataError
from .zerodata import ZeroTable

__all__ = ["SampleSpec", "QuadrantEstimate", "sample_X", "estimate_variance"]

_BLOCK = 8192


@dataclass(frozen=True)
class SampleSpec:
    a: int | tuple[int, ...]  # one residue or several sharing the phase stream
    t_height: float
    n_samples: int
    seed: int
    antithetic: bool = False
    w_levels: tuple[float, ...] = (2.0 * math.pi, 8.0)

    def residues(self) -> tuple[int, ...]:
        return (self.a,) if isinstance(self.a, int) else tuple(self.a)


@dataclass
class QuadrantEstimate:
    spec: SampleSpec
    n_effective: int
    frequencies: dict[int, dict[str, float]]  # residue -> quadrant -> freq
    standard_errors: dict[int, dict[str, float]]
    exceedance: dict[float, float]  # X1-threshold -> frequency
    x1_mean: float
    x1_variance: float

    def delta_pp_hat(self, a: int) -> tuple[float, float]:
        return self.frequencies[a]["++"], self.standard_errors[a]["++"]


def _zero_setup(spec: SampleSpec, tab: ZeroTable):
    if spec.n_samples < 1:
        raise ConfigError("need at least one sample")
    if spec.t_height > tab.completeness():
        raise DataError(
            f"truncation {spec.t_height} exceeds table completeness {tab.completeness()}"
        )
    residues = spec.residues()
    for a in residues:
        if math.gcd(a, tab.modulus) != 1:
            raise ConfigError(f"residue {a} not reduced mod {tab.modulus}")
    reals, half = partition_characters(tab.table)
    alpha_blocks = []
    cos_blocks = []
    sin_blocks = []
    for lab in reals + half:
        fold = tab.ordinates(lab.index) if lab.is_real else tab.fold(lab.index)
        fold = fold[fold < spec.t_height]
        alpha = 2.0 / np.sqrt(0.25 + fold**2)
        phases = np.array(
            [
                2.0 * math.pi * tab.table.exponent(lab.index, a) / (tab.modulus - 1)
                for a in residues
            ]
        )
        alpha_blocks.append(alpha)
        cos_blocks.append(np.cos(phases)[:, None] * alpha[None, :])
        sin_blocks.append(np.sin(phases)[:, None] * alpha[None, :])
    alphas = np.concatenate(alpha_blocks).astype(np.float64)
    rot_cos = np.concatenate(cos_blocks, axis=1)
    rot_sin = np.concatenate(sin_blocks, axis=1)
    return alphas, rot_cos, rot_sin


def sample_X(spec: SampleSpec, tab: ZeroTable) -> QuadrantEstimate:
    """Quadrant frequencies of (X1, X2(a)) at matched truncation."""
    alphas, rot_cos, rot_sin = _zero_setup(spec, tab)
    residues = spec.residues()
    n = spec.n_samples
    nblocks = (n + _BLOCK - 1) // _BLOCK
    quad = np.zeros((nblocks, len(residues), 4), dtype=np.int64)
    exceed = np.zeros((nblocks, len(spec.w_levels)), dtype=np.int64)
    mom = np.zeros((nblocks, 2), dtype=np.float64)
    _kernels.mc_blocks(
        np.uint64(spec.seed),
        np.int64(n),
        np.int64(_BLOCK),
        alphas,
        np.ascontiguousarray(rot_cos),
        np.ascontiguousarray(rot_sin),
        np.array(spec.w_levels, dtype=np.float64),
        np.int64(1 if spec.antithetic else 0),
        quad,
        exceed,
        mom,
    )
    # sequential block reduction in index order
    quad_tot = quad.sum(axis=0)
    exceed_tot = exceed.sum(axis=0)
    mom_tot = mom.sum(axis=0)
    n_eff = n * (2 if spec.antithetic else 1)

    names = ["++", "+-", "--", "-+"]
    freqs = {}
    ses = {}
    for ia, a in enumerate(residues):
        row = quad_tot[ia].astype(np.float64) / n_eff
        freqs[a] = dict(zip(names, row.tolist()))
        ses[a] = {
            nm: math.sqrt(max(p * (1.0 - p), 1e-300) / n_eff)
            for nm, p in freqs[a].items()
        }
    mean = mom_tot[0] / n_eff
    var = mom_tot[1] / n_eff - mean * mean
    return QuadrantEstimate(
        spec=spec,
        n_effective=n_eff,
        frequencies=freqs,
        standard_errors=ses,
        exceedance={
            w: exceed_tot[i] / n_eff for i, w in enumerate(spec.w_levels)
        },
        x1_mean=mean,
        x1_variance=var,
    )


def estimate_variance(spec: SampleSpec, tab: ZeroTable) -> float:
    """Sample variance of X1; expectation 2 sum_{gamma < T} 1/(1/4+gamma^2)."""
    return sample_X(spec, tab).x1_variance


def truncated_variance(spec: SampleSpec, tab: ZeroTable) -> float:
    """The exact first-coordinate variance at the spec's truncation."""
    total = 0.0
    reals, half = partition_characters(tab.table)
    for lab in reals + half:
        fold = tab.ordinates(lab.index) if lab.is_real else tab.fold(lab.index)
        fold = fold[fold < spec.t_height]
        total += float(np.sum(2.0 / (0.25 + fold**2)))
    return total
