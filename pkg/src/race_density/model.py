"""Single-low-zero explanatory model for the cyclic ordering phenomenon.

One conjugate pair of zeros (the lowest ordinate, on the character with
chi(8) = e^{2 pi i/10} when q = 11) is kept exactly; everything else is
replaced by an independent normal of the residual variance.  The model's
first-quadrant probability is then a smooth periodic one-dimensional
integral, evaluated by node-doubling trapezoid quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, ConfigError, DataError
from .zerodata import AnalyticConstants, ZeroTable

__all__ = [
    "ModelParams",
    "variance_decomposition",
    "normal_cdf",
    "model_quadrant_probability",
]


@dataclass(frozen=True)
class ModelParams:
    top_coeff: float  # alpha_{gamma_1}, ~1.50507 for q=11
    top_variance: float  # alpha^2/2 = 2/(1/4+gamma_1^2)
    residual_variance: float  # total - top
    total_variance: float
    rotation_step: float  # phase step per generator power, pi/5 for q=11


def variance_decomposition(tab: ZeroTable, consts: AnalyticConstants) -> ModelParams:
    """Total variance 2*sum(constants); top zero's share split off."""
    merged = np.concatenate([tab.zeros[j] for j in sorted(tab.zeros)])
    if merged.size == 0:
        raise DataError("zero table is empty")
    g1 = float(np.min(merged))
    top_var = 2.0 / (0.25 + g1 * g1)
    total = 2.0 * consts.total()
    if top_var >= total:
        raise DataError("top-zero variance exceeds total variance")
    return ModelParams(
        top_coeff=2.0 / math.sqrt(0.25 + g1 * g1),
        top_variance=top_var,
        residual_variance=total - top_var,
        total_variance=total,
        rotation_step=2.0 * math.pi / (tab.modulus - 1),
    )


def normal_cdf(x, variance: float):
    """CDF of N(0, variance); absolute error <= 1e-12."""
    if variance <= 0.0:
        raise ConfigError("variance must be positive")
    arg = np.asarray(x, dtype=np.float64) / math.sqrt(2.0 * variance)
    out = 0.5 * (1.0 + _erf_vec(arg))
    return float(out) if np.isscalar(x) else out


_erf_vec = np.vectorize(math.erf, otypes=[np.float64])


def model_quadrant_probability(
    k: int, params: ModelParams, tol: float = 1e-10, max_doublings: int = 16
) -> float:
    """(1/2pi) int_0^{2pi} F(c cos t) F(c cos(t - k step)) dt.

    F is the residual-normal CDF and c the top-zero coefficient.  Periodic
    trapezoid rule with node doubling; converges spectrally for this smooth
    integrand.  The returned value for k and (q-1)-k coincide.
    """
    order = int(round(2.0 * math.pi / params.rotation_step))
    if not 1 <= k <= order - 1:
        raise ConfigError(f"k = {k} outside 1..{order - 1}")
    c = params.top_coeff
    var = params.residual_variance
    shift = k * params.rotation_step

    def integrand(t: np.ndarray) -> np.ndarray:
        return normal_cdf(c * np.cos(t), var) * normal_cdf(c * np.cos(t - shift), var)

    n = 32
    t = np.arange(n) * (2.0 * math.pi / n)
    prev = float(np.mean(integrand(t)))
    for _ in range(max_doublings):
        # reuse existing nodes: add the midpoints
        mid = t + math.pi / n
        val_mid = float(np.mean(integrand(mid)))
        cur = 0.5 * (prev + val_mid)
        n *= 2
        t = np.arange(n) * (2.0 * math.pi / n)
        if abs(cur - prev) < tol:
            return cur
        prev = cur
    raise AccuracyError(
        f"quadrature did not converge to {tol} within {max_doublings} doublings"
    )


def model_table(params: ModelParams) -> dict[int, float]:
    """Model value for every k = 1..order-1."""
    order = int(round(2.0 * math.pi / params.rotation_step))
    return {k: model_quadrant_probability(k, params) for k in range(1, order)}
