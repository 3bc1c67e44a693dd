"""Numba kernels for the lattice sum and the Monte-Carlo sampler.

The J0 here mirrors charfn.bessel_j0 (same Cephes coefficients) as a scalar
function so the zero-product loops run without temporaries.  All parallel
loops are elementwise-independent, so results are bit-identical for any
thread count; the only reductions are sequential.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit, prange

from .charfn import _DR1, _DR2, _PIO4, _PP, _PQ, _QP, _QQ, _RP, _RQ, _SQ2OPI

_RP_C = tuple(_RP.tolist())
_RQ_C = tuple(_RQ.tolist())
_PP_C = tuple(_PP.tolist())
_PQ_C = tuple(_PQ.tolist())
_QP_C = tuple(_QP.tolist())
_QQ_C = tuple(_QQ.tolist())


@njit(cache=True, inline="always")
def _j0(x: float) -> float:
    ax = abs(x)
    if ax < 1e-5:
        return 1.0 - 0.25 * ax * ax
    if ax <= 5.0:
        z = ax * ax
        num = _RP_C[0]
        for i in range(1, 4):
            num = num * z + _RP_C[i]
        den = z + _RQ_C[0]
        for i in range(1, 8):
            den = den * z + _RQ_C[i]
        return (z - _DR1) * (z - _DR2) * num / den
    w = 5.0 / ax
    z = 25.0 / (ax * ax)
    pn = _PP_C[0]
    pd = _PQ_C[0]
    for i in range(1, 7):
        pn = pn * z + _PP_C[i]
        pd = pd * z + _PQ_C[i]
    qn = _QP_C[0]
    for i in range(1, 8):
        qn = qn * z + _QP_C[i]
    qd = z + _QQ_C[0]
    for i in range(1, 7):
        qd = qd * z + _QQ_C[i]
    xn = ax - _PIO4
    return _SQ2OPI * ((pn / pd) * math.cos(xn) - w * (qn / qd) * math.sin(xn)) / math.sqrt(ax)


@njit(cache=True)
def j0_scalar(x: float) -> float:
    return _j0(x)


@njit(cache=True, nogil=True)
def fold_product(z: np.ndarray, alphas: np.ndarray, out: np.ndarray):
    """out[i] = prod_k J0(alphas[k] * z[i]); deterministic per element.

    Sequential and nogil: callers parallelize across independent (pair,
    cosine-class) combinations with ordinary threads, which keeps numba's
    threading layer out of the picture entirely.
    """
    for i in range(z.shape[0]):
        zi = z[i]
        p = 1.0
        for k in range(alphas.shape[0]):
            p *= _j0(alphas[k] * zi)
        out[i] = p


@njit(cache=True)
def neumaier_sum(x: np.ndarray) -> tuple[float, float, float]:
    """(sum, |compensation|, sum of |x|) in fixed index order."""
    s = 0.0
    c = 0.0
    absum = 0.0
    for i in range(x.shape[0]):
        v = x[i]
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
        absum += abs(v)
    return s + c, abs(c), absum


@njit(cache=True)
def plain_sum(x: np.ndarray) -> tuple[float, float, float]:
    s = 0.0
    absum = 0.0
    for i in range(x.shape[0]):
        s += x[i]
        absum += abs(x[i])
    return s, 0.0, absum


# ---------------------------------------------------------------------------
# Monte-Carlo sampler
# ---------------------------------------------------------------------------


@njit(cache=True, inline="always")
def _mix64(z: np.uint64) -> np.uint64:
    # splitmix64 finalizer; counter-based stream hash
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@njit(cache=True, inline="always")
def _unit_circle(seed: np.uint64, sample: np.uint64, zero: np.uint64):
    """Deterministic point on the unit circle keyed by (seed, sample, zero).

    Marsaglia polar rejection; each attempt consumes one 64-bit hash that
    yields two 32-bit uniforms, so the draw is exactly replayable for any
    execution order.
    """
    base = _mix64(seed ^ (sample * np.uint64(0x9E3779B97F4A7C15)) ^ (zero * np.uint64(0xD1B54A32D192ED03)))
    attempt = np.uint64(0)
    while True:
        h = _mix64(base ^ (attempt * np.uint64(0x2545F4914F6CDD1D)) ^ np.uint64(0x6A09E667F3BCC909))
        u = (np.float64(h >> np.uint64(40)) + 0.5) * (2.0**-24) * 2.0 - 1.0
        v = (np.float64(h & np.uint64(0xFFFFFF)) + 0.5) * (2.0**-24) * 2.0 - 1.0
        s = u * u + v * v
        if 0.0 < s < 1.0:
            inv = 1.0 / s
            return (u * u - v * v) * inv, 2.0 * u * v * inv
        attempt += np.uint64(1)


@njit(parallel=True, cache=True)
def mc_blocks(
    seed: np.uint64,
    n_samples: np.int64,
    block: np.int64,
    alphas: np.ndarray,  # (nz,)
    rot_cos: np.ndarray,  # (na, nz) alpha * cos(phase of chi(a))
    rot_sin: np.ndarray,  # (na, nz)
    w_levels: np.ndarray,  # exceedance thresholds for X1
    antithetic: np.int64,
    quad: np.ndarray,  # (nblocks, na, 4) int64 out
    exceed: np.ndarray,  # (nblocks, nw) int64 out
    mom: np.ndarray,  # (nblocks, 2) float64 out: sum x1, sum x1^2
):
    """Tally quadrant counts of (X1, X2(a)) over deterministic sample blocks.

    Phases are drawn once per (sample, zero); every residue's X2 reuses them.
    Block-indexed outputs are reduced sequentially by the caller, so results
    do not depend on the thread count.
    """
    nz = alphas.shape[0]
    na = rot_cos.shape[0]
    nw = w_levels.shape[0]
    nblocks = quad.shape[0]
    for ib in prange(nblocks):
        lo = ib * block
        hi = min(lo + block, n_samples)
        x2 = np.empty(na)
        for isamp in range(lo, hi):
            x1 = 0.0
            for ia in range(na):
                x2[ia] = 0.0
            for k in range(nz):
                cz, sz = _unit_circle(seed, np.uint64(isamp), np.uint64(k))
                x1 += alphas[k] * cz
                for ia in range(na):
                    x2[ia] += rot_cos[ia, k] * cz + rot_sin[ia, k] * sz
            reps = 2 if antithetic else 1
            for rep in range(reps):
                sgn = 1.0 if rep == 0 else -1.0
                y1 = sgn * x1
                mom[ib, 0] += y1
                mom[ib, 1] += y1 * y1
                for iw in range(nw):
                    if y1 >= w_levels[iw]:
                        exceed[ib, iw] += 1
                for ia in range(na):
                    y2 = sgn * x2[ia]
                    if y1 > 0.0:
                        qidx = 0 if y2 > 0.0 else 1
                    else:
                        qidx = 3 if y2 > 0.0 else 2
                    quad[ib, ia, qidx] += 1
