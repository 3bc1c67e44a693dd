"""Bessel products: J0, per-character truncated factors, and phi_X.

The characteristic function of the limiting two-dimensional distribution is
an infinite product of J0(alpha_gamma |t1 + chi(a) t2|) over zero ordinates.
Truncating each factor at height T and multiplying by the quadratic tail
correction (1 + b1(T, chi) z^2) keeps the relative truncation error inside
the certified envelope D(x, T) from errbounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .characters import CharacterTable
from .errors import ConfigError, DataError
from .zerodata import AnalyticConstants, ZeroTable

__all__ = [
    "bessel_j0",
    "TruncatedFactor",
    "b1_T",
    "truncated_factor",
    "F_T",
    "phi_X_truncated",
    "f_bound_constants",
]

# Cephes j0 coefficients (Cephes Math Library 2.1, public domain).  Interval
# [0, 5] uses a rational in w = x^2 with the first two zeros factored out;
# beyond 5 the Hankel modulus/phase rationals in 25/x^2.
_DR1 = 5.783185962946784521175995758455807035071
_DR2 = 30.47126234366208639907816317502275584842

_RP = np.array([
    -4.79443220978201773821e9,
    1.95617491946556577543e12,
    -2.49248344360967716204e14,
    9.70862251047306323952e15,
])
_RQ = np.array([  # monic
    4.99563147152651017219e2,
    1.73785401676374683123e5,
    4.84409658339962045305e7,
    1.11855537045356834862e10,
    2.11277520115489217587e12,
    3.10518229857422583814e14,
    3.18121955943204943306e16,
    1.71086294081043136091e18,
])
_PP = np.array([
    7.96936729297347051624e-4,
    8.28352392107440799803e-2,
    1.23953371646414299388e0,
    5.44725003058768775090e0,
    8.74716500199817011941e0,
    5.30324038235394892183e0,
    9.99999999999999997821e-1,
])
_PQ = np.array([
    9.24408810558863637013e-4,
    8.56288474354474431428e-2,
    1.25352743901058953537e0,
    5.47097740330417105182e0,
    8.76190883237069594232e0,
    5.30605288235394617618e0,
    1.00000000000000000218e0,
])
_QP = np.array([
    -1.13663838898469149931e-2,
    -1.28252718670509318512e0,
    -1.95539544257735972385e1,
    -9.32060152123768231369e1,
    -1.77681167980488050595e2,
    -1.47077505154951170175e2,
    -5.14105326766599330220e1,
    -6.05014350600728481186e0,
])
_QQ = np.array([  # monic
    6.43178256118178023184e1,
    8.56430025976980587198e2,
    3.88240183605401609683e3,
    7.24046774195652478189e3,
    5.93072701187316984827e3,
    2.06209331660327847417e3,
    2.42005740240291393179e2,
])
_SQ2OPI = 7.9788456080286535587989e-1
_PIO4 = 7.85398163397448309616e-1


def _polevl(x: np.ndarray, coef: np.ndarray) -> np.ndarray:
    ans = np.full_like(x, coef[0])
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def _p1evl(x: np.ndarray, coef: np.ndarray) -> np.ndarray:
    ans = x + coef[0]
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def bessel_j0(x):
    """J0(x), absolute error <= 5e-14 on |x| <= 5000; exactly even."""
    scalar = np.isscalar(x)
    ax = np.abs(np.asarray(x, dtype=np.float64))
    out = np.empty_like(ax)

    small = ax < 1e-5
    if small.any():
        z = ax[small]
        out[small] = 1.0 - 0.25 * z * z

    mid = (~small) & (ax <= 5.0)
    if mid.any():
        z = ax[mid] ** 2
        p = (z - _DR1) * (z - _DR2)
        out[mid] = p * _polevl(z, _RP) / _p1evl(z, _RQ)

    big = ax > 5.0
    if big.any():
        xx = ax[big]
        w = 5.0 / xx
        z = 25.0 / (xx * xx)
        p = _polevl(z, _PP) / _polevl(z, _PQ)
        q = _polevl(z, _QP) / _p1evl(z, _QQ)
        xn = xx - _PIO4
        out[big] = _SQ2OPI * (p * np.cos(xn) - w * q * np.sin(xn)) / np.sqrt(xx)

    return float(out) if scalar else out


# ---------------------------------------------------------------------------
# truncated factors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedFactor:
    """One truncated characteristic-function factor.

    For a complex pair this is F~_T (fold of both conjugates, coefficient
    b1~(T, chi)); for a real character it is F_T (positive ordinates only,
    coefficient b1(T, chi)).  b1 is negative and tends to 0 as T grows.
    """

    index: int
    paired: bool
    height: float
    alphas: np.ndarray
    b1: float


def b1_T(j: int, t_height: float, tab: ZeroTable, consts: AnalyticConstants) -> float:
    """Tail coefficient b1(T, chi_j) (real chi) or b1~(T, chi_j) (pair)."""
    lab = tab.table.label(j)
    if lab.is_real:
        if t_height > tab.t_max[j]:
            raise DataError(
                f"T={t_height} exceeds completeness {tab.t_max[j]} for chi_{j}"
            )
        fold = tab.ordinates(j)
        full = -consts.neg_b1_zero(j, tab.table)
    else:
        if t_height > tab.fold_t_max(j):
            raise DataError(
                f"T={t_height} exceeds pair completeness {tab.fold_t_max(j)} for chi_{j}"
            )
        fold = tab.fold(j)
        full = -consts.neg_b1_zero(j, tab.table)
    head = fold[fold < t_height]
    partial = float(np.sum(1.0 / (0.25 + head.astype(np.float64) ** 2)))
    val = full + partial
    if val > 0.0:
        # zero-data / constants inconsistency beyond their joint accuracy
        if val > 64.0 * (consts.accuracy + tab.accuracy):
            raise DataError(f"b1({t_height}, chi_{j}) = {val} > 0")
        val = 0.0
    return val


def truncated_factor(
    j: int, t_height: float, tab: ZeroTable, consts: AnalyticConstants
) -> TruncatedFactor:
    lab = tab.table.label(j)
    fold = tab.ordinates(j) if lab.is_real else tab.fold(j)
    head = fold[fold < t_height]
    return TruncatedFactor(
        index=j,
        paired=not lab.is_real,
        height=t_height,
        alphas=2.0 / np.sqrt(0.25 + head.astype(np.float64) ** 2),
        b1=b1_T(j, t_height, tab, consts),
    )


def F_T(z, factor: TruncatedFactor, chunk: int = 4096):
    """prod_{gamma < T} J0(alpha_gamma z) * (1 + b1 z^2); even in z."""
    scalar = np.isscalar(z)
    zv = np.atleast_1d(np.abs(np.asarray(z, dtype=np.float64)))
    prod = np.ones_like(zv)
    alphas = factor.alphas
    for k in range(0, len(alphas), chunk):
        block = alphas[k : k + chunk]
        prod *= np.prod(bessel_j0(zv[:, None] * block[None, :]), axis=1)
    out = prod * (1.0 + factor.b1 * zv * zv)
    return float(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# the truncated characteristic function
# ---------------------------------------------------------------------------


class PhiFactors:
    """The five representative truncated factors for one (q, T) pair."""

    def __init__(self, tab: ZeroTable, consts: AnalyticConstants, t_height: float):
        self.table = tab.table
        self.height = t_height
        from .characters import partition_characters

        reals, half = partition_characters(tab.table)
        self.reps = [lab.index for lab in reals + half]
        self.factors = {
            j: truncated_factor(j, t_height, tab, consts) for j in self.reps
        }

    def b1_hat(self) -> float:
        return max(abs(f.b1) for f in self.factors.values())

    def z_arguments(self, t1, t2, a: int) -> dict[int, np.ndarray]:
        """|t1 + chi_j(a) t2| per representative j, via the symmetric form."""
        out = {}
        t1 = np.asarray(t1, dtype=np.float64)
        t2 = np.asarray(t2, dtype=np.float64)
        for j in self.reps:
            re = self.table.re_value(j, a)
            out[j] = np.sqrt(np.maximum(t1 * t1 + t2 * t2 + 2.0 * re * t1 * t2, 0.0))
        return out


def phi_X_truncated(
    t1,
    t2,
    a: int,
    factors: PhiFactors,
):
    """Truncated phi_X(t1, t2) for X(q; a): product of F_T / F~_T factors."""
    if math.gcd(a, factors.table.modulus) != 1:
        raise ConfigError(f"residue {a} not reduced mod {factors.table.modulus}")
    zs = factors.z_arguments(t1, t2, a)
    result = None
    for j in factors.reps:
        val = F_T(zs[j], factors.factors[j])
        result = val if result is None else result * val
    return result


# ---------------------------------------------------------------------------
# polynomial decay bounds for |F(x, chi)|
# ---------------------------------------------------------------------------


def f_bound_constants(j: int, n_zeros: int, tab: ZeroTable) -> tuple[float, float]:
    """(d, e) with |F(x, chi_j)| <= min(1, d |x|^{-e}), e = J/2.

    d = ceil(pi^{-J/2} prod_{i<=J} (1/4 + gamma_i^2)^{1/4}) over the first J
    positive ordinates of chi_j itself; the ceiling keeps the bound certified
    and matches the integer table convention.
    """
    if n_zeros == 0:
        return 1.0, 0.0
    gammas = tab.ordinates(j)
    if len(gammas) < n_zeros:
        raise DataError(
            f"need {n_zeros} zeros of chi_{j}, table has {len(gammas)}"
        )
    head = gammas[:n_zeros].astype(np.float64)
    log_d = -0.5 * n_zeros * math.log(math.pi) + 0.25 * float(
        np.sum(np.log(0.25 + head**2))
    )
    d = math.exp(log_d) * (1.0 + 2.0**-40)
    return float(math.ceil(d)), n_zeros / 2.0
