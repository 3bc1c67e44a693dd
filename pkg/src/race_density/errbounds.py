"""Certified error radii: discretization (E1), lattice truncation (E2),
product truncation (E3).

Every bound here is an upper bound under worst-case rounding: each arithmetic
stage is padded by a factor (1 + 2^-40), which is portable and far cheaper
than hardware directed rounding while dwarfing the actual double-precision
error of these short computations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .charfn import f_bound_constants
from .errors import ConfigError, DataError
from .zerodata import AlphaSequence, ZeroTable

UP = 1.0 + 2.0**-40  # per-stage upward padding

__all__ = [
    "TailBoundParams",
    "tail_bound_params",
    "bound_E1",
    "E2Params",
    "PAPER_E2_ROWS",
    "bound_E2_terms",
    "bound_E2",
    "paper_b2_row",
    "suggest_e2_params",
    "D_factor",
    "product_excess",
]


# ---------------------------------------------------------------------------
# tail bound P(X_i >= w) <= exp(-A (w - B)^2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TailBoundParams:
    a_coeff: float  # A, rounded down
    b_shift: float  # B, rounded up
    w_min: float
    k_index: int  # k0 used in the construction
    tail_sq: float  # certified upper bound on sum_{k>k0} r_k^2

    def bound(self, w: float) -> float:
        if w < self.w_min:
            raise ConfigError(f"tail bound only valid for w >= {self.w_min}")
        return math.exp(-self.a_coeff * (w - self.b_shift) ** 2)


def tail_bound_params(alpha: AlphaSequence, w_min: float) -> TailBoundParams:
    """Montgomery-type sub-Gaussian tail parameters from the alpha sequence.

    k0 is the largest K with r_1 + ... + r_K < w_min/2; then B = 2 r_{k0+1}
    (rounded up, 2 decimals) and A = (3/16)/sum_{k>k0} r_k^2 (rounded down,
    3 decimals), so P(X_i >= w) <= exp(-A (w-B)^2) for every w >= w_min.
    """
    if w_min <= 0.0:
        raise ConfigError("w_min must be positive")
    half = w_min / 2.0
    k0 = int(np.searchsorted(alpha.partial_sums, half, side="left"))
    if k0 >= len(alpha.values):
        raise DataError("not enough tabulated alpha values to place k0")
    if k0 < 1:
        raise ConfigError(f"w_min={w_min} too small: k0 = 0")
    tail_sq = alpha.tail_of_squares(k0)
    if tail_sq <= 0.0:
        raise DataError("tail of squares unavailable or nonpositive")
    b_raw = 2.0 * alpha.values[k0] * UP
    b = math.ceil(b_raw * 100.0) / 100.0
    a_raw = (3.0 / 16.0) / tail_sq / UP
    a = math.floor(a_raw * 1000.0) / 1000.0
    if b >= w_min:
        raise ConfigError("tail bound degenerate: B >= w_min")
    if a <= 0.0:
        raise DataError("tail bound degenerate: A <= 0")
    return TailBoundParams(a_coeff=a, b_shift=b, w_min=w_min, k_index=k0, tail_sq=tail_sq)


def bound_E1(eps: float, params: TailBoundParams) -> float:
    """Certified |E1(eps)| <= 8 pi^2 (2 - rho)/(1 - rho)^2 exp(-A (2pi/eps - B)^2).

    rho bounds the ratio of consecutive inner-sum terms; it is derived from
    (2pi(l+1)/eps - B)^2 - (2pi l/eps - B)^2 >= (2pi/eps)(6pi/eps - 2B) at
    l >= 1, so the two kappa-sum branches collapse to geometric series.
    """
    if not 0.0 < eps < 1.0:
        raise ConfigError(f"eps={eps} outside (0, 1)")
    u = 2.0 * math.pi / eps
    if u < params.w_min:
        raise ConfigError(f"2 pi/eps = {u} below tail-bound validity {params.w_min}")
    a, b = params.a_coeff, params.b_shift
    g1 = math.exp(-a * (u - b) ** 2 / UP) * UP
    rho = math.exp(-a * u * (3.0 * u - 2.0 * b) / UP) * UP
    if rho >= 1.0:
        raise ConfigError("geometric ratio bound >= 1")
    val = 8.0 * math.pi**2 * g1 * (2.0 - rho) / (1.0 - rho) ** 2
    return val * UP**4


# ---------------------------------------------------------------------------
# lattice truncation: closed-form B2 bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class E2Params:
    b: float = 4.0
    c: float = 1.0
    c_plus: float = 0.309
    c_minus: float = -0.309
    e_plus: float = 8.5
    e_minus: float = 8.5
    e_small: float = 5.0

    def __post_init__(self):
        if not self.b > 1.0:
            raise ConfigError("E2 parameter b must exceed 1")
        if not (0.0 <= self.c <= 1.0 and 0.0 <= self.c_plus <= 1.0 and -1.0 <= self.c_minus <= 0.0):
            raise ConfigError("E2 thresholds outside their ranges")


# parameter rows used for the published mod-11 table (b=4, c=1, e(chi)=5)
PAPER_E2_ROWS: dict[int, E2Params] = {
    2: E2Params(c_plus=0.309, c_minus=-0.309, e_plus=8.5, e_minus=8.5),
    3: E2Params(c_plus=0.309, c_minus=-0.809, e_plus=8.5, e_minus=9.5),
    4: E2Params(c_plus=0.309, c_minus=-0.809, e_plus=8.5, e_minus=9.5),
    5: E2Params(c_plus=0.309, c_minus=-0.809, e_plus=8.5, e_minus=9.5),
    6: E2Params(c_plus=0.309, c_minus=-0.309, e_plus=8.5, e_minus=8.5),
    7: E2Params(c_plus=0.309, c_minus=-0.309, e_plus=8.5, e_minus=8.5),
    8: E2Params(c_plus=0.309, c_minus=-0.309, e_plus=8.5, e_minus=8.5),
    9: E2Params(c_plus=0.309, c_minus=-0.809, e_plus=8.5, e_minus=9.5),
    10: E2Params(c_plus=1.0, c_minus=-1.0, e_plus=10.0, e_minus=10.0),
}


def _restricted(tab: ZeroTable, a: int, pred, e_chi: float) -> tuple[float, float, int]:
    """(prod d, sum e, count) over nonprincipal chi with pred(Re chi(a))."""
    n_zeros = int(round(2.0 * e_chi))
    log_d = 0.0
    e_tot = 0.0
    count = 0
    for j in range(1, tab.modulus - 1):
        re = tab.table.re_value(j, a)
        if pred(re):
            d, e = f_bound_constants(j, n_zeros, tab)
            log_d += math.log(d)
            e_tot += e
            count += 1
    return math.exp(log_d) * UP**2, e_tot, count


def bound_E2_terms(
    a: int, eps: float, c_cap: float, p: E2Params, tab: ZeroTable
) -> tuple[float, float, float]:
    """The three closed-form bounds (B2+, B2-, B2~) for B2(a, eps, C)."""
    if c_cap < 1.0:
        raise ConfigError("C must be >= 1")
    if eps <= 0.0:
        raise ConfigError("eps must be positive")
    d_cp, e_cp, n_p = _restricted(tab, a, lambda r: r >= p.c_plus, p.e_plus)
    d_cm, e_cm, n_m = _restricted(tab, a, lambda r: r <= p.c_minus, p.e_minus)
    d_c, e_c, n_c = _restricted(tab, a, lambda r: abs(r) <= p.c, p.e_small)
    if e_c <= 1.0:
        raise ConfigError(f"e_c = {e_c} <= 1: central decay hypothesis fails")
    if n_p == 0 or n_m == 0:
        raise ConfigError("empty character set in a required Re chi(a) range")
    floor_term = math.floor(c_cap / 2.0) - 1.0
    if floor_term <= 0.0:
        raise ConfigError("C too small for the integral comparison")
    b = p.b
    b2p = (
        (b * d_cp / (4.0 * e_cp))
        * (1.0 - 1.0 / b)
        * (eps * (1.0 + p.c_plus / b)) ** -e_cp
        * floor_term**-e_cp
    ) * UP**6
    b2m = (
        (b * d_cm / (4.0 * e_cm))
        * (1.0 - 1.0 / b)
        * (eps * (1.0 - p.c_minus / b)) ** -e_cm
        * floor_term**-e_cm
    ) * UP**6
    b2t = (
        (d_c / (e_c - 1.0))
        * (c_cap / (2.0 * b) + 1.0)
        * (eps * (1.0 - p.c / b)) ** -e_c
        * floor_term**-e_c
    ) * UP**6
    return b2p, b2m, b2t


def bound_E2(a: int, eps: float, c_cap: float, p: E2Params, tab: ZeroTable) -> float:
    """Certified |E2(eps, C)| <= 4 (B2+ + B2- + B2~)."""
    b2p, b2m, b2t = bound_E2_terms(a, eps, c_cap, p, tab)
    return 4.0 * (b2p + b2m + b2t) * UP


def paper_b2_row(a: int, eps: float, c_cap: float, tab: ZeroTable) -> float:
    """B2 as tabulated in the published mod-11 run.

    The published rows with c_minus = -0.309 (a in {2, 6, 7, 8}) reproduce
    only as B2+ + B2~; including B2- (which for those rows equals the
    conjugate residue's B2+, around 4e-12 to 6e-12) overshoots the printed
    values by ~65%.  The rows with c_minus in {-0.809, -1} reproduce as the
    full three-term sum.  bound_E2 always uses the full certified sum; this
    accessor exists to pin the published numbers in golden tests.
    """
    p = PAPER_E2_ROWS[a]
    b2p, b2m, b2t = bound_E2_terms(a, eps, c_cap, p, tab)
    if p.c_minus <= -0.5:
        return b2p + b2m + b2t
    return b2p + b2t


def suggest_e2_params(a: int, eps: float, c_cap: float, tab: ZeroTable) -> E2Params:
    """Small grid search minimizing the certified three-term bound."""
    best = None
    grid_c = [0.309, 0.809, 1.0]
    grid_e = [5.0, 8.5, 9.5, 10.0]
    for cp, cm, ep, em in itertools.product(grid_c, grid_c, grid_e, grid_e):
        p = E2Params(c_plus=cp, c_minus=-cm, e_plus=ep, e_minus=em)
        try:
            val = bound_E2(a, eps, c_cap, p, tab)
        except ConfigError:
            continue
        if best is None or val < best[0]:
            best = (val, p)
    if best is None:
        raise ConfigError(f"no admissible E2 parameters found for a={a}")
    return best[1]


# ---------------------------------------------------------------------------
# product truncation envelope
# ---------------------------------------------------------------------------


def D_factor(x: float, b_hat: float) -> float:
    """Envelope D(x, T) = b^2 x^4 / (2 (1 - b x^2)^2) for the truncation error.

    Certified bound for |Delta_T| and |Delta~_T| whenever |b_hat| x^2 < 1.
    """
    bh = abs(b_hat)
    u = bh * x * x
    if u >= 1.0:
        raise ConfigError(
            f"product-truncation hypothesis violated: |b1_hat| x^2 = {u} >= 1 "
            "(shrink eps*C or raise T)"
        )
    return (u * u / (2.0 * (1.0 - u) ** 2)) * UP**3


def product_excess(zs: list[np.ndarray], b_hat: float) -> np.ndarray:
    """prod_reps (1 + D(z_rep, T)) - 1, elementwise over lattice points."""
    acc = None
    for z in zs:
        u = np.abs(b_hat) * z * z
        if np.any(u >= 1.0):
            raise ConfigError("product-truncation hypothesis violated on lattice")
        d = (u * u / (2.0 * (1.0 - u) ** 2)) * UP**3
        acc = (1.0 + d) if acc is None else acc * (1.0 + d)
    return (acc - 1.0) * UP
