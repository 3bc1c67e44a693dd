"""The truncated lattice sum S(eps, C, T) and the certified densities.

delta_a^{++} = 1/4 - S/pi^2 with certified radius (E1/4 + E2 + E3)/pi^2 plus
an explicit floating-point budget.  The lattice pass fuses the E3 tally with
S itself, evaluates each conjugate-pair product once per distinct cosine
class Re chi(a) (shared across residues), and reduces in a fixed order with
compensated accumulation so results are bit-identical for any worker count.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import _kernels
from .charfn import PhiFactors
from .errbounds import (
    E2Params,
    PAPER_E2_ROWS,
    bound_E1,
    bound_E2,
    suggest_e2_params,
    tail_bound_params,
)
from .errors import ConfigError
from .zerodata import (
    AnalyticConstants,
    ZeroTable,
    alpha_sequence,
    constants_file_for,
    load_constants,
    load_zero_table,
    zero_file_for,
)

PI_SQ = math.pi * math.pi
_J0_ABS_ERR = 4.2e-16  # peak absolute error of the J0 implementation

PROFILES = {"desk": 2500.0, "paper": 10000.0}


@dataclass(frozen=True)
class RunConfig:
    modulus: int = 11
    a: int | None = None  # None = all residues 2..q-1
    eps: float = 0.2
    c_cap: float = 100.0
    t_height: float = 2500.0
    e2_mode: str = "auto"  # auto | paper | explicit E2Params via e2_params
    e2_params: E2Params | None = None
    workers: int | None = None
    summation: str = "compensated"  # or "plain"
    tail_correction: bool = True  # False = matched-truncation mode (E3 := 0)

    def validate(self):
        if not 0.0 < self.eps < 1.0:
            raise ConfigError(f"eps = {self.eps} outside (0, 1)")
        if self.c_cap < 1.0:
            raise ConfigError(f"C = {self.c_cap} < 1")
        if self.t_height <= 0.0:
            raise ConfigError("T must be positive")
        if self.summation not in ("compensated", "plain"):
            raise ConfigError(f"unknown summation mode {self.summation!r}")
        if self.e2_mode not in ("auto", "paper", "explicit"):
            raise ConfigError(f"unknown e2 mode {self.e2_mode!r}")


@dataclass
class DensityResult:
    a: int
    delta_pp: float
    error_radius: float
    e1: float
    e2: float
    e3: float
    s_value: float
    fp_budget: float
    config: RunConfig
    provenance: dict = field(default_factory=dict)
    seconds: float = 0.0


def load_tables(
    q: int, t_height: float, directory: Path | None = None
) -> tuple[ZeroTable, AnalyticConstants]:
    tab = load_zero_table(zero_file_for(q, t_height, directory))
    consts = load_constants(constants_file_for(q, directory), modulus_expected=q)
    return tab, consts


class LatticeEngine:
    """Shared state for computing S and E3 across residues at fixed (eps, C, T)."""

    def __init__(
        self,
        tab: ZeroTable,
        consts: AnalyticConstants,
        eps: float,
        c_cap: float,
        t_height: float,
        workers: int | None = None,
        summation: str = "compensated",
        tail_correction: bool = True,
        halve_lattice: bool = True,
    ):
        if t_height > tab.completeness():
            raise ConfigError(
                f"zero table complete to {tab.completeness()}, run needs T={t_height}"
            )
        self.tab = tab
        self.consts = consts
        self.eps = eps
        self.c_cap = c_cap
        self.t_height = t_height
        self.workers = workers or os.cpu_count() or 1
        self.summation = summation
        self.halve = halve_lattice
        self.factors = PhiFactors(tab, consts, t_height)
        if not tail_correction:
            from .charfn import TruncatedFactor

            self.factors.factors = {
                j: TruncatedFactor(f.index, f.paired, f.height, f.alphas, 0.0)
                for j, f in self.factors.factors.items()
            }
        self.tail_correction = tail_correction
        self.b1_hat = max(abs(self._true_b1(j)) for j in self.factors.reps)
        hyp = self.b1_hat * eps * eps * c_cap * c_cap
        if tail_correction and hyp >= 1.0:
            # the envelope D(x, T) certifying the quadratic tail correction
            # needs |b1| x^2 < 1; matched-truncation runs use bare products
            # and carry no E3 term, so no hypothesis applies there
            raise ConfigError(
                f"hypothesis b1_hat(T) eps^2 C^2 < 1 violated: {hyp:.6g} >= 1"
            )
        self._build_lattice()
        self._memo: dict[tuple[int, int], np.ndarray] = {}
        self._d_memo: dict[int, np.ndarray] = {}

    def _true_b1(self, j: int) -> float:
        from .charfn import b1_T

        return b1_T(j, self.t_height, self.tab, self.consts)

    def _build_lattice(self):
        c = self.c_cap
        odd = np.arange(1.0, math.floor(c) + 1.0, 2.0)
        n_vals = np.concatenate([-odd[::-1], odd])
        m_vals = odd if self.halve else n_vals
        mm, nn = np.meshgrid(m_vals, n_vals, indexing="ij")
        self.mm = mm.ravel()
        self.nn = nn.ravel()
        self.inv_mn = (2.0 if self.halve else 1.0) / (self.mm * self.nn)
        self.q_order = self.tab.modulus - 1

    def _cos_class(self, j: int, a: int) -> int:
        k = self.tab.table.exponent(j, a)
        return min(k, self.q_order - k)

    def _z_grid(self, kf: int) -> np.ndarray:
        cos_v = math.cos(2.0 * math.pi * kf / self.q_order)
        zz = self.mm * self.mm + self.nn * self.nn + 2.0 * cos_v * self.mm * self.nn
        return 0.5 * self.eps * np.sqrt(np.maximum(zz, 0.0))

    def _pair_vector(self, j: int, kf: int) -> np.ndarray:
        key = (j, kf)
        if key not in self._memo:
            z = self._z_grid(kf)
            fac = self.factors.factors[j]
            out = np.empty_like(z)
            _kernels.fold_product(z, fac.alphas, out)
            out *= 1.0 + fac.b1 * z * z
            self._memo[key] = out
        return self._memo[key]

    def _d_vector(self, kf: int) -> np.ndarray:
        if kf not in self._d_memo:
            z = self._z_grid(kf)
            u = self.b1_hat * z * z
            if np.any(u >= 1.0):
                raise ConfigError("product-truncation hypothesis violated on lattice")
            self._d_memo[kf] = (u * u / (2.0 * (1.0 - u) ** 2)) * (1.0 + 2.0**-40) ** 3
        return self._d_memo[kf]

    def warm(self, residues: list[int]):
        """Prefill the (pair, cosine-class) memo, optionally in parallel."""
        combos = []
        for a in residues:
            for j in self.factors.reps:
                combos.append((j, self._cos_class(j, a)))
        combos = sorted(set(combos))
        if self.workers > 1 and len(combos) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                list(pool.map(lambda jk: self._pair_vector(*jk), combos))
        else:
            for jk in combos:
                self._pair_vector(*jk)

    def compute_S_and_E3(self, a: int) -> tuple[float, float, float, float]:
        """Returns (S, E3_bound, fp_budget, abs_term_sum) for residue a."""
        if math.gcd(a, self.tab.modulus) != 1 or a % self.tab.modulus == 1:
            raise ConfigError(f"residue a={a} must be reduced and != 1 mod q")
        phi = None
        excess = None
        nf_total = 0
        for j in self.factors.reps:
            kf = self._cos_class(j, a)
            vec = self._pair_vector(j, kf)
            phi = vec.copy() if phi is None else phi * vec
            if self.tail_correction:
                dv = self._d_vector(kf)
                excess = (1.0 + dv) if excess is None else excess * (1.0 + dv)
            nf_total += len(self.factors.factors[j].alphas)
        terms = self.inv_mn * phi
        reducer = (
            _kernels.neumaier_sum if self.summation == "compensated" else _kernels.plain_sum
        )
        s_val, comp, absum = reducer(terms)
        if self.tail_correction:
            e3 = float(np.sum(np.abs(terms) * (excess - 1.0))) * (1.0 + 2.0**-40) ** 2
        else:
            e3 = 0.0
        fp = absum * (nf_total * _J0_ABS_ERR + 4.0 * np.finfo(float).eps) + comp
        return s_val, e3, fp, absum


def _resolve_e2(cfg: RunConfig, a: int, tab: ZeroTable) -> E2Params:
    if cfg.e2_mode == "paper":
        if cfg.modulus != 11 or a not in PAPER_E2_ROWS:
            raise ConfigError("paper E2 parameter rows exist only for q=11, a=2..10")
        return PAPER_E2_ROWS[a]
    if cfg.e2_mode == "explicit":
        if cfg.e2_params is None:
            raise ConfigError("e2_mode=explicit requires e2_params")
        return cfg.e2_params
    return suggest_e2_params(a, cfg.eps, cfg.c_cap, tab)


def compute_delta(
    cfg: RunConfig,
    tab: ZeroTable,
    consts: AnalyticConstants,
    engine: LatticeEngine | None = None,
) -> DensityResult:
    cfg.validate()
    if cfg.a is None:
        raise ConfigError("compute_delta needs a specific residue a")
    t0 = time.time()
    engine = engine or LatticeEngine(
        tab,
        consts,
        cfg.eps,
        cfg.c_cap,
        cfg.t_height,
        workers=cfg.workers,
        summation=cfg.summation,
        tail_correction=cfg.tail_correction,
    )
    s_val, e3, fp, _ = engine.compute_S_and_E3(cfg.a)

    alpha = alpha_sequence(tab, consts)
    tails = tail_bound_params(alpha, 2.0 * math.pi)
    e1 = bound_E1(cfg.eps, tails)
    e2 = bound_E2(cfg.a, cfg.eps, cfg.c_cap, _resolve_e2(cfg, cfg.a, tab), tab)

    delta = 0.25 - s_val / PI_SQ
    radius = ((e1 / 4.0 + e2 + e3 + fp) / PI_SQ) * (1.0 + 2.0**-40) ** 2
    if not 0.0 <= delta <= 0.5:
        raise ConfigError(f"computed delta {delta} outside [0, 1/2]")
    z_max = cfg.eps * cfg.c_cap
    return DensityResult(
        a=cfg.a,
        delta_pp=delta,
        error_radius=radius,
        e1=e1,
        e2=e2,
        e3=e3,
        s_value=s_val,
        fp_budget=fp,
        config=cfg,
        provenance={
            "zero_source": tab.source,
            "zero_accuracy": tab.accuracy,
            "completeness": tab.completeness(),
            "ordinate_sensitivity": tab.sensitivity_bound(z_max),
            "tail_params": {"A": tails.a_coeff, "B": tails.b_shift, "k0": tails.k_index},
            "tail_correction": cfg.tail_correction,
        },
        seconds=time.time() - t0,
    )


def compute_all(
    cfg: RunConfig, tab: ZeroTable, consts: AnalyticConstants
) -> list[DensityResult]:
    """Densities for every residue a = 2..q-1, sharing one lattice engine."""
    cfg.validate()
    engine = LatticeEngine(
        tab,
        consts,
        cfg.eps,
        cfg.c_cap,
        cfg.t_height,
        workers=cfg.workers,
        summation=cfg.summation,
        tail_correction=cfg.tail_correction,
    )
    residues = list(range(2, cfg.modulus))
    engine.warm(residues)
    out = []
    for a in residues:
        sub = RunConfig(**{**cfg.__dict__, "a": a})
        out.append(compute_delta(sub, tab, consts, engine=engine))
    return out


def delta_variants(r: DensityResult) -> dict[str, tuple[float, float]]:
    """All four signed densities with radii; ++ equals -- and +- equals -+."""
    pm = 0.5 - r.delta_pp
    rad = r.error_radius
    return {
        "++": (r.delta_pp, rad),
        "--": (r.delta_pp, rad),
        "+-": (pm, rad),
        "-+": (pm, rad),
    }
