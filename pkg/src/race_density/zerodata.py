"""Zero-ordinate tables and analytic constants.

Zeros of L(s, chi_j) are stored per character as sorted positive ordinates
(decimal strings in JSON, so precision metadata is honest).  For a complex
character the "pair fold" merges the positive ordinates of chi and of
chi-bar, which by the reflection symmetry of zeros is exactly the multiset
{|gamma| : L(1/2 + i gamma, chi) = 0, |gamma| < T}; the truncated products
and the Monte-Carlo sampler only ever need folds.

The analytic constants are -b1~(0, chi) = sum over all zeros of chi (both
signs) of 1/(1/4 + gamma^2), obtainable from Re L'/L(1, chi) through
Vorhauer's formula; they certify every tail beyond the tabulated zeros.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .characters import CharacterTable
from .errors import ConfigError, DataError

EULER_GAMMA = 0.57721566490153286061

_DATA_ENV = "RACE_DENSITY_DATA"


def data_dir() -> Path:
    """Directory holding the shipped JSON data, overridable via env var."""
    env = os.environ.get(_DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data"


# ---------------------------------------------------------------------------
# zero tables
# ---------------------------------------------------------------------------


@dataclass
class ZeroTable:
    modulus: int
    zeros: dict[int, np.ndarray]  # paper index -> sorted positive ordinates
    t_max: dict[int, float]
    source: str
    accuracy: float
    table: CharacterTable = field(repr=False)

    def ordinates(self, j: int) -> np.ndarray:
        if j not in self.zeros:
            raise DataError(f"no zeros stored for character index {j}")
        return self.zeros[j]

    def fold(self, j: int) -> np.ndarray:
        """Sorted |gamma| multiset of the conjugate pair containing chi_j."""
        lab = self.table.label(j)
        if lab.is_real:
            return self.ordinates(j)
        merged = np.concatenate(
            [self.ordinates(j), self.ordinates(lab.conjugate_index)]
        )
        merged.sort()
        return merged

    def fold_t_max(self, j: int) -> float:
        lab = self.table.label(j)
        if lab.is_real:
            return self.t_max[j]
        return min(self.t_max[j], self.t_max[lab.conjugate_index])

    def completeness(self) -> float:
        return min(self.t_max.values())

    def sensitivity_bound(self, z_max: float) -> float:
        """First-order bound on a J0-product's error from ordinate errors.

        |d prod J0(alpha_gamma z)| <= sum |J0'| * z * |d alpha/d gamma| * acc,
        with |J0'| <= 0.6 and |d alpha/d gamma| <= alpha/gamma.
        """
        total = 0.0
        for j, arr in self.zeros.items():
            alpha = 2.0 / np.sqrt(0.25 + arr**2)
            total += float(np.sum(alpha / arr))
        return 0.6 * z_max * total * self.accuracy


_CONREY_CACHE: dict[int, dict[int, int]] = {}


def conrey_to_paper(modulus: int) -> dict[int, int]:
    """Map a Conrey index n to the paper index j.

    For prime q with least primitive root g, the Conrey character with index
    n = g^a sends g to e^{2 pi i a/(q-1)}, i.e. coincides with chi_a in the
    primitive-root labeling.  Verified by comparing values at g.
    """
    if modulus in _CONREY_CACHE:
        return _CONREY_CACHE[modulus]
    table = CharacterTable(modulus)
    mapping = {n: table.dlog[n] for n in table.dlog}
    if sorted(mapping.values()) != list(range(modulus - 1)):
        raise DataError("conrey mapping is not a bijection onto paper indices")
    if mapping[1] != 0 or mapping[table.primitive_root] != 1:
        raise DataError("conrey mapping failed chi(g) verification")
    _CONREY_CACHE[modulus] = mapping
    return mapping


def load_zero_table(path: str | Path) -> ZeroTable:
    path = Path(path)
    if not path.exists():
        raise DataError(f"zero file not found: {path}")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DataError(f"malformed zero file {path}: {exc}") from exc
    for key in ("modulus", "labeling", "characters"):
        if key not in doc:
            raise DataError(f"zero file {path} missing field '{key}'")
    modulus = int(doc["modulus"])
    labeling = doc["labeling"]
    if labeling not in ("paper", "conrey"):
        raise DataError(f"unknown labeling convention '{labeling}'")
    table = CharacterTable(modulus)
    remap = conrey_to_paper(modulus) if labeling == "conrey" else None

    zeros: dict[int, np.ndarray] = {}
    t_max: dict[int, float] = {}
    for entry in doc["characters"]:
        idx = int(entry["index"])
        j = remap[idx] if remap else idx
        if not 1 <= j <= modulus - 2:
            raise DataError(f"character index {idx} out of range for q={modulus}")
        vals = np.array([float(z) for z in entry["zeros"]], dtype=np.float64)
        cutoff = float(entry["t_max"])
        if vals.size:
            if np.any(vals == 0.0):
                raise DataError(
                    "ordinate 0.0 found: a zero at the central point would "
                    "contradict the linear-independence hypothesis"
                )
            if np.any(vals < 0.0):
                raise DataError("negative ordinate in zero file")
            if np.any(np.diff(vals) <= 0.0):
                raise DataError(f"ordinates for character {idx} not strictly increasing")
            if vals[-1] >= cutoff:
                raise DataError(
                    f"ordinate {vals[-1]} at or above declared t_max {cutoff}"
                )
        zeros[j] = vals
        t_max[j] = cutoff

    for j in range(1, modulus - 1):
        if j not in zeros:
            raise DataError(f"zero file lacks character index {j} (paper labeling)")

    return ZeroTable(
        modulus=modulus,
        zeros=zeros,
        t_max=t_max,
        source=str(doc.get("source", "unspecified")),
        accuracy=float(doc.get("accuracy", "1e-9")),
        table=table,
    )


def serialize_zero_table(tab: ZeroTable, decimals: int = 12) -> str:
    """Canonical JSON form; load(serialize(load(f))) is value-identical."""
    chars = []
    for j in sorted(tab.zeros):
        chars.append(
            {
                "index": j,
                "t_max": f"{tab.t_max[j]:.1f}",
                "zeros": [f"{g:.{decimals}f}" for g in tab.zeros[j]],
            }
        )
    doc = {
        "schema": "race-density-zeros/1",
        "modulus": tab.modulus,
        "labeling": "paper",
        "source": tab.source,
        "accuracy": f"{tab.accuracy:g}",
        "characters": chars,
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# analytic constants
# ---------------------------------------------------------------------------


@dataclass
class AnalyticConstants:
    """Per-representative values of sum_gamma 1/(1/4 + gamma^2).

    neg_b1_zero maps the representative index j in R(q) or H(q) to
    -b1~(0, chi_j) for complex pairs (both signs of gamma) and to
    -b1(0, chi_j) = -b1~(0, chi_j)/2 for real characters.
    """

    modulus: int
    neg_b1_tilde: dict[int, float]  # both-signs sum, every representative
    re_logderiv: dict[int, float]
    accuracy: float

    def neg_b1_zero(self, j: int, table: CharacterTable) -> float:
        lab = table.label(j)
        key = min(j, lab.conjugate_index)
        val = self.neg_b1_tilde[key]
        return val / 2.0 if lab.is_real else val

    def total(self) -> float:
        """Sum of the representative constants; equals (1/4) sum_k r_k^2."""
        table = CharacterTable(self.modulus)
        tot = 0.0
        for j in sorted(self.neg_b1_tilde):
            tot += self.neg_b1_zero(j, table)
        return tot


def b1_zero_from_logderiv(q: int, j: int, re_logderiv: float, table: CharacterTable | None = None) -> float:
    """-b1~(0, chi_j) from Vorhauer's formula.

    -b1~(0, chi) = log(q/pi) - C0 - (1 + chi(-1)) log 2 + 2 Re L'/L(1, chi),
    valid for primitive nonprincipal chi (automatic for prime q).
    """
    table = table or CharacterTable(q)
    if j % (q - 1) == 0:
        raise ConfigError("principal character has no Vorhauer constant")
    parity = table.parity(j)
    return (
        math.log(q / math.pi)
        - EULER_GAMMA
        - (1 + parity) * math.log(2.0)
        + 2.0 * re_logderiv
    )


def load_constants(path: str | Path, modulus_expected: int | None = None) -> AnalyticConstants:
    path = Path(path)
    if not path.exists():
        raise DataError(f"constants file not found: {path}")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DataError(f"malformed constants file {path}: {exc}") from exc
    modulus = int(doc["modulus"])
    if modulus_expected is not None and modulus != modulus_expected:
        raise DataError(f"constants file is for q={modulus}, expected {modulus_expected}")
    table = CharacterTable(modulus)
    tilde: dict[int, float] = {}
    logd: dict[int, float] = {}
    for entry in doc["values"]:
        j = int(entry["index"])
        if "neg_b1_tilde_zero" in entry:
            val = float(entry["neg_b1_tilde_zero"])
        elif "re_logderiv_at_1" in entry:
            val = b1_zero_from_logderiv(modulus, j, float(entry["re_logderiv_at_1"]), table)
        else:
            raise DataError(f"constants entry for index {j} carries no usable value")
        if val <= 0.0:
            raise DataError(f"nonpositive constant for character {j}")
        tilde[j] = val
        if "re_logderiv_at_1" in entry:
            logd[j] = float(entry["re_logderiv_at_1"])
    reps = {min(j, (modulus - 1 - j) % (modulus - 1)) for j in range(1, modulus - 1)}
    missing = reps - set(tilde)
    if missing:
        raise DataError(f"constants file lacks representatives {sorted(missing)}")
    return AnalyticConstants(
        modulus=modulus,
        neg_b1_tilde=tilde,
        re_logderiv=logd,
        accuracy=float(doc.get("accuracy", "1e-12")),
    )


# ---------------------------------------------------------------------------
# merged alpha sequence
# ---------------------------------------------------------------------------


@dataclass
class AlphaSequence:
    """Decreasing alpha_gamma = 2/sqrt(1/4+gamma^2) over all nine characters.

    The head is exact (from tabulated zeros); the tail of squares beyond any
    index K is certified through the identity
    sum_{k>K} r_k^2 = 4*(sum of constants) - sum_{k<=K} r_k^2, rounded up.
    """

    values: np.ndarray  # descending
    partial_sums: np.ndarray
    quarter_total: float  # (1/4) sum_k r_k^2 = sum of the constants
    t_complete: float

    def tail_of_squares(self, k: int) -> float:
        """Certified upper bound on sum_{i > k} r_i^2 (k in 0..len)."""
        if k > len(self.values):
            raise DataError(f"only {len(self.values)} tabulated alpha values")
        head_sq = float(np.sum(self.values[:k] ** 2))
        tail = 4.0 * self.quarter_total - head_sq
        return tail * (1.0 + 2.0**-40) + 2.0**-48

    def head_sum(self, k: int) -> float:
        if k > len(self.values):
            raise DataError(f"only {len(self.values)} tabulated alpha values")
        return float(self.partial_sums[k - 1]) if k else 0.0


def alpha_sequence(tab: ZeroTable, consts: AnalyticConstants) -> AlphaSequence:
    if tab.completeness() < 10.0:
        raise DataError("zero table must be complete to height >= 10")
    merged = np.sort(np.concatenate([tab.zeros[j] for j in sorted(tab.zeros)]))
    alphas = 2.0 / np.sqrt(0.25 + merged**2)
    return AlphaSequence(
        values=alphas,
        partial_sums=np.cumsum(alphas),
        quarter_total=consts.total(),
        t_complete=tab.completeness(),
    )


# ---------------------------------------------------------------------------
# shipped data resolution
# ---------------------------------------------------------------------------


def zero_file_for(q: int, t: float, directory: Path | None = None) -> Path:
    d = directory or data_dir()
    candidates = sorted(d.glob(f"zeros_q{q}_t*.json"))
    best = None
    for c in candidates:
        try:
            height = float(c.stem.split("_t")[-1])
        except ValueError:
            continue
        if height >= t and (best is None or height < best[0]):
            best = (height, c)
    if best is None:
        raise DataError(
            f"no zero file for q={q} with height >= {t} in {d}; "
            f"set {_DATA_ENV} or fetch data"
        )
    return best[1]


def constants_file_for(q: int, directory: Path | None = None) -> Path:
    d = directory or data_dir()
    p = d / f"constants_q{q}.json"
    if not p.exists():
        raise DataError(f"no constants file for q={q} in {d}")
    return p


def riemann_vonmangoldt_count(q: int, t: float) -> float:
    """Smooth positive-ordinate count (T/2 pi) log(qT/2 pi e), data-sanity only."""
    return t / (2.0 * math.pi) * math.log(q * t / (2.0 * math.pi * math.e))
