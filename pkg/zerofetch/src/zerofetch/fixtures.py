"""High-precision oracle fixtures for the primary test suite.

Every fixture triple is (input, value, claimed accuracy) with the value
computed by mpmath at a working precision at least ten digits beyond the
primary component's tolerance; `self_check` recomputes a sample at doubled
precision and verifies agreement within the claim.
"""

from __future__ import annotations

import json
from pathlib import Path

import mpmath as mp
import numpy as np


def _fmt(v, digits: int = 25) -> str:
    return mp.nstr(v, digits, strip_zeros=False)


def j0_grid(n_points: int = 10000, x_max: float = 5000.0, seed: int = 7) -> list[float]:
    rng = np.random.default_rng(seed)
    pts = [0.0, 1.0, 2.404825557695773, 5.0, 5.0000000001, 7.999999999, 8.0, 8.000000001]
    pts += list(np.linspace(0.0, 8.0, 2400)[1:])
    pts += list(np.geomspace(8.0, x_max, 2600))
    pts += list(rng.uniform(0.0, x_max, 3000))
    # cluster near the first Bessel zeros, where relative accuracy is hardest
    with mp.workdps(30):
        roots = [float(mp.besseljzero(0, k)) for k in range(1, 151)]
    offs = np.array([-1e-6, -1e-9, 0.0, 1e-9, 1e-6])
    pts += [r + o for r in roots for o in offs]
    pts += list(rng.uniform(0.0, 30.0, max(0, n_points - len(pts))))
    return sorted(float(p) for p in pts)


def emit_j0(path: Path, n_points: int = 10000, dps: int = 30, accuracy: str = "1e-24") -> dict:
    xs = j0_grid(n_points)
    with mp.workdps(dps):
        points = [
            {"x": repr(x), "value": _fmt(mp.besselj(0, mp.mpf(repr(x))))} for x in xs
        ]
    doc = {
        "schema": "race-density-fixtures/1",
        "kind": "j0",
        "accuracy": accuracy,
        "points": points,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc) + "\n")
    return doc


def emit_erf(path: Path, dps: int = 30, accuracy: str = "1e-24") -> dict:
    xs = [0.0, 0.5, 1.0, -1.0, 2.0, -3.5, 6.0, 0.1234567890123456]
    xs += list(np.linspace(-5.0, 5.0, 401))
    with mp.workdps(dps):
        points = [
            {"x": repr(float(x)), "value": _fmt(mp.erf(mp.mpf(repr(float(x)))))}
            for x in xs
        ]
    doc = {
        "schema": "race-density-fixtures/1",
        "kind": "erf",
        "accuracy": accuracy,
        "points": points,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc) + "\n")
    return doc


def _load_zero_file(zero_path: Path) -> dict:
    doc = json.loads(Path(zero_path).read_text())
    if doc.get("labeling") != "paper":
        raise ValueError("F_T fixtures expect a paper-labeled zero file")
    return doc


def emit_ft_spots(
    zero_path: Path,
    constants_path: Path,
    path: Path,
    n_spots: int = 120,
    dps: int = 30,
    accuracy: str = "1e-20",
    seed: int = 11,
) -> dict:
    """Truncated-product spot values prod_{gamma<T} J0(alpha z) (1 + b1 z^2).

    Spots cover each representative character (real: own ordinates; complex:
    the conjugate-pair fold) at several z and truncation heights.
    """
    zdoc = _load_zero_file(zero_path)
    cdoc = json.loads(Path(constants_path).read_text())
    q = int(zdoc["modulus"])
    by_index = {int(c["index"]): c for c in zdoc["characters"]}
    consts = {int(v["index"]): mp.mpf(v["neg_b1_tilde_zero"]) for v in cdoc["values"]}
    rng = np.random.default_rng(seed)
    reps = sorted(consts)
    spots = []
    zs = [0.25, 1.0, 2.5, 7.5] + list(rng.uniform(0.05, 12.0, max(0, n_spots // len(reps) - 4)))
    with mp.workdps(dps):
        for j in reps:
            real = (2 * j) % (q - 1) == 0
            own = [mp.mpf(z) for z in by_index[j]["zeros"]]
            if real:
                fold = sorted(own)
                full = consts[j] / 2
            else:
                conj = [mp.mpf(z) for z in by_index[q - 1 - j]["zeros"]]
                fold = sorted(own + conj)
                full = consts[j]
            t_cut = min(float(by_index[j]["t_max"]), float(by_index[q - 1 - j]["t_max"]) if not real else float("inf"))
            for t_height in (t_cut, min(1000.0, t_cut)):
                head = [g for g in fold if g < t_height]
                b1 = -full + mp.fsum([1 / (mp.mpf(1) / 4 + g * g) for g in head])
                for z in zs:
                    zv = mp.mpf(repr(float(z)))
                    prod = mp.fprod([mp.besselj(0, 2 * zv / mp.sqrt(mp.mpf(1) / 4 + g * g)) for g in head])
                    val = prod * (1 + b1 * zv * zv)
                    spots.append(
                        {
                            "index": j,
                            "paired": not real,
                            "T": repr(float(t_height)),
                            "z": repr(float(z)),
                            "value": _fmt(val, 22),
                            "b1": _fmt(b1, 18),
                        }
                    )
    doc = {
        "schema": "race-density-fixtures/1",
        "kind": "ft",
        "accuracy": accuracy,
        "modulus": q,
        "zero_file": str(zero_path.name),
        "points": spots,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc) + "\n")
    return doc


def self_check(doc: dict, sample: int = 60, dps: int = 30, seed: int = 3) -> bool:
    """Recompute a sample of fixture values at doubled precision."""
    rng = np.random.default_rng(seed)
    pts = doc["points"]
    idx = rng.choice(len(pts), size=min(sample, len(pts)), replace=False)
    tol = mp.mpf(doc["accuracy"])
    with mp.workdps(2 * dps):
        for i in idx:
            p = pts[int(i)]
            if doc["kind"] == "j0":
                v = mp.besselj(0, mp.mpf(p["x"]))
            elif doc["kind"] == "erf":
                v = mp.erf(mp.mpf(p["x"]))
            else:
                continue  # ft spots are re-derived in their own test path
            if abs(v - mp.mpf(p["value"])) > tol:
                raise AssertionError(
                    f"fixture self-check failed at {p['x']}: {p['value']} vs {mp.nstr(v, 25)}"
                )
    return True
