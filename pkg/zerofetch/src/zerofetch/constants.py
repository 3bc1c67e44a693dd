"""Analytic constants via the Hurwitz-zeta route, independent of any zeros.

L(1, chi) = -(1/q) sum_r chi(r) psi(r/q) and
L'(1, chi) = -log(q) L(1, chi) - (1/q) sum_r chi(r) gamma_1(r/q)
(generalized Stieltjes constants), whence Vorhauer's formula gives
-b1~(0, chi) = log(q/pi) - C0 - (1 + chi(-1)) log 2 + 2 Re L'/L(1, chi).
Computed at >= 20 digits so the values genuinely oracle the primary suite.
"""

from __future__ import annotations

import json
from pathlib import Path

import mpmath as mp

from .labels import dlog_table, is_prime, least_primitive_root


class PrecisionError(RuntimeError):
    pass


def _chi(q: int, dlog: dict[int, int], j: int, r: int):
    return mp.e ** (2j * mp.pi * mp.mpf(j * dlog[r]) / (q - 1))


def compute_constants(q: int, dps: int = 30) -> dict[int, dict[str, str]]:
    """Per-representative constants for j = 1..(q-1)/2, as decimal strings."""
    if not is_prime(q) or q < 3:
        raise ValueError(f"modulus {q} must be an odd prime")
    dlog = dlog_table(q)
    out: dict[int, dict[str, str]] = {}
    with mp.workdps(dps):
        psi = {r: mp.digamma(mp.mpf(r) / q) for r in range(1, q)}
        sti = {r: mp.stieltjes(1, mp.mpf(r) / q) for r in range(1, q)}
        for j in range(1, (q - 1) // 2 + 1):
            lval = -mp.fsum([_chi(q, dlog, j, r) * psi[r] for r in range(1, q)]) / q
            lder = -mp.log(q) * lval - mp.fsum(
                [_chi(q, dlog, j, r) * sti[r] for r in range(1, q)]
            ) / q
            re_logderiv = mp.re(lder / lval)
            par = 1 if (j * dlog[q - 1]) % (q - 1) == 0 else -1
            neg_b1t = (
                mp.log(mp.mpf(q) / mp.pi)
                - mp.euler
                - (1 + par) * mp.log(2)
                + 2 * re_logderiv
            )
            if neg_b1t <= 0:
                raise PrecisionError(f"nonpositive constant for chi_{j}")
            out[j] = {
                "neg_b1_tilde_zero": mp.nstr(neg_b1t, dps - 8),
                "re_logderiv_at_1": mp.nstr(re_logderiv, dps - 8),
            }
    return out


def self_check(q: int, dps: int = 30, tol_digits: int = 18) -> bool:
    """Recompute at doubled precision; all values must agree to tol_digits."""
    first = compute_constants(q, dps)
    second = compute_constants(q, 2 * dps)
    tol = mp.mpf(10) ** (-tol_digits)
    for j in first:
        a = mp.mpf(first[j]["neg_b1_tilde_zero"])
        b = mp.mpf(second[j]["neg_b1_tilde_zero"])
        if abs(a - b) > tol:
            raise PrecisionError(f"constants self-check failed for chi_{j}: {a} vs {b}")
    return True


def write_constants_file(q: int, path: Path, dps: int = 30) -> dict:
    consts = compute_constants(q, dps)
    doc = {
        "schema": "race-density-constants/1",
        "modulus": q,
        "accuracy": f"1e-{dps - 10}",
        "values": [
            {
                "index": j,
                "neg_b1_tilde_zero": consts[j]["neg_b1_tilde_zero"],
                "re_logderiv_at_1": consts[j]["re_logderiv_at_1"],
            }
            for j in sorted(consts)
        ],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=1) + "\n")
    return doc
