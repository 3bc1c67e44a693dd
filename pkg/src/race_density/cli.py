"""Command-line surface: density, model, bounds, mc, validate.

Machine output (stdout) is deterministic for fixed arguments and data;
timing goes to stderr.  Exit codes: 0 ok, 2 config/hypothesis violation,
3 data error, 4 internal accuracy failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

from .density import (
    PROFILES,
    RunConfig,
    compute_all,
    compute_delta,
    delta_variants,
    load_tables,
)
from .errbounds import bound_E1, bound_E2, tail_bound_params
from .errors import AccuracyError, ConfigError, DataError
from .mcoracle import SampleSpec, sample_X, truncated_variance
from .model import model_quadrant_probability, variance_decomposition
from .zerodata import (
    alpha_sequence,
    load_zero_table,
    riemann_vonmangoldt_count,
    serialize_zero_table,
)

SCHEMA = "race-density/1"


def _emit(payload: dict, fmt: str, csv_rows=None, csv_header=None):
    if fmt == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(csv_header)
        writer.writerows(csv_rows)
        sys.stdout.write(buf.getvalue())


def _common(ap: argparse.ArgumentParser):
    ap.add_argument("--q", type=int, default=11)
    ap.add_argument("--eps", type=float, default=0.2)
    ap.add_argument("--C", type=float, default=100.0, dest="c_cap")
    ap.add_argument("--T", type=float, default=None, dest="t_height")
    ap.add_argument("--profile", choices=sorted(PROFILES), default=None)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--format", choices=["json", "csv"], default="json")


def _resolve_t(args) -> float:
    if args.t_height is not None:
        return args.t_height
    if args.profile is not None:
        return PROFILES[args.profile]
    print(
        "warning: defaulting to the desk profile T=2500; full-precision "
        "runs need --profile paper (zero data to 10^4)",
        file=sys.stderr,
    )
    return PROFILES["desk"]


def cmd_density(args) -> dict:
    t_height = _resolve_t(args)
    tab, consts = load_tables(args.q, t_height)
    cfg = RunConfig(
        modulus=args.q,
        a=None if args.all else args.a,
        eps=args.eps,
        c_cap=args.c_cap,
        t_height=t_height,
        workers=args.workers,
    )
    if args.all:
        results = compute_all(cfg, tab, consts)
    else:
        if args.a is None:
            raise ConfigError("pass --a or --all")
        results = [compute_delta(cfg, tab, consts)]
    if args.order:
        if not args.order.startswith("powers-of:"):
            raise ConfigError("--order takes powers-of:<g>")
        g = int(args.order.split(":", 1)[1])
        if math.gcd(g, args.q) != 1:
            raise ConfigError(f"order generator {g} not reduced mod {args.q}")
        by_a = {r.a: r for r in results}
        ordered = []
        x = 1
        for _ in range(args.q - 2):
            x = (x * g) % args.q
            if x == 1:
                raise ConfigError(f"{g} does not generate the residues mod {args.q}")
            ordered.append(by_a[x])
        results = ordered
    rows = []
    for r in results:
        variants = delta_variants(r)
        rows.append(
            {
                "a": r.a,
                "delta_pp": {"value": r.delta_pp, "radius": r.error_radius},
                "delta_pm": {"value": variants["+-"][0], "radius": r.error_radius},
                "S": {"value": r.s_value, "radius": (r.e3 + r.fp_budget)},
                "certificates": {"e1": r.e1, "e2": r.e2, "e3": r.e3, "fp": r.fp_budget},
                "provenance": r.provenance,
            }
        )
    payload = {
        "schema": SCHEMA,
        "command": "density",
        "config": {
            "q": args.q,
            "eps": args.eps,
            "C": args.c_cap,
            "T": t_height,
            "order": args.order,
        },
        "results": rows,
    }
    csv_rows = [
        [
            row["a"],
            f"{row['delta_pp']['value']:.9f}",
            f"{row['delta_pp']['radius']:.3g}",
            f"{row['S']['value']:.10f}",
        ]
        for row in rows
    ]
    _emit(payload, args.format, csv_rows, ["a", "delta_pp", "radius", "S"])
    return payload


def cmd_model(args) -> dict:
    t_height = _resolve_t(args)
    tab, consts = load_tables(args.q, t_height)
    params = variance_decomposition(tab, consts)
    ks = [args.k] if args.k else list(range(1, args.q - 1))
    model_vals = {k: model_quadrant_probability(k, params) for k in ks}
    deltas = {}
    if args.l2 or args.compare:
        cfg = RunConfig(modulus=args.q, eps=args.eps, c_cap=args.c_cap, t_height=t_height, workers=args.workers)
        res = compute_all(cfg, tab, consts)
        g = 8 if args.q == 11 else tab.table.primitive_root
        x = 1
        for k in range(1, args.q - 1):
            x = (x * g) % args.q
            deltas[k] = next(r.delta_pp for r in res if r.a == x)
    rows = []
    for k in ks:
        rows.append(
            {
                "k": k,
                "model": model_vals[k],
                "delta": deltas.get(k),
                "difference": (model_vals[k] - deltas[k]) if k in deltas else None,
            }
        )
    payload = {
        "schema": SCHEMA,
        "command": "model",
        "config": {
            "q": args.q,
            "variance": params.total_variance,
            "residual_variance": params.residual_variance,
            "top_coefficient": params.top_coeff,
            "model_abs_tol": 1e-9,
        },
        "results": rows,
    }
    if args.l2:
        half = (args.q - 1) // 2
        num = sum((model_vals[k] - deltas[k]) ** 2 for k in range(1, half + 1))
        den = sum(deltas[k] ** 2 for k in range(1, half + 1))
        payload["relative_l2_error"] = math.sqrt(num / den)
    csv_rows = [
        [
            r["k"],
            f"{r['model']:.6f}",
            "" if r["delta"] is None else f"{r['delta']:.8f}",
            "" if r["difference"] is None else f"{r['difference']:+.6f}",
        ]
        for r in rows
    ]
    _emit(payload, args.format, csv_rows, ["k", "model", "delta", "difference"])
    return payload


def cmd_bounds(args) -> dict:
    t_height = _resolve_t(args)
    tab, consts = load_tables(args.q, t_height)
    if args.a is None:
        raise ConfigError("bounds needs --a")
    alpha = alpha_sequence(tab, consts)
    tails = tail_bound_params(alpha, 2.0 * math.pi)
    e1 = bound_E1(args.eps, tails)
    from .errbounds import suggest_e2_params

    p = suggest_e2_params(args.a, args.eps, args.c_cap, tab)
    e2 = bound_E2(args.a, args.eps, args.c_cap, p, tab)
    from .density import LatticeEngine

    engine = LatticeEngine(tab, consts, args.eps, args.c_cap, t_height, workers=args.workers)
    _, e3, fp, _ = engine.compute_S_and_E3(args.a)
    payload = {
        "schema": SCHEMA,
        "command": "bounds",
        "config": {"q": args.q, "a": args.a, "eps": args.eps, "C": args.c_cap, "T": t_height},
        "results": {
            "e1": e1,
            "e2": e2,
            "e3": e3,
            "fp_budget": fp,
            "radius": (e1 / 4 + e2 + e3 + fp) / math.pi**2,
            "tail_params": {"A": tails.a_coeff, "B": tails.b_shift},
            "e2_params": {
                "b": p.b,
                "c": p.c,
                "c_plus": p.c_plus,
                "c_minus": p.c_minus,
                "e_plus": p.e_plus,
                "e_minus": p.e_minus,
            },
        },
    }
    _emit(payload, args.format, [[k, v] for k, v in payload["results"].items() if isinstance(v, float)], ["bound", "value"])
    return payload


def cmd_mc(args) -> dict:
    t_height = args.t_height if args.t_height is not None else 1000.0
    tab, _ = load_tables(args.q, t_height)
    spec = SampleSpec(
        a=args.a,
        t_height=t_height,
        n_samples=args.n,
        seed=args.seed,
        antithetic=args.antithetic,
    )
    est = sample_X(spec, tab)
    payload = {
        "schema": SCHEMA,
        "command": "mc",
        "config": {
            "q": args.q,
            "a": args.a,
            "T": t_height,
            "N": args.n,
            "seed": args.seed,
            "antithetic": args.antithetic,
        },
        "results": {
            "frequencies": {str(a): est.frequencies[a] for a in est.frequencies},
            "standard_errors": {str(a): est.standard_errors[a] for a in est.standard_errors},
            "exceedance": {f"{w:g}": v for w, v in est.exceedance.items()},
            "x1_variance": est.x1_variance,
            "x1_variance_expected": truncated_variance(spec, tab),
        },
    }
    _emit(
        payload,
        args.format,
        [[a, est.frequencies[a]["++"], est.standard_errors[a]["++"]] for a in est.frequencies],
        ["a", "freq_pp", "se"],
    )
    return payload


def cmd_validate(args) -> dict:
    tab = load_zero_table(args.path)
    per_char = []
    for j in sorted(tab.zeros):
        zs = tab.zeros[j]
        t_max = tab.t_max[j]
        expected = riemann_vonmangoldt_count(tab.modulus, t_max)
        per_char.append(
            {
                "index": j,
                "count": len(zs),
                "t_max": t_max,
                "rvm_expected": expected,
                "rvm_ratio": len(zs) / expected if expected > 0 else None,
            }
        )
    canonical = serialize_zero_table(tab)
    payload = {
        "schema": SCHEMA,
        "command": "validate",
        "results": {
            "modulus": tab.modulus,
            "source": tab.source,
            "characters": per_char,
            "round_trip_bytes": len(canonical),
            "status": "OK",
        },
    }
    _emit(payload, args.format, [[c["index"], c["count"], c["t_max"]] for c in per_char], ["index", "count", "t_max"])
    return payload


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="race-density",
        description="Certified prime-race correlation densities",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", help="certified delta_a^{++} values")
    _common(p)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--order", type=str, default=None, help="powers-of:<g> row ordering")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("model", help="single-zero model table")
    _common(p)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l2", action="store_true")
    p.add_argument("--compare", action="store_true")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("bounds", help="error budgets without the density")
    _common(p)
    p.add_argument("--a", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("mc", help="Monte-Carlo quadrant estimate")
    _common(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--N", type=int, default=1000000, dest="n")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--antithetic", action="store_true")
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("validate", help="schema and invariant report for a zero file")
    p.add_argument("path")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_validate)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    start = time.time()
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except AccuracyError as exc:
        print(f"accuracy failure: {exc}", file=sys.stderr)
        return 4
    print(f"elapsed: {time.time() - start:.2f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
