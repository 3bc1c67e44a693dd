"""zerofetch command line: fetch zeros, compute constants, emit fixtures."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .client import FetchError, fetch_zeros
from .constants import write_constants_file
from .fixtures import emit_erf, emit_ft_spots, emit_j0, self_check
from .manifest import FetchManifest, RetryPolicy


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="zerofetch", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="download zero ordinates from LMFDB")
    p.add_argument("--q", type=int, default=11)
    p.add_argument("--height", type=float, default=10000.0)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--cache", type=Path, default=Path(".zerofetch-cache"))
    p.add_argument("--endpoint", type=str, default=None)
    p.add_argument("--attempts", type=int, default=4)

    p = sub.add_parser("constants", help="compute analytic constants")
    p.add_argument("--q", type=int, default=11)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--dps", type=int, default=30)

    p = sub.add_parser("fixtures", help="emit oracle fixtures")
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--zeros", type=Path, default=None, help="zero file for F_T spots")
    p.add_argument("--constants", type=Path, default=None)
    p.add_argument("--j0-points", type=int, default=10000)

    args = ap.parse_args(argv)
    try:
        if args.command == "zeros":
            manifest = FetchManifest(
                modulus=args.q,
                height=args.height,
                cache_dir=args.cache,
                retry=RetryPolicy(attempts=args.attempts),
                **({"endpoint": args.endpoint} if args.endpoint else {}),
            )
            doc = fetch_zeros(manifest, args.out)
            print(f"wrote {args.out} with {sum(len(c['zeros']) for c in doc['characters'])} zeros")
        elif args.command == "constants":
            doc = write_constants_file(args.q, args.out, dps=args.dps)
            print(f"wrote {args.out} with {len(doc['values'])} constants")
        elif args.command == "fixtures":
            args.out.mkdir(parents=True, exist_ok=True)
            dj = emit_j0(args.out / "j0_oracle.json", n_points=args.j0_points)
            self_check(dj)
            de = emit_erf(args.out / "erf_oracle.json")
            self_check(de)
            if args.zeros and args.constants:
                emit_ft_spots(args.zeros, args.constants, args.out / "ft_oracle.json")
            print(f"fixtures written to {args.out}")
    except FetchError as exc:
        print(f"fetch failed: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
