"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid configuration.
"""

from __future__ import annotations

import argparse
import sys

from . import pipeline
from .pipeline import ConfigError, RunConfig
from .emit import FORMATS, emit
from .galois import ReducibleModulusError, new_context
from .gf2poly import parse_place, parse_poly


def _pattern(text: str):
    if text.strip().lower() in ("none", "all", ""):
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad pattern {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--modulus", default=pipeline.DEFAULT_MODULUS,
                        help="conductor, as T^4+T+1 or MSB-first bits")
    common.add_argument("--constant-degree", type=int, default=pipeline.DEFAULT_N, dest="n")
    common.add_argument("--format", choices=FORMATS, default="md", dest="fmt")

    parser = argparse.ArgumentParser(prog="cyclofield", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table-powers", parents=[common], help="powers of T modulo M")
    p.add_argument("extra", nargs="*", help="further polynomials to reduce mod M")

    p = sub.add_parser("frobenius", parents=[common], help="Frobenius data of places")
    p.add_argument("places", nargs="*", help="places (polynomials or 'inf'); default all of degree <= deg M")
    p.add_argument("--index", type=int, default=pipeline.DEFAULT_INDEX,
                   help="order of the subgroup H_P to report")

    p = sub.add_parser("classify", parents=[common], help="invariants of all subfields of a given index")
    p.add_argument("--index", type=int, default=pipeline.DEFAULT_INDEX)
    p.add_argument("--bound", type=int, default=pipeline.DEFAULT_BOUND)
    p.add_argument("--pattern", type=_pattern, default=pipeline.DEFAULT_PATTERN,
                   help="required N_1,N_2,...; 'none' keeps every subfield")
    p.add_argument("--plot-dir", help="also write spectrum and L-polynomial figures here")

    sub.add_parser("verify-paper", parents=[common], help="recompute every published value")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "table-powers":
            m = parse_poly(args.modulus)
            extras = [parse_poly(e) for e in args.extra] or None
            out.write(emit(pipeline.table_powers(m, extras), args.fmt))
        elif args.command == "frobenius":
            ctx = new_context(parse_poly(args.modulus), args.n)
            places = [parse_place(p) for p in args.places] or None
            out.write(emit(pipeline.frobenius_table(ctx, places, args.index), args.fmt))
        elif args.command == "classify":
            config = RunConfig(args.modulus, args.n, args.index, args.bound, args.fmt, args.pattern)
            reports = pipeline.classify(config)
            out.write(emit([r.to_dict() for r in reports], args.fmt))
            if args.plot_dir:
                from .plotting import render_figures
                for path in render_figures(reports, args.plot_dir):
                    print(f"wrote {path}", file=sys.stderr)
        elif args.command == "verify-paper":
            checks = pipeline.verify_paper()
            out.write(emit([c.to_dict() for c in checks], args.fmt))
            failed = [c for c in checks if not c.ok]
            print(f"{len(checks) - len(failed)}/{len(checks)} checks passed", file=sys.stderr)
            return 1 if failed else 0
    except (ConfigError, ReducibleModulusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
