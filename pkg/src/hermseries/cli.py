"""Command-line front end.

    hermseries expand hermite 4
    hermseries seq bell 10
    hermseries transform binomial --input seq.txt
    hermseries verify --ids all --order 12 --format json
    hermseries eval --ids EQ1 --point 0.3,0,0,0.1
    hermseries accel --ids EQ19 --point 0.5,0,0,0.2 --tol 1e-10
    hermseries list

Exit status: 0 success, 1 verification failure, 2 usage/input errors,
3 internal contract violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import ContractViolation, SeriesDomainError, UnknownIdentityError
from .mpoly import MPoly
from .polynomials import FAMILIES, family
from .rational import Q, format_rational
from .registry import Registry
from .sequences import GENERATORS, r_stirling2, stirling2

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONTRACT = 0, 1, 2, 3
DEFAULT_ORDER = 12

SEQUENCES = tuple(GENERATORS) + ("stirling2", "r_stirling2")


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermseries", description="Exact Hermite-series identity toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print a special polynomial")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--r", type=_nonneg, default=None, help="r for the r-polynomial families")

    p = sub.add_parser("seq", help="print the first N terms of a sequence")
    p.add_argument("name", choices=SEQUENCES)
    p.add_argument("count", type=_nonneg)
    p.add_argument("--r", type=_nonneg, default=0)

    p = sub.add_parser("transform", help="transform a sequence read from a file")
    p.add_argument("kind", choices=("binomial", "euler", "hermite"))
    p.add_argument("--input", default="-", help="one rational per line, '#' comments (default stdin)")
    p.add_argument("--lam", default="1", help="Euler transform lambda")
    p.add_argument("--mu", default="-1", help="Euler transform mu")

    p = sub.add_parser("verify", help="verify registered identities exactly")
    p.add_argument("--ids", default="all")
    p.add_argument("--order", "-n", type=_nonneg, default=DEFAULT_ORDER)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="report millis as 0 (reproducible output)")

    for name, helptext in (("eval", "evaluate both sides in floating point"),
                           ("accel", "count terms each side needs to reach a tolerance")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--ids", default="EQ1")
        p.add_argument("--point", default="0,0,0,0", help="x,y,z,t")
        p.add_argument("--order", "-n", type=_nonneg, default=30, help="truncation")
        p.add_argument("--p", type=float, default=0.5, help="value of the marker/parameter p")
        p.add_argument("--alpha", type=float, default=None, help="real exponent for EQ53")
        p.add_argument("--tol", type=float, default=1e-10 if name == "accel" else None)
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("list", help="list registered identities")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def read_sequence(path: str) -> list:
    handle = sys.stdin if path == "-" else open(path, encoding="utf-8")
    try:
        values = []
        for lineno, line in enumerate(handle, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(Q(line))
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"line {lineno}: not a rational: {line!r}") from exc
        return values
    finally:
        if handle is not sys.stdin:
            handle.close()


def _fmt(value) -> str:
    if isinstance(value, MPoly):
        return str(value)
    return format_rational(Q(value))


def _cmd_expand(args, out, registry) -> int:
    print(family(args.family, args.n, args.r), file=out)
    return EXIT_OK


def _cmd_seq(args, out, registry) -> int:
    if args.name == "stirling2":
        for n in range(args.count):
            print("\t".join(str(stirling2(n, k)) for k in range(n + 1)), file=out)
    elif args.name == "r_stirling2":
        for n in range(args.r, args.r + args.count):
            print("\t".join(str(r_stirling2(n, k, args.r)) for k in range(n + 1)), file=out)
    else:
        for v in GENERATORS[args.name].prefix(args.count):
            print(format_rational(v), file=out)
    return EXIT_OK


def _cmd_transform(args, out, registry) -> int:
    from .series import TSeries
    from .transforms import binomial_transform_list, euler_transform

    values = read_sequence(args.input)
    if not values:
        raise UsageError("empty input sequence")
    if args.kind == "binomial":
        result = binomial_transform_list(values)
    elif args.kind == "euler":
        result = list(euler_transform(TSeries(values), Q(args.lam), Q(args.mu)).coeffs)
    else:
        # Hermite transform: coefficients c_n = (-1)^n b_n of the right-hand side
        result = [b if n % 2 == 0 else -b for n, b in enumerate(binomial_transform_list(values))]
    for v in result:
        print(_fmt(v), file=out)
    return EXIT_OK


def _cmd_verify(args, out, registry) -> int:
    if args.order > registry.max_order:
        raise UsageError(f"order {args.order} exceeds the maximum {registry.max_order}")
    suite = registry.verify_all(args.order, max(1, args.parallelism), args.ids, timing=not args.no_timing)
    print(suite.to_json() if args.format == "json" else suite.to_text(), file=out)
    return EXIT_OK if suite.all_passed else EXIT_FAIL


def _numeric_rows(args, registry):
    from .numeric import EvalPoint, eval_rows

    ids = registry.resolve(args.ids)
    try:
        point = EvalPoint.parse(args.point, truncation=args.order, p=args.p, alpha=args.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return eval_rows(ids, [point], args.tol, registry)


def _emit_rows(rows, fmt, out) -> None:
    from .numeric import rows_to_csv

    if fmt == "json":
        print(json.dumps(rows, indent=2), file=out)
    else:
        out.write(rows_to_csv(rows))


def _cmd_eval(args, out, registry) -> int:
    _emit_rows(_numeric_rows(args, registry), args.format, out)
    return EXIT_OK


def _cmd_list(args, out, registry) -> int:
    rows = [{"identity": r.id, "paper_eq": r.paper_eq, "kind": r.kind,
             "symbols": "".join(s for s in "xyzp" if s in r.symbols), "description": r.description}
            for r in registry.records()]
    if args.format == "json":
        print(json.dumps(rows, indent=2), file=out)
    else:
        for row in rows:
            print(f"{row['identity']:<14} {row['paper_eq']:<12} {row['kind']:<11} "
                  f"{row['symbols'] or '-':<5} {row['description']}", file=out)
    return EXIT_OK


COMMANDS = {
    "expand": _cmd_expand,
    "seq": _cmd_seq,
    "transform": _cmd_transform,
    "verify": _cmd_verify,
    "eval": _cmd_eval,
    "accel": _cmd_eval,
    "list": _cmd_list,
}


def main(argv: Sequence[str] | None = None, registry: Registry | None = None,
         out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if registry is None and args.command in ("verify", "eval", "accel", "list"):
        from .catalog import register_all

        registry = register_all()
    try:
        return COMMANDS[args.command](args, out, registry)
    except UnknownIdentityError as exc:
        print(f"error: unknown identity id(s): {exc.args[0]}", file=err)
        return EXIT_USAGE
    except (UsageError, SeriesDomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except ContractViolation as exc:
        print(f"internal contract violation: {exc}", file=err)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
