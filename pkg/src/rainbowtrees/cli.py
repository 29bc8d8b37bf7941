"""Command-line surface: formula, canonical, solve, construct, merge, verify.

Exit codes: 0 success or campaign pass, 1 usage or input error, 2 a
counterexample or construction defect was found, 3 a size guard was hit.
Every run echoes its effective configuration as a `#`-prefixed line, which
is a legal comment in the coloring file format.
"""

from __future__ import annotations

import argparse
import sys

from .canonical import extremal_partition, generate_canonical
from .coloring import (
    format_coloring,
    merge_colors,
    read_coloring,
    validate,
    write_coloring,
    write_partition,
)
from .constructive import partition_complete
from .errors import ConstructionDefect, FileFormatError, SizeGuardError
from .formula import f_of_r, partition_number
from .solver import solve
from .verify import (
    campaign_constructive,
    campaign_cutedge,
    campaign_monotonicity,
    campaign_worstcase,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_GUARD = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="rainbowtrees", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("formula", help="print the threshold t and ceil((n-t)/2)")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("canonical", help="generate the extremal coloring of K_n")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("-o", "--output", help="coloring file (default: stdout)")
    p.add_argument("--partition", help="also write the optimal partition here")
    p.add_argument("--fill", type=int, default=None, help="override the step-3 fill color")

    p = sub.add_parser("solve", help="exact minimum rainbow tree partition of a coloring file")
    p.add_argument("file")
    p.add_argument("--partition", help="write one optimal partition here")
    p.add_argument("--max-n", type=int, default=14, help="solver size guard")

    p = sub.add_parser("construct", help="run the polynomial constructive partition")
    p.add_argument("file")
    p.add_argument("--partition", help="write the constructed partition here")

    p = sub.add_parser("merge", help="merge color FROM into color TO and renumber")
    p.add_argument("file")
    p.add_argument("src", type=int, metavar="from")
    p.add_argument("dst", type=int, metavar="to")
    p.add_argument("-o", "--output", help="output coloring file (default: stdout)")

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument(
        "campaign",
        choices=["worstcase", "monotonicity", "cutedge", "constructive"],
    )
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="write the full report to this file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _echo_config(args: argparse.Namespace) -> None:
    fields = " ".join(
        f"{k}={v}" for k, v in sorted(vars(args).items()) if k != "command" and v is not None
    )
    print(f"# config {args.command} {fields}".rstrip())


def _load(path: str):
    c = read_coloring(path)
    bad = validate(c)
    if bad:
        raise FileFormatError(
            f"{path}: invalid coloring: " + ", ".join(str(v) for v in bad)
        )
    return c


def _cmd_formula(args) -> int:
    value = partition_number(args.n, args.r)
    t = f_of_r(args.r) if args.r >= 2 else 0
    print(f"t={t} value={value}")
    return EXIT_OK


def _cmd_canonical(args) -> int:
    c, layout = generate_canonical(args.n, args.r, fill_color=args.fill)
    print(f"# t={layout.t} trees={partition_number(args.n, args.r)}")
    if args.output:
        write_coloring(c, args.output)
    else:
        sys.stdout.write(format_coloring(c))
    if args.partition:
        write_partition(extremal_partition(c, layout), args.partition)
    return EXIT_OK


def _cmd_solve(args) -> int:
    c = _load(args.file)
    result = solve(c, max_n=args.max_n)
    print(f"count={result.count}")
    if args.partition:
        write_partition(result.partition, args.partition)
    return EXIT_OK


def _cmd_construct(args) -> int:
    c = _load(args.file)
    partition = partition_complete(c)
    print(f"count={partition.count} bound={partition_number(c.n, c.r)}")
    if args.partition:
        write_partition(partition, args.partition)
    return EXIT_OK


def _cmd_merge(args) -> int:
    c = _load(args.file)
    merged = merge_colors(c, args.src, args.dst)
    if args.output:
        write_coloring(merged, args.output)
    else:
        sys.stdout.write(format_coloring(merged))
    return EXIT_OK


def _cmd_verify(args) -> int:
    seed = args.seed
    if args.campaign == "worstcase":
        report = campaign_worstcase(
            max_n=args.max_n or 6,
            samples_per_cell=100 if args.samples is None else args.samples,
            seed=seed,
        )
    elif args.campaign == "monotonicity":
        report = campaign_monotonicity(
            trials=1000 if args.samples is None else args.samples, seed=seed
        )
    elif args.campaign == "cutedge":
        report = campaign_cutedge(max_n=args.max_n or 6)
    else:
        report = campaign_constructive(
            max_n=args.max_n or 8,
            samples=100 if args.samples is None else args.samples,
            seed=seed,
        )
    body = report.to_json() if args.format == "json" else report.to_text()
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(body)
        print(f"# report written to {args.report}")
        print(f"result {'PASS' if report.passed else 'FAIL'}")
    else:
        sys.stdout.write(body)
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


_COMMANDS = {
    "formula": _cmd_formula,
    "canonical": _cmd_canonical,
    "solve": _cmd_solve,
    "construct": _cmd_construct,
    "merge": _cmd_merge,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _echo_config(args)
    try:
        return _COMMANDS[args.command](args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ConstructionDefect as exc:
        print(f"defect: {exc}", file=sys.stderr)
        if exc.instance_text:
            sys.stderr.write(exc.instance_text)
        return EXIT_COUNTEREXAMPLE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
