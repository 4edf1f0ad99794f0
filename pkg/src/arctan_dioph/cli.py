"""Command line front end.

Exit codes: 0 success, 1 identity does not hold (``verify``) or solver and
search disagree (``oracle``), 2 usage error, 3 ``gcd(l, k^2+1) != 1``,
4 factorization ran out of effort.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from . import __version__
from .arith import EffortLimits, divisor_count, divisors, factorize
from .catalog import (
    IdentityRecord,
    classic_listing,
    family_templates,
    render_identity,
    sweep,
    write_catalog,
)
from .errors import (
    CatalogError,
    FactorizationIncomplete,
    InvalidK,
    InvalidL,
    NotCoprime,
)
from .oracle import SearchBound, brute_force_solutions, extremal_bound, verify_exact
from .solver import make_instance, solve_all

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_NOT_COPRIME = 3
EXIT_INCOMPLETE = 4

CSV_FIELDS = ("k", "l", "d", "x", "y", "n", "verified")


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="arctan-dioph",
        description="Solve arctan(1/x) + arctan(l/y) = arctan(1/k) over the positive integers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    effort = _Parser(add_help=False)
    group = effort.add_argument_group("factorization effort")
    group.add_argument("--max-iterations", type=_natural, default=None)
    group.add_argument(
        "--time-budget-ms",
        type=_natural,
        default=None,
        help="overrides ARCTAN_DIOPH_EFFORT_MS (default 30000)",
    )

    def fmt(p, choices):
        p.add_argument(
            "--format",
            choices=choices,
            default=None,
            help="default: plain on a terminal, json otherwise",
        )

    p = sub.add_parser("solve", parents=[effort], help="list every solution for (k, l)")
    p.add_argument("--k", type=_natural, required=True)
    p.add_argument("--l", type=_natural, required=True)
    fmt(p, ("plain", "json", "latex", "csv"))
    p.add_argument("--out", default=None, help="write to this file instead of stdout")

    p = sub.add_parser("verify", help="check one candidate identity exactly")
    for name in ("x", "y", "k", "l"):
        p.add_argument(f"--{name}", type=_natural, required=True)
    fmt(p, ("plain", "json"))

    p = sub.add_parser("oracle", parents=[effort], help="compare the solver with brute-force search")
    p.add_argument("--k", type=_natural, required=True)
    p.add_argument("--l", type=_natural, required=True)
    p.add_argument("--max-x", type=_natural, default=None)
    p.add_argument("--max-y", type=_natural, default=None)
    p.add_argument(
        "--unfiltered",
        action="store_true",
        help="list raw search hits, ignoring gcd(l, y) = 1 (outside the solved problem)",
    )
    fmt(p, ("plain", "json"))

    p = sub.add_parser("sweep", parents=[effort], help="write a catalog for ranges of k and l")
    for name in ("k-min", "k-max", "l-min", "l-max"):
        p.add_argument(f"--{name}", type=_natural, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--append", action="store_true")

    p = sub.add_parser("listing", help="print the classic listing of identities")
    fmt(p, ("plain", "json", "latex", "csv"))
    p.add_argument("--templates", action="store_true", help="also print the two symbolic families")

    p = sub.add_parser("factor", parents=[effort], help="factor n and list its divisors")
    p.add_argument("--n", type=_natural, required=True)
    fmt(p, ("plain", "json"))
    return parser


def _limits(args) -> EffortLimits:
    overrides = {}
    if getattr(args, "max_iterations", None) is not None:
        overrides["max_iterations"] = args.max_iterations
    if getattr(args, "time_budget_ms", None) is not None:
        overrides["time_budget_s"] = args.time_budget_ms / 1000.0
    try:
        return EffortLimits.from_env(**overrides)
    except ValueError as exc:
        raise UsageError(str(exc))


def _format(args, stream) -> str:
    if args.format:
        return args.format
    isatty = getattr(stream, "isatty", None)
    return "plain" if isatty and isatty() else "json"


def _render_records(records, style: str) -> str:
    if style == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for rec in records:
            row = rec.to_dict()
            writer.writerow([str(row[f]).lower() if f == "verified" else row[f] for f in CSV_FIELDS])
        return buf.getvalue()
    return "".join(render_identity(rec, style) + "\n" for rec in records)


@contextmanager
def _output(path, stdout):
    if path is None:
        yield stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _cmd_solve(args, out, err) -> int:
    inst = make_instance(args.k, args.l)
    sols = solve_all(inst, _limits(args))
    records = [IdentityRecord.from_solution(inst, s) for s in sols]
    with _output(args.out, out) as stream:
        style = _format(args, stream)
        stream.write(_render_records(records, style))
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    report = verify_exact(args.x, args.y, args.k, args.l)
    if _format(args, out) == "json":
        out.write(json.dumps(report.as_dict()) + "\n")
    else:
        for key, value in report.as_dict().items():
            out.write(f"{key}: {'-' if value is None else str(value).lower()}\n")
    return EXIT_OK if report.holds else EXIT_FALSE


def _cmd_oracle(args, out, err) -> int:
    style = _format(args, out)
    if args.unfiltered:
        if args.max_x is None or args.max_y is None:
            raise UsageError("--unfiltered needs explicit --max-x and --max-y")
        pairs = brute_force_solutions(args.k, args.l, SearchBound(args.max_x, args.max_y), False)
        if style == "json":
            out.write(json.dumps({"k": args.k, "l": args.l, "unfiltered": True, "pairs": pairs}) + "\n")
        else:
            out.write("# raw search hits, gcd(l, y) = 1 not enforced\n")
            out.writelines(f"{x} {y}\n" for x, y in pairs)
        return EXIT_OK

    inst = make_instance(args.k, args.l)
    full = extremal_bound(inst)
    bound = SearchBound(args.max_x or full.max_x, args.max_y or full.max_y)
    solved = [
        p for p in solve_all(inst, _limits(args)).pairs() if p[0] <= bound.max_x and p[1] <= bound.max_y
    ]
    searched = brute_force_solutions(inst.k, inst.l, bound)
    agree = sorted(solved) == sorted(searched)
    if style == "json":
        doc = {
            "k": inst.k,
            "l": inst.l,
            "max_x": bound.max_x,
            "max_y": bound.max_y,
            "agree": agree,
            "solver": solved,
            "search": searched,
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"k={inst.k} l={inst.l} bound={bound.max_x}x{bound.max_y}\n")
        out.write(f"solver: {len(solved)} pairs, search: {len(searched)} pairs\n")
        out.write(f"agree: {str(agree).lower()}\n")
    return EXIT_OK if agree else EXIT_FALSE


def _cmd_sweep(args, out, err) -> int:
    result = sweep((args.k_min, args.k_max), (args.l_min, args.l_max), _limits(args))
    written = write_catalog(args.out, result.records, append=args.append)
    err.write(f"wrote {written} records to {args.out}; {result.summary()}\n")
    for k, l, why in result.incomplete:
        err.write(f"  incomplete k={k} l={l}: {why}\n")
    return EXIT_OK


def _cmd_listing(args, out, err) -> int:
    style = _format(args, out)
    if args.templates and style == "plain":
        out.writelines(f"# {t}\n" for t in family_templates())
    records = classic_listing()
    out.write(_render_records(records, style))
    if style == "plain":
        for rec in records:
            for note in rec.annotations:
                err.write(f"note ({render_identity(rec)}): {note}\n")
    return EXIT_OK


def _cmd_factor(args, out, err) -> int:
    f = factorize(args.n, _limits(args))
    divs = divisors(f)
    if _format(args, out) == "json":
        doc = {
            "n": f.n,
            "factors": [list(pe) for pe in f.factors],
            "divisor_count": divisor_count(f),
            "divisors": divs,
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"{f.n} = {f}\n")
        out.write(f"divisors ({divisor_count(f)}): {' '.join(map(str, divs))}\n")
    return EXIT_OK


COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "sweep": _cmd_sweep,
    "listing": _cmd_listing,
    "factor": _cmd_factor,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip() + "\narctan-dioph: error: a command is required")
        return COMMANDS[args.command](args, out, err)
    except SystemExit as exc:  # --help / --version
        return exc.code or EXIT_OK
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (InvalidK, InvalidL) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NotCoprime as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NOT_COPRIME
    except FactorizationIncomplete as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INCOMPLETE
    except (CatalogError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
