# app/cli.py
"""
Command-line entry point: count, series, enumerate, convert and verify subcommands.

Results go to stdout, logs and JSON error records to stderr. Exit status: 0 on success,
1 when a verification fails, 2 on bad usage or invalid input.
"""
import argparse
import json
import logging
import sys
from typing import Callable, Dict, Iterable, List, Optional

import pandas as pd

from config import get_settings
from src import (
    BinaryMatrix,
    PermPair,
    VerificationRunner,
    bessel_tree_series,
    count_naf,
    egf_gamma_free,
    enumerate_callan,
    enumerate_complete_naf,
    enumerate_gamma_free,
    enumerate_increasing_forests,
    enumerate_no_common_rise,
    enumerate_point_forests,
    matrix_to_pair,
    omega_series,
    pair_to_matrix,
    parse_matrix,
    phi,
    phi_inverse,
    pi,
    pi_inverse,
    poly_bernoulli,
    render_matrix,
    stirling2,
    tau_counts,
)
from src.core import (
    InvalidObjectError,
    PermPairRecord,
    callan_to_record,
    forest_to_records,
    parse_callan_json,
    parse_forest_json,
    permpair_to_record,
)
from src.enumeration import count_no_common_rise_by_eta

logger = logging.getLogger(__name__)

FAMILIES = ("gamma-free", "callan", "increasing-forests", "point-forests", "complete-naf", "no-common-rise")
DIRECTIONS = (
    "matrix-to-callan",
    "callan-to-matrix",
    "perm-to-forest",
    "forest-to-perm",
    "matrix-to-permpair",
    "permpair-to-matrix",
)


class UsageError(Exception):
    """Raised by the parser instead of printing usage and exiting."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _error_record(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


# ---------------------------------------------------------------------- #
# Output helpers
# ---------------------------------------------------------------------- #
def _emit_records(records: Iterable[dict]) -> None:
    for record in records:
        print(json.dumps(record, sort_keys=True))


def _emit_frame(df: pd.DataFrame) -> None:
    print(df.to_string())


def _read_input(args) -> str:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _parse_ints(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as e:
        raise InvalidObjectError(f"Expected a list of integers: {e}") from e


def _parse_pair(text: str, fmt: str) -> PermPair:
    """A JSON record in records mode, otherwise two lines of integers: alpha then beta."""
    if fmt == "records":
        try:
            record = PermPairRecord.model_validate_json(text)
        except ValueError as e:
            raise InvalidObjectError(f"Malformed permutation pair record: {e}") from e
        return PermPair(record.alpha, record.beta)
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        return PermPair((), ())
    if len(lines) != 2:
        raise InvalidObjectError(f"A permutation pair is two lines of integers, got {len(lines)} lines")
    return PermPair(_parse_ints(lines[0]), _parse_ints(lines[1]))


# ---------------------------------------------------------------------- #
# count
# ---------------------------------------------------------------------- #
def cmd_count(args) -> int:
    if args.what == "table":
        grid = {k: [poly_bernoulli(n, k) for n in range(args.max_n + 1)] for k in range(args.max_k + 1)}
        df = pd.DataFrame(grid, index=pd.RangeIndex(args.max_n + 1, name="n"))
        df.columns.name = "k"
        if args.format == "records":
            _emit_records({"n": n, "k": k, "value": int(df.at[n, k])} for n in df.index for k in df.columns)
        else:
            _emit_frame(df)
        return 0

    functions: Dict[str, Callable[[int, int], int]] = {
        "poly-bernoulli": poly_bernoulli,
        "naf": count_naf,
        "stirling": stirling2,
    }
    value = functions[args.what](args.n, args.k)
    if args.format == "records":
        _emit_records([{"what": args.what, "n": args.n, "k": args.k, "value": value}])
    else:
        print(value)
    return 0


# ---------------------------------------------------------------------- #
# series
# ---------------------------------------------------------------------- #
def cmd_series(args) -> int:
    if args.which == "gamma-free":
        table = egf_gamma_free(args.max_n, args.max_k)
        if args.markers:
            rows = [
                {"n": n, "k": k, "r_t": t, "r_e": a, "c_e": b, "count": count}
                for n, k in table.indices()
                for (a, b, t), count in sorted(table.refined(n, k).items())
            ]
            if args.format == "records":
                _emit_records(rows)
            else:
                _emit_frame(pd.DataFrame(rows, columns=["n", "k", "r_t", "r_e", "c_e", "count"]))
            return 0
        grid = {k: [table.evaluate(n, k) for n in range(args.max_n + 1)] for k in range(args.max_k + 1)}
        df = pd.DataFrame(grid, index=pd.RangeIndex(args.max_n + 1, name="n"))
        df.columns.name = "k"
        if args.format == "records":
            _emit_records({"n": n, "k": k, "value": int(df.at[n, k])} for n in df.index for k in df.columns)
        else:
            _emit_frame(df)
        return 0

    if args.which == "omega":
        data = {"n": list(range(args.max_n + 1)), "omega": omega_series(args.max_n).counts()}
        if args.check:
            data["tau"] = tau_counts(args.max_n)
            data["no_common_rise"] = [sum(count_no_common_rise_by_eta(n).values()) for n in data["n"]]
    else:
        data = {"n": list(range(args.max_n + 1)), "b": bessel_tree_series(args.max_n).counts(offset=1)}

    df = pd.DataFrame(data).set_index("n")
    if args.format == "records":
        _emit_records({"n": int(n), **{c: int(v) for c, v in row.items()}} for n, row in df.iterrows())
    else:
        _emit_frame(df)
    return 0


# ---------------------------------------------------------------------- #
# enumerate
# ---------------------------------------------------------------------- #
def _require(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"enumerate {args.family} needs {' '.join(missing)}")


def cmd_enumerate(args) -> int:
    family = args.family
    if family == "gamma-free":
        _require(args, "n", "k")
        items = enumerate_gamma_free(args.n, args.k, pruned=not args.naive)
        as_text, as_record = render_matrix, lambda m: {"n": m.n, "k": m.k, "matrix": render_matrix(m)}
    elif family == "callan":
        _require(args, "n", "k")
        items = enumerate_callan(args.n, args.k)
        as_text = lambda s: " ".join(repr(p) for p in s) or "()"  # noqa: E731
        as_record = lambda s: callan_to_record(s).model_dump()  # noqa: E731
    elif family == "increasing-forests":
        _require(args, "n")
        items = enumerate_increasing_forests(range(1, args.n + 1))
        as_text = lambda f: f.render() or "()"  # noqa: E731
        as_record = lambda f: {"forest": [r.model_dump() for r in forest_to_records(f)]}  # noqa: E731
    elif family == "point-forests":
        _require(args, "eta")
        items = enumerate_point_forests(_parse_ints(args.eta), args.kind)
        as_text = lambda f: f.render() or "()"  # noqa: E731
        as_record = lambda f: {"forest": [r.model_dump() for r in forest_to_records(f)]}  # noqa: E731
    elif family == "complete-naf":
        _require(args, "n")
        items = enumerate_complete_naf(args.n)
        as_text, as_record = render_matrix, lambda m: {"n": m.n, "k": m.k, "matrix": render_matrix(m)}
    else:
        _require(args, "n")
        items = enumerate_no_common_rise(args.n)
        as_text = lambda p: f"{' '.join(map(str, p.alpha))} / {' '.join(map(str, p.beta))}"  # noqa: E731
        as_record = lambda p: permpair_to_record(p).model_dump()  # noqa: E731

    if args.count_only:
        count = sum(1 for _ in items)
        if args.format == "records":
            _emit_records([{"family": family, "count": count}])
        else:
            print(count)
        return 0

    if args.format == "records":
        _emit_records(as_record(x) for x in items)
    else:
        # matrices are multi-line, so blocks are separated by blank lines
        separator = "\n\n" if family in ("gamma-free", "complete-naf") else "\n"
        print(separator.join(as_text(x) for x in items))
    return 0


# ---------------------------------------------------------------------- #
# convert
# ---------------------------------------------------------------------- #
def _print_matrix(m: BinaryMatrix, fmt: str) -> None:
    if fmt == "records":
        _emit_records([{"n": m.n, "k": m.k, "matrix": render_matrix(m)}])
    else:
        print(render_matrix(m))


def cmd_convert(args) -> int:
    text = _read_input(args)
    direction = args.direction

    if direction == "matrix-to-callan":
        s = phi(parse_matrix(text, args.n, args.k))
        if args.format == "records":
            print(callan_to_record(s).model_dump_json())
        else:
            print(" ".join(repr(p) for p in s) or "()")
    elif direction == "callan-to-matrix":
        s = parse_callan_json(text, args.n, args.k)
        _print_matrix(phi_inverse(s, s.n, s.k), args.format)
    elif direction == "perm-to-forest":
        f = pi_inverse(_parse_ints(text))
        if args.format == "records":
            print(json.dumps([r.model_dump() for r in forest_to_records(f)]))
        else:
            print(f.render())
    elif direction == "forest-to-perm":
        s = pi(parse_forest_json(text))
        print(json.dumps(list(s)) if args.format == "records" else " ".join(map(str, s)))
    elif direction == "matrix-to-permpair":
        p = matrix_to_pair(parse_matrix(text, args.n, args.k))
        if args.format == "records":
            print(permpair_to_record(p).model_dump_json())
        else:
            print(" ".join(map(str, p.alpha)))
            print(" ".join(map(str, p.beta)))
    else:
        _print_matrix(pair_to_matrix(_parse_pair(text, args.format)), args.format)
    return 0


# ---------------------------------------------------------------------- #
# verify
# ---------------------------------------------------------------------- #
def cmd_verify(args) -> int:
    runner = VerificationRunner()
    target = runner.target(args.target)
    params = {p: getattr(args, p) for p in target.params}
    missing = [f"--{p.replace('_', '-')}" for p, v in params.items() if v is None]
    if missing:
        raise UsageError(f"verify {args.target} needs {' '.join(missing)}")

    report = runner.run(args.target, **params)
    print(report.to_json() if args.format == "records" else report.render())
    if not report.passed:
        _error_record("VerificationFailed", report.summary)
        return 1
    return 0


# ---------------------------------------------------------------------- #
# Parser
# ---------------------------------------------------------------------- #
def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = _Parser(prog="polybernoulli", description=f"{settings.APP_NAME} {settings.APP_VERSION}")
    parser.add_argument("--format", choices=("table", "records"), default=settings.OUTPUT_FORMAT,
                        help="Human tables or one JSON record per line")
    parser.add_argument("--file", default=None, help="Read convert input from this file instead of stdin")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    count = sub.add_parser("count", help="Exact counting formulas")
    count.add_argument("what", choices=("poly-bernoulli", "naf", "stirling", "table"))
    count.add_argument("--n", type=int, default=0)
    count.add_argument("--k", type=int, default=0)
    count.add_argument("--max-n", type=int, default=5)
    count.add_argument("--max-k", type=int, default=5)
    count.set_defaults(handler=cmd_count)

    series = sub.add_parser("series", help="Truncated generating functions")
    series.add_argument("which", choices=("gamma-free", "omega", "bessel"))
    series.add_argument("--max-n", type=int, required=True)
    series.add_argument("--max-k", type=int, default=None)
    series.add_argument("--markers", action="store_true", help="Marker-refined coefficients (gamma-free)")
    series.add_argument("--check", action="store_true", help="Add enumerated counts beside ω (omega)")
    series.set_defaults(handler=cmd_series)

    enum = sub.add_parser("enumerate", help="Exhaustive generators")
    enum.add_argument("family", choices=FAMILIES)
    enum.add_argument("--n", type=int, default=None)
    enum.add_argument("--k", type=int, default=None)
    enum.add_argument("--eta", default=None, help="Permutation such as 3,1,2 (point-forests)")
    enum.add_argument("--kind", choices=("properly-labeled", "leftmost-valid"), default="leftmost-valid")
    enum.add_argument("--naive", action="store_true", help="Filter all 2^(nk) matrices (gamma-free)")
    enum.add_argument("--count-only", action="store_true")
    enum.set_defaults(handler=cmd_enumerate)

    conv = sub.add_parser("convert", help="Apply a bijection to one object")
    conv.add_argument("direction", choices=DIRECTIONS)
    conv.add_argument("--n", type=int, default=None)
    conv.add_argument("--k", type=int, default=None)
    conv.set_defaults(handler=cmd_convert)

    targets = VerificationRunner().targets
    ver = sub.add_parser(
        "verify",
        help="Exhaustive cross-checks",
        epilog="targets:\n" + "\n".join(f"  {name}: {t.description}" for name, t in sorted(targets.items())),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ver.add_argument("target", choices=sorted(targets))
    ver.add_argument("--n", type=int, default=None)
    ver.add_argument("--k", type=int, default=None)
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument("--max-k", type=int, default=None)
    ver.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        stream=sys.stderr,
        level=get_settings().LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "series" and args.which == "gamma-free" and args.max_k is None:
            raise UsageError("series gamma-free needs --max-k")
        return args.handler(args)
    except UsageError as e:
        _error_record("UsageError", str(e))
        return 2
    except ValueError as e:
        # domain errors are all ValueErrors
        logger.debug("Rejected input", exc_info=True)
        _error_record(type(e).__name__, str(e))
        return 2
    except OSError as e:
        _error_record(type(e).__name__, str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
