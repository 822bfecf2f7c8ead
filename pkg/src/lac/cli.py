"""Command-line front end: count, enumerate, matrix, rank, unrank, verify.

Exit codes: 0 success, 1 domain error (invalid selection, rank out of range,
verification failure), 2 usage error (bad arguments, oversized grids,
inconsistent permutation length).
"""

import argparse
import csv
import itertools
import json
import os
import sys
from dataclasses import asdict, dataclass

from . import enumeration, oracle
from .core import Alphabet, Mode, Selection
from .counting import family_count
from .errors import (
    CapExceeded,
    InvalidSelection,
    PermutationLengthMismatch,
    RankOutOfRange,
)
from .tensor import DEFAULT_CELL_CAP, PLACEHOLDER, build_tensor, matrix_rows

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


@dataclass
class OutputRecord:
    """Machine-readable result shape shared by the reporting subcommands."""

    mode: str
    n: int
    p: int
    count: str
    items: list[str] | None = None
    matrix: list[str] | None = None

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, compact separators, absent fields omitted.

        Counts travel as decimal strings so arbitrary precision survives any
        consumer.  Re-encoding a parsed record with the same settings yields
        byte-identical text.
        """
        payload = {k: v for k, v in asdict(self).items() if v is not None}
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive_int(text: str) -> int:
    value = _nonnegative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


MODE_NAMES = [m.value for m in Mode]


def _add_common(sub, with_p=True, with_alphabet=True, with_format=True):
    sub.add_argument(
        "--mode", required=True, choices=MODE_NAMES, help="selection family"
    )
    sub.add_argument(
        "--n", required=True, type=_nonnegative_int, help="number of symbols"
    )
    if with_p:
        sub.add_argument(
            "--p",
            type=_nonnegative_int,
            default=None,
            help="selection length (defaults to --n for mode permutation)",
        )
    if with_alphabet:
        sub.add_argument(
            "--alphabet",
            default=None,
            help="comma-separated symbols; defaults to a,b,c,... for n <= 26,"
            " x0,x1,... beyond",
        )
    if with_format:
        sub.add_argument(
            "--format",
            choices=["text", "json", "csv"],
            default="text",
            help="output format",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lac",
        description="Exact counting, lazy enumeration, grid views, and"
        " rank/unrank for lists, arrangements, combinations, and permutations.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("count", help="closed-form family size")
    _add_common(sub, with_alphabet=False)
    sub.set_defaults(handler=cmd_count)

    sub = commands.add_parser(
        "enumerate", help="stream the family in lexicographic order"
    )
    _add_common(sub)
    sub.add_argument(
        "--limit",
        type=_nonnegative_int,
        default=1000,
        help="stop after this many selections; 0 means unlimited",
    )
    sub.set_defaults(handler=cmd_enumerate)

    sub = commands.add_parser("matrix", help="render the pairwise (p=2) grid")
    _add_common(sub, with_p=False)
    sub.add_argument(
        "--cap",
        type=_positive_int,
        default=DEFAULT_CELL_CAP,
        help="largest cell count the grid may materialize",
    )
    sub.set_defaults(handler=cmd_matrix)

    sub = commands.add_parser(
        "rank", help="position of a selection in its family's stream"
    )
    _add_common(sub, with_format=False)
    sub.add_argument("selection", help="selection text, e.g. ab or a,b")
    sub.set_defaults(handler=cmd_rank)

    sub = commands.add_parser("unrank", help="selection at a given position")
    _add_common(sub, with_format=False)
    sub.add_argument("rank", type=_nonnegative_int, help="0-based position")
    sub.set_defaults(handler=cmd_unrank)

    sub = commands.add_parser(
        "verify",
        help="check the production streams against the brute-force witness",
    )
    sub.add_argument("--max-n", type=_nonnegative_int, default=7)
    sub.add_argument("--max-p", type=_nonnegative_int, default=4)
    sub.set_defaults(handler=cmd_verify)

    return parser


def _resolve_p(args) -> int:
    if args.p is not None:
        return args.p
    if args.mode == Mode.PERMUTATION.value:
        return args.n
    raise ValueError(f"--p is required for mode {args.mode}")


def _resolve_alphabet(args) -> Alphabet:
    raw = getattr(args, "alphabet", None)
    if raw is None:
        return Alphabet.default(args.n)
    symbols = raw.split(",")
    if len(symbols) != args.n:
        raise ValueError(
            f"--alphabet has {len(symbols)} symbols but --n is {args.n}"
        )
    return Alphabet(symbols)


def _emit_csv(rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerows(rows)


def cmd_count(args) -> int:
    mode = Mode(args.mode)
    p = _resolve_p(args)
    count = family_count(args.n, p, mode)
    record = OutputRecord(mode=mode.value, n=args.n, p=p, count=str(count))
    if args.format == "json":
        print(record.to_json())
    elif args.format == "csv":
        _emit_csv([["mode", "n", "p", "count"], [mode.value, args.n, p, str(count)]])
    else:
        print(count)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    mode = Mode(args.mode)
    p = _resolve_p(args)
    alphabet = _resolve_alphabet(args)
    count = family_count(args.n, p, mode)
    stream = enumeration.enumerate_selections(alphabet, p, mode)
    limited = stream if args.limit == 0 else itertools.islice(stream, args.limit)
    if args.format == "json":
        items = [s.word(alphabet) for s in limited]
        record = OutputRecord(
            mode=mode.value, n=args.n, p=p, count=str(count), items=items
        )
        print(record.to_json())
    elif args.format == "csv":
        _emit_csv([s.word(alphabet)] for s in limited)
    else:
        for s in limited:
            print(s.word(alphabet))
    return EXIT_OK


def cmd_matrix(args) -> int:
    mode = Mode(args.mode)
    alphabet = _resolve_alphabet(args)
    tensor = build_tensor(alphabet, 2, mode, cap=args.cap)
    rows = matrix_rows(tensor)
    if args.format == "json":
        record = OutputRecord(
            mode=mode.value,
            n=args.n,
            p=2,
            count=str(tensor.filled_count),
            matrix=rows,
        )
        print(record.to_json())
    elif args.format == "csv":
        n = len(alphabet)
        _emit_csv(
            [
                alphabet.word((i, j)) if tensor.is_filled((i, j)) else PLACEHOLDER
                for j in range(n)
            ]
            for i in range(n)
        )
    else:
        for row in rows:
            print(row)
    return EXIT_OK


def cmd_rank(args) -> int:
    mode = Mode(args.mode)
    p = _resolve_p(args)
    alphabet = _resolve_alphabet(args)
    selection = Selection(alphabet.parse_word(args.selection), mode)
    if selection.p != p:
        raise InvalidSelection(
            f"invalid selection: {args.selection!r} has {selection.p} symbols"
            f" but --p is {p}"
        )
    print(enumeration.rank(selection, alphabet))
    return EXIT_OK


def cmd_unrank(args) -> int:
    mode = Mode(args.mode)
    p = _resolve_p(args)
    alphabet = _resolve_alphabet(args)
    selection = enumeration.unrank(args.rank, alphabet, p, mode)
    print(selection.word(alphabet))
    return EXIT_OK


def _color_enabled(stream) -> bool:
    return (
        os.environ.get("NO_COLOR") is None
        and hasattr(stream, "isatty")
        and stream.isatty()
    )


def _styled(text: str, code: str, stream) -> str:
    if _color_enabled(stream):
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def run_verify(max_n: int, max_p: int):
    """Compare production streams with the brute-force witness over the whole
    (n, p, mode) grid.

    Returns (per_mode_cases, failure) where per_mode_cases maps mode name to
    its case count and failure is None or a message naming the first
    divergence.  Permutation cells with p != n count as cases in which both
    sides must refuse with the same length-mismatch error.
    """
    per_mode = {m.value: 0 for m in Mode}
    for n in range(max_n + 1):
        alphabet = Alphabet.default(n)
        for p in range(max_p + 1):
            for mode in Mode:
                per_mode[mode.value] += 1
                where = f"mode={mode.value} n={n} p={p}"
                if mode is Mode.PERMUTATION and p != n:
                    for label, op in (
                        ("enumerate", enumeration.enumerate_selections),
                        ("oracle", oracle.oracle_enumerate),
                    ):
                        try:
                            op(alphabet, p, mode)
                        except PermutationLengthMismatch:
                            continue
                        return per_mode, (
                            f"{where}: {label} accepted a length"
                            " mismatch instead of refusing"
                        )
                    continue
                fast = enumeration.enumerate_selections(alphabet, p, mode)
                slow = oracle.oracle_enumerate(alphabet, p, mode)
                seen = 0
                for a, b in itertools.zip_longest(fast, slow):
                    if a != b:
                        fast_word = "end of stream" if a is None else a.word(alphabet)
                        slow_word = "end of stream" if b is None else b.word(alphabet)
                        return per_mode, (
                            f"{where} rank={seen}: enumerate gave"
                            f" {fast_word}, oracle gave {slow_word}"
                        )
                    seen += 1
                expected = family_count(n, p, mode)
                if seen != expected:
                    return per_mode, (
                        f"{where}: stream length {seen} but closed-form"
                        f" count is {expected}"
                    )
    return per_mode, None


def cmd_verify(args) -> int:
    per_mode, failure = run_verify(args.max_n, args.max_p)
    if failure is not None:
        print(_styled(f"verify failed: {failure}", "31", sys.stderr), file=sys.stderr)
        return EXIT_DOMAIN
    width = max(len(name) for name in per_mode)
    print(f"{'mode'.ljust(width)}  cases")
    for name, cases in per_mode.items():
        print(f"{name.ljust(width)}  {cases:5d}")
    total = sum(per_mode.values())
    print(_styled(f"all {total} cases ok", "32", sys.stdout))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (CapExceeded, PermutationLengthMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidSelection, RankOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
