"""Command-line front end: tables, enumeration, bijection demos, verification.

Four subcommands:

    eulerward table eulerian --nu 2 --s 1 --t 0 --nmax 6
    eulerward enumerate --nu 2 --tvec 0 --n 2
    eulerward bijection 333222111 --nu 3
    eulerward verify --suite all

Exit codes: 0 success, 1 verification failure, 2 usage or invalid input.
Table entries, counts, and statistics are rendered as decimal strings so
consumers never hit 64-bit truncation (tree-shape JSON keeps its small
structural integers as numbers).  Structure and key order are fixed, so
repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from .eulerian import Params, eulerian_table
from .numerics import PolyST
from .stirlingperm import (
    GenStirlingSeq,
    GenStirlingWord,
    ascent_positions,
    count_sequences,
    enumerate_sequences,
    seq_ascent_count,
    validate_sequence,
    validate_word,
    word_from_text,
    word_text,
)
from .trees import (
    distinguished_set,
    forest_distinguished_set,
    forest_to_dot,
    forest_to_json,
    leftmost_internal_set,
    seq_to_forest,
)
from .verify import SUITE_NAMES, run_all, run_suite
from .ward import ward_table

__all__ = ["main", "cmd_table", "cmd_enumerate", "cmd_bijection", "cmd_verify"]

DEFAULT_ENUMERATION_CAP = 1_000_000


def _render(value) -> str:
    if isinstance(value, PolyST):
        return value.render()
    return str(value)


def _trimmed(row) -> list:
    out = list(row)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _parse_tvec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("--tvec wants a comma-separated integer list, got %r" % (text,))


def cmd_table(args) -> int:
    if args.nmax < 0:
        raise ValueError("--nmax must be >= 0")
    p = Params(args.nu, args.s, args.t)
    build = eulerian_table if args.kind == "eulerian" else ward_table
    tri = build(p, args.nmax, args.mode)
    rows = [[_render(v) for v in _trimmed(tri.row(n))] for n in range(args.nmax + 1)]
    if args.format == "csv":
        for n, row in enumerate(rows):
            print(",".join([str(n)] + row))
    else:
        payload = {
            "kind": args.kind,
            "mode": args.mode,
            "nu": str(args.nu),
            "s": str(args.s),
            "t": str(args.t),
            "nmax": str(args.nmax),
            "rows": rows,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _resolve_composition(args, width: int | None = None) -> tuple[int, ...]:
    """Turn --tvec / --s / --t flags into a composition of t into s parts."""
    s_flag = getattr(args, "s", None)
    if args.tvec is not None:
        tvec = _parse_tvec(args.tvec)
        if s_flag is not None and s_flag != len(tvec):
            raise ValueError("--s disagrees with --tvec length")
        if args.t is not None and args.t != sum(tvec):
            raise ValueError("--t disagrees with --tvec sum")
        if width is not None and len(tvec) != width:
            raise ValueError("--tvec has %d parts for %d words" % (len(tvec), width))
        return tvec
    s = s_flag if s_flag is not None else (width if width is not None else 1)
    t = args.t if args.t is not None else 0
    if width is not None and s != width:
        raise ValueError("--s disagrees with the number of words given")
    return (t,) + (0,) * (s - 1)


def cmd_enumerate(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    tvec = _resolve_composition(args)
    p = Params(args.nu, len(tvec), sum(tvec), tvec)
    total = count_sequences(p, args.n)
    if total > args.max_count:
        print(
            "error: %d objects exceed the cap of %d (raise --max-count)" % (total, args.max_count),
            file=sys.stderr,
        )
        return 2
    lines = []
    for seq in enumerate_sequences(p, args.n):
        record = {
            "entries": [word_text(w) for w in seq.entries],
            "ascent_count": str(seq_ascent_count(seq)),
            "ascent_positions": [
                [str(i) for i in sorted(ascent_positions(w))] for w in seq.entries
            ],
        }
        if args.format == "jsonl":
            print(json.dumps(record, sort_keys=True))
        else:
            lines.append(record)
    if args.format == "json":
        print(json.dumps(lines, indent=2, sort_keys=True))
    return 0


def cmd_bijection(args) -> int:
    letters = [word_from_text(text) for text in args.word]
    if args.tvec is None and args.t is None:
        tvec = tuple(word.count(0) for word in letters)
    else:
        tvec = _resolve_composition(args, width=len(letters))
    entries = tuple(
        GenStirlingWord(word, args.nu, ti) for word, ti in zip(letters, tvec)
    )
    for idx, w in enumerate(entries):
        if not validate_word(w):
            raise ValueError("word %d is not a valid order-%d word" % (idx + 1, args.nu))
    seq = GenStirlingSeq(entries)
    if not validate_sequence(seq):
        raise ValueError("the labels across the words must partition 1..n")
    forest = seq_to_forest(seq)
    n, j = seq.n, seq_ascent_count(seq)
    dset = forest_distinguished_set(forest)
    payload = {
        "nu": str(args.nu),
        "tvec": [str(x) for x in tvec],
        "n": str(n),
        "entries": [word_text(w) for w in entries],
        "ascent_count": str(j),
        "ascent_positions": [
            [str(i) for i in sorted(ascent_positions(w))] for w in entries
        ],
        "forest": forest_to_json(forest),
        "leftmost_sets": [
            [str(x) for x in sorted(leftmost_internal_set(tr))] for tr in forest.trees
        ],
        "distinguished_sets": [
            [str(x) for x in sorted(distinguished_set(tr))] for tr in forest.trees
        ],
        "distinguished_union": [str(x) for x in sorted(dset)],
        "statistic": {
            "n_minus_ascents": str(n - j),
            "distinguished_size": str(len(dset)),
            "agree": n - j == len(dset),
        },
        "dot": forest_to_dot(forest),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    if args.suite == "all":
        payload = run_all(args.size_level)
        passed = payload["passed"]
    else:
        report = run_suite(args.suite, args.size_level)
        payload = report.to_json()
        passed = report.passed
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerward",
        description="Generalized Eulerian and Ward number toolkit (exact arithmetic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pt = sub.add_parser("table", help="emit a triangle of numbers or polynomials")
    pt.add_argument("kind", choices=("eulerian", "ward"))
    pt.add_argument("--nu", type=int, required=True, help="order (>= 1)")
    pt.add_argument("--s", type=int, default=1)
    pt.add_argument("--t", type=int, default=0)
    pt.add_argument("--nmax", type=int, required=True)
    pt.add_argument("--format", choices=("json", "csv"), default="json")
    pt.add_argument("--mode", choices=("int", "poly"), default="int")
    pt.set_defaults(handler=cmd_table)

    pe = sub.add_parser("enumerate", help="stream the permutation sequences of size n")
    pe.add_argument("--nu", type=int, required=True)
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--s", type=int, default=None)
    pe.add_argument("--t", type=int, default=None)
    pe.add_argument("--tvec", default=None, help="composition of t, e.g. 2,0,1,0")
    pe.add_argument("--format", choices=("jsonl", "json"), default="jsonl")
    pe.add_argument("--max-count", type=int, default=DEFAULT_ENUMERATION_CAP)
    pe.set_defaults(handler=cmd_enumerate)

    pb = sub.add_parser("bijection", help="map words to increasing trees and back")
    pb.add_argument("word", nargs="+", help="one word per sequence entry; '' for empty")
    pb.add_argument("--nu", type=int, required=True)
    pb.add_argument("--t", type=int, default=None)
    pb.add_argument("--tvec", default=None)
    pb.set_defaults(handler=cmd_bijection)

    pv = sub.add_parser("verify", help="run cross-verification suites")
    pv.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    pv.add_argument("--size-level", choices=("small", "default"), default="default")
    pv.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
