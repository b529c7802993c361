"""Command-line front end.

Polynomials appear everywhere in the hex wire format "0x…" (bit i =
coefficient of X^i).  Pair listings stream in the pinned deterministic
order; counts are printed as exact decimal integers.  Exit codes: 0 on
success, 1 on domain errors (bad polynomial, k > n, guarded sizes), 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from itertools import islice
from typing import Iterable, Iterator, TextIO

from .compositions import compositions, count_compositions
from .const_lang import count_words, words_of_length
from .enumeration import PairRecord, count_pairs, count_pairs_sum, enumerate_pairs, oracle_pairs
from .euclid import euclid_trace
from .gf2poly import constant_term, degree, format_poly, gcd, parse_poly
from .oca import are_orthogonal, latin_square, rule_from_poly

FLUSH_EVERY = 1024  # records between stream flushes


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, dispatch one subcommand, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except BrokenPipeError:
        return 0
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ocagen",
        description="Exhaustively generate linear binary orthogonal cellular automata "
                    "(equivalently: coprime equal-degree polynomial pairs over GF(2) "
                    "with unit constant terms).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream all pairs of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="emit at most this many pairs")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--check", action="store_true", help="verify the gcd of every emitted pair")
    p.add_argument("--output", default="-", help="output path (default: stdout)")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("count", help="count the pairs of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--method", choices=("closed", "sum", "oracle"), default="closed")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("oracle", help="brute-force pair listing (guarded)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--output", default="-")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("verify", help="analyze one polynomial pair")
    p.add_argument("--f", required=True, metavar="HEX")
    p.add_argument("--g", required=True, metavar="HEX")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("words", help="valid constant-term words of one length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--output", default="-")
    p.set_defaults(handler=_cmd_words)

    p = sub.add_parser("compositions", help="ordered part sequences summing to n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--output", default="-")
    p.set_defaults(handler=_cmd_compositions)

    p = sub.add_parser("square", help="render the Latin square(s) of linear rules")
    p.add_argument("--poly", required=True, metavar="HEX")
    p.add_argument("--poly2", default=None, metavar="HEX")
    p.add_argument("--check-orthogonal", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default="-")
    p.set_defaults(handler=_cmd_square)

    p = sub.add_parser("bench", help="time a full enumeration without output")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(handler=_cmd_bench)

    return parser


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _checked(records: Iterable[PairRecord], n: int) -> Iterator[PairRecord]:
    for rec in records:
        if gcd(rec.f, rec.g) != 1:
            raise ValueError(f"check failed: gcd({rec.f:#x}, {rec.g:#x}) != 1")
        if degree(rec.f) != n or degree(rec.g) != n:
            raise ValueError(f"check failed: ({rec.f:#x}, {rec.g:#x}) is not of degree {n}")
        yield rec


def _write_pairs(out: TextIO, records: Iterable[PairRecord], fmt: str, n: int, total: int) -> None:
    if fmt == "json":
        out.write('{"degree": %d, "count": %d, "pairs": [' % (n, total))
        for i, rec in enumerate(records):
            out.write('%s{"f": "%#x", "g": "%#x"}' % ("" if i == 0 else ", ", rec.f, rec.g))
            if (i + 1) % FLUSH_EVERY == 0:
                out.flush()
        out.write("]}\n")
        return
    if fmt == "csv":
        out.write("f,g\n")
        template = "%#x,%#x\n"
    else:
        template = "%#x %#x\n"
    for i, rec in enumerate(records):
        out.write(template % (rec.f, rec.g))
        if (i + 1) % FLUSH_EVERY == 0:
            out.flush()


def _require_degree(n: int) -> int:
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    return n


def _cmd_enumerate(args: argparse.Namespace) -> int:
    n = _require_degree(args.degree)
    limit = args.limit
    if limit is not None and limit < 0:
        raise ValueError(f"limit must be nonnegative, got {limit}")
    total = count_pairs(n)
    if limit is not None:
        total = min(total, limit)
    records: Iterable[PairRecord] = enumerate_pairs(n)
    if limit is not None:
        records = islice(records, limit)
    if args.check:
        records = _checked(records, n)
    with _open_out(args.output) as out:
        _write_pairs(out, records, args.format, n, total)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    n = _require_degree(args.degree)
    if args.method == "closed":
        value = count_pairs(n)
    elif args.method == "sum":
        value = count_pairs_sum(n)
    else:
        value = len(oracle_pairs(n))
    print(value)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    n = _require_degree(args.degree)
    pairs = sorted(oracle_pairs(n))
    records = [PairRecord(f, g) for f, g in pairs]
    with _open_out(args.output) as out:
        _write_pairs(out, records, args.format, n, len(records))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    f = parse_poly(args.f)
    g = parse_poly(args.g)
    trace = euclid_trace(f, g)
    deg_f, deg_g = degree(f), degree(g)
    coprime = trace.gcd == 1
    member = (
        coprime
        and deg_f == deg_g
        and deg_f >= 1
        and constant_term(f) == 1
        and constant_term(g) == 1
    )
    if args.format == "json":
        print(json.dumps({
            "f": format_poly(f),
            "g": format_poly(g),
            "degree_f": None if f == 0 else deg_f,
            "degree_g": None if g == 0 else deg_g,
            "constant_term_f": constant_term(f),
            "constant_term_g": constant_term(g),
            "gcd": format_poly(trace.gcd),
            "coprime": coprime,
            "orthogonal_pair": member,
            "euclid_quotients": [format_poly(q) for q in trace.quotients],
        }))
        return 0
    print(f"f: {format_poly(f)} = {format_poly(f, 'symbolic')} "
          f"(degree {deg_f}, constant term {constant_term(f)})")
    print(f"g: {format_poly(g)} = {format_poly(g, 'symbolic')} "
          f"(degree {deg_g}, constant term {constant_term(g)})")
    print(f"gcd: {format_poly(trace.gcd)} = {format_poly(trace.gcd, 'symbolic')}")
    print(f"coprime: {'yes' if coprime else 'no'}")
    print(f"orthogonal pair (equal degree, unit constant terms, coprime): "
          f"{'yes' if member else 'no'}")
    print("euclid quotients: " + " ".join(format_poly(q) for q in trace.quotients))
    return 0


def _cmd_words(args: argparse.Namespace) -> int:
    k = args.length
    if args.count_only:
        print(count_words(k))
        return 0
    with _open_out(args.output) as out:
        for i, word in enumerate(words_of_length(k)):
            out.write(word + "\n")
            if (i + 1) % FLUSH_EVERY == 0:
                out.flush()
    return 0


def _cmd_compositions(args: argparse.Namespace) -> int:
    if args.count_only:
        print(count_compositions(args.n, args.k))
        return 0
    with _open_out(args.output) as out:
        for i, parts in enumerate(compositions(args.n, args.k)):
            out.write(",".join(map(str, parts)) + "\n")
            if (i + 1) % FLUSH_EVERY == 0:
                out.flush()
    return 0


def _render_square(entries: tuple[tuple[int, ...], ...], order: int) -> str:
    width = len(str(order - 1))
    return "\n".join(" ".join(f"{e:>{width}}" for e in row) for row in entries)


def _cmd_square(args: argparse.Namespace) -> int:
    first = latin_square(rule_from_poly(parse_poly(args.poly)))
    second = None
    if args.poly2 is not None:
        second = latin_square(rule_from_poly(parse_poly(args.poly2)))
    if args.check_orthogonal and second is None:
        raise ValueError("--check-orthogonal needs --poly2")
    orthogonal = are_orthogonal(first, second) if args.check_orthogonal else None
    with _open_out(args.output) as out:
        if args.format == "json":
            doc = {"order": first.order, "poly": args.poly,
                   "square": [list(r) for r in first.entries]}
            if second is not None:
                doc["poly2"] = args.poly2
                doc["square2"] = [list(r) for r in second.entries]
            if orthogonal is not None:
                doc["orthogonal"] = orthogonal
            out.write(json.dumps(doc) + "\n")
            return 0
        out.write(_render_square(first.entries, first.order) + "\n")
        if second is not None:
            out.write("\n" + _render_square(second.entries, second.order) + "\n")
        if orthogonal is not None:
            out.write(f"\northogonal: {'yes' if orthogonal else 'no'}\n")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    n = _require_degree(args.degree)
    start = time.perf_counter()
    emitted = sum(1 for _ in enumerate_pairs(n))
    elapsed = time.perf_counter() - start
    rate = emitted / elapsed if elapsed > 0 else float("inf")
    print(f"degree {n}: {emitted} pairs in {elapsed:.3f}s ({rate:,.0f} pairs/s)")
    return 0


if __name__ == "__main__":
    main()
