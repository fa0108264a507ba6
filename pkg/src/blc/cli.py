"""Command line interface.

One executable, nine subcommands:

    count          exact count of one size class
    table          CSV of counts over a size range
    unrank         the k-th term of a size class
    rank           position of a given term in its class
    sample         uniform (optionally typable-only) terms
    typecheck      principal simple type of a term
    count-typable  census of simply typable terms at one size
    asymptotics    growth-constant report as JSON
    convergence    CSV of scaled counts approaching the growth constant

Results go to stdout; diagnostics, and run metadata in plain mode, go
to stderr.  Exit codes: 0 success, 2 usage or malformed input, 3 empty
class / rank out of range / free index above bound, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict

from . import __version__, counting
from .asymptotics import constants, convergence_series
from .enumeration import (
    AttemptsExhausted,
    NoTerms,
    OutOfRange,
    Sampler,
    rank,
    sample,
    sample_typable,
    unrank,
)
from .terms import (
    FreeIndexExceeded,
    ParseError,
    decode,
    encode,
    max_free_index,
    parse_text,
    render,
    size,
)
from .typecheck import count_typable, format_type, infer


class UsageError(Exception):
    """Bad arguments or malformed input; exits with code 2."""


def _bound(args) -> int | float:
    if args.all:
        return math.inf
    if args.free < 0:
        raise UsageError(f"--free must be >= 0, got {args.free}")
    return args.free


def _bound_text(m: int | float) -> str:
    return "inf" if m == math.inf else str(m)


def _parse_bounds(arg: str) -> list[int | float]:
    out: list[int | float] = []
    for token in arg.split(","):
        token = token.strip()
        if not token:
            continue
        if token == "inf":
            out.append(math.inf)
        else:
            try:
                value = int(token)
            except ValueError:
                raise UsageError(f"bad bound {token!r}: use integers or 'inf'") from None
            if value < 0:
                raise UsageError(f"bounds must be >= 0, got {value}")
            out.append(value)
    if not out:
        raise UsageError("no free-index bounds given")
    return sorted(set(out), key=lambda m: (m == math.inf, m))


def _check_guard(n: int, args) -> None:
    if n < 0:
        raise UsageError(f"size must be >= 0, got {n}")
    if n > args.max_n:
        raise UsageError(
            f"size {n} is above the --max-n guard ({args.max_n}); "
            "raise it explicitly if you mean it"
        )


def _read_term(args):
    try:
        if args.term is not None:
            return decode(args.term)
        return parse_text(args.text)
    except (ParseError, ValueError) as exc:
        raise UsageError(f"bad term input: {exc}") from None


def _metadata(extra: dict | None = None) -> dict:
    md = {"version": __version__}
    if extra:
        md.update(extra)
    return md


def _emit(args, payload: dict, plain_lines: list[str], meta_extra: dict | None = None) -> None:
    if args.format == "json":
        print(json.dumps({"metadata": _metadata(meta_extra), **payload}))
        return
    if meta_extra:
        md = _metadata(meta_extra)
        print(" ".join(f"{k}={v}" for k, v in md.items()), file=sys.stderr)
    for line in plain_lines:
        print(line)


def _add_bound_options(sp) -> None:
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--free", type=int, metavar="M", help="allow free indices 1..M (0 = closed terms)"
    )
    group.add_argument("--all", action="store_true", help="no bound on free indices")


def _add_term_input(sp) -> None:
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--term", metavar="BITS", help="term as its binary code")
    group.add_argument("--text", metavar="TERM", help="term in text form, e.g. '\\(1 1)'")


def _add_term_format(sp) -> None:
    sp.add_argument(
        "--term-format",
        choices=("binary", "text"),
        default="binary",
        help="how to print terms (default binary)",
    )


def _add_format_option(sp) -> None:
    sp.add_argument(
        "--format", choices=("plain", "json"), default="plain", help="output format (default plain)"
    )


def _add_guard_option(sp) -> None:
    sp.add_argument(
        "--max-n",
        type=int,
        default=2000,
        metavar="N",
        help="refuse sizes above N; the count table grows quadratically (default 2000)",
    )


def _cmd_count(args) -> int:
    _check_guard(args.size, args)
    m = _bound(args)
    value = counting.count(m, args.size)
    _emit(args, {"n": args.size, "m": _bound_text(m), "count": value}, [str(value)])
    return 0


def _cmd_table(args) -> int:
    if args.max_n < 0:
        raise UsageError(f"--max-n must be >= 0, got {args.max_n}")
    bounds = _parse_bounds(args.m)
    table = counting.shared_table()
    table.ensure(args.max_n)
    print("n,m,count")
    for m in bounds:
        label = _bound_text(m)
        for n in range(args.max_n + 1):
            print(f"{n},{label},{table.count(m, n)}")
    return 0


def _cmd_unrank(args) -> int:
    _check_guard(args.size, args)
    term = unrank(_bound(args), args.size, args.index)
    text = encode(term) if args.term_format == "binary" else render(term)
    _emit(args, {"term": text, "term_format": args.term_format}, [text])
    return 0


def _cmd_rank(args) -> int:
    term = _read_term(args)
    _check_guard(size(term), args)
    value = rank(_bound(args), term)
    _emit(args, {"rank": value}, [str(value)])
    return 0


def _cmd_sample(args) -> int:
    _check_guard(args.size, args)
    if args.count < 1:
        raise UsageError(f"--count must be >= 1, got {args.count}")
    m = _bound(args)
    state = Sampler(args.seed)
    terms = []
    for _ in range(args.count):
        if args.typable:
            terms.append(sample_typable(m, args.size, state, args.max_attempts))
        else:
            terms.append(sample(m, args.size, state))
    texts = [encode(t) if args.term_format == "binary" else render(t) for t in terms]
    meta = {"generator": Sampler.generator, "seed": args.seed}
    _emit(args, {"terms": texts, "term_format": args.term_format}, texts, meta_extra=meta)
    return 0


def _cmd_typecheck(args) -> int:
    term = _read_term(args)
    typing = infer(term, max_free_index(term))
    if typing is None:
        _emit(args, {"typable": False, "type": None}, ["untypable"])
    else:
        text = format_type(typing.type)
        _emit(args, {"typable": True, "type": text}, [text])
    return 0


def _cmd_count_typable(args) -> int:
    _check_guard(args.size, args)
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    value = count_typable(args.size, closed=args.closed, jobs=args.jobs)
    _emit(
        args,
        {"n": args.size, "closed": args.closed, "count": value},
        [str(value)],
    )
    return 0


def _cmd_asymptotics(args) -> int:
    if not 0 < args.tolerance <= 1e-6:
        raise UsageError(f"--tolerance must be in (0, 1e-6], got {args.tolerance}")
    print(json.dumps(asdict(constants(args.tolerance))))
    return 0


def _cmd_convergence(args) -> int:
    if args.max_n < 2:
        raise UsageError(f"--max-n must be >= 2, got {args.max_n}")
    bounds = _parse_bounds(args.m)
    print("m,n,value")
    for pt in convergence_series(bounds, args.max_n):
        print(f"{_bound_text(pt.m)},{pt.n},{pt.value:.12g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blc",
        description="Count, enumerate, uniformly sample and type binary lambda terms.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser("count", help="exact number of terms in one size class")
    sp.add_argument("--size", type=int, required=True, metavar="N", help="term size in bits")
    _add_bound_options(sp)
    _add_guard_option(sp)
    _add_format_option(sp)
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("table", help="CSV of counts for sizes 0..N")
    sp.add_argument("--max-n", type=int, required=True, metavar="N", help="largest size")
    sp.add_argument(
        "--m",
        default="inf",
        metavar="LIST",
        help="comma-separated free-index bounds, e.g. 0,1,2,inf (default inf)",
    )
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("unrank", help="the k-th term of a size class")
    sp.add_argument("--size", type=int, required=True, metavar="N")
    _add_bound_options(sp)
    sp.add_argument("--index", type=int, required=True, metavar="K", help="1-based rank")
    _add_term_format(sp)
    _add_guard_option(sp)
    _add_format_option(sp)
    sp.set_defaults(func=_cmd_unrank)

    sp = sub.add_parser("rank", help="position of a term in its size class")
    _add_term_input(sp)
    _add_bound_options(sp)
    _add_guard_option(sp)
    _add_format_option(sp)
    sp.set_defaults(func=_cmd_rank)

    sp = sub.add_parser("sample", help="draw uniform terms from a size class")
    sp.add_argument("--size", type=int, required=True, metavar="N")
    _add_bound_options(sp)
    sp.add_argument("--count", type=int, default=1, metavar="K", help="how many draws (default 1)")
    sp.add_argument("--seed", type=int, default=0, metavar="S", help="generator seed (default 0)")
    sp.add_argument("--typable", action="store_true", help="keep only simply typable terms")
    sp.add_argument(
        "--max-attempts",
        type=int,
        default=10000,
        metavar="K",
        help="give up after K rejected draws per term with --typable (default 10000)",
    )
    _add_term_format(sp)
    _add_guard_option(sp)
    _add_format_option(sp)
    sp.set_defaults(func=_cmd_sample)

    sp = sub.add_parser("typecheck", help="principal simple type of a term")
    _add_term_input(sp)
    _add_format_option(sp)
    sp.set_defaults(func=_cmd_typecheck)

    sp = sub.add_parser("count-typable", help="census of simply typable terms at one size")
    sp.add_argument("--size", type=int, required=True, metavar="N")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--closed", action="store_true", help="closed terms only")
    group.add_argument("--all", action="store_true", help="all terms, typable in some context")
    sp.add_argument("--jobs", type=int, default=1, metavar="J", help="worker processes (default 1)")
    _add_guard_option(sp)
    _add_format_option(sp)
    sp.set_defaults(func=_cmd_count_typable)

    sp = sub.add_parser("asymptotics", help="growth-constant report as JSON")
    sp.add_argument(
        "--tolerance",
        type=float,
        default=1e-12,
        help="root isolation tolerance (default 1e-12)",
    )
    sp.set_defaults(func=_cmd_asymptotics)

    sp = sub.add_parser("convergence", help="CSV of count(m,n) * rho^n * n^1.5")
    sp.add_argument("--max-n", type=int, required=True, metavar="N", help="largest size")
    sp.add_argument(
        "--m",
        default="inf",
        metavar="LIST",
        help="comma-separated free-index bounds, e.g. 0,1,inf (default inf)",
    )
    sp.set_defaults(func=_cmd_convergence)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoTerms, OutOfRange, FreeIndexExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AttemptsExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (MemoryError, RecursionError):
        print("error: resource limit hit", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
