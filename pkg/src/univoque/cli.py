"""Command-line interface.

Exit codes: 0 success, 1 negative verdict or failed suite, 2 parse error,
3 domain rejection, 4 precision exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import harness
from .algebraic import RealAlgebraic, greedy_expansion_algebraic
from .beta import (
    NeedsRefinement, RationalInterval, TargetWidthUnreachable, beta_from_expansion,
    greedy_expansion, greedy_expansion_exact,
)
from .literals import (
    LiteralError, format_fraction, parse_intercept, parse_polynomial, parse_sequence,
    parse_slope, parse_surd, parse_width,
)
from .membership import FailsAt, Holds, check
from .sturmian import RationalSlopeError, characteristic_stream, mechanical_stream
from .words import BitWord, EventuallyPeriodicWord, FiniteStream, cosnard_forward, \
    cosnard_inverse, prepend, shift

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_DOMAIN, EXIT_PRECISION = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _decimal(q: Fraction, places: int = 40) -> str:
    whole, rem = divmod(q.numerator * 10**places // q.denominator, 10**places)
    return f"{whole}.{rem:0{places}d}"


# ----------------------------------------------------------- stream building

def _stream_from_args(args, literal: str | None):
    """Sequence from a literal or from --prepend/--slope/--intercept/--shift."""
    if literal is not None:
        if args.slope:
            raise CliError("give either a sequence literal or --slope, not both", EXIT_PARSE)
        u = parse_sequence(literal)
    elif args.slope:
        slope = parse_slope(args.slope)
        try:
            if args.intercept:
                u = mechanical_stream(slope, parse_intercept(args.intercept))
            else:
                u = characteristic_stream(slope)
        except RationalSlopeError as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from exc
    else:
        raise CliError("need a sequence literal or --slope", EXIT_PARSE)
    if isinstance(u, BitWord):
        u = FiniteStream(u)
    if args.shift:
        u = shift(u, args.shift)
    if args.prepend:
        u = prepend(args.prepend, u)
    return u


def _add_stream_options(p: argparse.ArgumentParser):
    p.add_argument("--slope", help="generate c_alpha from a slope literal")
    p.add_argument("--intercept", help="intercept literal (mechanical word)")
    p.add_argument("--shift", type=int, default=0, help="drop this many leading symbols")
    p.add_argument("--prepend", default="", help="binary word placed in front")


# ------------------------------------------------------------------ commands

def cmd_generate(args) -> int:
    slope = parse_slope(args.slope)
    try:
        if args.intercept:
            stream = mechanical_stream(slope, parse_intercept(args.intercept))
        else:
            stream = characteristic_stream(slope)
    except RationalSlopeError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from exc
    symbols = stream.prefix(args.count)
    _emit(args, {"slope": args.slope, "intercept": args.intercept, "count": args.count,
                 "symbols": symbols}, symbols)
    return EXIT_OK


def _verdict_text(v, exact: bool) -> str:
    mode = "exact" if exact else f"prefix: max_shift={v.max_shift}, depth={v.depth}"
    if isinstance(v, Holds):
        return f"holds ({mode})"
    if isinstance(v, FailsAt):
        where = "equal throughout" if v.position is None else f"position {v.position}"
        return f"fails at k={v.k} ({v.side.value} bound, {where}; {mode})"
    return f"inconclusive ({mode}): {v.reason}"


def cmd_check(args) -> int:
    u = _stream_from_args(args, args.sequence)
    v = check(args.set, u, args.max_shift, args.depth)
    exact = isinstance(u, EventuallyPeriodicWord)
    _emit(args, v.to_json(), _verdict_text(v, exact))
    return EXIT_NEGATIVE if isinstance(v, FailsAt) else EXIT_OK


def cmd_beta(args) -> int:
    u = _stream_from_args(args, args.sequence)
    width = parse_width(args.width)
    try:
        iv = beta_from_expansion(u, args.terms, width)
    except TargetWidthUnreachable as exc:
        raise CliError(str(exc), EXIT_PRECISION) from exc
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    payload = {"lo": format_fraction(iv.lo), "hi": format_fraction(iv.hi),
               "terms": args.terms, "width": format_fraction(iv.width)}
    text = f"beta in [{_decimal(iv.lo)}..., {_decimal(iv.hi)}...]"
    if not iv.in_open_unit_range:
        text += "\nwarning: enclosure touches the boundary of (1, 2)"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_expand(args) -> int:
    if args.beta_surd or args.beta_poly:
        try:
            if args.beta_surd:
                expansion = greedy_expansion_exact(parse_surd(args.beta_surd), args.digits)
            else:
                base = RealAlgebraic(parse_polynomial(args.beta_poly))
                expansion = greedy_expansion_algebraic(base, args.digits)
        except ValueError as exc:
            if isinstance(exc, LiteralError):
                raise
            raise CliError(str(exc), EXIT_DOMAIN) from exc
        digits, exact = expansion.digits(args.digits), True
    else:
        lo, _, hi = args.beta_interval.partition(",")
        try:
            beta = RationalInterval(Fraction(lo), Fraction(hi))
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(f"bad interval {args.beta_interval!r}", EXIT_PARSE) from exc
        try:
            digits = greedy_expansion(beta, args.digits).digits(args.digits)
        except NeedsRefinement as exc:
            if args.json:
                print(json.dumps({"error": "needs_refinement", "at_digit": exc.at_digit,
                                  "digits": exc.digits}, sort_keys=True))
            raise CliError(f"cannot decide digit {exc.at_digit} "
                           f"(decided so far: {exc.digits or '-'})", EXIT_PRECISION) from exc
        except ValueError as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from exc
        exact = False
    _emit(args, {"digits": digits, "count": args.digits, "exact": exact}, digits)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "prop1":
        report = harness.verify_prop1(args.max_period, args.max_preperiod)
    elif args.suite == "prop2":
        report = harness.verify_prop2(None, args.max_shift, args.depth)
    elif args.suite == "mirror":
        report = harness.verify_mirror_lemma(args.max_m)
    else:
        width = parse_width(args.width) if args.width else None
        report = harness.verify_prop3(None, args.terms, args.digits, width,
                                      args.max_shift, args.depth)
    if args.json:
        print(report.dumps())
    else:
        status = "ok" if report.passed else "FAILED"
        print(f"{report.suite}: {report.cases} cases, {len(report.failures)} failures "
              f"[{status}]")
        if "accepted" in report.summary:
            print(f"accepted ({report.summary['accepted_count']}): "
                  + " ".join(report.summary["accepted"]))
        for f in report.failures:
            print(f"  {f['input']}: expected {f['expected']}, got {f['got']}")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_transform(args) -> int:
    u = parse_sequence(args.sequence)
    out = cosnard_forward(u) if args.direction == "forward" else cosnard_inverse(u)
    _emit(args, {"direction": args.direction, "input": args.sequence, "output": str(out)},
          str(out))
    return EXIT_OK


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="univoque",
        description="Sturmian sequences, shift-extremal sets and expansions of 1.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("generate", cmd_generate, "print the first symbols of c_alpha")
    p.add_argument("--slope", required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--intercept")

    p = add("check", cmd_check, "membership in gamma, gamma1 or xi")
    p.add_argument("set", choices=["gamma", "gamma1", "xi"])
    p.add_argument("sequence", nargs="?")
    _add_stream_options(p)
    p.add_argument("--max-shift", type=int, default=1000)
    p.add_argument("--depth", type=int, default=10000)

    p = add("beta", cmd_beta, "enclose the base whose expansion of 1 is the sequence")
    p.add_argument("sequence", nargs="?")
    _add_stream_options(p)
    p.add_argument("--terms", type=int, default=200)
    p.add_argument("--width", default="1e-30")

    p = add("expand", cmd_expand, "greedy expansion of 1 in a base")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--beta-poly", help="root in (1,2) of an integer polynomial in x")
    src.add_argument("--beta-surd", help="exact quadratic base, e.g. (1+1*sqrt5)/2")
    src.add_argument("--beta-interval", help="rational enclosure lo,hi")
    p.add_argument("--digits", type=int, required=True)

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=["prop1", "prop2", "mirror", "prop3"])
    p.add_argument("--max-period", type=int, default=12)
    p.add_argument("--max-preperiod", type=int, default=0)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-shift", type=int, default=1000)
    p.add_argument("--depth", type=int, default=10000)
    p.add_argument("--terms", type=int, default=2000)
    p.add_argument("--digits", type=int, default=500)
    p.add_argument("--width", help="default 2^-1200")

    p = add("transform", cmd_transform, "Cosnard parity bijection")
    p.add_argument("direction", choices=["forward", "inverse"])
    p.add_argument("sequence")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("count", "digits", "terms", "max_shift", "depth", "max_period", "max_m"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    try:
        return args.func(args)
    except LiteralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
