"""Text literals for sequences, slopes, widths and bases.

Grammar::

    sequence   1101            finite word
               110(10)*        preperiod 110, period 10 repeated forever
    slope      rat:3/7
               surd:(-1+1*sqrt5)/2
               cf:[0;1,(1)*]   continued fraction, parenthesized tail repeats
    width      1e-30 | 2^-1200 | 1/1000
    polynomial x^3-x^2-x-1     integer coefficients in the variable x
"""
from __future__ import annotations

import re
from fractions import Fraction

from .sturmian import CFDirectives, Intercept, Slope, slope_of_directives
from .surd import QuadraticSurd
from .words import BitWord, EventuallyPeriodicWord

__all__ = [
    "LiteralError", "parse_sequence", "format_sequence", "parse_slope",
    "parse_intercept", "parse_surd", "parse_width", "parse_polynomial",
    "format_fraction",
]


class LiteralError(ValueError):
    pass


_SEQ = re.compile(r"([01]*)(?:\(([01]+)\)\*)?")
_SURD = re.compile(r"\(([+-]?\d+)([+-])(\d*)\*?sqrt(\d+)\)(?:/(\d+))?")
_CF = re.compile(r"\[(\d+)(?:;([0-9,()*]*))?\]")


def parse_sequence(text: str) -> BitWord | EventuallyPeriodicWord:
    m = _SEQ.fullmatch(text)
    if m is None or not text:
        raise LiteralError(f"bad sequence literal {text!r}; expected e.g. 1101 or 110(10)*")
    pre, per = m.groups()
    if per is None:
        return BitWord(pre)
    return EventuallyPeriodicWord(pre, per)


def format_sequence(u) -> str:
    return str(u)


def parse_surd(text: str) -> QuadraticSurd:
    m = _SURD.fullmatch(text)
    if m is None:
        raise LiteralError(f"bad surd {text!r}; expected e.g. (-1+1*sqrt5)/2")
    a, sign, b, d, r = m.groups()
    b = int(b) if b else 1
    return QuadraticSurd(int(a), -b if sign == "-" else b, int(d), int(r or 1))


def _parse_cf(body: str) -> CFDirectives:
    m = _CF.fullmatch(body)
    if m is None:
        raise LiteralError(f"bad continued fraction {body!r}; expected e.g. [0;1,(1)*]")
    a0, rest = m.groups()
    head, tail = [int(a0)], []
    if rest:
        tm = re.fullmatch(r"((?:\d+,)*\d+)?,?(?:\(((?:\d+,)*\d+)\)\*)?", rest)
        if tm is None or not rest.strip(","):
            raise LiteralError(f"bad continued fraction {body!r}")
        h, t = tm.groups()
        if h:
            head += [int(x) for x in h.split(",")]
        if t:
            tail = [int(x) for x in t.split(",")]
    try:
        return CFDirectives(tuple(head), tuple(tail))
    except ValueError as exc:
        raise LiteralError(str(exc)) from exc


def parse_slope(text: str) -> Slope:
    kind, _, body = text.partition(":")
    try:
        if kind == "rat":
            q = Fraction(body)
            return Slope.rational(q.numerator, q.denominator)
        if kind == "surd":
            s = parse_surd(body)
            return Slope.surd(s.a, s.b, s.d, s.r)
        if kind == "cf":
            return slope_of_directives(_parse_cf(body))
    except LiteralError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise LiteralError(f"bad slope {text!r}: {exc}") from exc
    raise LiteralError(f"bad slope {text!r}; expected rat:, surd: or cf: prefix")


def parse_intercept(text: str) -> Intercept:
    kind, _, body = text.partition(":")
    try:
        if kind == "rat":
            return Intercept.of(Fraction(body))
        if kind == "surd":
            return Intercept(parse_surd(body))
        if kind == "cf":
            return Intercept(slope_of_directives(_parse_cf(body)).value)
    except LiteralError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise LiteralError(f"bad intercept {text!r}: {exc}") from exc
    raise LiteralError(f"bad intercept {text!r}; expected rat:, surd: or cf: prefix")


def parse_width(text: str) -> Fraction:
    m = re.fullmatch(r"(\d+)\^(-?\d+)", text)
    try:
        w = Fraction(int(m.group(1))) ** int(m.group(2)) if m else Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise LiteralError(f"bad width {text!r}") from exc
    if w <= 0:
        raise LiteralError("width must be positive")
    return w


def parse_polynomial(text: str) -> list[int]:
    """Coefficients ``[c0, c1, ...]`` of a polynomial written in ``x``."""
    compact = text.replace(" ", "")
    if not compact:
        raise LiteralError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(terms) != compact:
        raise LiteralError(f"bad polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for term in terms:
        m = re.fullmatch(r"([+-]?)(\d*)\*?(x(?:\^(\d+))?)?", term)
        if m is None or not (m.group(2) or m.group(3)):
            raise LiteralError(f"bad polynomial term {term!r}")
        sign, c, var, e = m.groups()
        value = int(c) if c else 1
        power = (int(e) if e else 1) if var else 0
        coeffs[power] = coeffs.get(power, 0) + (-value if sign == "-" else value)
    degree = max(coeffs)
    return [coeffs.get(i, 0) for i in range(degree + 1)]


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
