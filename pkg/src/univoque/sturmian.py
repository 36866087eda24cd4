"""Characteristic Sturmian sequences and mechanical words, generated exactly.

Slopes are quadratic irrationals (or rationals, which are representable but
refused by the stream constructors).  Every symbol is a difference of two
exact floors ``floor(n*alpha + rho)``, evaluated with ``math.isqrt``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterator, Sequence

from .surd import QuadraticSurd, floor_surd, squarefree_split
from .words import BitWord, SequenceStream

__all__ = [
    "CFDirectives", "Slope", "Intercept", "RationalSlopeError",
    "floor_linear_form", "mechanical_stream", "characteristic_stream",
    "MechanicalStream", "standard_word", "slope_of_directives",
    "standard_directives", "standard_prefix",
]


class RationalSlopeError(ValueError):
    """A rational slope was given where an aperiodic sequence is required."""


@dataclass(frozen=True)
class CFDirectives:
    """Continued fraction ``[head[0]; head[1], ..., (tail)*]``.

    ``head[0]`` is the integer part (0 for a slope); ``tail``, when present,
    repeats forever.
    """

    head: tuple[int, ...]
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(self.head))
        object.__setattr__(self, "tail", tuple(self.tail))
        if not self.head:
            raise ValueError("continued fraction needs an integer part")
        if self.head[0] < 0:
            raise ValueError("integer part must be >= 0")
        if any(q < 1 for q in self.head[1:] + self.tail):
            raise ValueError("partial quotients after the first must be >= 1")

    def quotients(self) -> Iterator[int]:
        yield from self.head
        while self.tail:
            yield from self.tail

    def __str__(self) -> str:
        parts = [str(q) for q in self.head[1:]]
        if self.tail:
            parts.append("(" + ",".join(map(str, self.tail)) + ")*")
        return f"[{self.head[0]};{','.join(parts)}]"


def _convergents(quotients: Sequence[int]) -> tuple[int, int, int, int]:
    # (p_n, q_n, p_{n-1}, q_{n-1}) of [q0; q1, ..., qn]
    p, q, pp, qq = 1, 0, 0, 1
    for a in quotients:
        p, q, pp, qq = a * p + pp, a * q + qq, p, q
    return p, q, pp, qq


def _tail_value(tail: tuple[int, ...]) -> QuadraticSurd:
    # x = [t1; t2, ..., tk, x]  =>  Q x^2 + (Q' - P) x - P' = 0
    p, q, pp, qq = _convergents(tail)
    disc = (qq - p) ** 2 + 4 * pp * q
    root = isqrt(disc)
    if root * root == disc:
        raise ValueError(f"periodic tail {tail} gives a rational value")
    f, d = squarefree_split(disc)
    return QuadraticSurd(p - qq, f, d, 2 * q)


def _mobius(head: tuple[int, ...], x) -> QuadraticSurd | Fraction:
    p, q, pp, qq = _convergents(head)
    return (x * p + pp) / (x * q + qq)


@dataclass(frozen=True)
class Slope:
    """A slope ``alpha`` in ``(0, 1)``.

    Build with :meth:`rational`, :meth:`surd` or :meth:`from_cf`.  ``value``
    is always an exact :class:`QuadraticSurd`; ``directives`` records the
    continued fraction when the slope was given that way.
    """

    value: QuadraticSurd
    directives: CFDirectives | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 < self.value < 1:
            raise ValueError(f"slope {self.value} is not in (0, 1)")

    @classmethod
    def rational(cls, p: int, q: int) -> Slope:
        if q <= 0:
            raise ValueError("denominator must be positive")
        return cls(QuadraticSurd.from_fraction(Fraction(p, q)))

    @classmethod
    def surd(cls, a: int, b: int, d: int, r: int) -> Slope:
        if r <= 0:
            raise ValueError("denominator must be positive")
        value = QuadraticSurd(a, b, d, r)
        if value.is_rational:
            raise ValueError(f"(a + b*sqrt{d})/r with b={b} is rational; use Slope.rational")
        return cls(value)

    @classmethod
    def from_cf(cls, head: Sequence[int], tail: Sequence[int] = ()) -> Slope:
        return slope_of_directives(CFDirectives(tuple(head), tuple(tail)))

    @property
    def is_rational(self) -> bool:
        return self.value.is_rational

    @property
    def kind(self) -> str:
        if self.directives is not None:
            return "cf"
        return "rational" if self.is_rational else "surd"

    def __str__(self) -> str:
        return str(self.directives) if self.directives else str(self.value)


@dataclass(frozen=True)
class Intercept:
    """An intercept ``rho`` in ``[0, 1)`` for mechanical words."""

    value: QuadraticSurd

    def __post_init__(self):
        if not 0 <= self.value < 1:
            raise ValueError(f"intercept {self.value} is not in [0, 1)")

    @classmethod
    def rational(cls, p: int, q: int = 1) -> Intercept:
        return cls(QuadraticSurd.from_fraction(Fraction(p, q)))

    @classmethod
    def surd(cls, a: int, b: int, d: int, r: int) -> Intercept:
        return cls(QuadraticSurd(a, b, d, r))

    @classmethod
    def of(cls, x) -> Intercept:
        if isinstance(x, Intercept):
            return x
        if isinstance(x, Slope):
            return cls(x.value)
        if isinstance(x, QuadraticSurd):
            return cls(x)
        return cls(QuadraticSurd.from_fraction(Fraction(x)))


ZERO = Intercept.rational(0)


def slope_of_directives(cf: CFDirectives) -> Slope:
    """Exact value of a finite or eventually periodic continued fraction."""
    if cf.tail:
        value = _mobius(cf.head, _tail_value(cf.tail))
    else:
        p, q, _, _ = _convergents(cf.head)
        value = QuadraticSurd.from_fraction(Fraction(p, q))
    return Slope(value, cf)


class _LinearForm:
    """``n -> floor(n*alpha + rho)`` over a common field ``Q(sqrt d)``."""

    def __init__(self, alpha: QuadraticSurd, rho: QuadraticSurd):
        if alpha.b and rho.b and alpha.d != rho.d:
            raise ValueError("slope and intercept must lie in the same quadratic field")
        d = alpha.d if alpha.b else rho.d
        r = alpha.r * rho.r
        # n*alpha + rho = (n*A + A0 + (n*B + B0) sqrt d) / r
        self.A, self.B = alpha.a * rho.r, alpha.b * rho.r
        self.A0, self.B0 = rho.a * alpha.r, rho.b * alpha.r
        self.d, self.r = d, r

    def __call__(self, n: int) -> int:
        return floor_surd(n * self.A + self.A0, n * self.B + self.B0, self.d, self.r)


def floor_linear_form(n: int, alpha: Slope | QuadraticSurd, rho=ZERO) -> int:
    """Exact ``floor(n*alpha + rho)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = alpha.value if isinstance(alpha, Slope) else alpha
    return _LinearForm(a, Intercept.of(rho).value)(n)


class MechanicalStream(SequenceStream):
    """Lower mechanical word ``s_n = floor((n+1)a + rho) - floor(n a + rho)``.

    ``offset`` shifts the index: the characteristic word is the offset-1
    mechanical word of intercept 0.
    """

    def __init__(self, alpha: Slope, rho: Intercept = ZERO, offset: int = 0,
                 known_depth: int = 10**7):
        if alpha.is_rational:
            raise RationalSlopeError(
                f"slope {alpha} is rational; its mechanical word is periodic, not Sturmian")
        super().__init__(known_depth)
        self.alpha, self.rho, self.offset = alpha, Intercept.of(rho), offset
        self._form = _LinearForm(alpha.value, self.rho.value)

    def _compute(self, start, stop):
        f = self._form
        lo = start + self.offset
        floors = [f(n) for n in range(lo, stop + self.offset + 1)]
        return "".join("1" if b > a else "0" for a, b in zip(floors, floors[1:]))


def mechanical_stream(alpha: Slope, rho=ZERO) -> MechanicalStream:
    return MechanicalStream(alpha, Intercept.of(rho))


def characteristic_stream(alpha: Slope) -> MechanicalStream:
    """``c_alpha``: symbol ``m`` is ``floor((m+2) alpha) - floor((m+1) alpha)``.

    With this (frequency of 1s) convention the word begins with 1 exactly
    when ``alpha > 1/2``.
    """
    return MechanicalStream(alpha, ZERO, offset=1)


def standard_word(directives: Sequence[int]) -> BitWord:
    """``s_m`` from ``s_{-1} = 1``, ``s_0 = 0``, ``s_n = s_{n-1}^{d_n} s_{n-2}``."""
    directives = list(directives)
    if directives and directives[0] < 0:
        raise ValueError("d_1 must be >= 0")
    if any(d < 1 for d in directives[1:]):
        raise ValueError("d_n must be >= 1 for n >= 2")
    prev, cur = "1", "0"
    for d in directives:
        prev, cur = cur, cur * d + prev
    return BitWord(cur)


def standard_directives(cf: CFDirectives) -> Iterator[int]:
    """Standard-word directives of slope ``[0; a1, a2, ...]``: ``a1 - 1, a2, ...``."""
    q = cf.quotients()
    if next(q) != 0:
        raise ValueError("slope continued fraction must start with 0")
    first = next(q, None)
    if first is None:
        return
    yield first - 1
    yield from q


def standard_prefix(cf: CFDirectives, n: int) -> BitWord:
    """A prefix of length ``n`` of the characteristic word built by standard words."""
    prev, cur = "1", "0"
    for step, d in enumerate(standard_directives(cf)):
        prev, cur = cur, cur * d + prev
        if step >= 1 and len(cur) >= n:
            return BitWord(cur[:n])
    raise ValueError(f"finite directives {cf} give fewer than {n} symbols")
