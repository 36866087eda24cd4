"""Exact arithmetic in a real quadratic field.

A :class:`QuadraticSurd` stores ``(a + b*sqrt(d)) / r`` with integer
coefficients.  Every comparison and every floor is decided with integer
arithmetic only (``math.isqrt``); nothing here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

__all__ = ["QuadraticSurd", "floor_surd", "squarefree_split"]


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(f, d)`` with ``n == f*f*d`` and ``d`` square-free."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    f, d = 1, n
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            f *= p
        p += 1 if p == 2 else 2
    return f, d


def _floor_sqrt_term(b: int, d: int) -> int:
    # floor(b * sqrt(d)) for any integer b and d >= 0
    m = isqrt(b * b * d)
    if b >= 0:
        return m
    return -m if m * m == b * b * d else -m - 1


def floor_surd(a: int, b: int, d: int, r: int) -> int:
    """Exact ``floor((a + b*sqrt(d)) / r)`` for ``r > 0`` and ``d >= 0``.

    The triple need not be reduced; floor((x)/r) == floor(floor(x)/r) for
    integer ``r > 0``, so only ``b*sqrt(d)`` has to be floored.
    """
    if r <= 0:
        raise ValueError("denominator must be positive")
    if d < 0:
        raise ValueError("radicand must be non-negative")
    return (a + _floor_sqrt_term(b, d)) // r


def _sign_of(a: int, b: int, d: int) -> int:
    # sign of a + b*sqrt(d), d square-free > 1 or b == 0
    if b == 0:
        return (a > 0) - (a < 0)
    if a >= 0 and b >= 0:
        return 1 if (a or b) else 0
    if a <= 0 and b <= 0:
        return -1
    lhs, rhs = a * a, b * b * d
    if a > 0:  # b < 0
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


class QuadraticSurd:
    """The real number ``(a + b*sqrt(d)) / r``.

    Normal form: ``r > 0``, ``gcd(a, b, r) == 1``, ``d`` square-free.  A
    rational value has ``b == 0`` but keeps its ``d`` so it can be mixed with
    irrational members of the same field.
    """

    __slots__ = ("a", "b", "d", "r")

    def __init__(self, a: int, b: int = 0, d: int = 2, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 2:
            if b != 0 and d == 1:
                a, b = a + b, 0
            elif b != 0:
                raise ValueError(f"radicand must be >= 2, got {d}")
            d = 2
        else:
            f, d = squarefree_split(d)
            b *= f
        if r < 0:
            a, b, r = -a, -b, -r
        g = gcd(gcd(a, b), r)
        self.a, self.b, self.d, self.r = a // g, b // g, d, r // g

    @classmethod
    def from_fraction(cls, q: Fraction | int, d: int = 2) -> QuadraticSurd:
        q = Fraction(q)
        return cls(q.numerator, 0, d, q.denominator)

    # ------------------------------------------------------------------ info
    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.r)

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self.a, -self.b, self.d, self.r)

    def sign(self) -> int:
        return _sign_of(self.a, self.b, self.d)

    def __floor__(self) -> int:
        return floor_surd(self.a, self.b, self.d, self.r)

    def floor(self) -> int:
        return self.__floor__()

    def __repr__(self) -> str:
        return f"QuadraticSurd({self.a}, {self.b}, {self.d}, {self.r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(Fraction(self.a, self.r))
        sign = "+" if self.b > 0 else "-"
        return f"({self.a}{sign}{abs(self.b)}*sqrt{self.d})/{self.r}"

    def decimal(self, places: int = 20) -> str:
        """Truncated decimal expansion, computed exactly."""
        scaled = floor_surd(self.a * 10**places, self.b * 10**places, self.d, self.r)
        neg = scaled < 0
        whole, frac = divmod(abs(scaled), 10**places)
        return f"{'-' if neg else ''}{whole}.{frac:0{places}d}"

    # ------------------------------------------------------------ arithmetic
    def _coerce(self, other) -> QuadraticSurd:
        if isinstance(other, QuadraticSurd):
            if other.b and self.b and other.d != self.d:
                raise ValueError(
                    f"cannot mix sqrt{self.d} and sqrt{other.d} in one operation")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd.from_fraction(other, self.d)
        return NotImplemented

    def _field(self, other: QuadraticSurd) -> int:
        return self.d if self.b else other.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticSurd(self.a * o.r + o.a * self.r, self.b * o.r + o.b * self.r,
                             self._field(o), self.r * o.r)

    __radd__ = __add__

    def __neg__(self) -> QuadraticSurd:
        return QuadraticSurd(-self.a, -self.b, self.d, self.r)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        return QuadraticSurd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a,
                             d, self.r * o.r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        # multiply through by the conjugate of the divisor
        norm = o.a * o.a - o.b * o.b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        num_a = (self.a * o.a - self.b * o.b * d) * o.r
        num_b = (self.b * o.a - self.a * o.b) * o.r
        return QuadraticSurd(num_a, num_b, d, self.r * norm)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    # ------------------------------------------------------------ comparison
    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare QuadraticSurd with {type(other).__name__}")
        return (self - o).sign()

    def __eq__(self, other) -> bool:
        try:
            return self._cmp(other) == 0
        except (TypeError, ValueError):
            return False

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(Fraction(self.a, self.r))
        return hash((self.a, self.b, self.d, self.r))

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0
