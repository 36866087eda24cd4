"""Exact sign decisions for polynomials evaluated at a real algebraic number.

A base is given by an integer polynomial ``p`` with exactly one root in
(1, 2).  Elements of Q[beta] are kept as coefficient lists reduced mod ``p``;
the sign of ``q(beta)`` is decided with Sturm counts and a gcd zero test, so
no precision ever runs out.
"""
from __future__ import annotations

from fractions import Fraction

from .beta import ExpansionDigits, RationalInterval
from .words import BitWord

__all__ = ["RealAlgebraic", "greedy_expansion_algebraic"]

Poly = list  # coefficients [c0, c1, ...] as Fractions, no trailing zeros


def _trim(a: Poly) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _eval(a: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                  for i in range(n)])


def _rem(a: Poly, b: Poly) -> Poly:
    a = _trim(a)
    while len(a) >= len(b):
        q = a[-1] / b[-1]
        off = len(a) - len(b)
        for i, c in enumerate(b):
            a[off + i] -= q * c
        a = _trim(a)
    return a


def _derivative(a: Poly) -> Poly:
    return _trim([i * c for i, c in enumerate(a)][1:])


def _gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _rem(a, b)
    return [c / a[-1] for c in a]


def _quotient(a: Poly, b: Poly) -> Poly:
    a, out = _trim(a), [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        q = a[-1] / b[-1]
        off = len(a) - len(b)
        out[off] = q
        for i, c in enumerate(b):
            a[off + i] -= q * c
        a = _trim(a)
    return _trim(out)


def _sturm(a: Poly) -> list[Poly]:
    seq = [a, _derivative(a)]
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        seq.append([-c for c in r])
    return seq[:-1]


def _variations(seq: list[Poly], x: Fraction) -> int:
    signs = [v for v in (_eval(p, x) for p in seq) if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if (s > 0) != (t > 0))


def _root_count(seq: list[Poly], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in (lo, hi] of a square-free polynomial's Sturm chain."""
    return _variations(seq, lo) - _variations(seq, hi)


class RealAlgebraic:
    """The unique root in (1, 2) of an integer polynomial."""

    def __init__(self, coeffs: list[int]):
        p = _trim([Fraction(c) for c in coeffs])
        if len(p) < 2:
            raise ValueError("polynomial must have positive degree")
        g = _gcd(p, _derivative(p)) if len(p) > 2 else [Fraction(1)]
        self.poly = _quotient(p, g) if len(g) > 1 else p
        self._chain = _sturm(self.poly)
        lo, hi = Fraction(1), Fraction(2)
        if _eval(self.poly, hi) == 0:
            raise ValueError("polynomial vanishes at 2; need a root strictly inside (1, 2)")
        n = _root_count(self._chain, lo, hi)
        if n != 1:
            raise ValueError(f"polynomial has {n} roots in (1, 2); need exactly one")
        self.lo, self.hi = lo, hi
        self.exact: Fraction | None = None

    @property
    def enclosure(self) -> RationalInterval:
        return RationalInterval(self.lo, self.hi)

    def refine(self):
        """Halve the isolating interval ``(lo, hi]``."""
        if self.exact is not None:
            return
        mid = (self.lo + self.hi) / 2
        if _eval(self.poly, mid) == 0:
            self.exact = mid
        elif _root_count(self._chain, self.lo, mid) == 1:
            self.hi = mid
        else:
            self.lo = mid

    def reduce(self, q: Poly) -> Poly:
        return _rem(_trim(q), self.poly)

    def sign(self, q: Poly) -> int:
        """Sign of ``q(beta)``."""
        q = self.reduce(q)
        if not q:
            return 0
        if len(q) > 1:
            g = _gcd(q, self.poly)
            if len(g) > 1 and _root_count(_sturm(g), self.lo, self.hi) > 0:
                return 0
            d = _gcd(q, _derivative(q))
            chain = _sturm(_quotient(q, d) if len(d) > 1 else q)
            while self.exact is None and _root_count(chain, self.lo, self.hi) > 0:
                self.refine()
        v = _eval(q, self.hi if self.exact is None else self.exact)
        return (v > 0) - (v < 0)


def greedy_expansion_algebraic(beta: RealAlgebraic, count: int) -> ExpansionDigits:
    """Greedy expansion of 1 in an algebraic base, every digit decided exactly."""
    r: Poly = [Fraction(1)]
    out = []
    for _ in range(count):
        if not r:
            out.append("0" * (count - len(out)))
            break
        y = beta.reduce(_trim([Fraction(0)] + r))
        if beta.sign(_sub(y, [Fraction(1)])) >= 0:
            out.append("1")
            r = _sub(y, [Fraction(1)])
        else:
            out.append("0")
            r = y
        if r and beta.sign(r) == 0:
            r = []
    return ExpansionDigits(BitWord("".join(out)))
