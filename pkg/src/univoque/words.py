"""Binary words: finite, eventually periodic and streamed.

Symbols are kept as the characters ``'0'`` and ``'1'`` of an immutable
``str``.  CPython compares, slices and hashes such strings in C, which is what
makes scanning 10^4..10^6 symbol prefixes cheap; lexicographic order on
equal-length prefixes is then plain string order.
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from math import lcm
from typing import Callable, Union

__all__ = [
    "BitWord", "EventuallyPeriodicWord", "SequenceStream", "FunctionStream",
    "FiniteStream", "PeriodicStream", "Ordering3", "Undecided",
    "complement", "shift", "prepend", "as_stream",
    "lex_compare_exact", "lex_compare_prefix", "first_difference",
    "cosnard_forward", "cosnard_inverse",
    "find_unbalanced_pair", "factor_complexity", "detect_purely_periodic",
]

_FLIP = str.maketrans("01", "10")


class BitWord(str):
    """A finite word over ``{0, 1}``; a validated ``str``."""

    __slots__ = ()

    def __new__(cls, bits: str = "") -> BitWord:
        bits = str(bits)
        if bits.strip("01"):
            raise ValueError(f"not a binary word: {bits!r}")
        return super().__new__(cls, bits)

    def bit(self, n: int) -> int:
        return 1 if self[n] == "1" else 0

    def __repr__(self) -> str:
        return f"BitWord({str(self)!r})"


def _primitive_root(w: str) -> str:
    i = (w + w).find(w, 1)
    return w[:i] if i < len(w) else w


@dataclass(frozen=True, init=False)
class EventuallyPeriodicWord:
    """The infinite word ``preperiod · period · period · ...``.

    Always stored in normal form: the period is primitive and the preperiod
    is as short as possible (its last symbol differs from the period's last
    symbol).  Two words are equal exactly when their normal forms are.
    """

    preperiod: str
    period: str

    def __init__(self, preperiod: str, period: str):
        preperiod, period = str(BitWord(preperiod)), str(BitWord(period))
        if not period:
            raise ValueError("period must be nonempty")
        period = _primitive_root(period)
        while preperiod and preperiod[-1] == period[-1]:
            preperiod = preperiod[:-1]
            period = period[-1] + period[:-1]
        object.__setattr__(self, "preperiod", preperiod)
        object.__setattr__(self, "period", period)

    @classmethod
    def purely_periodic(cls, period: str) -> EventuallyPeriodicWord:
        return cls("", period)

    def symbol_at(self, n: int) -> int:
        p = len(self.preperiod)
        ch = self.preperiod[n] if n < p else self.period[(n - p) % len(self.period)]
        return 1 if ch == "1" else 0

    def prefix(self, n: int) -> str:
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        rest = n - len(self.preperiod)
        reps = -(-rest // len(self.period))
        return self.preperiod + (self.period * reps)[:rest]

    @property
    def structure_length(self) -> int:
        """Number of distinct suffixes: ``|preperiod| + |period|``."""
        return len(self.preperiod) + len(self.period)

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})*"

    def __repr__(self) -> str:
        return f"EventuallyPeriodicWord({self.preperiod!r}, {self.period!r})"


class Ordering3(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> Ordering3:
        return cls((a > b) - (a < b))


@dataclass(frozen=True)
class Undecided:
    """Prefix comparison found no difference within ``depth`` symbols."""

    depth: int


# --------------------------------------------------------------------- streams

class SequenceStream:
    """An infinite binary sequence produced on demand.

    Subclasses implement ``_compute(start, stop)`` returning the symbols with
    indices in ``[start, stop)`` as a ``'0'/'1'`` string.  Results are
    memoized behind a lock, so concurrent readers see one consistent prefix.
    ``known_depth`` is the number of leading symbols the stream guarantees to
    produce (indices ``0 .. known_depth - 1``).
    """

    _CHUNK = 4096

    def __init__(self, known_depth: int):
        self.known_depth = known_depth
        self._buf = ""
        self._lock = threading.Lock()

    def _compute(self, start: int, stop: int) -> str:  # pragma: no cover - abstract
        raise NotImplementedError

    def prefix(self, n: int) -> str:
        if n > self.known_depth:
            raise IndexError(f"requested {n} symbols, stream knows {self.known_depth}")
        buf = self._buf
        if len(buf) >= n:
            return buf[:n]
        with self._lock:
            buf = self._buf
            if len(buf) < n:
                stop = min(self.known_depth, max(n, len(buf) + self._CHUNK))
                chunk = self._compute(len(buf), stop)
                if len(chunk) != stop - len(buf) or chunk.strip("01"):
                    raise RuntimeError("stream produced malformed symbols")
                buf = self._buf = buf + chunk
        return buf[:n]

    def symbol_at(self, n: int) -> int:
        return 1 if self.prefix(n + 1)[n] == "1" else 0

    def __getitem__(self, item):
        if isinstance(item, slice):
            if item.stop is None or item.step not in (None, 1):
                raise ValueError("only bounded unit-step slices are supported")
            return self.prefix(item.stop)[item]
        return self.symbol_at(item)


class FunctionStream(SequenceStream):
    """Stream given by a symbol function ``n -> 0/1``."""

    def __init__(self, fn: Callable[[int], int], known_depth: int = 10**7):
        super().__init__(known_depth)
        self._fn = fn

    def _compute(self, start, stop):
        fn = self._fn
        return "".join("1" if fn(n) else "0" for n in range(start, stop))


class FiniteStream(SequenceStream):
    """A finite word viewed as a stream known only to its length."""

    def __init__(self, word: str):
        word = BitWord(word)
        super().__init__(len(word))
        self._buf = str(word)

    def _compute(self, start, stop):  # pragma: no cover - buffer is complete
        return self._buf[start:stop]


class PeriodicStream(SequenceStream):
    """Stream of an eventually periodic word; ``source`` keeps exactness."""

    def __init__(self, word: EventuallyPeriodicWord, known_depth: int = 10**8):
        super().__init__(known_depth)
        self.source = word

    def _compute(self, start, stop):
        return self.source.prefix(stop)[start:]


class _Derived(SequenceStream):
    def __init__(self, base: SequenceStream, known_depth: int):
        super().__init__(known_depth)
        self.base = base


class _Shifted(_Derived):
    def __init__(self, base, k):
        super().__init__(base, base.known_depth - k)
        self.k = k

    def _compute(self, start, stop):
        return self.base.prefix(stop + self.k)[start + self.k:]


class _Prepended(_Derived):
    def __init__(self, head, base):
        super().__init__(base, base.known_depth + len(head))
        self.head = head

    def _compute(self, start, stop):
        h = len(self.head)
        return (self.head + self.base.prefix(max(0, stop - h)))[start:stop]


class _Complemented(_Derived):
    def __init__(self, base):
        super().__init__(base, base.known_depth)

    def _compute(self, start, stop):
        return self.base.prefix(stop)[start:].translate(_FLIP)


Sequence = Union[BitWord, EventuallyPeriodicWord, SequenceStream]


def as_stream(u) -> SequenceStream:
    if isinstance(u, SequenceStream):
        return u
    if isinstance(u, EventuallyPeriodicWord):
        return PeriodicStream(u)
    return FiniteStream(u)


def complement(u):
    """Symbol-wise complement ``1 - u_n``."""
    if isinstance(u, EventuallyPeriodicWord):
        return EventuallyPeriodicWord(u.preperiod.translate(_FLIP), u.period.translate(_FLIP))
    if isinstance(u, SequenceStream):
        if isinstance(u, _Complemented):
            return u.base
        return _Complemented(u)
    return BitWord(str(u).translate(_FLIP))


def shift(u, k: int):
    """The ``k``-th shift: symbol ``n`` of the result is symbol ``n + k`` of ``u``."""
    if k < 0:
        raise ValueError("shift amount must be >= 0")
    if isinstance(u, EventuallyPeriodicWord):
        pre, per = u.preperiod, u.period
        if k <= len(pre):
            return EventuallyPeriodicWord(pre[k:], per)
        j = (k - len(pre)) % len(per)
        return EventuallyPeriodicWord("", per[j:] + per[:j])
    if isinstance(u, SequenceStream):
        if k == 0:
            return u
        if isinstance(u, _Shifted):
            return _Shifted(u.base, u.k + k)
        return _Shifted(u, k)
    return BitWord(str(u)[k:])


def prepend(head: str, u):
    """The sequence ``head · u``."""
    head = str(BitWord(head))
    if isinstance(u, EventuallyPeriodicWord):
        return EventuallyPeriodicWord(head + u.preperiod, u.period)
    if isinstance(u, SequenceStream):
        return _Prepended(head, u) if head else u
    return BitWord(head + str(u))


# ------------------------------------------------------------------ comparison

def first_difference(a: str, b: str) -> int | None:
    """Index of the first mismatch between two strings of equal length."""
    if a == b:
        return None
    lo, hi = 0, min(len(a), len(b))
    if a[:hi] == b[:hi]:
        return hi
    # invariant: a[:lo] == b[:lo] and a[:hi] != b[:hi]
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if a[:mid] == b[:mid]:
            lo = mid
        else:
            hi = mid
    return lo


def comparison_bound(u: EventuallyPeriodicWord, v: EventuallyPeriodicWord) -> int:
    return max(len(u.preperiod), len(v.preperiod)) + lcm(len(u.period), len(v.period))


def lex_compare_exact(u: EventuallyPeriodicWord, v: EventuallyPeriodicWord) -> Ordering3:
    # past the longer preperiod both words repeat with period lcm(|p_u|, |p_v|),
    # so agreement through that bound is agreement forever
    n = comparison_bound(u, v)
    return Ordering3.of(u.prefix(n), v.prefix(n))


def lex_compare_prefix(u, v, depth: int) -> Ordering3 | Undecided:
    a, b = as_stream(u).prefix(depth), as_stream(v).prefix(depth)
    if a == b:
        return Undecided(depth)
    return Ordering3.of(a, b)


# --------------------------------------------------------------------- cosnard

def _running_parity(bits: str) -> str:
    if not bits:
        return ""
    # inverse Gray code on the packed integer: x ^= x >> 1, >> 2, >> 4, ...
    n = len(bits)
    x = int(bits, 2)
    s = 1
    while s < n:
        x ^= x >> s
        s <<= 1
    return format(x, f"0{n}b")


def _adjacent_xor(bits: str, before: int = 0) -> str:
    if not bits:
        return ""
    n = len(bits)
    y = int(bits, 2)
    x = y ^ ((y >> 1) | (before << (n - 1)))
    return format(x, f"0{n}b")


def cosnard_forward(x):
    """Running parity: ``y_n = (x_0 + ... + x_n) mod 2``."""
    if isinstance(x, EventuallyPeriodicWord):
        pre, per = x.preperiod, x.period
        head = _running_parity(pre + per + per)
        m = len(pre)
        # from index m on, y repeats with period |per| or 2|per|; normalization
        # collapses the doubled period when the digit sum is even
        return EventuallyPeriodicWord(head[:m], head[m:])
    return BitWord(_running_parity(str(x)))


def cosnard_inverse(y):
    """Inverse of :func:`cosnard_forward`: ``x_0 = y_0``, ``x_n = y_n xor y_{n-1}``."""
    if isinstance(y, EventuallyPeriodicWord):
        pre, per = y.preperiod, y.period
        m = len(pre) + 1
        x = _adjacent_xor(y.prefix(m + len(per)))
        return EventuallyPeriodicWord(x[:m], x[m:])
    return BitWord(_adjacent_xor(str(y)))


# ----------------------------------------------------------------- diagnostics

def find_unbalanced_pair(w: str, max_length: int | None = None) -> str | None:
    """Shortest word ``t`` with both ``0t0`` and ``1t1`` factors of ``w``.

    Among witnesses of equal length the lexicographically least is returned.
    ``None`` means no witness with ``|t| <= max_length`` exists.  A finite
    prefix without a witness is balanced, which is necessary but not
    sufficient for the infinite sequence to be Sturmian.
    """
    w = str(w)
    top = len(w) - 2 if max_length is None else min(max_length, len(w) - 2)
    for length in range(top + 1):
        size = length + 2
        factors = {w[i:i + size] for i in range(len(w) - size + 1)}
        hits = sorted(f[1:-1] for f in factors
                      if f[0] == "0" == f[-1] and "1" + f[1:-1] + "1" in factors)
        if hits:
            return BitWord(hits[0])
    return None


def factor_complexity(w: str, n: int) -> int:
    """Number of distinct length-``n`` factors of ``w``."""
    w = str(w)
    if not 1 <= n <= len(w):
        raise ValueError(f"factor length {n} outside 1..{len(w)}")
    return len({w[i:i + n] for i in range(len(w) - n + 1)})


def detect_purely_periodic(u: EventuallyPeriodicWord) -> bool:
    """True iff ``u`` is periodic from index 0.

    Every :class:`EventuallyPeriodicWord` is eventually periodic; this
    predicate separates the purely periodic ones (empty normalized preperiod).
    Sturmian sequences are neither.
    """
    return not u.preperiod
