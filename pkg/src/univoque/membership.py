"""Membership in the shift-extremal sets Gamma, Gamma_1, Xi and Xi_v.

For a sequence ``u`` write ``S^k u`` for its k-th shift and ``~u`` for its
complement.

* Gamma:    ``~u <= S^k u <= u`` for every k >= 0
* Gamma_1:  ``~u < u`` and ``~u < S^k u < u`` for every k >= 1
* Xi:       ``0u <= S^k u <= 1u`` for every k >= 0
* Xi_v:     ``0v <= S^k u <= 1v`` for every k >= 0

Eventually periodic words are decided exactly: such a word has only
``|preperiod| + |period|`` distinct suffixes.  Streams are checked on a
prefix, and the answer is a :data:`Verdict` that never overstates what a
finite prefix can show.

Strict inequality for ``k = 0`` in Gamma_1 would read ``u < u``, so the
strict bounds are taken for ``k >= 1`` together with ``~u < u``; with that
reading Gamma_1 is Gamma minus the purely periodic words.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .words import (
    BitWord, EventuallyPeriodicWord, Ordering3, PeriodicStream, SequenceStream,
    as_stream, complement, comparison_bound, first_difference, lex_compare_exact,
    prepend, shift,
)

__all__ = [
    "Side", "Holds", "FailsAt", "Inconclusive", "Verdict",
    "gamma_exact", "gamma_prefix", "gamma1_exact", "gamma1_prefix",
    "xi_exact", "xi_prefix", "xi_v_exact", "xi_v_prefix",
    "sup_of_shifts", "inf_of_shifts", "mirror_prefix_completion",
    "check_mirror_completion", "check", "confirm_witness",
    "DEFAULT_MAX_SHIFT", "DEFAULT_DEPTH",
]

DEFAULT_MAX_SHIFT = 1000
DEFAULT_DEPTH = 10 * DEFAULT_MAX_SHIFT


class Side(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class Holds:
    """No violation: decided (exact) or not observable (prefix)."""

    max_shift: int
    depth: int

    def __bool__(self):
        return True

    def to_json(self) -> dict:
        return {"verdict": "holds", "max_shift": self.max_shift, "depth": self.depth}


@dataclass(frozen=True)
class FailsAt:
    """Shift ``k`` breaks the bound on ``side``.

    ``position`` is the first index where ``S^k u`` and the bound differ.  It
    is ``None`` when they are equal throughout, which only breaks a strict
    bound.
    """

    k: int
    side: Side
    position: int | None
    max_shift: int
    depth: int

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        out = {"verdict": "fails", "k": self.k, "side": self.side.value}
        if self.position is not None:
            out["position"] = self.position
        out.update(max_shift=self.max_shift, depth=self.depth)
        return out


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    max_shift: int
    depth: int
    k: int | None = None

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        out = {"verdict": "inconclusive", "reason": self.reason}
        if self.k is not None:
            out["k"] = self.k
        out.update(max_shift=self.max_shift, depth=self.depth)
        return out


Verdict = Union[Holds, FailsAt, Inconclusive]


# ----------------------------------------------------------------- exact side

def _exact_scan(u: EventuallyPeriodicWord, lower: EventuallyPeriodicWord,
                upper: EventuallyPeriodicWord, strict_from: int | None = None) -> Verdict:
    """Check ``lower <= S^k u <= upper`` over every distinct suffix.

    From shift ``strict_from`` on, equality with a bound is also a failure.
    """
    last = u.structure_length - 1
    if strict_from is not None:
        # S^(pre+per) u repeats S^pre u; for a purely periodic word that is
        # u itself, which must now meet the strict bound too
        last += 1
    depth = max(comparison_bound(u, lower), comparison_bound(u, upper))
    for k in range(last + 1):
        s = shift(u, k)
        strict = strict_from is not None and k >= strict_from
        failures = []
        for side, bound, bad in ((Side.LOWER, lower, Ordering3.LESS),
                                 (Side.UPPER, upper, Ordering3.GREATER)):
            rel = lex_compare_exact(s, bound)
            if rel == bad or (strict and rel == Ordering3.EQUAL):
                n = comparison_bound(s, bound)
                failures.append((side, first_difference(s.prefix(n), bound.prefix(n))))
        if failures:
            # earliest divergence wins; exact equality (None) counts as latest
            side, pos = min(failures, key=lambda f: (f[1] is None, f[1] or 0))
            return FailsAt(k, side, pos, last, depth)
    return Holds(last, depth)


def gamma_exact(u: EventuallyPeriodicWord) -> Verdict:
    """Decide ``~u <= S^k u <= u`` for all k."""
    return _exact_scan(u, complement(u), u)


def gamma1_exact(u: EventuallyPeriodicWord) -> Verdict:
    """Decide Gamma_1 membership; equals Gamma minus the purely periodic words."""
    return _exact_scan(u, complement(u), u, strict_from=1)


def xi_exact(u: EventuallyPeriodicWord) -> Verdict:
    return _exact_scan(u, prepend("0", u), prepend("1", u))


def xi_v_exact(u: EventuallyPeriodicWord, v: EventuallyPeriodicWord) -> Verdict:
    return _exact_scan(u, prepend("0", v), prepend("1", v))


# ---------------------------------------------------------------- prefix side

def _check_budget(max_shift: int, depth: int):
    if max_shift < 0 or depth < 1:
        raise ValueError("need max_shift >= 0 and depth >= 1")
    if max_shift >= depth:
        raise ValueError(f"max_shift={max_shift} leaves no window within depth={depth}")


def _prefix_scan(s: str, lower: str, upper: str, max_shift: int, depth: int,
                 strict_from: int | None = None) -> Verdict:
    """Scan shifts 0..max_shift of the prefix ``s`` (length ``depth``).

    Shift ``k`` is compared on its ``depth - k`` observable symbols.  A
    difference is a definitive witness; agreement on the whole window is
    fine for a non-strict bound and only Inconclusive for a strict one.
    """
    undecided = None
    for k in range(max_shift + 1):
        window = depth - k
        seg = s[k:depth]
        lo, hi = lower[:window], upper[:window]
        strict = strict_from is not None and k >= strict_from
        fail_lo = seg < lo
        fail_hi = seg > hi
        if fail_lo or fail_hi:
            p_lo = first_difference(seg, lo) if fail_lo else None
            p_hi = first_difference(seg, hi) if fail_hi else None
            if fail_lo and (not fail_hi or p_lo <= p_hi):
                return FailsAt(k, Side.LOWER, p_lo, max_shift, depth)
            return FailsAt(k, Side.UPPER, p_hi, max_shift, depth)
        if strict and undecided is None and (seg == lo or seg == hi):
            undecided = k
    if undecided is not None:
        side = "upper" if s[undecided:depth] == upper[:depth - undecided] else "lower"
        return Inconclusive(
            f"shift {undecided} matches the {side} bound on all {depth - undecided} "
            "observed symbols; strict inequality cannot be shown at this depth",
            max_shift, depth, undecided)
    return Holds(max_shift, depth)


def _stream_prefix(u, depth: int) -> str:
    stream = as_stream(u)
    if depth > stream.known_depth:
        raise ValueError(f"depth {depth} exceeds known depth {stream.known_depth}")
    return stream.prefix(depth)


def gamma_prefix(u, max_shift: int = DEFAULT_MAX_SHIFT,
                 depth: int = DEFAULT_DEPTH) -> Verdict:
    _check_budget(max_shift, depth)
    s = _stream_prefix(u, depth)
    return _prefix_scan(s, complement(BitWord(s)), s, max_shift, depth)


def gamma1_prefix(u, max_shift: int = DEFAULT_MAX_SHIFT,
                  depth: int = DEFAULT_DEPTH) -> Verdict:
    _check_budget(max_shift, depth)
    s = _stream_prefix(u, depth)
    comp = complement(BitWord(s))
    if s < comp:
        return FailsAt(0, Side.LOWER, 0, max_shift, depth)
    return _prefix_scan(s, comp, s, max_shift, depth, strict_from=1)


def xi_prefix(u, max_shift: int = DEFAULT_MAX_SHIFT,
              depth: int = DEFAULT_DEPTH) -> Verdict:
    _check_budget(max_shift, depth)
    s = _stream_prefix(u, depth)
    return _prefix_scan(s, "0" + s[:-1], "1" + s[:-1], max_shift, depth)


def xi_v_prefix(u, v, max_shift: int = DEFAULT_MAX_SHIFT,
                depth: int = DEFAULT_DEPTH) -> Verdict:
    _check_budget(max_shift, depth)
    s = _stream_prefix(u, depth)
    t = _stream_prefix(v, depth - 1)
    return _prefix_scan(s, "0" + t, "1" + t, max_shift, depth)


def confirm_witness(u, verdict: FailsAt, lower: str, upper: str) -> bool:
    """Re-derive a prefix witness: shift ``k`` and its bound first differ at
    ``position`` in the direction that breaks ``side``."""
    s = as_stream(u)
    n = verdict.position + 1
    seg = s.prefix(verdict.k + n)[verdict.k:]
    bound = (lower if verdict.side is Side.LOWER else upper)[:n]
    if seg[:-1] != bound[:-1]:
        return False
    return seg[-1] < bound[-1] if verdict.side is Side.LOWER else seg[-1] > bound[-1]


# ------------------------------------------------------------- sup/inf shifts

def _shift_windows(u, max_shift: int, depth: int) -> list[str]:
    s = as_stream(u)
    if depth + max_shift > s.known_depth:
        raise ValueError("depth + max_shift exceeds the stream's known depth")
    p = s.prefix(depth + max_shift)
    return [p[k:k + depth] for k in range(max_shift + 1)]


def sup_of_shifts(u, max_shift: int = DEFAULT_MAX_SHIFT, depth: int = 50) -> BitWord:
    """Greatest length-``depth`` prefix among ``S^k u``, ``0 <= k <= max_shift``."""
    # max() keeps the first maximum, i.e. ties go to the smaller k
    return BitWord(max(_shift_windows(u, max_shift, depth)))


def inf_of_shifts(u, max_shift: int = DEFAULT_MAX_SHIFT, depth: int = 50) -> BitWord:
    return BitWord(min(_shift_windows(u, max_shift, depth)))


# -------------------------------------------------------------- mirror lemma

def mirror_prefix_completion(t_prefix: str) -> EventuallyPeriodicWord | None:
    """The forced completion ``(m ~m)^inf`` of a prefix beginning ``m ~m``.

    A member of Gamma that begins with ``m ~m`` for a nonempty word ``m`` is
    ``(m ~m)^inf``.  The shortest such ``m`` is used; ``None`` when the
    prefix has no such shape.
    """
    t = str(BitWord(t_prefix))
    if len(t) < 2:
        raise ValueError("need a prefix of length >= 2")
    for n in range(1, len(t) // 2 + 1):
        m = t[:n]
        mbar = complement(BitWord(m))
        if t[n:2 * n] == mbar:
            return EventuallyPeriodicWord("", m + mbar)
    return None


def check_mirror_completion(u, depth: int) -> bool | None:
    """Does ``u`` agree with its mirror completion on ``depth`` symbols?

    ``None`` when the first ``depth`` symbols have no ``m ~m`` shape.
    """
    prefix = as_stream(u).prefix(depth)
    completion = mirror_prefix_completion(prefix)
    if completion is None:
        return None
    return completion.prefix(depth) == prefix


# ------------------------------------------------------------------ dispatch

_EXACT = {"gamma": gamma_exact, "gamma1": gamma1_exact, "xi": xi_exact}
_PREFIX = {"gamma": gamma_prefix, "gamma1": gamma1_prefix, "xi": xi_prefix}


def check(set_name: str, u, max_shift: int = DEFAULT_MAX_SHIFT,
          depth: int = DEFAULT_DEPTH) -> Verdict:
    """Exact verdict for eventually periodic input, prefix verdict otherwise."""
    if set_name not in _EXACT:
        raise ValueError(f"unknown set {set_name!r}")
    if isinstance(u, PeriodicStream):
        u = u.source
    if isinstance(u, EventuallyPeriodicWord):
        return _EXACT[set_name](u)
    if isinstance(u, SequenceStream):
        depth = min(depth, u.known_depth)
        max_shift = min(max_shift, depth - 1)
    return _PREFIX[set_name](u, max_shift, depth)
