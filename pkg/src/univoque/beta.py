"""Expansions of 1 in a base ``beta`` in (1, 2), in both directions.

``beta_from_expansion`` encloses the unique ``beta`` with
``sum_{n>=1} u_n beta^-n = 1``; ``greedy_expansion`` turns an enclosure of
``beta`` back into digits.  Bases are only ever held as rational intervals.
The inner loops run in fixed-point integer arithmetic with every rounding
directed outward, so each bound they return is a certified rational bound;
nothing is evaluated in floating point.

Digit indexing: expansion digit ``n >= 1`` is index ``n - 1`` of the
underlying 0-indexed sequence (see :class:`ExpansionDigits`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .membership import (
    DEFAULT_DEPTH, DEFAULT_MAX_SHIFT, FailsAt, Holds, Inconclusive, Verdict,
    gamma1_exact, gamma1_prefix, gamma_exact, gamma_prefix, xi_exact, xi_prefix,
)
from .surd import QuadraticSurd
from .words import (
    BitWord, EventuallyPeriodicWord, PeriodicStream, SequenceStream, as_stream,
    factor_complexity, find_unbalanced_pair, shift,
)

__all__ = [
    "RationalInterval", "ExpansionDigits", "NeedsRefinement", "TargetWidthUnreachable",
    "beta_from_expansion", "greedy_expansion", "greedy_expansion_exact",
    "is_univoque_expansion", "self_sturmian_check", "SelfSturmianReport",
    "round_trip", "RoundTrip", "default_width", "certify_enclosure",
]


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: RationalInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def in_open_unit_range(self) -> bool:
        """True when the enclosure lies strictly inside (1, 2)."""
        return 1 < self.lo and self.hi < 2


class ExpansionDigits:
    """Digits ``u_1, u_2, ...`` of an expansion of 1.

    Wraps a 0-indexed sequence (``BitWord``, eventually periodic word or
    stream): digit ``n`` is symbol ``n - 1``.  This is the only place the
    two conventions meet.
    """

    def __init__(self, sequence):
        if isinstance(sequence, ExpansionDigits):
            sequence = sequence.sequence
        if isinstance(sequence, PeriodicStream):
            sequence = sequence.source
        if not isinstance(sequence, (EventuallyPeriodicWord, SequenceStream)):
            sequence = BitWord(sequence)
        self.sequence = sequence

    def digit(self, n: int) -> int:
        if n < 1:
            raise IndexError("expansion digits start at n = 1")
        return int(self.digits(n)[n - 1])

    def digits(self, count: int) -> str:
        """``u_1 ... u_count`` as a string."""
        seq = self.sequence
        if isinstance(seq, BitWord):
            if count > len(seq):
                raise ValueError(f"only {len(seq)} digits available")
            return str(seq[:count])
        return seq.prefix(count)

    @property
    def is_eventually_periodic(self) -> bool:
        return isinstance(self.sequence, EventuallyPeriodicWord)

    def __repr__(self):
        return f"ExpansionDigits({self.sequence!r})"


class NeedsRefinement(ArithmeticError):
    """The enclosure of ``beta`` cannot decide digit ``at_digit``."""

    def __init__(self, at_digit: int, digits: str = ""):
        super().__init__(f"enclosure of beta cannot decide digit {at_digit}")
        self.at_digit = at_digit
        self.digits = digits


class TargetWidthUnreachable(ArithmeticError):
    """The truncation error alone is wider than the requested width."""

    def __init__(self, terms: int, required_terms: int | None, width: Fraction):
        hint = (f"about {required_terms} needed" if required_terms is not None
                else "the lower end is stuck at 1, so no term count is known to suffice")
        super().__init__(f"{terms} terms cannot reach width {width}; {hint}")
        self.terms = terms
        self.required_terms = required_terms


# ------------------------------------------------------- fixed-point kernels
#
# A fixed-point value X at precision P stands for X / 2^P.  ``up`` selects
# upward (ceiling) rounding; otherwise floor.  All inputs are non-negative.

def _div(num: int, den: int, up: bool) -> int:
    return -(-num // den) if up else num // den


def _shr(x: int, p: int, up: bool) -> int:
    return -((-x) >> p) if up else x >> p


def _poly(digits: str, x: int, p: int, up: bool) -> int:
    """Bound on ``sum_n u_n x^n`` by Horner's rule, rounding one way."""
    one = 1 << p
    acc = 0
    for ch in reversed(digits):
        if ch == "1":
            acc += one
        acc = _shr(acc * x, p, up)
    return acc


def _pow(x: int, e: int, p: int, up: bool) -> int:
    result, base = 1 << p, x
    while e:
        if e & 1:
            result = _shr(result * base, p, up)
        e >>= 1
        if e:
            base = _shr(base * base, p, up)
    return result


class _Evaluator:
    """Certified comparisons of ``g(beta) = sum_{n<=T} u_n beta^-n`` with 1."""

    _MAX_DOUBLINGS = 3

    def __init__(self, digits: str, grid_bits: int):
        self.digits = digits
        self.terms = len(digits)
        self.k = grid_bits

    def _recip(self, c: int, p: int, up: bool) -> int:
        # 1/beta for beta = c / 2^k
        return _div(1 << (self.k + p), c, up)

    def _g_bounds(self, c: int, p: int, with_tail: bool) -> tuple[int, int]:
        xl, xu = self._recip(c, p, False), self._recip(c, p, True)
        lo, hi = _poly(self.digits, xl, p, False), _poly(self.digits, xu, p, True)
        if with_tail:
            # tail bound beta^-T / (beta - 1) = x^(T+1) / (1 - x)
            one = 1 << p
            if xu >= one:
                return lo, None
            hi += _div(_pow(xu, self.terms + 1, p, True) << p, one - xu, True)
            if xl < one:
                lo += _div(_pow(xl, self.terms + 1, p, False) << p, one - xl, False)
        return lo, hi

    def _exact_g(self, c: int) -> Fraction:
        x = Fraction(1 << self.k, c)
        acc = Fraction(0)
        for ch in reversed(self.digits):
            acc = (acc + (ch == "1")) * x
        return acc

    def _decide(self, c: int, with_tail: bool, want_ge: bool) -> bool:
        p = self.k + 64
        for _ in range(self._MAX_DOUBLINGS + 1):
            lo, hi = self._g_bounds(c, p, with_tail)
            one = 1 << p
            if want_ge:
                if lo >= one:
                    return True
                if hi is not None and hi < one:
                    return False
            else:
                if hi is not None and hi <= one:
                    return True
                if lo > one:
                    return False
            p *= 2
        # an exact tie at a grid point: settle it with rationals
        value = self._exact_g(c)
        if with_tail:
            beta = Fraction(c, 1 << self.k)
            value += beta ** -self.terms / (beta - 1)
        return value >= 1 if want_ge else value <= 1

    def lower_ok(self, c: int) -> bool:
        """g(c/2^k) >= 1, i.e. ``c/2^k`` lies at or below the root."""
        return self._decide(c, False, True)

    def upper_ok(self, c: int) -> bool:
        """g(c/2^k) + tail(c/2^k) <= 1: ``c/2^k`` lies at or above the root."""
        if c <= 1 << self.k:
            return False
        return self._decide(c, True, False)


def _approx_root(digits: str, p: int) -> int:
    """Fixed-point approximation of the x in (1/2, 1] with sum u_n x^n = 1."""
    one = 1 << p
    # coarse bisection at 64 bits, then Newton at full precision
    q = 64
    lo, hi = 1 << (q - 1), 1 << q
    for _ in range(q):
        mid = (lo + hi) // 2
        if _poly(digits, mid, q, False) >= 1 << q:
            hi = mid
        else:
            lo = mid
    x = hi << (p - q) if p >= q else hi >> (q - p)
    for _ in range(64):
        # Horner for G(x) = sum u_n x^n and G'(x) together; constant term is 0
        val = deriv = 0
        for ch in reversed(digits):
            deriv = ((deriv * x) >> p) + val
            val = ((val * x) >> p) + (one if ch == "1" else 0)
        deriv = ((deriv * x) >> p) + val
        val = (val * x) >> p
        if deriv == 0:
            break
        step = ((val - one) << p) // deriv
        x -= step
        if abs(step) <= 2:
            break
    return x


def _grid_search(pred: Callable[[int], bool], guess: int, lo: int, hi: int,
                 want_max: bool) -> int:
    """Extreme grid point satisfying a monotone predicate.

    ``want_max``: pred holds on ``[lo, r]`` and the largest such point is
    returned; otherwise pred holds on ``[r, hi]`` and the smallest is.
    Gallops away from ``guess`` and finishes by bisection.
    """
    guess = min(max(guess, lo), hi)
    inside = pred(guess)
    direction = (1 if inside else -1) * (1 if want_max else -1)
    good, bad = (guess, None) if inside else (None, guess)
    step = 1
    while True:
        cand = guess + direction * step
        if cand < lo or cand > hi:
            edge = lo if cand < lo else hi
            if pred(edge) == inside:
                return edge
            cand = edge
        if pred(cand) == inside:
            if inside:
                good = cand
            else:
                bad = cand
            step *= 2
            continue
        if inside:
            bad = cand
        else:
            good = cand
        break
    # bisect between good and bad
    while abs(good - bad) > 1:
        mid = (good + bad) // 2
        if pred(mid):
            good = mid
        else:
            bad = mid
    return good


def _grid_bits(width: Fraction) -> int:
    # smallest k with 2^-k <= width / 4
    need = -(-4 * width.denominator // width.numerator)
    return max(8, (need - 1).bit_length())


def _required_terms(lo: Fraction, width: Fraction) -> int | None:
    # rough N with lo^-N / (lo - 1) <= width / 4, by doubling
    if lo <= 1:
        return None
    p = _grid_bits(width) + 32
    x = _div(lo.denominator << p, lo.numerator, True)
    limit = (width / 4 * (lo - 1)) * (1 << p)
    n = 1
    while _pow(x, n, p, True) > limit:
        n *= 2
    return n


def beta_from_expansion(u, terms: int, target_width: Fraction) -> RationalInterval:
    """Certified enclosure of the ``beta`` in (1, 2] solving ``sum u_n beta^-n = 1``.

    With ``g`` the ``terms``-term truncated sum and ``tail(b) =
    b^-terms / (b - 1)``, the result ``[lo, hi]`` satisfies
    ``g(lo) >= 1`` and ``g(hi) + tail(hi) <= 1``, which traps the root of
    the full series.  Endpoints are the tightest such points on the dyadic
    grid of spacing ``2^-k`` (``2^-k <= target_width / 4``), so shrinking the
    width or adding terms only ever produces nested intervals.
    """
    digits_src = ExpansionDigits(u)
    target_width = Fraction(target_width)
    if target_width <= 0:
        raise ValueError("target width must be positive")
    if terms < 1:
        raise ValueError("need at least one term")
    digits = digits_src.digits(terms)
    if digits[0] != "1":
        raise ValueError("the first digit must be 1: otherwise no base in (1, 2) works")
    seq = digits_src.sequence
    if isinstance(seq, EventuallyPeriodicWord) and seq == EventuallyPeriodicWord("1", "0"):
        raise ValueError("1 0^inf sums to 1 only at beta = 1, outside (1, 2]")
    k = _grid_bits(target_width)
    ev = _Evaluator(digits, k)
    p = k + 32
    x = _approx_root(digits, p)
    one_k, two_k = 1 << k, 1 << (k + 1)
    guess = (1 << (k + p)) // x if x else two_k
    lo_c = _grid_search(ev.lower_ok, guess, one_k, two_k, want_max=True)
    hi_c = _grid_search(ev.upper_ok, max(lo_c, guess), lo_c, two_k, want_max=False)
    enclosure = RationalInterval(Fraction(lo_c, one_k), Fraction(hi_c, one_k))
    if enclosure.width > target_width:
        raise TargetWidthUnreachable(terms, _required_terms(enclosure.lo, target_width),
                                     target_width)
    return enclosure


def certify_enclosure(u, terms: int, enclosure: RationalInterval) -> tuple[bool, bool]:
    """Re-check an enclosure with plain rationals.

    Returns ``(g(lo) >= 1, g(hi) + tail(hi) <= 1)``.  Slow; meant for tests.
    """
    digits = ExpansionDigits(u).digits(terms)

    def g(b: Fraction) -> Fraction:
        x, acc = 1 / b, Fraction(0)
        for ch in reversed(digits):
            acc = (acc + (ch == "1")) * x
        return acc

    lo, hi = enclosure.lo, enclosure.hi
    tail = hi ** -terms / (hi - 1) if hi > 1 else None
    return g(lo) >= 1, tail is not None and g(hi) + tail <= 1


# ---------------------------------------------------------------- greedy side

Refine = Callable[[RationalInterval], Optional[RationalInterval]]


def _greedy_once(beta: RationalInterval, count: int) -> tuple[str, int | None]:
    width = beta.width
    bits = 64 if width == 0 else max(64, _grid_bits(width))
    p = bits + 64
    one = 1 << p
    b_lo = (beta.lo.numerator << p) // beta.lo.denominator
    b_hi = -(-(beta.hi.numerator << p) // beta.hi.denominator)
    r_lo = r_hi = one
    out = []
    for n in range(1, count + 1):
        y_lo = (b_lo * r_lo) >> p
        y_hi = -((-(b_hi * r_hi)) >> p)
        if y_lo >= one:
            out.append("1")
            r_lo, r_hi = y_lo - one, y_hi - one
        elif y_hi < one:
            out.append("0")
            r_lo, r_hi = y_lo, y_hi
        else:
            return "".join(out), n
    return "".join(out), None


def greedy_expansion(beta: RationalInterval, count: int,
                     refine: Refine | None = None) -> ExpansionDigits:
    """Greedy expansion of 1 for every base in the enclosure ``beta``.

    Digit ``n`` is 1 iff ``beta * r_{n-1} >= 1`` with ``r_0 = 1`` and
    ``r_n = beta * r_{n-1} - d_n``.  A digit is emitted only when the whole
    enclosure forces it.  When the enclosure straddles a decision,
    ``refine`` is asked for a narrower enclosure; if it has none
    (returns ``None`` or is absent) :class:`NeedsRefinement` is raised.
    """
    if not (1 < beta.lo and beta.hi < 2):
        raise ValueError(f"base enclosure [{beta.lo}, {beta.hi}] is not inside (1, 2)")
    while True:
        digits, stuck = _greedy_once(beta, count)
        if stuck is None:
            return ExpansionDigits(BitWord(digits))
        narrower = refine(beta) if refine is not None else None
        if narrower is None or not beta.contains_interval(narrower) \
                or narrower.width >= beta.width:
            raise NeedsRefinement(stuck, digits)
        beta = narrower


def greedy_expansion_exact(beta: QuadraticSurd | Fraction, count: int) -> ExpansionDigits:
    """Greedy expansion of 1 for an exactly known quadratic base.

    Decides ties such as the golden ratio, where the remainder becomes 0.
    """
    if not 1 < beta < 2:
        raise ValueError(f"base {beta} is not in (1, 2)")
    r = QuadraticSurd.from_fraction(1) if isinstance(beta, QuadraticSurd) else Fraction(1)
    out = []
    for _ in range(count):
        if r == 0:
            out.append("0" * (count - len(out)))
            break
        y = beta * r
        if y >= 1:
            out.append("1")
            r = y - 1
        else:
            out.append("0")
            r = y
    return ExpansionDigits(BitWord("".join(out)))


def default_width(digits_out: int) -> Fraction:
    return Fraction(1, 1 << (2 * digits_out + 64))


# ------------------------------------------------------------ classification

def is_univoque_expansion(u, max_shift: int = DEFAULT_MAX_SHIFT,
                          depth: int = DEFAULT_DEPTH) -> Verdict:
    """Is ``u`` the expansion of 1 in a univoque base, i.e. is it in Gamma_1?

    For a univoque base the expansion of 1 is unique, so it is also the
    greedy one; the digit sequence ``u_1 u_2 ...`` is checked as the
    0-indexed sequence ``(u_{n+1})``.
    """
    seq = ExpansionDigits(u).sequence
    if isinstance(seq, EventuallyPeriodicWord):
        return gamma1_exact(seq)
    return gamma1_prefix(as_stream(seq), max_shift, depth)


@dataclass(frozen=True)
class SelfSturmianReport:
    gamma_verdict: Verdict
    v_prefix: str
    xi_verdict: Verdict
    v_begins_with_1: bool
    balanced: bool
    complexity_ok: bool
    aperiodicity: str  # "inconclusive-positive", "inconclusive-negative" or "periodic"

    @property
    def passed(self) -> bool:
        return (isinstance(self.gamma_verdict, Holds) and isinstance(self.xi_verdict, Holds)
                and self.v_begins_with_1 and self.balanced and self.complexity_ok
                and self.aperiodicity != "periodic")


def self_sturmian_check(u, max_shift: int = DEFAULT_MAX_SHIFT, depth: int = DEFAULT_DEPTH,
                        diagnostic_length: int = 600, max_factor: int = 20) -> SelfSturmianReport:
    """Evidence that ``u = 1v`` with ``v`` characteristic Sturmian beginning in 1.

    Aperiodicity of a stream cannot be decided from a prefix; the report
    says ``inconclusive-positive`` when the factor complexity is ``n + 1``
    on the inspected prefix.
    """
    seq = ExpansionDigits(u).sequence
    if isinstance(seq, EventuallyPeriodicWord):
        if seq.symbol_at(0) != 1:
            raise ValueError("u must begin with 1")
        v = shift(seq, 1)
        v_prefix = v.prefix(diagnostic_length)
        gamma_v, xi_v = gamma_exact(seq), xi_exact(v)
        aperiodic = "periodic"
    else:
        stream = as_stream(seq)
        if stream.symbol_at(0) != 1:
            raise ValueError("u must begin with 1")
        v = shift(stream, 1)
        gamma_v = gamma_prefix(stream, max_shift, depth)
        xi_v = xi_prefix(v, max_shift, depth - 1)
        v_prefix = v.prefix(diagnostic_length)
        aperiodic = None
    diag = v_prefix[:diagnostic_length]
    balanced = find_unbalanced_pair(diag) is None
    top = min(max_factor, len(diag))
    complexity_ok = all(factor_complexity(diag, n) == n + 1 for n in range(1, top + 1))
    if aperiodic is None:
        aperiodic = "inconclusive-positive" if complexity_ok else "inconclusive-negative"
    return SelfSturmianReport(gamma_v, diag, xi_v, diag[:1] == "1", balanced,
                              complexity_ok, aperiodic)


@dataclass(frozen=True)
class RoundTrip:
    beta: RationalInterval
    recovered: BitWord
    match_length: int


def round_trip(u, terms: int, digits_out: int, width: Fraction | None = None,
               refinements: int = 0) -> RoundTrip:
    """Expansion -> enclosure of beta -> greedy digits, and how far they agree.

    ``refinements`` allows that many retries, each squaring the width and
    doubling ``terms``, when a greedy digit is undecided.  With the default
    of 0 a :class:`NeedsRefinement` propagates to the caller.
    """
    src = ExpansionDigits(u)
    width = default_width(digits_out) if width is None else Fraction(width)
    beta = beta_from_expansion(src, terms, width)
    state = {"terms": terms, "width": width, "left": refinements}

    def refine(current: RationalInterval) -> RationalInterval | None:
        if state["left"] <= 0:
            return None
        state["left"] -= 1
        state["terms"] *= 2
        state["width"] = state["width"] ** 2
        try:
            return beta_from_expansion(src, state["terms"], state["width"])
        except (TargetWidthUnreachable, ValueError):
            return None

    recovered = greedy_expansion(beta, digits_out, refine).digits(digits_out)
    original = src.digits(digits_out)
    match = next((i for i, (a, b) in enumerate(zip(recovered, original)) if a != b),
                 digits_out)
    return RoundTrip(beta, BitWord(recovered), match)
