"""Batch checks: periodic members of Gamma ∩ Xi (prop1), Sturmian members of
Gamma (prop2), expansion round trips (prop3) and the mirror-prefix rule.

Each suite returns a :class:`SuiteReport`; case order and witnesses are
fixed, so two runs with the same parameters differ only in ``elapsed_ms``.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .beta import NeedsRefinement, TargetWidthUnreachable, is_univoque_expansion, round_trip
from .membership import (
    DEFAULT_DEPTH, DEFAULT_MAX_SHIFT, FailsAt, Holds, gamma_exact, gamma_prefix, xi_exact,
)
from .sturmian import CFDirectives, Slope, characteristic_stream, slope_of_directives
from .words import (
    EventuallyPeriodicWord, as_stream, complement, factor_complexity, find_unbalanced_pair,
    prepend, shift,
)

__all__ = [
    "SuiteReport", "default_slopes", "verify_prop1", "verify_prop2",
    "verify_mirror_lemma", "verify_prop3", "prop1_expected", "sturmian_diagnostics",
]


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, literal: str, expected, got):
        self.failures.append({"input": literal, "expected": expected, "got": got})

    def to_json(self) -> dict:
        return {"suite": self.suite, "params": self.params, "cases": self.cases,
                "failures": self.failures, "elapsed_ms": self.elapsed_ms,
                "summary": self.summary}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


class _Timer:
    def __init__(self, report: SuiteReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter_ns()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = (time.perf_counter_ns() - self.t0) // 1_000_000
        return False


def _verdict_label(v) -> str:
    return json.dumps(v.to_json(), sort_keys=True)


# --------------------------------------------------------------------- slopes

def default_slopes(above_half: bool = True, count: int = 10) -> list[Slope]:
    """Quadratic slopes with small eventually periodic continued fractions.

    ``[0; 1, (t)*]`` lies above 1/2 and ``[0; 2, (t)*]`` below; tails run over
    words in {1,2,3} of length <= 3 in (length, lexicographic) order, and
    repeated values are dropped.
    """
    first = 1 if above_half else 2
    seen, out = set(), []
    for length in (1, 2, 3):
        for tail in itertools.product((1, 2, 3), repeat=length):
            s = slope_of_directives(CFDirectives((0, first), tail))
            if s.value in seen:
                continue
            seen.add(s.value)
            out.append(s)
            if len(out) == count:
                return out
    return out


def _mirror(s: Slope) -> Slope:
    # 1 - alpha, the complementary slope
    return Slope(1 - s.value)


# --------------------------------------------------------------------- prop 1

def prop1_expected(max_period: int) -> set[EventuallyPeriodicWord]:
    out = {EventuallyPeriodicWord("", "1")}
    out |= {EventuallyPeriodicWord("", "1" * j + "0") for j in range(1, max_period)}
    return out


def _primitive_words(max_len: int):
    for n in range(1, max_len + 1):
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            if (w + w).find(w, 1) == n:
                yield w


def verify_prop1(max_period: int = 12, max_preperiod: int = 0) -> SuiteReport:
    """Gamma ∩ Xi on periodic words is {1^inf} ∪ {(1^j 0)^inf}.

    Enumerates every primitive period up to ``max_period`` (and, when
    ``max_preperiod > 0``, every normalized preperiod up to that length).
    """
    report = SuiteReport("prop1", {"max_period": max_period, "max_preperiod": max_preperiod})
    with _Timer(report):
        expected = prop1_expected(max_period)
        accepted = []
        seen = set()
        for pre_len in range(max_preperiod + 1):
            for pre in map("".join, itertools.product("01", repeat=pre_len)):
                for per in _primitive_words(max_period):
                    u = EventuallyPeriodicWord(pre, per)
                    if u in seen:
                        continue
                    seen.add(u)
                    report.cases += 1
                    inside = bool(gamma_exact(u)) and bool(xi_exact(u))
                    if inside:
                        accepted.append(str(u))
                    if inside != (u in expected):
                        report.fail(str(u), u in expected, inside)
        report.summary = {"accepted": accepted, "accepted_count": len(accepted)}
    return report


# --------------------------------------------------------------------- prop 2

def _prop2_negatives(alpha: Slope):
    c = characteristic_stream(alpha)
    yield f"c[{alpha}]", c
    yield f"0c[{alpha}]", prepend("0", c)
    for k in range(1, 6):
        yield f"S^{k}c[{alpha}]", shift(c, k)


def verify_prop2(slopes: list[Slope] | None = None, max_shift: int = DEFAULT_MAX_SHIFT,
                 depth: int = DEFAULT_DEPTH) -> SuiteReport:
    """A Sturmian ``u`` is in Gamma iff ``u = 1v``, ``v`` characteristic, ``v_0 = 1``.

    Positive: ``1 c_alpha`` for ``alpha > 1/2`` must hold on the prefix.
    Negative: ``1 c_alpha`` for ``alpha < 1/2``, and ``c_alpha``, ``0 c_alpha``,
    ``S^k c_alpha`` (k = 1..5) for every slope, plus ``1 c_{1-alpha}`` for
    each slope above 1/2, must produce a witness.
    """
    slopes = default_slopes(True) if slopes is None else slopes
    report = SuiteReport("prop2", {"slopes": [str(s) for s in slopes],
                                   "max_shift": max_shift, "depth": depth})
    with _Timer(report):
        witnesses = {}
        for alpha in slopes:
            if alpha.is_rational:
                raise ValueError(f"slope {alpha} is rational")
            c = characteristic_stream(alpha)
            one_c = prepend("1", c)
            label = f"1c[{alpha}]"
            v = gamma_prefix(one_c, max_shift, depth)
            report.cases += 1
            if alpha.value > Fraction(1, 2):
                if not isinstance(v, Holds):
                    report.fail(label, "holds", _verdict_label(v))
            elif not isinstance(v, FailsAt):
                report.fail(label, "fails", _verdict_label(v))
            else:
                witnesses[label] = v.to_json()
            if alpha.value > Fraction(1, 2):
                low = _mirror(alpha)
                label = f"1c[{low}]"
                v = gamma_prefix(prepend("1", characteristic_stream(low)), max_shift, depth)
                report.cases += 1
                if isinstance(v, FailsAt):
                    witnesses[label] = v.to_json()
                else:
                    report.fail(label, "fails", _verdict_label(v))
            for label, stream in _prop2_negatives(alpha):
                v = gamma_prefix(stream, max_shift, depth)
                report.cases += 1
                if isinstance(v, FailsAt):
                    witnesses[label] = v.to_json()
                else:
                    report.fail(label, "fails", _verdict_label(v))
        report.summary = {"witnesses": witnesses}
    return report


# --------------------------------------------------------------- mirror lemma

def verify_mirror_lemma(max_m: int = 4, depth: int = 64, max_period: int | None = None,
                        max_preperiod: int | None = None) -> SuiteReport:
    """A Gamma member beginning ``m ~m`` equals ``(m ~m)^inf``.

    For each ``m`` (first symbol 1, ``|m| <= max_m``) the candidate
    ``(m ~m)^inf`` is decided exactly and by prefix scan, which must agree.
    Then every eventually periodic word with period ``<= max_period``
    (default ``2 max_m``) and preperiod ``<= max_preperiod`` (default
    ``max_m``) that lies in Gamma and begins ``m ~m`` must be the candidate.
    """
    max_period = 2 * max_m if max_period is None else max_period
    max_preperiod = max_m if max_preperiod is None else max_preperiod
    report = SuiteReport("mirror", {"max_m": max_m, "depth": depth, "max_period": max_period,
                                    "max_preperiod": max_preperiod})
    with _Timer(report):
        candidates = {}
        for n in range(1, max_m + 1):
            for rest in itertools.product("01", repeat=n - 1):
                m = "1" + "".join(rest)
                mm = m + complement(m)
                cand = EventuallyPeriodicWord("", mm)
                exact = bool(gamma_exact(cand))
                window = max(depth, 4 * len(mm))
                prefix = gamma_prefix(as_stream(cand), window // 2, window)
                report.cases += 1
                if exact != isinstance(prefix, Holds):
                    report.fail(str(cand), exact, _verdict_label(prefix))
                candidates[mm] = (cand, exact)
        members = []
        seen = set()
        for pre_len in range(max_preperiod + 1):
            for pre in map("".join, itertools.product("01", repeat=pre_len)):
                for per in _primitive_words(max_period):
                    u = EventuallyPeriodicWord(pre, per)
                    if u in seen:
                        continue
                    seen.add(u)
                    if not gamma_exact(u):
                        continue
                    members.append(u)
        for mm, (cand, exact) in candidates.items():
            for u in members:
                if not u.prefix(len(mm)) == mm:
                    continue
                report.cases += 1
                if u != cand:
                    report.fail(str(u), str(cand), str(u))
        report.summary = {
            "gamma_members_scanned": len(members),
            "candidates_in_gamma": sorted({str(c) for c, ok in candidates.values() if ok}),
        }
    return report


# --------------------------------------------------------------------- prop 3

def verify_prop3(slopes: list[Slope] | None = None, terms: int = 2000,
                 digits_out: int = 500, width: Fraction | None = None,
                 max_shift: int = DEFAULT_MAX_SHIFT, depth: int = DEFAULT_DEPTH,
                 refinements: int = 2) -> SuiteReport:
    """``beta`` is univoque and self-Sturmian iff its expansion of 1 is ``1v``.

    For each slope ``alpha > 1/2``: ``u = 1 c_alpha`` must survive the round
    trip expansion -> beta -> greedy digits for ``digits_out`` digits and
    pass the Gamma_1 scan.  For ``1 - alpha`` (below 1/2) the Gamma scan
    must fail.
    """
    slopes = default_slopes(True) if slopes is None else slopes
    width = Fraction(1, 1 << 1200) if width is None else Fraction(width)
    report = SuiteReport("prop3", {"slopes": [str(s) for s in slopes], "terms": terms,
                                   "digits_out": digits_out, "width": str(width),
                                   "max_shift": max_shift, "depth": depth})
    with _Timer(report):
        matches = {}
        for alpha in slopes:
            if not alpha.value > Fraction(1, 2):
                raise ValueError(f"slope {alpha} is not above 1/2")
            u = prepend("1", characteristic_stream(alpha))
            label = f"1c[{alpha}]"
            report.cases += 1
            try:
                rt = round_trip(u, terms, digits_out, width, refinements=refinements)
                matches[label] = rt.match_length
                if rt.match_length != digits_out:
                    report.fail(label, digits_out, rt.match_length)
            except (NeedsRefinement, TargetWidthUnreachable) as exc:
                report.fail(label, digits_out, str(exc))
            report.cases += 1
            v = is_univoque_expansion(u, max_shift, depth)
            if not isinstance(v, Holds):
                report.fail(label, "univoque holds", _verdict_label(v))
            low = _mirror(alpha)
            neg_label = f"1c[{low.value}]"
            report.cases += 1
            v = gamma_prefix(prepend("1", characteristic_stream(low)), max_shift, depth)
            if not isinstance(v, FailsAt):
                report.fail(neg_label, "fails", _verdict_label(v))
        report.summary = {"match_length": matches}
    return report


# ----------------------------------------------------------------- diagnostics

def sturmian_diagnostics(slopes: list[Slope], length: int = 600, max_n: int = 20,
                         max_witness: int = 200) -> SuiteReport:
    """Complexity ``n + 1`` and balance on characteristic prefixes."""
    report = SuiteReport("diagnostics", {"slopes": [str(s) for s in slopes], "length": length,
                                         "max_n": max_n, "max_witness": max_witness})
    with _Timer(report):
        for alpha in slopes:
            w = characteristic_stream(alpha).prefix(length)
            for n in range(1, max_n + 1):
                report.cases += 1
                got = factor_complexity(w, n)
                if got != n + 1:
                    report.fail(f"c[{alpha}] n={n}", n + 1, got)
            report.cases += 1
            t = find_unbalanced_pair(w, max_witness)
            if t is not None:
                report.fail(f"c[{alpha}]", None, str(t))
    return report
