"""Acceptance battery: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -s`` to see the lines, or execute
this file directly.
"""
import random
import time
from fractions import Fraction

import oracles
from univoque.beta import beta_from_expansion, is_univoque_expansion
from univoque.harness import (
    default_slopes, prop1_expected, sturmian_diagnostics, verify_mirror_lemma, verify_prop1,
    verify_prop3,
)
from univoque.membership import FailsAt, Holds, confirm_witness, gamma_prefix
from univoque.sturmian import Slope, characteristic_stream
from univoque.words import (
    BitWord, EventuallyPeriodicWord, complement, cosnard_forward, cosnard_inverse,
    lex_compare_exact, prepend, shift,
)

MAX_SHIFT, DEPTH = 1000, 10_000


def verdict(name: str, ok: bool, detail: str):
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, detail


def test_prop1_periodic_members():
    t0 = time.perf_counter()
    r = verify_prop1(12)
    dt = time.perf_counter() - t0
    accepted = {EventuallyPeriodicWord("", w[1:-2]) for w in r.summary["accepted"]}
    ok = r.passed and accepted == prop1_expected(12) and len(accepted) == 12 and dt < 10
    verdict("prop1 periodic members", ok,
            f"{len(accepted)} accepted of {r.cases}, {len(r.failures)} failures, {dt:.2f} s")


def test_prop2_positive():
    worst, bad = 0.0, []
    slopes = default_slopes()
    for alpha in slopes:
        assert alpha.value > Fraction(1, 2) and max(alpha.directives.tail) <= 3
        t0 = time.perf_counter()
        v = gamma_prefix(prepend("1", characteristic_stream(alpha)), MAX_SHIFT, DEPTH)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if not isinstance(v, Holds) or dt >= 5:
            bad.append(str(alpha))
    verdict("prop2 positive", not bad and len(slopes) == 10,
            f"{len(slopes)} slopes hold, slowest {worst:.2f} s" if not bad else f"failed {bad}")


def _negatives(alpha: Slope):
    c = characteristic_stream(alpha)
    yield "c", c
    yield "0c", prepend("0", c)
    for k in range(1, 6):
        yield f"S^{k}c", shift(c, k)
    yield "1c'", prepend("1", characteristic_stream(Slope(1 - alpha.value)))


def test_prop2_negative_battery():
    count, bad = 0, []
    for alpha in default_slopes():
        for label, stream in _negatives(alpha):
            count += 1
            v = gamma_prefix(stream, MAX_SHIFT, DEPTH)
            s = stream.prefix(DEPTH)
            if not (isinstance(v, FailsAt) and v.position is not None
                    and confirm_witness(stream, v, complement(BitWord(s)), s)):
                bad.append(f"{label}[{alpha}]")
    verdict("prop2 negative battery", not bad,
            f"{count} sequences each give a confirmed (k, side, position)" if not bad
            else f"no witness for {bad}")


def test_mirror_prefix_lemma():
    r = verify_mirror_lemma(max_m=4, max_period=8)
    verdict("mirror-prefix lemma", r.passed and r.cases > 0,
            f"{r.cases} cases over {r.summary['gamma_members_scanned']} Gamma members, "
            f"{len(r.failures)} failures")


def test_beta_round_trip():
    r = verify_prop3(default_slopes(), terms=2000, digits_out=500,
                     width=Fraction(1, 2**1200), max_shift=MAX_SHIFT, depth=DEPTH)
    matches = r.summary["match_length"]
    univoque = all(
        isinstance(is_univoque_expansion(prepend("1", characteristic_stream(a)), MAX_SHIFT, DEPTH),
                   Holds) for a in default_slopes())
    ok = r.passed and len(matches) == 10 and min(matches.values()) >= 500 and univoque
    verdict("beta round trip", ok,
            f"{len(matches)} inputs, min digits recovered {min(matches.values(), default=0)}, "
            f"{len(r.failures)} failures")


def test_algebraic_anchors():
    width = Fraction(1, 10**30)
    rows = []
    for period, coeffs in (("10", [-1, -1, 1]), ("110", [-1, -1, -1, 1])):
        iv = beta_from_expansion(EventuallyPeriodicWord("", period), 200, width)
        change = oracles.poly_value(coeffs, iv.lo) * oracles.poly_value(coeffs, iv.hi) < 0
        rows.append(change and iv.width <= width)
    verdict("algebraic anchors", all(rows), f"golden {rows[0]}, tribonacci {rows[1]}")


def test_oracle_equivalence():
    rng = random.Random(20240601)

    def word(lo, hi):
        return "".join(rng.choice("01") for _ in range(rng.randint(lo, hi)))

    disagree = 0
    for _ in range(10_000):
        p1, q1, p2, q2 = word(0, 12), word(1, 12), word(0, 12), word(1, 12)
        got = lex_compare_exact(EventuallyPeriodicWord(p1, q1), EventuallyPeriodicWord(p2, q2))
        disagree += int(got) != oracles.naive_cmp(p1, q1, p2, q2)
    broken = 0
    for i in range(1000):
        w = BitWord(format(rng.getrandbits(100_000), "0100000b"))
        y = cosnard_forward(w)
        broken += cosnard_inverse(y) != w
        if i < 5:
            broken += y != oracles.running_parity(w)
    verdict("oracle equivalence", disagree == 0 and broken == 0,
            f"{disagree} lex disagreements in 10^4 pairs, {broken} Cosnard failures in 10^3 words")


def test_sturmian_diagnostics():
    slopes = default_slopes()
    r = sturmian_diagnostics(slopes, length=600, max_n=20, max_witness=200)
    independent = all(
        all(oracles.complexity(w, n) == n + 1 for n in range(1, 21)) and oracles.balanced(w, 200)
        for w in (characteristic_stream(a).prefix(600) for a in slopes))
    verdict("sturmian diagnostics", r.passed and independent and len(slopes) == 10,
            f"{r.cases} checks, {len(r.failures)} failures, naive oracle agrees: {independent}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
