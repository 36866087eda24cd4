import random

import pytest
from hypothesis import given, strategies as st

import oracles
from univoque.words import (
    BitWord, EventuallyPeriodicWord, FiniteStream, FunctionStream, Ordering3, Undecided,
    as_stream, complement, cosnard_forward, cosnard_inverse, detect_purely_periodic,
    factor_complexity, find_unbalanced_pair, first_difference, lex_compare_exact,
    lex_compare_prefix, prepend, shift,
)

bits = st.text(alphabet="01", max_size=12)
period = st.text(alphabet="01", min_size=1, max_size=12)
epw = st.builds(EventuallyPeriodicWord, bits, period)


def test_bitword_validation():
    assert BitWord("0110").bit(1) == 1
    with pytest.raises(ValueError):
        BitWord("012")


def test_normal_form():
    u = EventuallyPeriodicWord("110", "1010")
    assert (u.preperiod, u.period) == ("1", "10")
    assert str(u) == "1(10)*"
    assert EventuallyPeriodicWord("0", "0") == EventuallyPeriodicWord("", "0")
    with pytest.raises(ValueError):
        EventuallyPeriodicWord("1", "")


def test_shift_and_complement_examples():
    u = EventuallyPeriodicWord("1", "10")
    assert shift(u, 1) == EventuallyPeriodicWord("", "10")
    assert complement(u) == EventuallyPeriodicWord("0", "01")
    assert prepend("0", EventuallyPeriodicWord("", "1")) == EventuallyPeriodicWord("0", "1")


def test_lex_compare_examples():
    a = EventuallyPeriodicWord("", "110")
    b = EventuallyPeriodicWord("", "10")
    assert lex_compare_exact(a, b) is Ordering3.GREATER
    assert lex_compare_exact(b, b) is Ordering3.EQUAL
    assert lex_compare_prefix(as_stream(a), as_stream(b), 8) is Ordering3.GREATER
    same = lex_compare_prefix(as_stream(b), as_stream(EventuallyPeriodicWord("10", "10")), 50)
    assert same == Undecided(50)


def test_first_difference():
    assert first_difference("0101", "0111") == 2
    assert first_difference("01", "01") is None


def test_cosnard_examples():
    assert cosnard_forward(BitWord("1101")) == "1001"
    assert cosnard_forward(EventuallyPeriodicWord("", "10")) == EventuallyPeriodicWord("", "1100")
    assert cosnard_inverse(EventuallyPeriodicWord("", "1")) == EventuallyPeriodicWord("1", "0")


def test_complexity_and_balance_examples():
    fib = "0100101001001010010100100101001001"
    assert [factor_complexity(fib, n) for n in range(1, 6)] == [2, 3, 4, 5, 6]
    assert find_unbalanced_pair(fib) is None
    assert find_unbalanced_pair("0011") == ""
    assert find_unbalanced_pair("0101110") == "1"
    with pytest.raises(ValueError):
        factor_complexity("01", 3)


def test_unbalanced_witness_on_block_periods():
    for a in range(2, 5):
        for b in range(2, 5):
            w = EventuallyPeriodicWord("", "0" * a + "1" * b).prefix(60)
            t = find_unbalanced_pair(w)
            assert t is not None
            assert "0" + t + "0" in w and "1" + t + "1" in w


def test_detect_purely_periodic():
    assert detect_purely_periodic(EventuallyPeriodicWord("", "10"))
    assert not detect_purely_periodic(EventuallyPeriodicWord("1", "0"))
    assert detect_purely_periodic(EventuallyPeriodicWord("0", "10"))


def test_streams():
    s = FunctionStream(lambda n: n % 3 == 0, known_depth=100)
    assert s.prefix(7) == "1001001"
    assert shift(s, 2).prefix(4) == "0100"
    assert prepend("11", s).prefix(4) == "1110"
    assert complement(s).prefix(3) == "011"
    assert FiniteStream("0110").known_depth == 4


@given(epw)
def test_complement_involution(u):
    assert complement(complement(u)) == u


@given(epw, st.integers(0, 30), st.integers(0, 30))
def test_shift_composes(u, i, j):
    assert shift(shift(u, i), j) == shift(u, i + j)
    assert shift(u, i).prefix(40) == u.prefix(40 + i)[i:]


@given(bits, period)
def test_normalization_idempotent_and_faithful(pre, per):
    u = EventuallyPeriodicWord(pre, per)
    assert EventuallyPeriodicWord(u.preperiod, u.period) == u
    assert u.prefix(100) == oracles.expand(pre, per, 100)


@given(bits, period, bits, period)
def test_lex_compare_matches_naive(p1, q1, p2, q2):
    got = lex_compare_exact(EventuallyPeriodicWord(p1, q1), EventuallyPeriodicWord(p2, q2))
    assert int(got) == oracles.naive_cmp(p1, q1, p2, q2)


@given(st.text(alphabet="01", max_size=200))
def test_cosnard_matches_naive_parity(x):
    assert cosnard_forward(BitWord(x)) == oracles.running_parity(x)
    assert cosnard_inverse(cosnard_forward(BitWord(x))) == x


@given(epw)
def test_cosnard_roundtrip_periodic(u):
    y = cosnard_forward(u)
    assert y.prefix(64) == oracles.running_parity(u.prefix(64))
    assert cosnard_inverse(y) == u


@given(st.text(alphabet="01", min_size=1, max_size=60), st.integers(1, 8))
def test_complexity_matches_naive(w, n):
    if n <= len(w):
        assert factor_complexity(w, n) == oracles.complexity(w, n)


@given(st.text(alphabet="01", max_size=40))
def test_balance_matches_naive(w):
    assert (find_unbalanced_pair(w) is None) == oracles.balanced(w, len(w))


def test_random_lex_pairs_seeded():
    rng = random.Random(7)
    for _ in range(500):
        parts = ["".join(rng.choice("01") for _ in range(rng.randint(lo, 10))) for lo in (0, 1, 0, 1)]
        u, v = EventuallyPeriodicWord(*parts[:2]), EventuallyPeriodicWord(*parts[2:])
        assert int(lex_compare_exact(u, v)) == oracles.naive_cmp(*parts)
