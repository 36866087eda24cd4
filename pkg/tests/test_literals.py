from fractions import Fraction

import pytest

from univoque.literals import (
    LiteralError, format_fraction, parse_intercept, parse_polynomial, parse_sequence,
    parse_slope, parse_surd, parse_width,
)
from univoque.surd import QuadraticSurd
from univoque.words import BitWord, EventuallyPeriodicWord


def test_sequences():
    assert parse_sequence("110(10)*") == EventuallyPeriodicWord("110", "10")
    assert parse_sequence("1101") == BitWord("1101")
    assert parse_sequence("(1)*") == EventuallyPeriodicWord("", "1")
    for bad in ["", "12", "1(0", "()*", "(10)"]:
        with pytest.raises(LiteralError):
            parse_sequence(bad)


def test_sequence_roundtrip():
    for text in ["(10)*", "0(1)*", "1(1100)*"]:
        assert str(parse_sequence(text)) == text


def test_slopes():
    golden = QuadraticSurd(-1, 1, 5, 2)
    assert parse_slope("cf:[0;1,(1)*]").value == golden
    assert parse_slope("surd:(-1+1*sqrt5)/2").value == golden
    assert parse_slope("surd:(-1+sqrt5)/2").value == golden
    assert parse_slope("rat:3/7").value == Fraction(3, 7)
    assert parse_slope("cf:[0;2,3]").value == Fraction(3, 7)
    for bad in ["golden", "cf:[0;1,(0)*]", "rat:7/3", "surd:(1+1*sqrt5)/2", "cf:0;1"]:
        with pytest.raises(LiteralError):
            parse_slope(bad)


def test_intercepts_and_surds():
    assert parse_intercept("rat:1/3").value == Fraction(1, 3)
    assert parse_surd("(1-2*sqrt3)") == QuadraticSurd(1, -2, 3, 1)
    with pytest.raises(LiteralError):
        parse_intercept("rat:1")


def test_widths():
    assert parse_width("2^-1200") == Fraction(1, 2**1200)
    assert parse_width("1e-30") == Fraction(1, 10**30)
    assert parse_width("1/1000") == Fraction(1, 1000)
    for bad in ["0", "-1", "x"]:
        with pytest.raises(LiteralError):
            parse_width(bad)


def test_polynomials():
    assert parse_polynomial("x^3-x^2-x-1") == [-1, -1, -1, 1]
    assert parse_polynomial("2x - 3") == [-3, 2]
    assert parse_polynomial("x^2-x-1") == [-1, -1, 1]
    for bad in ["", "x^^2", "y+1"]:
        with pytest.raises(LiteralError):
            parse_polynomial(bad)


def test_format_fraction():
    assert format_fraction(Fraction(6, 4)) == "3/2"
