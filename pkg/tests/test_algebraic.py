from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from univoque.algebraic import RealAlgebraic, greedy_expansion_algebraic
from univoque.beta import greedy_expansion_exact
from univoque.surd import QuadraticSurd


def test_known_expansions():
    assert greedy_expansion_algebraic(RealAlgebraic([-1, -1, 1]), 8).digits(8) == "11000000"
    assert greedy_expansion_algebraic(RealAlgebraic([-1, -1, -1, 1]), 8).digits(8) == "11100000"
    assert greedy_expansion_algebraic(RealAlgebraic([-3, 2]), 6).digits(6) == "101000"


def test_domain_errors():
    with pytest.raises(ValueError):
        RealAlgebraic([5])
    with pytest.raises(ValueError):
        RealAlgebraic([-4, 0, 1])
    with pytest.raises(ValueError):
        RealAlgebraic([1, 0, 1])


def test_isolating_interval_has_sign_change():
    b = RealAlgebraic([-1, -1, -1, 1])
    for _ in range(40):
        b.refine()
    lo, hi = b.lo, b.hi
    assert oracles.poly_value([-1, -1, -1, 1], lo) < 0 < oracles.poly_value([-1, -1, -1, 1], hi)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(-6, 6), st.integers(2, 30))
def test_agrees_with_surd_path(r, a, d):
    # beta = (a + sqrt d) / r, root of r^2 x^2 - 2 a r x + a^2 - d
    beta = QuadraticSurd(a, 1, d, r)
    if not 1 < beta < 2 or beta.is_rational:
        return
    alg = RealAlgebraic([a * a - d, -2 * a * r, r * r])
    assert greedy_expansion_algebraic(alg, 40).digits(40) == greedy_expansion_exact(beta, 40).digits(40)


@settings(max_examples=30, deadline=None)
@given(st.fractions(Fraction(101, 100), Fraction(199, 100)))
def test_rational_bases_match_fraction_greedy(q):
    alg = RealAlgebraic([-q.numerator, q.denominator])
    got = greedy_expansion_algebraic(alg, 25).digits(25)
    assert got == greedy_expansion_exact(q, 25).digits(25)
    assert oracles.series_value(got, q) <= 1
