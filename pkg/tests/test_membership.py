import pytest
from hypothesis import given, settings, strategies as st

import oracles
from univoque.membership import (
    FailsAt, Holds, Inconclusive, Side, check, check_mirror_completion, confirm_witness,
    gamma1_exact, gamma1_prefix, gamma_exact, gamma_prefix, inf_of_shifts,
    mirror_prefix_completion, sup_of_shifts, xi_exact, xi_prefix, xi_v_exact, xi_v_prefix,
)
from univoque.sturmian import Intercept, Slope, characteristic_stream, mechanical_stream
from univoque.words import (
    EventuallyPeriodicWord as E, FunctionStream, as_stream, complement, prepend,
)

GOLDEN = Slope.surd(-1, 1, 5, 2)
FIB = Slope.surd(3, -1, 5, 2)

bits = st.text(alphabet="01", max_size=8)
period = st.text(alphabet="01", min_size=1, max_size=8)
epw = st.builds(E, bits, period)


def test_gamma_exact_examples():
    assert isinstance(gamma_exact(E("", "1")), Holds)
    assert isinstance(gamma_exact(E("", "110")), Holds)
    v = gamma_exact(E("", "100"))
    assert (v.k, v.side, v.position) == (1, Side.LOWER, 1)


def test_gamma1_exact_examples():
    assert not gamma1_exact(E("", "1"))
    assert not gamma1_exact(E("", "10"))
    assert gamma1_exact(E("1", "10"))


def test_xi_exact_examples():
    assert xi_exact(E("", "10"))
    v = xi_exact(E("", "100"))
    assert (v.k, v.side) == (1, Side.LOWER)


def test_gamma_prefix_examples():
    assert isinstance(gamma_prefix(prepend("1", characteristic_stream(GOLDEN))), Holds)
    v = gamma_prefix(characteristic_stream(GOLDEN))
    assert isinstance(v, FailsAt) and v.side is Side.UPPER
    v = gamma_prefix(FunctionStream(lambda n: 0))
    assert (v.k, v.side, v.position) == (0, Side.LOWER, 0)


def test_gamma1_prefix_examples():
    one_c = prepend("1", characteristic_stream(GOLDEN))
    assert isinstance(gamma1_prefix(one_c), Holds)
    v = gamma1_prefix(as_stream(E("", "110")), 10, 100)
    assert isinstance(v, Inconclusive) and v.k == 3
    v = gamma1_prefix(as_stream(E("11", "0")), 10, 100)
    assert (v.k, v.side, v.position) == (2, Side.LOWER, 2)


def test_xi_prefix_examples():
    assert isinstance(xi_prefix(characteristic_stream(FIB)), Holds)


def test_xi_v_examples():
    c = characteristic_stream(GOLDEN)
    assert isinstance(xi_v_prefix(mechanical_stream(GOLDEN, Intercept.rational(1, 3)), c), Holds)
    assert isinstance(xi_v_prefix(c, c), Holds)
    v = xi_v_prefix(FunctionStream(lambda n: 1), characteristic_stream(FIB))
    assert (v.k, v.side) == (0, Side.UPPER) and v.position <= 3
    assert xi_v_exact(E("", "10"), E("", "10"))


def test_budget_validation():
    with pytest.raises(ValueError):
        gamma_prefix(as_stream(E("", "1")), 10, 10)
    with pytest.raises(ValueError):
        gamma_prefix(as_stream(E("", "1")), -1, 10)


def test_sup_inf_of_shifts():
    fib = characteristic_stream(FIB)
    head = fib.prefix(49)
    assert sup_of_shifts(fib, 1000, 50) == "1" + head
    assert inf_of_shifts(fib, 1000, 50) == "0" + head
    u = as_stream(E("", "10"))
    assert sup_of_shifts(u, 5, 6) == "101010"
    assert inf_of_shifts(u, 5, 6) == "010101"


def test_mirror_completion():
    assert mirror_prefix_completion("10") == E("", "10")
    assert mirror_prefix_completion("1110001") == E("", "111000")
    assert mirror_prefix_completion("1100011") == E("", "1100")
    assert mirror_prefix_completion("1101001100") is None
    assert mirror_prefix_completion("1111111") is None
    assert check_mirror_completion(as_stream(E("", "1100")), 40)
    assert check_mirror_completion(as_stream(E("", "1")), 40) is None


def test_check_dispatch():
    assert check("gamma", E("", "110")) == gamma_exact(E("", "110"))
    assert isinstance(check("gamma", as_stream(E("", "110"))), Holds)
    with pytest.raises(ValueError):
        check("delta", E("", "1"))


def test_verdict_json():
    v = gamma_exact(E("", "100"))
    assert v.to_json()["verdict"] == "fails"
    assert gamma1_exact(E("", "1")).to_json().get("position") is None


@given(epw)
def test_gamma_exact_matches_naive(u):
    assert bool(gamma_exact(u)) == oracles.gamma_naive(u.preperiod, u.period)


@given(epw)
def test_gamma1_is_gamma_minus_periodic(u):
    assert bool(gamma1_exact(u)) == (bool(gamma_exact(u)) and bool(u.preperiod))


@settings(max_examples=200)
@given(epw)
def test_exact_and_prefix_agree(u):
    n = u.structure_length
    depth = n + 4 * n + 16
    for exact, prefix in ((gamma_exact, gamma_prefix), (xi_exact, xi_prefix)):
        e, p = exact(u), prefix(as_stream(u), n, depth)
        assert isinstance(p, Holds) == isinstance(e, Holds)
        if isinstance(e, FailsAt):
            assert (p.k, p.side, p.position) == (e.k, e.side, e.position)


@settings(max_examples=200)
@given(epw)
def test_prefix_witnesses_confirm(u):
    s = as_stream(u).prefix(200)
    v = gamma_prefix(as_stream(u), 20, 200)
    if isinstance(v, FailsAt):
        assert confirm_witness(as_stream(u), v, complement(s), s)


@given(epw)
def test_gamma_members_start_with_one(u):
    if gamma_exact(u):
        assert u.symbol_at(0) == 1
