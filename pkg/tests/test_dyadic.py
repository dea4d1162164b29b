import pytest
from hypothesis import given
from hypothesis import strategies as st

from hotgames.dyadic import Dyadic, dyadic

dyadics = st.builds(Dyadic, st.integers(-2000, 2000), st.integers(0, 10))


def test_normalization():
    assert Dyadic(4, 2) == Dyadic(1, 0)
    assert Dyadic(6, 1) == Dyadic(3, 0)
    assert Dyadic(0, 7).exp == 0
    assert Dyadic(-12, 2) == Dyadic(-3, 0)
    assert Dyadic(3, 2).num == 3 and Dyadic(3, 2).exp == 2


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Dyadic(1, -1)


def test_parse_forms():
    assert Dyadic.parse("5") == 5
    assert Dyadic.parse("-3/4") == Dyadic(-3, 2)
    assert Dyadic.parse("1.25") == Dyadic(5, 2)
    assert Dyadic.parse("-0.5") == Dyadic(-1, 1)


@pytest.mark.parametrize("bad", ["1/3", "0.1", "2/6", "x", "1/0", "1/-2"])
def test_parse_rejects_non_dyadic(bad):
    with pytest.raises(ValueError):
        Dyadic.parse(bad)


def test_arithmetic_examples():
    assert Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2)
    assert Dyadic(1, 1) - 1 == Dyadic(-1, 1)
    assert -Dyadic(3, 2) == Dyadic(-3, 2)
    assert Dyadic(3, 1) * Dyadic(1, 1) == Dyadic(3, 2)
    assert Dyadic(5).half() == Dyadic(5, 1)
    assert 2 * Dyadic(1, 1) == 1


def test_int_interop():
    assert Dyadic(4) == 4
    assert hash(Dyadic(4)) == hash(4)
    assert Dyadic(9, 1) > 4
    assert 5 > Dyadic(9, 1)
    assert int(Dyadic(7)) == 7
    with pytest.raises(ValueError):
        int(Dyadic(1, 1))


def test_str_forms():
    assert str(Dyadic(7)) == "7"
    assert str(Dyadic(-3, 2)) == "-3/4"
    assert str(Dyadic(33, 2)) == "33/4"


@given(dyadics, dyadics)
def test_add_commutes(a, b):
    assert a + b == b + a


@given(dyadics, dyadics, dyadics)
def test_add_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(dyadics)
def test_round_trip(a):
    assert Dyadic.parse(str(a)) == a
    assert dyadic(str(a)) == a


@given(dyadics, dyadics)
def test_order_total(a, b):
    assert (a <= b) or (b <= a)
    if a <= b and b <= a:
        assert a == b
    assert (a < b) == (b > a)


@given(dyadics)
def test_half_doubles_back(a):
    assert a.half() + a.half() == a
    assert a.half().half() == a * Dyadic(1, 2)


@given(dyadics, dyadics)
def test_subtraction_inverts_addition(a, b):
    assert (a + b) - b == a
