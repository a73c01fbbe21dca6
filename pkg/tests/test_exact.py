import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fourier_besov.exact import INF, as_rational, conjugate, fmt, recip


@pytest.mark.parametrize(
    "text, value",
    [("1/3", Fraction(1, 3)), ("-2", Fraction(-2)), ("0.25", Fraction(1, 4)), (" 6/4 ", Fraction(3, 2)),
     ("-.5", Fraction(-1, 2)), ("+7", Fraction(7))],
)
def test_parses_exact_literals(text, value):
    assert as_rational(text) == value


@pytest.mark.parametrize("text", ["1e-3", "abc", "1/", "/2", "1/2/3", "0x10", ""])
def test_rejects_malformed_literals(text):
    with pytest.raises(ValueError):
        as_rational(text)


def test_rejects_binary_floats_and_bools():
    with pytest.raises(TypeError):
        as_rational(0.1)
    with pytest.raises(TypeError):
        as_rational(True)


def test_infinity_only_when_allowed():
    assert as_rational("inf", allow_inf=True) == INF
    assert as_rational(math.inf, allow_inf=True) == INF
    with pytest.raises(ValueError):
        as_rational("inf")


def test_reciprocal_and_conjugate_edges():
    assert recip(INF) == 0
    assert conjugate(Fraction(1)) == INF
    assert conjugate(INF) == 1
    assert conjugate(Fraction(2)) == 2
    assert conjugate(Fraction(3, 2)) == 3


def test_fmt_is_stable():
    assert fmt(Fraction(-1)) == "-1/1"
    assert fmt(Fraction(6, 4)) == "3/2"
    assert fmt(INF) == "inf"


@given(st.fractions(min_value=Fraction(1, 1000), max_value=1000).filter(lambda p: p != 1))
def test_conjugate_is_an_involution(p):
    q = conjugate(p)
    assert recip(p) + recip(q) == 1
    assert conjugate(q) == p
