from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from laurent_lab.exact import falling, format_rational, gcd_list, parse_rational


def test_falling_examples():
    assert falling(5, 0) == 1
    assert falling(-2, 2) == 6
    assert falling(3, 5) == 0


def test_falling_rejects_negative_j():
    with pytest.raises(ValueError):
        falling(3, -1)


def test_falling_recurrence_exhaustive():
    # (x)_j * (x - j) = (x)_{j+1}
    for x in range(-50, 51):
        for j in range(21):
            assert falling(x, j) * (x - j) == falling(x, j + 1)


def test_falling_chain_identity():
    # (k+m-1)_{k-j} = (k+m-1)_{k-l} * (l+m-1)_{l-j}, the step that links the
    # direct and factored constructions of the indicial polynomial
    for k in range(1, 31):
        for l in range(k):
            for j in range(l + 1):
                for m in range(1, 6):
                    assert falling(k + m - 1, k - j) == falling(k + m - 1, k - l) * falling(
                        l + m - 1, l - j
                    )


def test_gcd_list_examples():
    assert gcd_list([6]) == 6
    assert gcd_list([1, 6]) == 1
    assert gcd_list([4, 6, 10]) == 2


def test_gcd_list_rejects_empty_and_nonpositive():
    with pytest.raises(ValueError):
        gcd_list([])
    with pytest.raises(ValueError):
        gcd_list([3, 0])


def test_falling_is_unbounded():
    # 64-bit arithmetic would overflow well before this
    assert falling(25, 26) == 0  # the factor (25 - 25) appears
    assert falling(40, 25) > 2**64


rationals = st.fractions(
    min_value=-(10**6), max_value=10**6, max_denominator=10**6
)


@given(rationals, rationals, rationals)
def test_fraction_arithmetic_exact(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(rationals.filter(lambda f: f != 0), rationals.filter(lambda f: f != 0))
def test_fraction_inverse(a, b):
    assert (a / b) * (b / a) == 1


@given(rationals)
def test_rational_string_round_trip(a):
    assert parse_rational(format_rational(a)) == a


def test_rational_normalized():
    f = Fraction(6, -4)
    assert f.denominator > 0
    assert (f.numerator, f.denominator) == (-3, 2)
    assert format_rational(f) == "-3/2"
    assert parse_rational("7") == Fraction(7, 1)
