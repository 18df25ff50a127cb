from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromagraph.colouring import falling
from chromagraph.ffpoly import FFPoly, eval_monomial, ffpoly_eval, stirling1, stirling2

coeffs = st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=5)


def test_stirling_rows():
    assert stirling1(4) == (0, -6, 11, -6, 1)
    assert stirling2(4) == (0, 1, 7, 6, 1)


def test_falling():
    assert falling(5, 3) == 60
    assert falling(2, 3) == 0
    assert falling(0, 0) == 1


@given(coeffs, st.integers(0, 12))
def test_monomial_round_trip(c, k):
    p = FFPoly(c)
    mono = p.to_monomial()
    assert eval_monomial(mono, k) == p(k)
    assert FFPoly.from_monomial(mono) == p


@given(coeffs, coeffs, st.integers(0, 10))
def test_ring_operations_pointwise(a, b, k):
    p, q = FFPoly(a), FFPoly(b)
    assert (p + q)(k) == p(k) + q(k)
    assert (p - q)(k) == p(k) - q(k)
    assert (p * q)(k) == p(k) * q(k)
    assert (p * 3)(k) == 3 * p(k)


def test_rational_coefficients_stay_integer_valued():
    # (k)_2 / 2 = C(k, 2)
    p = FFPoly({2: Fraction(1, 2)})
    assert p.is_integer_valued()
    assert [p(k) for k in range(5)] == [0, 0, 1, 3, 6]
    assert isinstance(p(4), int)
    assert p.binomial_coeffs() == {2: 1}
    assert not FFPoly({1: Fraction(1, 2)}).is_integer_valued()


def test_json_round_trip():
    p = FFPoly({3: Fraction(1, 2), 4: 2, 5: Fraction(3, 4)})
    obj = p.to_json()
    assert obj == {"basis": "falling", "coeffs": {"3": "1/2", "4": "2", "5": "3/4"}}
    assert FFPoly.from_json(obj) == p


def test_zero_coefficients_dropped():
    assert FFPoly({0: 0, 2: 1}).coeffs == {2: 1}
    assert FFPoly({}).degree == -1


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        ffpoly_eval(FFPoly({1: 1}), -1)
