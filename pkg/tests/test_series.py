import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from denumerant.errors import FieldMismatchError, SeriesDomainError, TruncationError
from denumerant.cyclotomic import cyclo_field
from denumerant.series import (
    LaurentSeries,
    coefficient,
    one_minus_power,
    series_arith,
    series_exp,
    series_inv,
    series_log,
)

N = 12
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 20))


def geometric(top=N):
    return LaurentSeries([1] * (top + 1))


def test_arith_examples():
    a = LaurentSeries([1, 1], order=N)
    b = LaurentSeries([1, -1], order=N)
    assert series_arith(a, b, "mul") == LaurentSeries([1, 0, -1], order=N)
    t = LaurentSeries([1], lead=1, order=N)
    tinv = LaurentSeries([1], lead=-1, order=N)
    one = series_arith(tinv, t, "mul")
    assert one.lead == 0 and one.coefficient(0) == 1 and one.coefficient(3) == 0
    z = series_arith(geometric(), -geometric(), "add")
    assert z.is_zero()
    assert z.coefficient(N) == 0
    with pytest.raises(TruncationError):
        z.coefficient(N + 1)


def test_inverse_examples():
    g = series_inv(LaurentSeries([1, -1], order=N))
    assert all(g.coefficient(k) == 1 for k in range(N + 1))
    assert coefficient(g, 5) == 1
    tinv = series_inv(LaurentSeries([1], lead=1, order=N))
    assert tinv.lead == -1 and tinv.coefficient(-1) == 1
    assert series_inv(LaurentSeries([2])).coefficient(0) == Fraction(1, 2)
    with pytest.raises(SeriesDomainError, match="not invertible"):
        series_inv(LaurentSeries([0, 0], order=3))


def test_exp_log_examples():
    zero = LaurentSeries([], lead=1, order=N - 1)
    e = series_exp(zero)
    assert e.coefficient(0) == 1 and all(e.coefficient(k) == 0 for k in range(1, N + 1))
    lg = series_log(LaurentSeries([1, 1], order=N))
    assert all(lg.coefficient(k) == Fraction((-1) ** (k + 1), k) for k in range(1, N + 1))
    p = LaurentSeries([1, 1, 1], order=N)
    assert series_exp(series_log(p)) == p
    with pytest.raises(SeriesDomainError):
        series_exp(LaurentSeries([1, 1], order=N))
    with pytest.raises(SeriesDomainError):
        series_log(LaurentSeries([2, 1], order=N))


def test_coefficient_examples():
    s = LaurentSeries([1, 3], lead=-2, order=5)
    assert coefficient(s, -1) == 3
    assert coefficient(s, -5) == 0
    with pytest.raises(TruncationError):
        coefficient(s, 4)


def test_denumerant_reference_value():
    L = 100
    gen = LaurentSeries([1], 0, L)
    for d in range(1, 6):
        gen = gen * series_inv(one_minus_power(d, L))
    assert gen.coefficient(100) == 46262


def test_truncation_propagates_minimum_order():
    a = LaurentSeries([1, 2, 3], order=2)
    b = LaurentSeries([1, 1, 1, 1, 1], order=4)
    assert (a * b).top == 2
    assert (a + b).top == 2
    with pytest.raises(TruncationError):
        (a * b).coefficient(3)


def test_field_mismatch():
    F = cyclo_field(3)
    a = LaurentSeries([F.gen], order=3, field=F)
    b = LaurentSeries([1], order=3)
    with pytest.raises(FieldMismatchError):
        a + b


def test_log_x_over_sinh():
    # log(x/sinh x) = -x^2/6 + x^4/180 - ...
    top = 8
    sinh_over_x = LaurentSeries([Fraction(1, math.factorial(k + 1)) if k % 2 == 0 else 0 for k in range(top + 1)])
    lg = series_log(series_inv(sinh_over_x))
    assert lg.coefficient(2) == Fraction(-1, 6)
    assert lg.coefficient(4) == Fraction(1, 180)
    assert lg.coefficient(3) == 0


series_unit = st.lists(rationals, max_size=40).map(lambda cs: LaurentSeries([1] + cs, order=40))


@settings(max_examples=25, deadline=None)
@given(series_unit)
def test_exp_log_round_trip(a):
    assert series_exp(series_log(a)) == a
    b = a - LaurentSeries([1], order=40)
    assert series_log(series_exp(b)) == b


@given(st.lists(rationals, min_size=1, max_size=8), st.lists(rationals, min_size=1, max_size=8),
       st.integers(-3, 3), st.integers(-3, 3))
def test_product_coefficients_are_cauchy_sums(xs, ys, la, lb):
    a = LaurentSeries(xs, lead=la, order=7)
    b = LaurentSeries(ys, lead=lb, order=7)
    prod = a * b
    for k in range(prod.lead, prod.top + 1):
        expected = sum((a.coefficient(j) * b.coefficient(k - j) for j in range(a.lead, k - b.lead + 1)), Fraction(0))
        assert prod.coefficient(k) == expected


@given(st.lists(rationals, min_size=1, max_size=10).map(lambda cs: [cs[0] or Fraction(1)] + cs[1:]), st.integers(-4, 4))
def test_inverse_round_trip(cs, lead):
    a = LaurentSeries(cs, lead=lead, order=9)
    inv = series_inv(a)
    assert inv.lead == -lead
    prod = a * inv
    assert prod.coefficient(0) == 1
    assert all(prod.coefficient(k) == 0 for k in range(1, prod.top + 1))


def test_cyclotomic_coefficients():
    F = cyclo_field(5)
    z = F.gen
    s = LaurentSeries([F.one, -z], order=6, field=F)
    inv = series_inv(s)
    assert all(inv.coefficient(k) == z**k for k in range(7))
