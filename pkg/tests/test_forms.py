import math
from fractions import Fraction

import pytest

from kzforms.forms import ABarForm, a_form, abar, f_g, theta0, theta0_direct, theta_truncated
from kzforms.series import QSeries, XSeries, xs_exp

# published reference values
ABAR_PRINTED = {
    2: [1, 80, 1230, 9248, 46020, 174624, 549704],
    3: [1, 728, 45990, 968240, 10876740, 81037296],
    4: [1, 6560, 1673310, 98704448, 2504270340],
    6: [1, 531440, 2176254990, 998066826848],
}


@pytest.mark.parametrize("n", sorted(ABAR_PRINTED))
def test_abar_printed_values(n):
    printed = ABAR_PRINTED[n]
    order = len(printed) + 2
    f = abar(n, order)
    assert f.series == QSeries.from_list([0, 0] + printed, order)
    assert f.weight == 6 * n


def test_abar_rejects_n_zero_and_small_order():
    with pytest.raises(ValueError):
        abar(0, 5)
    with pytest.raises(ValueError):
        abar(1, 2)


def test_abar_form_invariants_are_enforced():
    with pytest.raises(ArithmeticError):
        ABarForm(1, QSeries.from_list([0, 0, 2, 4], 4))
    with pytest.raises(ArithmeticError):
        ABarForm(1, QSeries.from_list([0, 0, 1, Fraction(1, 2)], 4))


def test_a0_is_one():
    assert a_form(0, 20).series == QSeries.one(20)


def test_a2_order_5():
    assert a_form(2, 5).series == QSeries.from_list([0, 0, Fraction(1, 12), Fraction(20, 3), Fraction(205, 2)], 5)


def test_a1_leading_coefficient():
    assert a_form(1, 3).series[2] == 1


def test_a_equals_scaled_abar():
    for n in range(1, 7):
        scale = Fraction(2, math.factorial(2 * n))
        assert a_form(n, 15).series == abar(n, 15).series * scale


@pytest.mark.parametrize("n", range(1, 9))
def test_abar_invariants_order_30(n):
    f = abar(n, 30).series
    assert f.is_integral()
    assert f[0] == f[1] == 0
    assert f[2] == 1
    assert math.gcd(*(int(c) for c in f.terms_x2.values())) == 1


def test_theta0_direct_constant_term():
    assert theta0_direct(0, 20)[0] == QSeries.one(20)


def test_theta0_direct_x4_is_abar2():
    th = theta0_direct(4, 9)
    assert th[4] * 12 == QSeries.from_list([0, 0] + ABAR_PRINTED[2], 9)
    assert th[1].is_zero() and th[3].is_zero()


def test_theta0_direct_rejects_odd_x_trunc():
    with pytest.raises(ValueError):
        theta0_direct(3, 5)


def test_theta_before_extraction_has_nonzero_band():
    # the zeta^(+-1) coefficients are genuinely nonzero, so zeta^0 extraction is doing work
    theta = theta_truncated(0, 6)
    assert set(theta.degrees()) == {-2, -1, 0, 1, 2}


@pytest.mark.parametrize("order", [4, 7, 10])
def test_cross_method_small(order):
    direct = theta0_direct(6, order)
    fast = theta0(6, order)
    assert direct == fast
    assert direct.odd_part_vanishes()


def test_f2_is_a1():
    assert f_g(2, 6) == a_form(1, 6).series


def test_f3_by_hand():
    a1, a2 = a_form(1, 6).series, a_form(2, 6).series
    assert f_g(3, 6) == a2 - a1 * a1 * Fraction(1, 2)


def test_fg_exp_round_trip():
    order, big_g = 8, 4
    logs = [QSeries.zero(order)] * (2 * big_g - 1)
    for g in range(2, big_g + 1):
        logs[2 * g - 2] = f_g(g, order)
    recovered = xs_exp(XSeries(logs, 2 * big_g - 2))
    assert recovered == theta0(2 * big_g - 2, order)


def test_fg_rejects_small_g():
    with pytest.raises(ValueError):
        f_g(1, 5)
