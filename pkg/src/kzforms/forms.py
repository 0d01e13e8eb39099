"""The forms A_n, their normalizations Abar_n, Theta_0 and F_g.

Two independent routes to Theta_0(X, q) = sum_n A_n(q) X^(2n):

* the partition route: A_n = (1/(2n)!) prod(1 - q^m) sum_d S_(2n)(d) q^d,
  with S_k(d) the lambda power sums from :mod:`kzforms.partitions`;
* the direct route: multiply out the truncated triple product
  prod_m (1 - q^m) prod_(n odd) (1 - e^(n^2 X/8) q^(n/2) zeta)(1 - e^(-n^2 X/8) q^(n/2) zeta^-1)
  in exact rational arithmetic and read off the zeta^0 coefficient.

Truncating at q-order N is harmless in the direct route: a factor with
q-exponent >= N only contributes terms of q-degree >= N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .partitions import power_sum_table
from .series import QSeries, XSeries, ZetaLaurent, eta_like_product, xs_log, zeta_band


@dataclass(frozen=True)
class AForm:
    n: int
    series: QSeries

    @property
    def weight(self) -> int:
        return 6 * self.n


@dataclass(frozen=True)
class ABarForm:
    """A_n rescaled to coprime integer coefficients; leading term q^2."""

    n: int
    series: QSeries

    def __post_init__(self):
        f = self.series
        if not f.is_integral():
            raise ArithmeticError(f"Abar_{self.n} has a non-integral coefficient")
        if f.trunc_order > 2:
            if f.valuation_x2() != 4 or f[2] != 1:
                raise ArithmeticError(f"Abar_{self.n} does not start with 1*q^2")
        content = 0
        for c in f.terms_x2.values():
            content = math.gcd(content, int(c))
        if content not in (0, 1):
            raise ArithmeticError(f"Abar_{self.n} coefficients share the factor {content}")

    @property
    def weight(self) -> int:
        return 6 * self.n

    def coefficient(self, m: int) -> int:
        return int(self.series[m])


def _check_order(order, minimum: int = 1) -> int:
    if int(order) != order or order < minimum:
        raise ValueError(f"order must be an integer >= {minimum}, got {order}")
    return int(order)


def _lambda_moment_series(k: int, order: int) -> QSeries:
    table = power_sum_table(order - 1, k)
    return QSeries({2 * d: table[d][k] for d in range(order)}, 2 * order)


def abar(n: int, order: int) -> ABarForm:
    """Abar_n = 1/2 prod(1 - q^m) sum_d S_(2n)(d) q^d, exact below q^order."""
    if n < 1:
        raise ValueError(f"n must be >= 1 for Abar_n, got {n}")
    order = _check_order(order, 3)
    f = eta_like_product(order) * _lambda_moment_series(2 * n, order) * Fraction(1, 2)
    return ABarForm(n, f)


def a_form(n: int, order: int) -> AForm:
    """A_n, the X^(2n) coefficient of Theta_0, via partitions."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    order = _check_order(order)
    f = eta_like_product(order) * _lambda_moment_series(2 * n, order)
    return AForm(n, f * Fraction(1, math.factorial(2 * n)))


def theta0(x_trunc: int, order: int) -> XSeries:
    """Theta_0 up to X^x_trunc assembled from :func:`a_form`; odd X-degrees are zero."""
    if x_trunc < 0 or x_trunc % 2:
        raise ValueError(f"x_trunc must be a nonnegative even integer, got {x_trunc}")
    order = _check_order(order)
    zero = QSeries.zero(order)
    coeffs = [a_form(k // 2, order).series if k % 2 == 0 else zero for k in range(x_trunc + 1)]
    return XSeries(coeffs, x_trunc)


def _exp_factor(scale: Fraction, q_exp2: int, x_trunc: int, order2: int) -> XSeries:
    """-e^(scale X) q^(q_exp2/2) as an XSeries."""
    return XSeries(
        [QSeries({q_exp2: -(scale**k) / math.factorial(k)}, order2) for k in range(x_trunc + 1)],
        x_trunc,
    )


def theta_truncated(x_trunc: int, order: int) -> ZetaLaurent:
    """The full product, as a zeta-Laurent polynomial with XSeries coefficients."""
    if x_trunc < 0 or x_trunc % 2:
        raise ValueError(f"x_trunc must be a nonnegative even integer, got {x_trunc}")
    order = _check_order(order)
    order2 = 2 * order
    band = zeta_band(order)
    one = XSeries([QSeries({0: 1}, order2)], x_trunc)
    theta = ZetaLaurent({0: one}, band)

    for m in range(1, order):
        factor = one + XSeries([QSeries({2 * m: -1}, order2)], x_trunc)
        theta = theta * ZetaLaurent({0: factor}, band)

    for odd in range(1, order2, 2):
        scale = Fraction(odd * odd, 8)
        up = ZetaLaurent({0: one, 1: _exp_factor(scale, odd, x_trunc, order2)}, band)
        down = ZetaLaurent({0: one, -1: _exp_factor(-scale, odd, x_trunc, order2)}, band)
        theta = theta * up * down
    return theta


def theta0_direct(x_trunc: int, order: int) -> XSeries:
    """zeta^0 coefficient of the truncated triple product (slow, independent check)."""
    theta = theta_truncated(x_trunc, order)
    zero = XSeries([QSeries.zero(order)], x_trunc)
    return theta.coefficient(0, zero)


def f_g(g: int, order: int) -> QSeries:
    """Coefficient of X^(2g-2) in log Theta_0."""
    if g < 2:
        raise ValueError(f"g must be >= 2, got {g}")
    order = _check_order(order)
    x_deg = 2 * g - 2
    return xs_log(theta0(x_deg, order))[x_deg]
