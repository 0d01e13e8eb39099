"""Exact truncated series in q (half-integer exponents), Laurent tracking in zeta,
and even-in-X polynomial wrappers.

Exponents of q are stored doubled (``e`` is kept as the integer ``2e``) so that
``q^{1/2}`` and friends index like ordinary integers.  A series is exact for
every exponent strictly below its truncation order; arithmetic results carry
the smaller of the two operand orders.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def _as_x2(exponent) -> int:
    twice = Fraction(exponent) * 2
    if twice.denominator != 1:
        raise ValueError(f"exponent {exponent} is not a multiple of 1/2")
    return int(twice)


def _fraction_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


class QSeries:
    """Truncated power series in q with rational coefficients.

    ``terms_x2`` maps doubled exponents to coefficients, ``order_x2`` is the
    doubled truncation order.  Instances are immutable.
    """

    __slots__ = ("_terms", "_order2")

    def __init__(self, terms_x2: Mapping[int, Scalar], order_x2: int):
        if order_x2 < 0:
            raise ValueError("truncation order must be nonnegative")
        terms = {}
        for e2, c in terms_x2.items():
            if e2 < 0:
                raise ValueError(f"negative exponent {Fraction(e2, 2)}")
            if e2 < order_x2 and c != 0:
                terms[int(e2)] = Fraction(c)
        self._terms = terms
        self._order2 = int(order_x2)

    # construction helpers

    @classmethod
    def from_list(cls, coeffs: Sequence[Scalar], order: int | None = None) -> "QSeries":
        """Integer-exponent series ``coeffs[0] + coeffs[1] q + ...``.

        Without ``order`` the series is taken exact up to ``len(coeffs)``.
        """
        if order is None:
            order = len(coeffs)
        return cls({2 * i: c for i, c in enumerate(coeffs)}, 2 * order)

    @classmethod
    def from_terms(cls, terms: Mapping[object, Scalar], order) -> "QSeries":
        """Series from ``{exponent: coefficient}`` with exponents in multiples of 1/2."""
        return cls({_as_x2(e): c for e, c in terms.items()}, _as_x2(order))

    @classmethod
    def one(cls, order) -> "QSeries":
        return cls({0: 1}, _as_x2(order))

    @classmethod
    def zero(cls, order) -> "QSeries":
        return cls({}, _as_x2(order))

    @classmethod
    def monomial(cls, coeff: Scalar, exponent, order) -> "QSeries":
        return cls({_as_x2(exponent): coeff}, _as_x2(order))

    # accessors

    @property
    def order_x2(self) -> int:
        return self._order2

    @property
    def trunc_order(self) -> Fraction:
        return Fraction(self._order2, 2)

    @property
    def terms_x2(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def coeffs(self) -> dict[Fraction, Fraction]:
        return {Fraction(e2, 2): c for e2, c in sorted(self._terms.items())}

    def __getitem__(self, exponent) -> Fraction:
        e2 = _as_x2(exponent)
        if e2 >= self._order2:
            raise IndexError(f"q^{Fraction(e2, 2)} is beyond the truncation order {self.trunc_order}")
        return self._terms.get(e2, Fraction(0))

    def coefficient_list(self, stop: int | None = None) -> list[Fraction]:
        """Coefficients of q^0, q^1, ..., q^(stop-1) (integer exponents only)."""
        if stop is None:
            stop = -(-self._order2 // 2)
        return [self[i] for i in range(stop)]

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def valuation_x2(self) -> int | None:
        return min(self._terms) if self._terms else None

    def truncate(self, order) -> "QSeries":
        return QSeries(self._terms, min(self._order2, _as_x2(order)))

    # arithmetic

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries({0: other}, self._order2)
        if not isinstance(other, QSeries):
            return NotImplemented
        terms = dict(self._terms)
        for e2, c in other._terms.items():
            terms[e2] = terms.get(e2, 0) + c
        return QSeries(terms, min(self._order2, other._order2))

    __radd__ = __add__

    def __neg__(self):
        return QSeries({e2: -c for e2, c in self._terms.items()}, self._order2)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries({e2: c * other for e2, c in self._terms.items()}, self._order2)
        if not isinstance(other, QSeries):
            return NotImplemented
        order2 = min(self._order2, other._order2)
        out: dict[int, Fraction] = {}
        right = sorted(other._terms.items())
        for ea, ca in self._terms.items():
            for eb, cb in right:
                e = ea + eb
                if e >= order2:
                    break
                out[e] = out.get(e, 0) + ca * cb
        return QSeries(out, order2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = QSeries.one(self.trunc_order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_x2(self, h2: int) -> "QSeries":
        """Multiply by q^(h2/2), keeping the truncation order."""
        return QSeries({e2 + h2: c for e2, c in self._terms.items()}, self._order2)

    def map_coefficients(self, fn: Callable[[Fraction], Scalar]) -> "QSeries":
        return QSeries({e2: fn(c) for e2, c in self._terms.items()}, self._order2)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._order2 == other._order2 and self._terms == other._terms

    def __hash__(self):
        return hash((self._order2, frozenset(self._terms.items())))

    def agrees_with(self, other: "QSeries") -> bool:
        """Equality on the common range of exactness."""
        return (self - other).is_zero()

    # presentation

    def __repr__(self):
        return f"QSeries({self}, order={self.trunc_order})"

    def __str__(self):
        return format_qseries(self)

    def to_json(self) -> dict:
        return {
            "trunc_order_x2": self._order2,
            "coeffs": [[e2, _fraction_str(c)] for e2, c in sorted(self._terms.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "QSeries":
        return cls({int(e2): _parse_fraction(c) for e2, c in obj["coeffs"]}, int(obj["trunc_order_x2"]))


def format_qseries(f: QSeries, with_order: bool = True) -> str:
    parts = []
    for e2, c in sorted(f.terms_x2.items()):
        e = Fraction(e2, 2)
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qpart = "q" if e == 1 else f"q^{e}"
            body = qpart if mag == 1 else f"{mag}*{qpart}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        text = "0"
    else:
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
    if with_order:
        text += f" + O(q^{f.trunc_order})"
    return text


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def eta_like_product(order) -> QSeries:
    """prod_{m>=1} (1 - q^m) truncated below ``order``.

    Factors with m >= order only touch exponents at or above the truncation,
    so the product is finite.
    """
    order2 = _as_x2(order)
    if order2 <= 0:
        raise ValueError(f"order must be positive, got {order}")
    # dense integer list; exponents are whole numbers
    n = -(-order2 // 2)
    coeffs = [0] * n
    coeffs[0] = 1
    for m in range(1, n):
        for e in range(n - 1, m - 1, -1):
            coeffs[e] -= coeffs[e - m]
    return QSeries({2 * e: c for e, c in enumerate(coeffs)}, order2)


class ZetaLaurent:
    """Finite Laurent polynomial in zeta whose coefficients are series.

    Only degrees with ``|deg| <= band`` are kept; everything outside the band is
    treated as exactly zero.  Coefficients may be :class:`QSeries` or
    :class:`XSeries`; they only need ``+``, ``-`` and ``*``.
    """

    __slots__ = ("terms", "band")

    def __init__(self, terms: Mapping[int, object], band: int):
        self.band = int(band)
        self.terms = {int(k): v for k, v in terms.items() if abs(k) <= self.band and not v.is_zero()}

    def coefficient(self, deg: int, zero=None):
        if deg in self.terms:
            return self.terms[deg]
        if zero is None:
            raise KeyError(deg)
        return zero

    def __mul__(self, other: "ZetaLaurent") -> "ZetaLaurent":
        band = min(self.band, other.band)
        out: dict[int, object] = {}
        for i, u in self.terms.items():
            for j, v in other.terms.items():
                k = i + j
                if abs(k) > band:
                    continue
                out[k] = out[k] + u * v if k in out else u * v
        return ZetaLaurent(out, band)

    def __add__(self, other: "ZetaLaurent") -> "ZetaLaurent":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return ZetaLaurent(out, min(self.band, other.band))

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def __repr__(self):
        return f"ZetaLaurent(degrees={self.degrees()}, band={self.band})"


def zl_coefficient(f: ZetaLaurent, deg: int, order=None):
    """Coefficient of zeta^deg; a zero series of ``order`` if that degree is absent."""
    if deg in f.terms:
        return f.terms[deg]
    if order is None:
        orders = [v.trunc_order for v in f.terms.values() if isinstance(v, QSeries)]
        order = min(orders) if orders else 0
    return QSeries.zero(order)


def zeta_band(order) -> int:
    """Largest zeta-degree that can matter for a zeta^0 coefficient below ``order``.

    A zeta^0 term uses m half-integers on each side; each side sums to at least
    m^2/2, so its q-exponent is >= m^2 and m < sqrt(order).  Any partial product
    on the way has net zeta-degree at most m in absolute value.
    """
    return math.isqrt(max(math.ceil(Fraction(order)) - 1, 0))


class XSeries:
    """Polynomial in X up to degree ``x_trunc`` with QSeries coefficients (dense)."""

    __slots__ = ("x_trunc", "coeffs")

    def __init__(self, coeffs: Sequence[QSeries], x_trunc: int | None = None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("XSeries needs at least the X^0 coefficient")
        if x_trunc is None:
            x_trunc = len(coeffs) - 1
        order2 = min(c.order_x2 for c in coeffs)
        zero = QSeries({}, order2)
        coeffs = coeffs[: x_trunc + 1] + [zero] * (x_trunc + 1 - len(coeffs))
        self.x_trunc = x_trunc
        self.coeffs = tuple(c.truncate(Fraction(order2, 2)) for c in coeffs)

    @property
    def order_x2(self) -> int:
        return self.coeffs[0].order_x2

    @property
    def trunc_order(self) -> Fraction:
        return self.coeffs[0].trunc_order

    def __getitem__(self, k: int) -> QSeries:
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _zero(self, order2: int) -> QSeries:
        return QSeries({}, order2)

    def __add__(self, other: "XSeries") -> "XSeries":
        if not isinstance(other, XSeries):
            return NotImplemented
        n = min(self.x_trunc, other.x_trunc)
        return XSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    def __neg__(self) -> "XSeries":
        return XSeries([-c for c in self.coeffs], self.x_trunc)

    def __sub__(self, other: "XSeries") -> "XSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QSeries)):
            return XSeries([c * other for c in self.coeffs], self.x_trunc)
        if not isinstance(other, XSeries):
            return NotImplemented
        n = min(self.x_trunc, other.x_trunc)
        order2 = min(self.order_x2, other.order_x2)
        out = []
        for k in range(n + 1):
            acc = self._zero(order2)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a.is_zero() or b.is_zero():
                    continue
                acc = acc + a * b
            out.append(acc)
        return XSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.x_trunc == other.x_trunc and self.coeffs == other.coeffs

    def __repr__(self):
        return f"XSeries(x_trunc={self.x_trunc}, order={self.trunc_order})"

    def constant(self) -> Fraction:
        return self.coeffs[0][0]

    def odd_part_vanishes(self) -> bool:
        return all(self.coeffs[k].is_zero() for k in range(1, self.x_trunc + 1, 2))


def xs_log(f: XSeries) -> XSeries:
    """Formal logarithm of ``f``, whose X^0 q^0 coefficient must be exactly 1.

    Uses the Mercator series log(1+u) = u - u^2/2 + ...; ``u`` has no constant
    term, so its powers die out after finitely many steps.
    """
    if f.constant() != 1:
        raise ValueError(f"log needs constant term 1, got {f.constant()}")
    one = XSeries([QSeries({0: 1}, f.order_x2)], f.x_trunc)
    u = f - one
    result = XSeries([QSeries({}, f.order_x2)], f.x_trunc)
    power = u
    m = 1
    while not power.is_zero():
        term = power * Fraction((-1) ** (m + 1), m)
        result = result + term
        power = power * u
        m += 1
    return result


def _qs_exp(g: QSeries) -> QSeries:
    if g[0] != 0:
        raise ValueError("exp needs a q-series without constant term")
    result = QSeries.one(g.trunc_order)
    term = result
    m = 1
    while True:
        term = term * g * Fraction(1, m)
        if term.is_zero():
            return result
        result = result + term
        m += 1


def xs_exp(g: XSeries) -> XSeries:
    """Formal exponential; ``g`` must have zero constant term.

    Solved degree by degree in X from h' = g' h, i.e.
    k h_k = sum_{j=1..k} j g_j h_{k-j}, with h_0 = exp(g_0) as a q-series.
    """
    if g.constant() != 0:
        raise ValueError(f"exp needs constant term 0, got {g.constant()}")
    h = [_qs_exp(g.coeffs[0])]
    for k in range(1, g.x_trunc + 1):
        acc = QSeries({}, g.order_x2)
        for j in range(1, k + 1):
            if not g.coeffs[j].is_zero():
                acc = acc + g.coeffs[j] * h[k - j] * j
        h.append(acc * Fraction(1, k))
    return XSeries(h, g.x_trunc)
