"""Eisenstein series and exact decomposition in the ring Q[E2, E4, E6]."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence, Union

from .series import QSeries

_EISENSTEIN = {2: (-24, 1), 4: (240, 3), 6: (-504, 5)}


class DecompositionError(ArithmeticError):
    pass


class SingularSystem(DecompositionError):
    """The coefficient matrix has lower rank than the number of monomials."""


class NotInSpan(DecompositionError):
    """The series is not a combination of the requested monomials."""


class EisensteinMonomial(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def weight(self) -> int:
        return 2 * self.a + 4 * self.b + 6 * self.c

    def __str__(self):
        pieces = []
        for name, e in (("E2", self.a), ("E4", self.b), ("E6", self.c)):
            if e == 1:
                pieces.append(name)
            elif e > 1:
                pieces.append(f"{name}^{e}")
        return "*".join(pieces) or "1"


def divisor_sigmas(power: int, n_max: int) -> list[int]:
    """sigma_power(m) for m = 0..n_max (entry 0 is 0), by a divisor sieve."""
    sig = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dp = d**power
        for m in range(d, n_max + 1, d):
            sig[m] += dp
    return sig


@lru_cache(maxsize=None)
def eisenstein(k: int, order: int) -> QSeries:
    """E_k = 1 + c_k sum sigma_(k-1)(m) q^m with c_2 = -24, c_4 = 240, c_6 = -504."""
    if k not in _EISENSTEIN:
        raise ValueError(f"only E2, E4, E6 are available, got k={k}")
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    const, power = _EISENSTEIN[k]
    sig = divisor_sigmas(power, order - 1)
    coeffs = [1] + [const * s for s in sig[1:]]
    return QSeries.from_list(coeffs, order)


def monomial_basis(weight: int) -> list[EisensteinMonomial]:
    """All E2^a E4^b E6^c of the given weight, (a, b, c) in descending lexicographic order."""
    if weight < 0 or weight % 2:
        raise ValueError(f"weight must be even and nonnegative, got {weight}")
    half = weight // 2
    out = []
    for a in range(half, -1, -1):
        for b in range((half - a) // 2, -1, -1):
            rest = half - a - 2 * b
            if rest % 3 == 0:
                out.append(EisensteinMonomial(a, b, rest // 3))
    return out


@lru_cache(maxsize=None)
def monomial_series(mono: EisensteinMonomial, order: int) -> QSeries:
    a, b, c = mono
    return eisenstein(2, order) ** a * eisenstein(4, order) ** b * eisenstein(6, order) ** c


Weights = Union[int, Sequence[int]]


def term_order_key(mono: EisensteinMonomial) -> tuple[int, int, int, int]:
    """Lowest weight first; within a weight, (a, b, c) descending as in :func:`monomial_basis`."""
    return (mono.weight, -mono.a, -mono.b, -mono.c)


def _basis_for(weight: Weights) -> list[EisensteinMonomial]:
    weights = [weight] if isinstance(weight, int) else list(weight)
    basis: list[EisensteinMonomial] = []
    for w in weights:
        for mono in monomial_basis(w):
            if mono not in basis:
                basis.append(mono)
    return basis


@dataclass(frozen=True)
class EisensteinDecomposition:
    """sum coeff * E2^a E4^b E6^c.

    ``weight`` is the common weight of all monomials, or None when the
    polynomial mixes weights (e.g. a difference of forms of different weight).
    """

    weight: int | None
    terms: dict[EisensteinMonomial, Fraction] = field(default_factory=dict)

    def coefficient(self, a: int, b: int, c: int) -> Fraction:
        return self.terms.get(EisensteinMonomial(a, b, c), Fraction(0))

    def nonzero_terms(self) -> dict[EisensteinMonomial, Fraction]:
        return {m: c for m, c in self.terms.items() if c != 0}

    def denominator(self) -> int:
        return math.lcm(1, *(c.denominator for c in self.terms.values()))

    def numerators(self) -> dict[EisensteinMonomial, int]:
        """Coefficients times :meth:`denominator`."""
        den = self.denominator()
        return {m: int(c * den) for m, c in self.terms.items()}

    def evaluate(self, order: int) -> QSeries:
        total = QSeries.zero(order)
        for mono, coeff in self.terms.items():
            if coeff:
                total = total + monomial_series(mono, order) * coeff
        return total

    def __sub__(self, other: "EisensteinDecomposition") -> "EisensteinDecomposition":
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) - coeff
        weight = self.weight if self.weight == other.weight else None
        return EisensteinDecomposition(weight, terms)

    def ordered_monomials(self) -> list[EisensteinMonomial]:
        return sorted(self.terms, key=term_order_key)

    def renormalized(self) -> dict[EisensteinMonomial, int]:
        """Primitive integer form: clear the common denominator, divide by the content.

        The sign of the content is chosen so that the leading coefficient (first
        nonzero one in :func:`term_order_key` order) is positive, which makes the
        result invariant under an overall sign change.
        """
        nums = self.numerators()
        order = self.ordered_monomials()
        content = math.gcd(*nums.values()) if nums else 0
        if content == 0:
            return {m: 0 for m in order}
        lead = next(nums[m] for m in order if nums[m])
        if lead < 0:
            content = -content
        return {m: nums[m] // content for m in order}

    def to_json(self) -> dict:
        nums = self.numerators()
        return {
            "weight": self.weight,
            "denominator": str(self.denominator()),
            "terms": [{"a": m.a, "b": m.b, "c": m.c, "num": str(nums[m])} for m in self.ordered_monomials()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EisensteinDecomposition":
        den = int(obj["denominator"])
        terms = {
            EisensteinMonomial(t["a"], t["b"], t["c"]): Fraction(int(t["num"]), den) for t in obj["terms"]
        }
        return cls(obj["weight"], terms)

    def __str__(self):
        nums = self.numerators()
        parts = []
        for mono in self.ordered_monomials():
            v = nums[mono]
            if v == 0:
                continue
            sign = "-" if v < 0 else "+"
            parts.append(f"{sign} {abs(v)}*{mono}")
        body = " ".join(parts).lstrip("+ ") if parts else "0"
        if body.startswith("- "):
            body = "-" + body[2:]
        den = self.denominator()
        return body if den == 1 else f"({body})/{den}"


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve an overdetermined linear system exactly by Gauss-Jordan elimination.

    Pivots are the first nonzero entry at or below the current row.  Raises
    SingularSystem if the columns are dependent and NotInSpan if a leftover
    equation is inconsistent.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    nrows = len(aug)
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, nrows) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem(f"column {col} has no pivot; rank < {ncols}")
        aug[pivot_row], aug[pivot] = aug[pivot], aug[pivot_row]
        inv = 1 / aug[pivot_row][col]
        aug[pivot_row] = [x * inv for x in aug[pivot_row]]
        prow = aug[pivot_row]
        for r in range(nrows):
            if r != pivot_row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], prow)]
        pivot_row += 1
    for r in range(pivot_row, nrows):
        if aug[r][-1] != 0:
            raise NotInSpan(f"equation {r} is inconsistent after elimination")
    return [aug[i][-1] for i in range(ncols)]


def coefficient_matrix(basis: Sequence[EisensteinMonomial], order: int) -> list[list[Fraction]]:
    """Rows indexed by q^0..q^(order-1), columns by basis monomials."""
    cols = [monomial_series(m, order).coefficient_list(order) for m in basis]
    return [[col[i] for col in cols] for i in range(order)]


def matrix_rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def decompose(f: QSeries, weight: Weights) -> EisensteinDecomposition:
    """Write ``f`` as a rational combination of E2^a E4^b E6^c of the given weight(s).

    Every integer-exponent coefficient of ``f`` below its truncation order is
    matched, so anything beyond the basis size acts as a residual check.
    """
    basis = _basis_for(weight)
    order = int(f.trunc_order)
    if order < len(basis) + 2:
        raise ValueError(f"need q-order >= {len(basis) + 2} for {len(basis)} monomials, have {order}")
    if any(e2 % 2 for e2 in f.terms_x2):
        raise NotInSpan("series has half-integer exponents")
    matrix = coefficient_matrix(basis, order)
    rhs = f.coefficient_list(order)
    solution = solve_exact(matrix, rhs)
    result = EisensteinDecomposition(weight if isinstance(weight, int) else None, dict(zip(basis, solution)))
    if not result.evaluate(order).agrees_with(f):
        raise NotInSpan("reconstruction does not reproduce the series")
    return result


@dataclass(frozen=True)
class ModularDecomposition:
    """A polynomial in E2, E4, E6 with coefficients in Z/p (stored in [0, p))."""

    p: int
    terms: dict[EisensteinMonomial, int]

    def nonzero_terms(self) -> dict[EisensteinMonomial, int]:
        return {m: v for m, v in self.terms.items() if v}

    def is_zero(self) -> bool:
        return not self.nonzero_terms()

    def __str__(self):
        body = " + ".join(f"{v}*{m}" for m, v in sorted(self.nonzero_terms().items(), key=lambda t: term_order_key(t[0])))
        return f"{body or '0'} (mod {self.p})"


def reduce_decomposition_mod(d: EisensteinDecomposition, p: int, renormalize: bool = True) -> ModularDecomposition:
    """Coefficients of ``d`` mod p.

    With ``renormalize`` the coefficients are first made coprime integers (see
    :meth:`EisensteinDecomposition.renormalized`); otherwise each rational
    coefficient is reduced directly and must have denominator prime to p.
    """
    if p < 2:
        raise ValueError(f"p must be a prime, got {p}")
    if renormalize:
        return ModularDecomposition(p, {m: v % p for m, v in d.renormalized().items()})
    out = {}
    for mono in d.ordered_monomials():
        c = d.terms[mono]
        if c.denominator % p == 0:
            raise ValueError(f"coefficient of {mono} has denominator divisible by {p}")
        out[mono] = c.numerator * pow(c.denominator, -1, p) % p
    return ModularDecomposition(p, out)


def substitute_mod(reduced: ModularDecomposition, e4: int | None = None, e6_to_e2: bool = False) -> dict[int, int]:
    """Map a reduced polynomial to one in E2 alone, setting E4 -> e4 and optionally E6 -> E2.

    Returns ``{power of E2: coefficient mod p}``; monomials still containing E4
    or E6 after substitution raise ValueError.
    """
    p = reduced.p
    out: dict[int, int] = {}
    for (a, b, c), v in reduced.terms.items():
        if b and e4 is None:
            raise ValueError("E4 left unsubstituted")
        if c and not e6_to_e2:
            raise ValueError("E6 left unsubstituted")
        coeff = v * pow(e4 if e4 is not None else 1, b, p)
        power = a + (c if e6_to_e2 else 0)
        out[power] = (out.get(power, 0) + coeff) % p
    return {k: v for k, v in out.items() if v}
