"""Finite-order checks of the Kummer-type congruences and the p-adic decay of a_k(p^n)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .forms import abar

log = logging.getLogger(__name__)

DEFAULT_ORDER = 30
# power sums to q^400 take about a minute; beyond that the sweep grows roughly quadratically
MAX_VALUATION_ORDER = 400
DECAY_RESIDUES = (4, 6, 8, 10, 14)


def totient(m: int) -> int:
    """Euler's phi by trial division."""
    if m < 1:
        raise ValueError(f"totient needs m >= 1, got {m}")
    result = m
    n = m
    f = 2
    while f * f <= n:
        if n % f == 0:
            while n % f == 0:
                n //= f
            result -= result // f
        f += 1
    if n > 1:
        result -= result // n
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def kummer_pairs(p: int, s: int, i_max: int) -> list[tuple[int, int]]:
    """All 1 <= i < j <= i_max with 2i = 2j mod phi(p^s)."""
    _require_prime(p)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    phi = totient(p**s)
    return [(i, j) for i in range(1, i_max + 1) for j in range(i + 1, i_max + 1) if (2 * i - 2 * j) % phi == 0]


@dataclass(frozen=True)
class CongruenceReport:
    i: int
    j: int
    p: int
    s: int
    order: int
    holds: bool
    first_failure: Optional[tuple[int, int, int]] = None  # (exponent, residue_i, residue_j)
    residues: tuple[int, ...] = field(default=(), repr=False)  # Abar_i mod p^s, q^0..q^(order-1)

    def to_json(self) -> dict:
        fail = None
        if self.first_failure is not None:
            e, ri, rj = self.first_failure
            fail = {"exponent": e, "residue_i": str(ri), "residue_j": str(rj)}
        return {
            "i": self.i,
            "j": self.j,
            "p": self.p,
            "s": self.s,
            "modulus": str(self.p**self.s),
            "order": self.order,
            "holds": self.holds,
            "first_failure": fail,
            "residues": [str(r) for r in self.residues],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CongruenceReport":
        fail = obj["first_failure"]
        if fail is not None:
            fail = (fail["exponent"], int(fail["residue_i"]), int(fail["residue_j"]))
        return cls(
            obj["i"], obj["j"], obj["p"], obj["s"], obj["order"], obj["holds"], fail,
            tuple(int(r) for r in obj["residues"]),
        )


def check_kummer(i: int, j: int, p: int, s: int, order: int = DEFAULT_ORDER) -> CongruenceReport:
    """Compare Abar_i and Abar_j coefficientwise mod p^s below q^order.

    Only reports; it does not require 2i = 2j mod phi(p^s).
    """
    if i < 1 or j < 1:
        raise ValueError(f"form indices must be >= 1, got i={i}, j={j}")
    _require_prime(p)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    modulus = p**s
    fi = abar(i, order).series.coefficient_list(order)
    fj = fi if i == j else abar(j, order).series.coefficient_list(order)
    residues = tuple(int(c) % modulus for c in fi)
    failure = None
    for e, (ci, cj) in enumerate(zip(fi, fj)):
        ri, rj = int(ci) % modulus, int(cj) % modulus
        if ri != rj:
            failure = (e, ri, rj)
            break
    return CongruenceReport(i, j, p, s, order, failure is None, failure, residues)


def theorem2_applicable(k: int, p: int) -> bool:
    """p < 7, or 6k is congruent to one of 4, 6, 8, 10, 14 mod p - 1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _require_prime(p)
    if p < 7:
        return True
    return any((6 * k - r) % (p - 1) == 0 for r in DECAY_RESIDUES)


def p_valuation(n: int, p: int) -> Optional[int]:
    """v_p(n); None for n == 0 (infinite valuation)."""
    if n == 0:
        return None
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


INFINITY = "∞"


@dataclass(frozen=True)
class ValuationTable:
    k: int
    p: int
    rows: tuple[tuple[int, int, Optional[int]], ...]  # (n, a_k(p^n), v_p or None for zero)
    applicable: bool = True

    def valuations(self) -> list[Optional[int]]:
        return [v for _, _, v in self.rows]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "p": self.p,
            "applicable": self.applicable,
            "rows": [
                {"n": n, "coefficient": str(a), "valuation": INFINITY if v is None else v}
                for n, a, v in self.rows
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ValuationTable":
        rows = tuple(
            (r["n"], int(r["coefficient"]), None if r["valuation"] == INFINITY else int(r["valuation"]))
            for r in obj["rows"]
        )
        return cls(obj["k"], obj["p"], rows, obj.get("applicable", True))


class ResourceLimitError(ArithmeticError):
    pass


def padic_valuations(k: int, p: int, n_max: int, max_order: int = MAX_VALUATION_ORDER) -> ValuationTable:
    """a_k(p^n) and v_p(a_k(p^n)) for n = 1..n_max; needs Abar_k to order p^n_max + 1."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if p**n_max + 1 > max_order:
        raise ResourceLimitError(f"q-order {p ** n_max + 1} exceeds the limit {max_order}; lower --n-max")
    applicable = theorem2_applicable(k, p)
    if not applicable:
        log.warning("k=%d, p=%d is outside the hypotheses of the p-adic decay statement", k, p)
    form = abar(k, p**n_max + 1)
    rows = []
    for n in range(1, n_max + 1):
        a = form.coefficient(p**n)
        rows.append((n, a, p_valuation(a, p)))
    return ValuationTable(k, p, tuple(rows), applicable)
