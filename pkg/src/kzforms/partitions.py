"""Integer partitions, Frobenius coordinates and the weight lambda.

A partition with Durfee square c has Frobenius coordinates

    A_i = l_i - i + 1/2,   B_i = l'_i - i + 1/2,   i = 1..c,

two sets of c distinct positive half-integers with sum(A) + sum(B) = |l|.
Every such pair of equal-size sets comes from exactly one partition, and

    lambda(l) = (sum a^2 - sum b^2) / 2

is the content sum of the Young diagram, hence an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def durfee(self) -> int:
        return sum(1 for i, p in enumerate(self.parts) if p > i)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class FrobeniusCoords:
    """Arm set ``A`` and leg set ``B`` (half-integers, strictly decreasing)."""

    A: tuple[Fraction, ...]
    B: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.A) != len(self.B):
            raise ValueError("arm and leg sets must have the same size")
        for side in (self.A, self.B):
            if any((2 * x).denominator != 1 or (2 * x) % 2 != 1 or x <= 0 for x in side):
                raise ValueError(f"entries must be positive odd multiples of 1/2: {side}")
            if any(side[i] <= side[i + 1] for i in range(len(side) - 1)):
                raise ValueError(f"entries must be distinct and decreasing: {side}")

    @property
    def size(self) -> int:
        total = sum(self.A, Fraction(0)) + sum(self.B, Fraction(0))
        assert total.denominator == 1
        return int(total)

    def to_partition(self) -> Partition:
        """Inverse of :func:`frobenius_coords`."""
        c = len(self.A)
        arms = [int(a - HALF) for a in self.A]
        legs = [int(b - HALF) for b in self.B]
        rows = [i + 1 + arms[i] for i in range(c)]
        # rows under the Durfee square, read off the column lengths
        below: list[int] = []
        for i in range(c):
            col_len = i + 1 + legs[i]
            for r in range(c, col_len):
                while len(below) <= r - c:
                    below.append(0)
                below[r - c] += 1
        return Partition(tuple(rows + below))


def enumerate_partitions(d: int) -> Iterator[Partition]:
    """All partitions of ``d`` in decreasing lexicographic order.

    (d), (d-1, 1), (d-2, 2), (d-2, 1, 1), ..., (1, ..., 1).
    """
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    if d == 0:
        yield Partition(())
        return
    # standard successor rule on a list of parts
    parts = [d]
    while True:
        yield Partition(tuple(parts))
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        parts[-1] -= 1
        rest = ones + 1
        top = parts[-1]
        while rest > top:
            parts.append(top)
            rest -= top
        parts.append(rest)


def partition_count(d: int) -> int:
    """p(d) from Euler's pentagonal recurrence."""
    return _partition_counts(d)[d]


@lru_cache(maxsize=None)
def _partition_counts(n: int) -> tuple[int, ...]:
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def frobenius_coords(part: Partition) -> FrobeniusCoords:
    conj = part.conjugate().parts
    c = part.durfee()
    A = tuple(part.parts[i] - i - HALF for i in range(c))
    B = tuple(conj[i] - i - HALF for i in range(c))
    return FrobeniusCoords(A, B)


def lambda_weight(part: Partition) -> int:
    fc = frobenius_coords(part)
    lam = (sum((a * a for a in fc.A), Fraction(0)) - sum((b * b for b in fc.B), Fraction(0))) / 2
    assert lam.denominator == 1, f"non-integral lambda {lam} for {part.parts}"
    return int(lam)


def content_sum(part: Partition) -> int:
    return sum(j - i for i, row in enumerate(part.parts) for j in range(row))


def power_sum_by_enumeration(d: int, k: int) -> int:
    """S_k(d) by walking every partition of d."""
    return sum(lambda_weight(p) ** k for p in enumerate_partitions(d))


def lambda_values_from_pairs(d: int) -> list[int]:
    """lambda for every pair (A, B) of equal-size half-integer sets with combined sum d.

    Works directly on sets, never constructing a partition.  Odd integers ``a``
    stand for the half-integers ``a/2``.
    """
    target = 2 * d
    # sets of distinct odd positive integers, grouped by (size, sum)
    by_size_sum: dict[tuple[int, int], list[int]] = {}

    def grow(next_odd: int, size: int, total: int, squares: int):
        by_size_sum.setdefault((size, total), []).append(squares)
        a = next_odd
        while total + a <= target:
            grow(a + 2, size + 1, total + a, squares + a * a)
            a += 2

    grow(1, 0, 0, 0)
    values = []
    for (size, total), squares_a in by_size_sum.items():
        squares_b = by_size_sum.get((size, target - total), [])
        for sa in squares_a:
            for sb in squares_b:
                num = sa - sb
                assert num % 8 == 0
                values.append(num // 8)
    return values


@lru_cache(maxsize=32)
def power_sum_table(d_max: int, k_max: int) -> tuple[tuple[int, ...], ...]:
    """``table[d][k] = S_k(d)`` for 0 <= d <= d_max, 0 <= k <= k_max, in one sweep.

    Sums over partitions are taken through their Frobenius pairs.  For sets of
    distinct odd positive integers (doubled half-integers) a knapsack collects,
    per (size, doubled sum), the moments sum (sum a^2)^t for t <= k_max.  With
    U, V the square sums of the two sides, 8 lambda = U - V, and

        8^k S_k(d) = sum_{size, h} sum_t C(k, t) (-1)^(k-t) M_t(size, h) M_(k-t)(size, 2d - h).
    """
    if d_max < 0 or k_max < 0:
        raise ValueError("d_max and k_max must be nonnegative")
    target = 2 * d_max
    nmom = k_max + 1
    # moments[size][h] -> list of nmom ints, or None when empty
    max_size = 0
    while (max_size + 1) ** 2 <= target:
        max_size += 1
    moments: list[list[list[int] | None]] = [[None] * (target + 1) for _ in range(max_size + 1)]
    moments[0][0] = [1] + [0] * k_max
    binom = [[comb(j, t) for t in range(j + 1)] for j in range(nmom)]

    for a in range(1, target + 1, 2):
        sq = a * a
        sq_pows = [sq**e for e in range(nmom)]
        for size in range(max_size - 1, -1, -1):
            src_row = moments[size]
            dst_row = moments[size + 1]
            for h in range(target - a, -1, -1):
                src = src_row[h]
                if src is None:
                    continue
                shifted = [
                    sum(binom[j][t] * sq_pows[j - t] * src[t] for t in range(j + 1)) for j in range(nmom)
                ]
                dst = dst_row[h + a]
                if dst is None:
                    dst_row[h + a] = shifted
                else:
                    for j in range(nmom):
                        dst[j] += shifted[j]

    table = []
    for d in range(d_max + 1):
        row = []
        for k in range(nmom):
            total = 0
            for size in range(max_size + 1):
                for h in range(2 * d + 1):
                    left, right = moments[size][h], moments[size][2 * d - h]
                    if left is None or right is None:
                        continue
                    total += sum(
                        binom[k][t] * (-1) ** (k - t) * left[t] * right[k - t] for t in range(k + 1)
                    )
            scale = 8**k
            assert total % scale == 0, f"8^{k} does not divide the raw moment sum at d={d}"
            row.append(total // scale)
        table.append(tuple(row))
    return tuple(table)


def power_sum(d: int, k: int) -> int:
    """S_k(d) = sum over partitions l of d of lambda(l)^k."""
    if d < 0 or k < 0:
        raise ValueError("d and k must be nonnegative")
    return power_sum_table(d, k)[d][k]
