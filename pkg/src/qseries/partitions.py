"""
t-core partition k-tuples: generating functions and brute-force counts.

The oracles here enumerate partitions and hook lengths directly. They are
slow on purpose and only meant for small n (roughly n <= 40).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .eta import eta_quotient
from .series import IntSeries


@dataclass(frozen=True)
class PartitionFamilySpec:
    """(t, k) selects A_t^(k): k-tuples of t-core partitions."""

    t: int
    k: int

    def __post_init__(self):
        if self.t < 2:
            raise ValueError(f"core parameter t must be >= 2, got {self.t}")
        if self.k < 1:
            raise ValueError(f"tuple length k must be >= 1, got {self.k}")

    def eta_terms(self):
        return {self.t: self.t * self.k, 1: -self.k}


A3_SINGLE = PartitionFamilySpec(3, 1)  # a_3
A3_PAIR = PartitionFamilySpec(3, 2)  # A_3
B3 = PartitionFamilySpec(3, 3)  # B_3


def family_series(spec: PartitionFamilySpec, order: int) -> IntSeries:
    """sum_n A_t^(k)(n) q^n = f_t^(tk) / f_1^k."""
    return eta_quotient(spec.eta_terms(), order)


def partitions(n: int, largest: int | None = None) -> Iterator[tuple]:
    """All partitions of n as nonincreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(parts) -> tuple:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def hook_multiset(parts) -> Counter:
    """Hook lengths (arm + leg + 1) of every cell of the Young diagram."""
    parts = tuple(parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(p <= 0 for p in parts):
        raise ValueError(f"not a partition: {parts}")
    conj = conjugate(parts)
    hooks = Counter()
    for i, row in enumerate(parts):
        for j in range(row):
            hooks[(row - j - 1) + (conj[j] - i - 1) + 1] += 1
    return hooks


def is_tcore(parts, t: int) -> bool:
    return all(h % t for h in hook_multiset(parts))


@lru_cache(maxsize=None)
def tcore_oracle(t: int, n: int) -> int:
    """Number of t-core partitions of n, by exhaustive enumeration."""
    if t < 2 or n < 0:
        raise ValueError("need t >= 2 and n >= 0")
    return sum(1 for p in partitions(n) if is_tcore(p, t))


@lru_cache(maxsize=None)
def tuple_oracle(t: int, k: int, n: int) -> int:
    """Ordered k-tuples of t-cores of total size n (k-fold convolution of tcore_oracle)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return tcore_oracle(t, n)
    return sum(tcore_oracle(t, j) * tuple_oracle(t, k - 1, n - j) for j in range(n + 1))


def divisor_delta(n: int) -> int:
    """#(divisors of n that are 1 mod 3) - #(divisors that are 2 mod 3)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            for x in {d, n // d}:
                if x % 3 == 1:
                    total += 1
                elif x % 3 == 2:
                    total -= 1
        d += 1
    return total
