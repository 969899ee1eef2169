"""
Representation numbers of n = x_1^2 + ... + x_k^2 + 3(y_1^2 + ... + y_k^2).

omega^(1) is u, omega^(2) is v and omega^(3) is omega. ``omega_series``
is the production path; the enumeration functions are the oracle.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import isqrt

from . import series as S
from .eta import phi
from .series import IntSeries


@lru_cache(maxsize=32)
def sum_of_squares_table(k: int, limit: int) -> tuple:
    """r_k(m) for m <= limit, counting every integer vector with |x|^2 = m."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s = isqrt(limit)
    counts = [0] * (limit + 1)
    squares = [x * x for x in range(-s, s + 1)]
    for vec in product(squares, repeat=k):
        m = sum(vec)
        if m <= limit:
            counts[m] += 1
    return tuple(counts)


def omega_enumerate(k: int, n: int) -> int:
    """Lattice count of integer solutions, y-block first."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    return omega_enumerate_table(k, n)[n]


@lru_cache(maxsize=32)
def omega_enumerate_table(k: int, upto: int) -> tuple:
    """omega^(k)(n) for all n <= upto by enumeration."""
    xs = sum_of_squares_table(k, upto)
    ys = sum_of_squares_table(k, upto // 3)
    out = [0] * (upto + 1)
    for j, ny in enumerate(ys):
        if not ny:
            continue
        for m in range(upto + 1 - 3 * j):
            out[m + 3 * j] += ny * xs[m]
    return tuple(out)


def omega_series(k: int, order: int) -> IntSeries:
    """phi(q)^k phi(q^3)^k through q^order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return S.mul(S.power(phi(order), k), S.power(phi(order, 3), k))
