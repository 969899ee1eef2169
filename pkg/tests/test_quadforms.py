from itertools import product
from math import isqrt

import pytest

from qseries.partitions import A3_PAIR, A3_SINGLE, B3, family_series
from qseries.quadforms import omega_enumerate, omega_enumerate_table, omega_series, sum_of_squares_table


def brute_omega(k, n):
    sx, sy = isqrt(n), isqrt(n // 3)
    count = 0
    for y in product(range(-sy, sy + 1), repeat=k):
        rest = n - 3 * sum(v * v for v in y)
        if rest < 0:
            continue
        for x in product(range(-sx, sx + 1), repeat=k):
            if sum(v * v for v in x) == rest:
                count += 1
    return count


def test_enumerate_examples():
    assert omega_enumerate(3, 0) == 1
    # r3(5) = 24 with y = 0, plus 6 * r3(2) = 72 with |y|^2 = 1
    assert sum_of_squares_table(3, 5)[5] == 24 and sum_of_squares_table(3, 5)[2] == 12
    assert omega_enumerate(3, 5) == 96
    assert omega_enumerate(1, 4) == 6


def test_enumerate_matches_brute():
    for k in (1, 2, 3):
        for n in range(25):
            assert omega_enumerate(k, n) == brute_omega(k, n)


def test_series_examples():
    s = omega_series(3, 10)
    assert s.coeffs[:3] == (1, 6, 12)
    assert omega_series(1, 10)[4] == 6
    for k in range(1, 6):
        assert omega_series(k, 5)[0] == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_series_matches_enumeration(k):
    assert omega_series(k, 200).coeffs == omega_enumerate_table(k, 200)


def test_omega_relations_to_b3():
    n = 2000
    w, b = omega_series(3, n), family_series(B3, n)
    assert all(w[6 * j + 5] == 4 * b[6 * j + 4] for j in range((n - 5) // 6 + 1))
    assert all(w[12 * j + 2] == 12 * b[6 * j] for j in range((n - 2) // 12 + 1))
    assert all(w[12 * j + 10] == 6 * b[6 * j + 4] for j in range((n - 10) // 12 + 1))


def test_v_and_u_relations():
    v, a = omega_series(2, 2000), family_series(A3_PAIR, 2000)
    assert all(v[6 * j + 5] == 12 * a[2 * j + 1] for j in range((2000 - 5) // 6 + 1))
    u, a1 = omega_series(1, 2000), family_series(A3_SINGLE, 2000)
    assert all(u[12 * j + 4] == 6 * a1[j] for j in range((2000 - 4) // 12 + 1))
