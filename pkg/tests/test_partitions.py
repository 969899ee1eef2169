from collections import Counter
from itertools import product

import pytest

from qseries.partitions import (
    A3_PAIR,
    A3_SINGLE,
    B3,
    PartitionFamilySpec,
    conjugate,
    divisor_delta,
    family_series,
    hook_multiset,
    partitions,
    tcore_oracle,
    tuple_oracle,
)


def hooks_from_diagram(parts):
    """Hook lengths read off a set of cells, no conjugate shortcut."""
    cells = {(i, j) for i, row in enumerate(parts) for j in range(row)}
    out = Counter()
    for i, j in cells:
        arm = sum(1 for jj in range(j + 1, 100) if (i, jj) in cells)
        leg = sum(1 for ii in range(i + 1, 100) if (ii, j) in cells)
        out[arm + leg + 1] += 1
    return out


def test_hook_examples():
    assert hook_multiset((1,)) == Counter({1: 1})
    assert hook_multiset((2, 1)) == Counter({3: 1, 1: 2})
    assert hook_multiset((3, 1)) == Counter({4: 1, 2: 1, 1: 2})


def test_hook_multiset_rejects_non_partitions():
    with pytest.raises(ValueError):
        hook_multiset((1, 2))


def test_hooks_match_diagram_reading():
    for n in range(1, 11):
        for p in partitions(n):
            assert hook_multiset(p) == hooks_from_diagram(p)


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_conjugation_symmetry():
    for n in range(21):
        for p in partitions(n):
            assert hook_multiset(p) == hook_multiset(conjugate(p))


def test_tcore_oracle_examples():
    assert tcore_oracle(3, 3) == 0
    assert tcore_oracle(3, 4) == 2
    assert {p for p in partitions(4) if all(h % 3 for h in hook_multiset(p))} == {(3, 1), (2, 1, 1)}
    for t in (2, 3, 5):
        assert tcore_oracle(t, 0) == 1


def test_tuple_oracle_examples():
    assert tuple_oracle(3, 3, 2) == 9
    assert tuple_oracle(3, 3, 4) == 24
    for n in range(10):
        assert tuple_oracle(4, 1, n) == tcore_oracle(4, n)


def test_tuple_oracle_against_direct_tuples():
    # enumerate ordered triples of 3-cores outright for tiny n
    cores = {m: [p for p in partitions(m) if all(h % 3 for h in hook_multiset(p))] for m in range(9)}
    for n in range(9):
        count = 0
        for sizes in product(range(n + 1), repeat=3):
            if sum(sizes) == n:
                count += len(cores[sizes[0]]) * len(cores[sizes[1]]) * len(cores[sizes[2]])
        assert tuple_oracle(3, 3, n) == count


def test_family_series_examples():
    assert family_series(A3_SINGLE, 6).coeffs == (1, 1, 2, 0, 2, 1, 2)
    a3 = family_series(A3_PAIR, 8)
    assert a3.coeffs[:3] == (1, 2, 5) and a3[6] == 14 == 7 * a3[1]
    b3 = family_series(B3, 6)
    assert b3.coeffs == (1, 3, 9, 13, 24, 27, 50)
    assert b3[5] == 9 * b3[1]


@pytest.mark.parametrize("t", [2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_oracle_equivalence(t, k):
    s = family_series(PartitionFamilySpec(t, k), 30)
    assert list(s.coeffs) == [tuple_oracle(t, k, n) for n in range(31)]


def test_family_spec_validation():
    with pytest.raises(ValueError):
        PartitionFamilySpec(1, 1)
    with pytest.raises(ValueError):
        PartitionFamilySpec(3, 0)


def test_divisor_delta_examples():
    assert divisor_delta(1) == 1
    assert divisor_delta(4) == 1
    assert divisor_delta(7) == 2
    with pytest.raises(ValueError):
        divisor_delta(0)


def test_divisor_delta_brute():
    for n in range(1, 300):
        divs = [d for d in range(1, n + 1) if n % d == 0]
        assert divisor_delta(n) == sum(d % 3 == 1 for d in divs) - sum(d % 3 == 2 for d in divs)


def test_granville_ono():
    a3 = family_series(A3_SINGLE, 2000)
    assert all(a3[n] == divisor_delta(3 * n + 1) for n in range(2001))
