import pytest
from hypothesis import given, settings, strategies as st

from qseries import series as S
from qseries.errors import InsufficientOrder
from qseries.partitions import A3_SINGLE, B3, family_series, tuple_oracle
from qseries.scanner import CANDIDATE, VERIFIED, CongruenceClaim, check_claim, scan, zero_progressions


@pytest.fixture(scope="module")
def b3_900():
    return family_series(B3, 900)


def test_check_claim_examples(b3_900):
    c = check_claim(b3_900, CongruenceClaim(6, 4, 24))
    assert c.status == VERIFIED and c.evidence == 150
    c = check_claim(b3_900, CongruenceClaim(30, 10, 120))
    assert c.status == VERIFIED and b3_900[10] == 120
    c = check_claim(b3_900, CongruenceClaim(6, 4, 48))
    assert c.status == CANDIDATE
    assert tuple_oracle(3, 3, 4) == 24


def test_check_claim_needs_an_index():
    with pytest.raises(InsufficientOrder):
        check_claim(S.one(5), CongruenceClaim(10, 7, 3))


def test_claim_validation():
    with pytest.raises(ValueError):
        CongruenceClaim(3, 3, 2)
    with pytest.raises(ValueError):
        CongruenceClaim(3, 1, 1)
    with pytest.raises(ValueError):
        CongruenceClaim(3, 1, 2, status="proved")


def test_scan_small_steps():
    found = {(c.step, c.residue, c.modulus) for c in scan(family_series(B3, 600), 12, 20)}
    assert {(4, 1, 3), (3, 2, 9), (6, 4, 24), (8, 3, 13)} <= found


def test_scan_finds_mod120(b3_900):
    found = {(c.step, c.residue, c.modulus) for c in scan(b3_900, 30, 25)}
    assert {(30, 10, 120), (30, 28, 120)} <= found


def test_scan_constant_series():
    assert scan(S.one(100), 10, 5) == []


def test_scan_insufficient_order():
    with pytest.raises(InsufficientOrder):
        scan(S.one(10), 5, 5)


def test_subsumption(b3_900):
    claims = scan(b3_900, 30, 25)
    for i, c in enumerate(claims):
        assert not any(d.implies(c) for d in claims[:i])
    ids = {(c.step, c.residue) for c in claims}
    assert (6, 2) not in ids  # B3(6n+2) = 9 B3(2n) is implied by (3, 2, 9)


def test_scan_sorted_and_deterministic(b3_900):
    a = scan(b3_900, 30, 25)
    assert [(c.step, c.residue) for c in a] == sorted((c.step, c.residue) for c in a)
    assert a == scan(family_series(B3, 900), 30, 25)


def test_soundness_at_double_order(b3_900):
    deep = family_series(B3, 1800)
    for c in scan(b3_900, 30, 25):
        assert check_claim(deep, c).status == VERIFIED, c


def test_zero_progressions_kept_out():
    a3 = family_series(A3_SINGLE, 900)
    zeros = zero_progressions(a3, 30, 20)
    assert (4, 3, 225) in zeros
    assert all((c.step, c.residue) not in {(z[0], z[1]) for z in zeros} for c in scan(a3, 30, 20))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-1000, 1000), min_size=60, max_size=60))
def test_scan_claims_always_check(values):
    s = S.from_coeffs(values, 59)
    for c in scan(s, 6, 5):
        assert check_claim(s, c).status == VERIFIED
