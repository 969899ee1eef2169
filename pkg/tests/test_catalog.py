from dataclasses import replace

import pytest

from qseries import series as S
from qseries.catalog import INVENTORY, catalog, parse_filter, select, verify, verify_all
from qseries.errors import BuildFailure


def entry(id_):
    (e,) = [e for e in catalog() if e.id == id_]
    return e


def test_inventory_and_catalog_agree():
    families = [e.family for e in catalog()]
    assert set(families) == set(INVENTORY)
    assert len({e.id for e in catalog()}) == len(catalog())


def test_parameterised_families_present():
    ids = {e.id for e in catalog()}
    for k in range(1, 7):
        assert {f"re1[{k}]", f"re2[{k}]", f"cor1[{k}]", f"b33[{k}]", f"b33cor[{k}]"} <= ids
    assert {"hs[2,2]", "hs[5,2]", "bn22k[1]", "bn22k[2]"} <= ids


def test_lemid1_at_500():
    assert verify(entry("lemid1"), 500).passed


def test_re1_k2():
    r = verify(entry("re1[2]"), 500)
    assert r.passed and r.checked == (500 - 3) // 8


def test_corrupted_entry_fails_at_zero():
    e = entry("B36n4")
    bad = replace(e, rhs=lambda n: S.scale(e.rhs(n), 2))
    r = verify(bad, 50)
    assert not r.passed and r.mismatch == 0
    assert (r.lhs_value, r.rhs_value) == (24, 48)


def test_corrupted_congruence_detected():
    e = entry("mod24")
    bad = replace(e, progressions=((6, 4, 48),))
    r = verify(bad, 100)
    assert not r.passed and r.mismatch == 4


def test_build_failure_is_attributed():
    def boom(n):
        raise ValueError("nope")

    with pytest.raises(BuildFailure) as info:
        verify(replace(entry("lemid1"), lhs=boom), 10)
    assert info.value.entry_id == "lemid1"


def test_full_catalog_at_300():
    reports = verify_all(300)
    assert len(reports) == len(catalog())
    assert all(r.passed for r in reports), [r for r in reports if not r.passed]


def test_order_zero_rejected():
    with pytest.raises(ValueError):
        verify_all(0)


def test_filters():
    assert [e.id for e in select("B36*")] == ["B36n", "B36n4"]
    assert [e.id for e in select("omega*")] == ["omega65", "omega122", "omega1210"]
    assert [e.id for e in select("re1")] == [f"re1[{k}]" for k in range(1, 7)]
    assert [e.id for e in select("re1[2]")] == ["re1[2]"]
    assert len(select("lemid*,thm1id*")) == 8
    for bad in ("", "a b", "x,,y", "re1;"):
        with pytest.raises(ValueError):
            parse_filter(bad)


def test_monotone_in_order():
    for n in (10, 40, 120):
        assert all(r.passed for r in verify_all(n))


def test_out_of_range_entries_are_vacuous():
    r = verify(entry("b33[6]"), 300)
    assert r.passed and r.checked == -1
    r = verify(entry("b33[6]"), 800)
    assert r.passed and r.checked == 0


def test_c5_congruence():
    r = verify(entry("c5"), 1000)
    assert r.passed and r.checked == 1000
