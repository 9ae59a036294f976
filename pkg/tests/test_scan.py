"""Étale scan: exact subgroup enumeration and numeric multi-start."""

from etalelab.algebras import is_etale
from etalelab.catalog import get_category
from etalelab.scan import etale_scan, is_pointed, scan_pointed


def members(report):
    return [tuple(c["members"]) for c in report["candidates"]]


def test_pointedness_detection():
    assert is_pointed(get_category("toric-code"))
    assert is_pointed(get_category("semion"))
    assert not is_pointed(get_category("fibonacci"))
    assert not is_pointed(get_category("rep-s3"))


def test_toric_code_scan_matches_subgroup_oracle():
    report = etale_scan(get_category("toric-code"), 4)
    assert report["label"] == "COMPLETE"
    assert members(report) == [("1",), ("1", "e"), ("1", "m")]


def test_semion_scan_is_trivial():
    report = etale_scan(get_category("semion"), 2)
    assert members(report) == [("0",)]


def test_rep_z4_scan_finds_all_subgroups():
    report = etale_scan(get_category("rep-z4"), 5)
    assert members(report) == [("0",), ("0", "2"), ("0", "1", "2", "3")]


def test_pointed_scan_algebras_are_etale():
    for found in scan_pointed(get_category("toric-code"), 4):
        assert is_etale(found["algebra"])["etale"], found["members"]


def test_fibonacci_scan_best_effort_trivial():
    report = etale_scan(get_category("fibonacci"), 3)
    assert report["label"] == "BEST_EFFORT"
    assert members(report) == [("1",)]


def test_rep_s3_scan_finds_small_quotient_algebras():
    report = etale_scan(get_category("rep-s3"), 3.5)
    found = members(report)
    assert ("1",) in found
    assert ("1", "s") in found
    assert ("1", "V") in found


def test_scan_is_seed_reproducible():
    a = etale_scan(get_category("fibonacci"), 3, seed=7)
    b = etale_scan(get_category("fibonacci"), 3, seed=7)
    assert a == b


def test_bound_excludes_large_candidates():
    report = etale_scan(get_category("toric-code"), 1.5)
    assert members(report) == [("1",)]
