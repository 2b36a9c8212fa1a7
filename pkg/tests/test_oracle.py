import pytest
from hypothesis import given, settings

from conftest import CATALOG, UP_TO_5, hyperrings
from hyperrings.catalog import catalog, total
from hyperrings.closure import QuotientAxioms
from hyperrings.oracle import (
    OracleError,
    cross_validate,
    minimal_partition,
    qualifies,
    restricted_growth_strings,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("q", range(8))
def test_bell_numbers(q):
    strings = list(restricted_growth_strings(q))
    assert len(strings) == BELL[q]
    assert len(set(strings)) == BELL[q]
    for s in strings:
        assert all(s[i] <= 1 + max(s[:i], default=-1) for i in range(q))


def test_partitions_in_canonical_order():
    assert list(restricted_growth_strings(3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]


def test_oracle_examples():
    z2 = catalog("ring-as-hyperring", "Z2")
    assert minimal_partition(z2, QuotientAxioms(unit=1)).classes() == [[0], [1]]
    assert minimal_partition(total(3)).classes() == [[0, 1, 2]]
    coset = catalog("coset-hyperring", "Z4", [0, 2])
    assert minimal_partition(coset).classes() == [[0, 2], [1, 3]]


def test_discrete_partition_fails_on_total():
    assert not qualifies(total(3), (0, 1, 2), QuotientAxioms())
    assert qualifies(total(3), (0, 0, 0), QuotientAxioms())


def test_oracle_cap():
    with pytest.raises(OracleError):
        minimal_partition(CATALOG["ring-as-hyperring:UT2"], cap=7)


def test_oracle_cap_is_configurable():
    ut2 = CATALOG["ring-as-hyperring:UT2"]
    assert minimal_partition(ut2, QuotientAxioms(True, True), cap=8).class_count == 4


def test_total_q2_all_kinds_single_class():
    for item in cross_validate(total(2)):
        assert item.agree and item.closure.class_count == 1


def test_z2_kinds_are_discrete():
    z2 = catalog("ring-as-hyperring", "Z2")
    got = {(i.kind, i.e): i.oracle.class_count for i in cross_validate(z2)}
    assert got[("gammaStar", None)] == got[("lambdaStarE", 1)] == 2
    assert got[("alphaStar", None)] == got[("LambdaStarE", 1)] == 2


@pytest.mark.parametrize("name", sorted(UP_TO_5))
def test_three_way_agreement_on_catalog(name):
    for item in cross_validate(CATALOG[name]):
        assert item.oracle is not None
        assert item.agree, (item.kind, item.e, item.notes)


def test_cross_validate_notes_skipped_oracle():
    items = cross_validate(CATALOG["ring-as-hyperring:UT2"], cap=5, es=[5])
    assert all(i.oracle is None and i.notes for i in items)
    assert all(i.agree for i in items)


@settings(max_examples=30, deadline=None)
@given(hyperrings(max_q=4))
def test_three_way_agreement_on_random_structures(r):
    for item in cross_validate(r):
        assert item.agree, (item.kind, item.e)
