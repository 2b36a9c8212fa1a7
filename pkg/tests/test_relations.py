import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CATALOG, SMALL, naive_strongly_regular, warshall
from hyperrings.catalog import catalog, total
from hyperrings.core import PreconditionError
from hyperrings.expr import Bounds
from hyperrings.relations import (
    E_KINDS,
    KINDS,
    Relation,
    generate,
    generate_by_enumeration,
    is_strongly_regular,
    regularity_counterexample,
    round_bounds,
    saturated_generate,
    transitive_closure,
)

TINY = {k: r for k, r in CATALOG.items() if r.q <= 3}


def _es(r, kind):
    return range(r.q) if kind in E_KINDS else [None]


# -- generator examples ---------------------------------------------------------

def test_total_gamma_is_full_once_products_appear():
    # a lone element evaluates to itself, so one-letter bounds give the diagonal
    assert generate(total(2), "gamma", Bounds(1, 1)) == Relation.identity(2)
    assert generate(total(2), "gamma", Bounds(1, 2)) == Relation.full(2)
    assert generate(total(2), "gamma", Bounds(2, 1)) == Relation.full(2)
    assert generate(total(2), "gamma", Bounds(3, 3, 2)) == Relation.full(2)


def test_z2_alpha_plus_is_diagonal():
    z2 = catalog("ring-as-hyperring", "Z2")
    assert generate(z2, "alphaPlus", Bounds(2, 2, 1)) == Relation.identity(2)


def test_z2_lambda_times_is_diagonal():
    z2 = catalog("ring-as-hyperring", "Z2")
    for b in (Bounds(1, 2), Bounds(3, 3, 2)):
        assert generate(z2, "lambdaTimesE", b, 1) == Relation.identity(2)


def test_missing_e_is_rejected():
    with pytest.raises(PreconditionError):
        generate(total(2), "lambdaE", Bounds(1, 1))
    with pytest.raises(PreconditionError):
        generate(total(2), "lambdaE", Bounds(1, 1), 5)


def test_unknown_kind():
    with pytest.raises(PreconditionError):
        generate(total(2), "delta", Bounds(1, 1))


# the literal enumeration is slow, so the widest bounds only run at q <= 2
DP_CASES = [(name, b) for name in sorted(TINY)
            for b in (Bounds(2, 2, 1), Bounds(1, 3, 2), Bounds(2, 3, 2))
            if b != Bounds(2, 3, 2) or TINY[name].q <= 2]


@pytest.mark.parametrize("name,b", DP_CASES, ids=lambda v: str(v))
@pytest.mark.parametrize("kind", KINDS)
def test_mask_dynamic_programming_matches_enumeration(name, b, kind):
    r = TINY[name]
    for e in _es(r, kind):
        for terms in (None, *range(1, b.max_terms + 1)):
            assert generate(r, kind, b, e, terms) == generate_by_enumeration(r, kind, b, e, terms)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_generated_relations_are_reflexive_and_symmetric(name):
    r = CATALOG[name]
    b = Bounds(2, 3, 2)
    for kind in KINDS:
        for e in list(_es(r, kind))[:3]:
            rel = generate(r, kind, b, e)
            assert rel.is_reflexive() and rel.is_symmetric()


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_union_identities(name):
    r = CATALOG[name]
    b = Bounds(3, 3, 2)
    g = {k: generate(r, k, b) for k in ("beta", "gamma", "alphaPlus", "alphaTimes",
                                        "alpha", "alphaUnion")}
    assert g["alphaUnion"] == g["alphaPlus"] | g["alphaTimes"]
    assert g["alphaUnion"] <= g["alpha"]
    assert g["gamma"] <= g["alphaPlus"]
    assert g["beta"] <= g["gamma"]
    for e in range(min(r.q, 3)):
        lt = generate(r, "lambdaTimesE", b, e)
        assert generate(r, "lambdaE", b, e) == lt | g["alphaPlus"]
        assert generate(r, "LambdaE", b, e) == lt | g["alpha"]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(SMALL)), st.sampled_from(KINDS),
       st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(1, 2)),
       st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)), st.data())
def test_generate_is_monotone_in_bounds(name, kind, base, step, data):
    r = SMALL[name]
    e = data.draw(st.integers(0, r.q - 1)) if kind in E_KINDS else None
    small = Bounds(*base)
    big = Bounds(*(a + d for a, d in zip(base, step)))
    assert generate(r, kind, small, e) <= generate(r, kind, big, e)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_exact_level_monotonicity(name):
    r = CATALOG[name]
    for e in range(r.q):
        for k in (2, 3):
            b = Bounds(4, k, 2)
            levels = [generate(r, "lambdaTimesE", b, e, terms=m) for m in (1, 2, 3, 4)]
            assert all(a <= c for a, c in zip(levels, levels[1:]))


# -- transitive closure -------------------------------------------------------------

def test_closure_chain():
    rel = Relation.from_pairs(3, [(0, 1), (1, 2)], symmetric=True) | Relation.identity(3)
    assert transitive_closure(rel) == Relation.full(3)


def test_closure_of_diagonal():
    assert transitive_closure(Relation.identity(4)) == Relation.identity(4)


def test_closure_needs_reflexive_symmetric():
    with pytest.raises(PreconditionError):
        transitive_closure(Relation.from_pairs(2, [(0, 1), (0, 0), (1, 1)]))


@st.composite
def symmetric_reflexive(draw, max_q=8):
    q = draw(st.integers(1, max_q))
    bits = draw(st.lists(st.booleans(), min_size=q * q, max_size=q * q))
    m = np.array(bits, dtype=bool).reshape(q, q)
    return m | m.T | np.eye(q, dtype=bool)


@settings(max_examples=100, deadline=None)
@given(symmetric_reflexive())
def test_closure_matches_warshall(m):
    closed = transitive_closure(Relation(m))
    assert np.array_equal(closed.matrix, warshall(m))
    assert closed.is_equivalence()
    assert transitive_closure(closed) == closed


# -- strong regularity -------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(CATALOG))
def test_full_relation_is_strongly_regular(name):
    r = CATALOG[name]
    assert is_strongly_regular(r, Relation.full(r.q))


def test_diagonal_on_z2_is_strongly_regular():
    assert is_strongly_regular(catalog("ring-as-hyperring", "Z2"), Relation.identity(2))


def test_diagonal_on_total_has_witness():
    w = regularity_counterexample(total(2), Relation.identity(2))
    assert (w.x, w.y, w.a, w.u, w.v, w.op, w.side) == (0, 0, 0, 0, 1, "plus", "left")


def test_strong_regularity_needs_equivalence():
    with pytest.raises(PreconditionError):
        is_strongly_regular(total(2), Relation.from_pairs(2, [(0, 1)]))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(sorted(SMALL)), st.data())
def test_strong_regularity_matches_reference(name, data):
    r = SMALL[name]
    labels = data.draw(st.lists(st.integers(0, r.q - 1), min_size=r.q, max_size=r.q))
    rel = Relation.from_labels(labels)
    assert is_strongly_regular(r, rel) == naive_strongly_regular(r, labels)


# -- saturation -----------------------------------------------------------------------

def test_saturation_total_is_quick():
    # round 1 only sees single letters; round 2 already reaches the full relation
    sat = saturated_generate(total(3), "gamma")
    assert sat.relation == Relation.full(3) and sat.rounds == 2 and sat.stabilized


def test_saturation_z2_lambda():
    sat = saturated_generate(catalog("ring-as-hyperring", "Z2"), "lambdaE", 1)
    assert sat.relation == Relation.identity(2) and sat.stabilized


def test_saturation_coset_gamma():
    sat = saturated_generate(catalog("coset-hyperring", "Z4", [0, 2]), "gamma")
    assert sat.relation.classes() == [[0, 2], [1, 3]]


def test_round_bounds_grow():
    assert [round_bounds(n) for n in (1, 2, 3)] == [Bounds(1, 1, 1), Bounds(2, 2, 1), Bounds(3, 3, 2)]


def test_round_cap_flags_partial_result():
    sat = saturated_generate(CATALOG["ring-as-hyperring:UT2"], "alpha", max_rounds=1)
    assert not sat.stabilized and sat.rounds == 1


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_closed_generators_are_strongly_regular(name):
    # beta only looks at products, so its closure need not respect hyperaddition
    r = CATALOG[name]
    for kind in KINDS[1:]:
        for e in list(_es(r, kind))[:2]:
            sat = saturated_generate(r, kind, e)
            assert is_strongly_regular(r, sat.relation), (kind, e)
