"""Shared fixtures, hypothesis strategies and independent reference checkers.

The reference code here deliberately avoids the package's mask machinery:
hyperoperations are read back as Python sets and everything is recomputed
the slow, obvious way.
"""
from itertools import product

import numpy as np
import pytest
from hypothesis import strategies as st

from hyperrings.catalog import (
    SEMIGROUPS,
    b_hypergroup_ring,
    coset_hyperring,
    p_hyperring,
    standard_catalog,
    zmod,
)
from hyperrings.core import Hyperring, elements

CATALOG = standard_catalog()
SMALL = {k: r for k, r in CATALOG.items() if r.q <= 4}
UP_TO_5 = {k: r for k, r in CATALOG.items() if r.q <= 5}


@pytest.fixture(scope="session")
def catalog():
    return CATALOG


# -- reference implementations ------------------------------------------------

def as_sets(r: Hyperring):
    plus = [[set(elements(r.plus(x, y))) for y in range(r.q)] for x in range(r.q)]
    times = [[set(elements(r.times(x, y))) for y in range(r.q)] for x in range(r.q)]
    return plus, times


def set_extend(tab, a, b):
    out = set()
    for x in a:
        for y in b:
            out |= tab[x][y]
    return out


def naive_axioms(r: Hyperring):
    """Names of failing axioms, recomputed from set tables."""
    plus, times = as_sets(r)
    q = range(r.q)
    carrier = set(q)
    failed = set()
    for tab, name in ((plus, "plus-associativity"), (times, "times-associativity")):
        for x, y, z in product(q, repeat=3):
            if set_extend(tab, {x}, tab[y][z]) != set_extend(tab, tab[x][y], {z}):
                failed.add(name)
    for x in q:
        if set_extend(plus, {x}, carrier) != carrier or set_extend(plus, carrier, {x}) != carrier:
            failed.add("plus-reproducibility")
    mode = r.distributivity
    for x, y, z in product(q, repeat=3):
        pairs = [
            (set_extend(times, {x}, plus[y][z]), set_extend(plus, times[x][y], times[x][z])),
            (set_extend(times, plus[y][z], {x}), set_extend(plus, times[y][x], times[z][x])),
        ]
        for lhs, rhs in pairs:
            if (mode == "strong" and lhs != rhs) or not lhs <= rhs:
                failed.add(f"distributivity-{mode}")
    return failed


def warshall(matrix):
    """Floyd-Warshall transitive closure on a boolean matrix."""
    m = np.array(matrix, dtype=bool)
    for k in range(m.shape[0]):
        m |= np.outer(m[:, k], m[k, :])
    return m


def naive_strongly_regular(r: Hyperring, labels) -> bool:
    plus, times = as_sets(r)
    q = range(r.q)
    for tab in (plus, times):
        for x, y, a in product(q, repeat=3):
            if labels[x] != labels[y]:
                continue
            for lhs, rhs in ((tab[a][x], tab[a][y]), (tab[x][a], tab[y][a])):
                if len({labels[u] for u in lhs | rhs}) > 1:
                    return False
    return True


# -- strategies ----------------------------------------------------------------

def _ideals(n):
    return [frozenset(range(0, n, d)) for d in range(1, n + 1) if n % d == 0]


@st.composite
def coset_hyperrings(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    ideal = draw(st.sampled_from(_ideals(n)))
    return coset_hyperring(zmod(n), ideal)


@st.composite
def p_hyperrings(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    p = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
    return p_hyperring(zmod(n), p)


@st.composite
def biset_rings(draw, max_q=4):
    q = draw(st.integers(1, max_q))
    mul = draw(st.sampled_from(sorted(SEMIGROUPS)))
    return b_hypergroup_ring(q, mul)


def hyperrings(max_q=5):
    return st.one_of(coset_hyperrings(max_q), p_hyperrings(max_q), biset_rings(min(max_q, 4)))


def subset_masks(q):
    return st.integers(1, (1 << q) - 1)


def witness_holds(r: Hyperring, check) -> bool:
    """Recompute a reported axiom witness with set tables."""
    plus, times = as_sets(r)
    w = check.witness
    carrier = set(range(r.q))
    if check.name in ("plus-associativity", "times-associativity"):
        tab = plus if check.name.startswith("plus") else times
        x, y, z = w
        return set_extend(tab, {x}, tab[y][z]) != set_extend(tab, tab[x][y], {z})
    if check.name == "plus-reproducibility":
        x, side = w
        got = set_extend(plus, {x}, carrier) if side == "left" else set_extend(plus, carrier, {x})
        return got != carrier
    x, y, z, side = w
    if side == "left":
        lhs, rhs = set_extend(times, {x}, plus[y][z]), set_extend(plus, times[x][y], times[x][z])
    else:
        lhs, rhs = set_extend(times, plus[y][z], {x}), set_extend(plus, times[y][x], times[z][x])
    return lhs != rhs if check.name.endswith("strong") else not lhs <= rhs
