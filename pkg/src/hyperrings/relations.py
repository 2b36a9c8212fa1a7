"""Generator relations on a hyperring and their transitive closures.

Every relation here is a union of blocks ``A x B`` where ``A`` and ``B`` are
values of two related sum-of-products expressions.  :func:`generator_pairs`
computes the distinct value pairs by dynamic programming over subset masks
rather than over expressions, which keeps large bounds cheap:

* products of a given length are tabulated once (``_Tables.products``);
* rearrangements of a word are handled per multiset of letters;
* sums over all orderings of a multiset of summands are accumulated with the
  fact that extension distributes over unions.

:func:`generate_by_enumeration` walks the literal expression universe and is
kept as an independent reference for small bounds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .core import Hyperring, PreconditionError, elements
from .expr import (
    Bounds,
    enumerate_expressions,
    evaluate,
    pe_partners,
    permute_factors,
    permute_terms,
)

__all__ = [
    "KINDS",
    "E_KINDS",
    "Relation",
    "RegularityCounterexample",
    "Saturation",
    "generator_pairs",
    "generate",
    "generate_by_enumeration",
    "transitive_closure",
    "regularity_counterexample",
    "is_strongly_regular",
    "saturated_generate",
    "round_bounds",
]

KINDS = ("beta", "gamma", "alphaPlus", "alphaTimes", "alpha", "alphaUnion",
         "lambdaTimesE", "lambdaE", "LambdaE")
E_KINDS = frozenset({"lambdaTimesE", "lambdaE", "LambdaE"})
_UNIONS = {
    "alphaUnion": ("alphaPlus", "alphaTimes"),
    "lambdaE": ("lambdaTimesE", "alphaPlus"),
    "LambdaE": ("lambdaTimesE", "alpha"),
}


class Relation:
    """A binary relation on ``{0..q-1}`` as a dense boolean matrix."""

    __slots__ = ("matrix", "_rows")

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise PreconditionError("relation matrix must be square")
        m.setflags(write=False)
        self.matrix = m
        self._rows = None

    @classmethod
    def identity(cls, q: int) -> "Relation":
        return cls(np.eye(q, dtype=bool))

    @classmethod
    def full(cls, q: int) -> "Relation":
        return cls(np.ones((q, q), dtype=bool))

    @classmethod
    def from_pairs(cls, q: int, pairs: Iterable[tuple[int, int]], symmetric=False) -> "Relation":
        m = np.zeros((q, q), dtype=bool)
        for x, y in pairs:
            m[x, y] = True
            if symmetric:
                m[y, x] = True
        return cls(m)

    @classmethod
    def from_blocks(cls, q: int, blocks: Iterable[tuple[int, int]]) -> "Relation":
        """Union of ``A x B`` over mask pairs, plus the diagonal."""
        m = np.eye(q, dtype=bool)
        for a, b in blocks:
            m[np.ix_(elements(a), elements(b))] = True
        return cls(m)

    @classmethod
    def from_labels(cls, labels) -> "Relation":
        lab = np.asarray(labels)
        return cls(lab[:, None] == lab[None, :])

    @property
    def q(self) -> int:
        return self.matrix.shape[0]

    @property
    def rows(self) -> tuple[int, ...]:
        """Row ``x`` as a mask of the elements related to ``x``."""
        if self._rows is None:
            weights = 1 << np.arange(self.q, dtype=object)
            self._rows = tuple(int(w) for w in (self.matrix.astype(object) @ weights))
        return self._rows

    def row(self, x: int) -> int:
        return self.rows[x]

    def image(self, mask: int) -> int:
        """``R(S)``: everything related to some element of ``S``."""
        out = 0
        for x in elements(mask):
            out |= self.rows[x]
        return out

    def is_reflexive(self) -> bool:
        return bool(self.matrix.diagonal().all())

    def is_symmetric(self) -> bool:
        return bool((self.matrix == self.matrix.T).all())

    def is_transitive(self) -> bool:
        m = self.matrix.astype(np.int64)
        return bool(((m @ m > 0) <= self.matrix).all())

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def labels(self) -> tuple[int, ...]:
        """Canonical class labels (restricted growth string); needs an equivalence."""
        out = [-1] * self.q
        nxt = 0
        for x in range(self.q):
            if out[x] < 0:
                for y in elements(self.rows[x]):
                    out[y] = nxt
                nxt += 1
        return tuple(out)

    def classes(self) -> list[list[int]]:
        seen, out = 0, []
        for x in range(self.q):
            if not seen >> x & 1:
                out.append(elements(self.rows[x]))
                seen |= self.rows[x]
        return out

    def pairs(self) -> list[tuple[int, int]]:
        """Related pairs with ``i <= j`` (the serialized form)."""
        ii, jj = np.nonzero(np.triu(self.matrix))
        return [(int(i), int(j)) for i, j in zip(ii, jj)]

    def __or__(self, other: "Relation") -> "Relation":
        return Relation(self.matrix | other.matrix)

    def __and__(self, other: "Relation") -> "Relation":
        return Relation(self.matrix & other.matrix)

    def __le__(self, other: "Relation") -> bool:
        return bool((self.matrix <= other.matrix).all())

    def __eq__(self, other) -> bool:
        return isinstance(other, Relation) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes())

    def __repr__(self):
        return f"Relation(q={self.q}, pairs={self.pairs()})"


# -- mask-level tables -------------------------------------------------------

@dataclass
class _Tables:
    r: Hyperring
    products: list[set[int]] = field(default_factory=list)   # index = word length
    arrangements: dict[tuple[int, ...], frozenset[int]] = field(default_factory=dict)

    def grow(self, k: int) -> None:
        q, r = self.r.q, self.r
        if not self.products:
            self.products = [set(), {1 << x for x in range(q)}]
            for x in range(q):
                self.arrangements[(x,)] = frozenset({1 << x})
        while len(self.products) <= k:
            n = len(self.products)
            self.products.append({r.mul(a, 1 << x) for a in self.products[n - 1] for x in range(q)})
            for ms in combinations_with_replacement(range(q), n):
                vals = set()
                for i, x in enumerate(ms):
                    if i and ms[i - 1] == x:
                        continue
                    rest = ms[:i] + ms[i + 1:]
                    bx = 1 << x
                    vals.update(r.mul(a, bx) for a in self.arrangements[rest])
                self.arrangements[ms] = frozenset(vals)

    def word_values(self, k: int) -> set[int]:
        self.grow(k)
        out = set()
        for n in range(1, k + 1):
            out |= self.products[n]
        return out

    def rearrangement_unions(self, k: int) -> set[int]:
        """Union of all rearrangement values, one mask per letter multiset."""
        self.grow(k)
        out = set()
        for ms, vals in self.arrangements.items():
            if len(ms) <= k:
                u = 0
                for v in vals:
                    u |= v
                out.add(u)
        return out

    def power(self, e: int, n: int) -> int:
        v = 1 << e
        for _ in range(n - 1):
            v = self.r.mul(v, 1 << e)
        return v


@lru_cache(maxsize=64)
def _tables(r: Hyperring) -> _Tables:
    return _Tables(r)


def _levels(max_terms: int, terms: int | None) -> range:
    if terms is None:
        return range(1, max_terms + 1)
    if not 1 <= terms <= max_terms:
        raise PreconditionError(f"term count {terms} outside 1..{max_terms}")
    return range(terms, terms + 1)


def _sequence_sums(r: Hyperring, summands: set[int], levels: range) -> set[int]:
    """Values of sums of ``j`` summands (in any order of choice), ``j`` in levels."""
    out = set()
    cur = set(summands)
    for j in range(1, levels.stop):
        if j > 1:
            cur = {r.add(s, a) for s in cur for a in summands}
        if j in levels:
            out |= cur
    return out


def _multiset_sums(r: Hyperring, summands: set[int], levels: range) -> set[int]:
    """For each multiset of summands, the union of its sums over all orderings."""
    masks = sorted(summands)
    prev = {(a,): a for a in masks}
    out = set(prev.values()) if 1 in levels else set()
    for j in range(2, levels.stop):
        cur = {}
        for ms in combinations_with_replacement(masks, j):
            w = 0
            for i, a in enumerate(ms):
                if i and ms[i - 1] == a:
                    continue
                w |= r.add(prev[ms[:i] + ms[i + 1:]], a)
            cur[ms] = w
        if j in levels:
            out.update(cur.values())
        prev = cur
    return out


def _insertion_term_pairs(t: _Tables, e: int, b: Bounds) -> set[tuple[int, int]]:
    r = t.r
    K = b.max_factors
    t.grow(K)
    pairs = {(a, a) for a in t.word_values(K)}
    for run in range(1, b.max_insert_run + 1):
        block = t.power(e, run)
        for k in range(1, K - run + 1):
            for a in range(0, k + 1):
                prefixes = t.products[a] if a else (None,)
                suffixes = t.products[k - a] if k - a else (None,)
                for u in prefixes:
                    ub = block if u is None else r.mul(u, block)
                    for v in suffixes:
                        if u is None:
                            left, right = v, r.mul(ub, v)
                        elif v is None:
                            left, right = u, ub
                        else:
                            left, right = r.mul(u, v), r.mul(ub, v)
                        pairs.add((left, right))
    return pairs


def _insertion_sums(r: Hyperring, term_pairs, levels: range) -> set[tuple[int, int]]:
    out = set()
    cur = set(term_pairs)
    for j in range(1, levels.stop):
        if j > 1:
            cur = {(r.add(s, a), r.add(s2, a2)) for s, s2 in cur for a, a2 in term_pairs}
        if j in levels:
            out |= cur
    return out


def generator_pairs(r: Hyperring, kind: str, b: Bounds, e: int | None = None,
                    terms: int | None = None) -> frozenset[tuple[int, int]]:
    """Distinct ``(value(A), value(B))`` over the generator pairs of ``kind``.

    With ``terms`` set, only expressions with exactly that many summands are
    used (the level-``n`` relation); otherwise all up to ``b.max_terms``.
    Pairs from the e-insertion condition are returned in both orders.
    """
    if kind not in KINDS:
        raise PreconditionError(f"unknown relation kind {kind!r}")
    if kind in E_KINDS:
        if e is None:
            raise PreconditionError(f"relation {kind} needs an element e")
        if not 0 <= e < r.q:
            raise PreconditionError(f"e={e} out of range for q={r.q}")
    if kind in _UNIONS:
        out = set()
        for sub in _UNIONS[kind]:
            out |= generator_pairs(r, sub, b, e, terms)
        return frozenset(out)
    return _base_pairs(r, kind, b, e, terms)


@lru_cache(maxsize=1024)
def _base_pairs(r, kind, b, e, terms):
    t = _tables(r)
    K = b.max_factors
    levels = _levels(b.max_terms, terms)
    if kind == "beta":
        if terms not in (None, 1):
            return frozenset()
        blocks = t.word_values(K)
    elif kind == "gamma":
        blocks = _sequence_sums(r, t.word_values(K), levels)
    elif kind == "alphaPlus":
        blocks = _multiset_sums(r, t.word_values(K), levels)
    elif kind == "alphaTimes":
        blocks = _sequence_sums(r, t.rearrangement_unions(K), levels)
    elif kind == "alpha":
        blocks = _multiset_sums(r, t.rearrangement_unions(K), levels)
    else:  # lambdaTimesE
        pairs = _insertion_sums(r, _insertion_term_pairs(t, e, b), levels)
        return frozenset(pairs | {(y, x) for x, y in pairs})
    return frozenset((w, w) for w in blocks)


def generate(r: Hyperring, kind: str, b: Bounds, e: int | None = None,
             terms: int | None = None) -> Relation:
    """The bounded generator relation of ``kind``; reflexive and symmetric."""
    return Relation.from_blocks(r.q, generator_pairs(r, kind, b, e, terms))


def generate_by_enumeration(r: Hyperring, kind: str, b: Bounds, e: int | None = None,
                            terms: int | None = None) -> Relation:
    """Reference implementation walking every expression inside ``b``.

    Exponential in the bounds; meant for cross-checking :func:`generate`.
    """
    if kind in E_KINDS and e is None:
        raise PreconditionError(f"relation {kind} needs an element e")
    if kind in _UNIONS:
        out = Relation.identity(r.q)
        for sub in _UNIONS[kind]:
            out = out | generate_by_enumeration(r, sub, b, e, terms)
        return out
    q = r.q
    m = np.eye(q, dtype=bool)

    def mark(a, c):
        m[np.ix_(elements(a), elements(c))] = True

    for expr in enumerate_expressions(q, b):
        if terms is not None and expr.m != terms:
            continue
        if kind == "beta" and expr.m != 1:
            continue
        v = evaluate(r, expr)
        if kind in ("beta", "gamma"):
            mark(v, v)
        elif kind == "lambdaTimesE":
            for w in pe_partners(expr, e, b):
                mark(evaluate(r, w.left), evaluate(r, w.right))
                mark(evaluate(r, w.right), evaluate(r, w.left))
        else:
            term_perms = permutations(range(expr.m)) if kind != "alphaTimes" else [tuple(range(expr.m))]
            term_perms = list(term_perms)
            if kind == "alphaPlus":
                factor_perms = [tuple(tuple(range(len(t))) for t in expr.terms)]
            else:
                factor_perms = product(*(list(permutations(range(len(t)))) for t in expr.terms))
            for sigmas in factor_perms:
                inner = permute_factors(expr, sigmas)
                for sigma in term_perms:
                    mark(v, evaluate(r, permute_terms(inner, sigma)))
    return Relation(m)


def transitive_closure(rel: Relation) -> Relation:
    """Smallest transitive relation containing a reflexive, symmetric ``rel``."""
    if not (rel.is_reflexive() and rel.is_symmetric()):
        raise PreconditionError("transitive closure here expects a reflexive symmetric relation")
    _, labels = connected_components(csr_matrix(rel.matrix), directed=False)
    return Relation.from_labels(labels)


@dataclass(frozen=True)
class RegularityCounterexample:
    """``x ~ y`` but ``u`` in ``a∘x`` (or ``x∘a``) is unrelated to ``v`` on the other side."""

    x: int
    y: int
    a: int
    u: int
    v: int
    op: str
    side: str


def regularity_counterexample(r: Hyperring, rel: Relation) -> RegularityCounterexample | None:
    """First failure of strong regularity in scan order, or ``None``."""
    if not rel.is_equivalence():
        raise PreconditionError("strong regularity is checked for equivalences only")
    rows = rel.rows
    q = r.q
    for name, op in (("plus", r.plus), ("times", r.times)):
        for side in ("left", "right"):
            for x in range(q):
                for y in elements(rows[x]):
                    for a in range(q):
                        if side == "left":
                            sx, sy = op(a, x), op(a, y)
                        else:
                            sx, sy = op(x, a), op(y, a)
                        for u in elements(sx):
                            bad = sy & ~rows[u]
                            if bad:
                                v = (bad & -bad).bit_length() - 1
                                return RegularityCounterexample(x, y, a, u, v, name, side)
    return None


def is_strongly_regular(r: Hyperring, rel: Relation) -> bool:
    return regularity_counterexample(r, rel) is None


@dataclass(frozen=True)
class Saturation:
    relation: Relation          # transitive closure at the final bounds
    bounds: Bounds
    stabilized: bool
    rounds: int
    history: tuple[Relation, ...]   # un-closed generated relation per round


def round_bounds(n: int) -> Bounds:
    return Bounds(n, n, max(1, n - 1))


def saturated_generate(r: Hyperring, kind: str, e: int | None = None,
                       max_rounds: int = 7, stable_rounds: int = 2) -> Saturation:
    """Grow the bounds until the closed relation stops changing.

    Round ``n`` uses ``round_bounds(n)``.  The loop ends once the closure has
    stayed the same for ``stable_rounds`` consecutive rounds, or as soon as it
    is the full relation (nothing larger exists).  The result is always a
    subset of the unbounded starred relation.
    """
    history = []
    closures = []
    for n in range(1, max_rounds + 1):
        b = round_bounds(n)
        rel = generate(r, kind, b, e)
        history.append(rel)
        closures.append(transitive_closure(rel))
        if closures[-1].matrix.all():
            return Saturation(closures[-1], b, True, n, tuple(history))
        if len(closures) > stable_rounds and all(
                c == closures[-1] for c in closures[-stable_rounds - 1:]):
            return Saturation(closures[-1], b, True, n, tuple(history))
    return Saturation(closures[-1], round_bounds(max_rounds), False, max_rounds, tuple(history))
