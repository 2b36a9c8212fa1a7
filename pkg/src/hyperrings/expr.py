"""Sums of products of carrier elements.

An expression ``x11·x12 + x21 + x31·x32·x33`` is a tuple of terms, each term a
tuple of element indices.  Sums and products are folded left to right; both
hyperoperations are associative, so the fold order does not matter.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .core import Hyperring, PreconditionError, StructureError

__all__ = [
    "Bounds",
    "SumOfProducts",
    "PeWitness",
    "evaluate",
    "enumerate_expressions",
    "count_expressions",
    "pe_partners",
    "apply_insertions",
    "permute_terms",
    "permute_factors",
    "parse_expression",
]


@dataclass(frozen=True)
class Bounds:
    """Limits on the expression universe.

    ``max_terms`` bounds the number of summands, ``max_factors`` the length of
    every product (after any e-insertion), ``max_insert_run`` the length of an
    inserted block of ``e``.
    """

    max_terms: int
    max_factors: int
    max_insert_run: int = 1

    def __post_init__(self):
        if min(self.max_terms, self.max_factors, self.max_insert_run) < 1:
            raise PreconditionError(f"bounds must be >= 1, got {self}")

    def __le__(self, other):
        return (self.max_terms <= other.max_terms
                and self.max_factors <= other.max_factors
                and self.max_insert_run <= other.max_insert_run)

    def join(self, other: "Bounds") -> "Bounds":
        return Bounds(max(self.max_terms, other.max_terms),
                      max(self.max_factors, other.max_factors),
                      max(self.max_insert_run, other.max_insert_run))

    @classmethod
    def parse(cls, text: str) -> "Bounds":
        """Read ``n=3,k=2,run=1`` (missing keys keep their defaults)."""
        vals = {"n": 3, "k": 3, "run": 1}
        for part in filter(None, text.split(",")):
            key, _, val = part.partition("=")
            if key.strip() not in vals:
                raise PreconditionError(f"unknown bounds key {key!r}")
            vals[key.strip()] = int(val)
        return cls(vals["n"], vals["k"], vals["run"])


@dataclass(frozen=True, order=True)
class SumOfProducts:
    terms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.terms or any(len(t) == 0 for t in self.terms):
            raise PreconditionError("expressions need at least one term and one factor per term")

    @classmethod
    def of(cls, *terms: Sequence[int]) -> "SumOfProducts":
        return cls(tuple(tuple(t) for t in terms))

    @property
    def m(self) -> int:
        return len(self.terms)

    def profile(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.terms)

    def __str__(self):
        return " + ".join("*".join(map(str, t)) for t in self.terms)


@dataclass(frozen=True)
class PeWitness:
    """A pair related by the e-insertion condition.

    ``right`` is ``left`` with one contiguous block of ``e`` spliced into each
    listed term.  ``insertions`` holds ``(term, p, l)`` with 1-based positions
    ``p..l`` of the block inside the expanded term; an empty tuple is the
    identical pair.
    """

    left: SumOfProducts
    right: SumOfProducts
    insertions: tuple[tuple[int, int, int], ...]

    def other(self, expr: SumOfProducts) -> SumOfProducts:
        return self.right if expr == self.left else self.left


def evaluate(r: Hyperring, expr: SumOfProducts) -> int:
    q = r.q
    total = 0
    for term in expr.terms:
        for x in term:
            if not 0 <= x < q:
                raise StructureError(f"element {x} out of range for q={q}")
        val = 1 << term[0]
        for x in term[1:]:
            val = r.mul(val, 1 << x)
        total = val if total == 0 else r.add(total, val)
    return total


def _profiles(b: Bounds) -> Iterator[tuple[int, ...]]:
    for m in range(1, b.max_terms + 1):
        yield from product(range(1, b.max_factors + 1), repeat=m)


def enumerate_expressions(q: int, b: Bounds) -> Iterator[SumOfProducts]:
    """Every expression within ``b``, ordered by term count, profile, then letters."""
    for prof in _profiles(b):
        for letters in product(range(q), repeat=sum(prof)):
            terms, i = [], 0
            for k in prof:
                terms.append(letters[i:i + k])
                i += k
            yield SumOfProducts(tuple(terms))


def count_expressions(q: int, b: Bounds) -> int:
    return sum(q ** sum(p) for p in _profiles(b))


def apply_insertions(left: SumOfProducts, insertions, e: int) -> SumOfProducts:
    """Splice the e-blocks described by ``insertions`` into ``left``."""
    terms = list(left.terms)
    for i, p, l in insertions:
        x = terms[i]
        k_new = len(x) + (l - p + 1)
        if not (1 <= p <= k_new and p <= l <= k_new):
            raise PreconditionError(f"bad insertion window {(i, p, l)}")
        y = []
        for t in range(1, k_new + 1):
            if t < p:
                y.append(x[t - 1])
            elif t <= l:
                y.append(e)
            else:
                y.append(x[t + p - l - 1 - 1])
        terms[i] = tuple(y)
    return SumOfProducts(tuple(terms))


def _expansion_options(term, e, b):
    k = len(term)
    out = []
    for run in range(1, b.max_insert_run + 1):
        if k + run > b.max_factors:
            break
        for p in range(1, k + 2):
            out.append((p, p + run - 1))
    return out


def _contraction_options(term, e, b):
    k = len(term)
    out = []
    for run in range(1, min(b.max_insert_run, k - 1) + 1):
        for p in range(1, k - run + 2):
            if all(term[t - 1] == e for t in range(p, p + run)):
                out.append((p, p + run - 1))
    return out


def pe_partners(expr: SumOfProducts, e: int, b: Bounds) -> Iterator[PeWitness]:
    """All e-insertion partners of ``expr`` within ``b``, in both directions.

    The identical pair comes first, then expansions (``expr`` on the left),
    then contractions (``expr`` on the right).  A partner reachable through
    several insertion windows is reported once, with its first window.
    """
    yield PeWitness(expr, expr, ())
    seen = {expr}
    m = expr.m
    opts = [_expansion_options(t, e, b) for t in expr.terms]
    for d in range(1, m + 1):
        for chosen in combinations(range(m), d):
            for windows in product(*(opts[i] for i in chosen)):
                ins = tuple((i, p, l) for i, (p, l) in zip(chosen, windows))
                right = apply_insertions(expr, ins, e)
                if right not in seen:
                    seen.add(right)
                    yield PeWitness(expr, right, ins)
    opts = [_contraction_options(t, e, b) for t in expr.terms]
    seen_left = {expr}
    for d in range(1, m + 1):
        for chosen in combinations(range(m), d):
            for windows in product(*(opts[i] for i in chosen)):
                terms = list(expr.terms)
                for i, (p, l) in zip(chosen, windows):
                    t = terms[i]
                    terms[i] = t[:p - 1] + t[l:]
                left = SumOfProducts(tuple(terms))
                if left not in seen_left:
                    seen_left.add(left)
                    ins = tuple((i, p, l) for i, (p, l) in zip(chosen, windows))
                    yield PeWitness(left, expr, ins)


def _check_perm(sigma, n):
    if sorted(sigma) != list(range(n)):
        raise PreconditionError(f"{tuple(sigma)} is not a permutation of {n} items")


def permute_terms(expr: SumOfProducts, sigma: Sequence[int]) -> SumOfProducts:
    """Term ``i`` of the result is term ``sigma[i]`` of ``expr``."""
    _check_perm(sigma, expr.m)
    return SumOfProducts(tuple(expr.terms[s] for s in sigma))


def permute_factors(expr: SumOfProducts, sigmas: Sequence[Sequence[int]]) -> SumOfProducts:
    """Factor ``j`` of term ``i`` becomes factor ``sigmas[i][j]`` of that term."""
    if len(sigmas) != expr.m:
        raise PreconditionError(f"need {expr.m} factor permutations, got {len(sigmas)}")
    terms = []
    for t, s in zip(expr.terms, sigmas):
        _check_perm(s, len(t))
        terms.append(tuple(t[j] for j in s))
    return SumOfProducts(tuple(terms))


_TOKEN = re.compile(r"\s*(\d+|[+*])")


def parse_expression(text: str) -> SumOfProducts:
    """Parse ``0*1 + 2``: sums of ``*``-products of decimal element indices."""
    terms, current, expect_elem = [], [], True
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PreconditionError(f"unexpected character at column {pos + 1} in {text!r}")
        tok = m.group(1)
        pos = m.end()
        if tok.isdigit():
            if not expect_elem:
                raise PreconditionError(f"missing operator before {tok!r}")
            current.append(int(tok))
            expect_elem = False
        else:
            if expect_elem:
                raise PreconditionError(f"operator {tok!r} without operand at column {pos}")
            if tok == "+":
                terms.append(tuple(current))
                current = []
            expect_elem = True
    if expect_elem:
        raise PreconditionError(f"incomplete expression {text!r}")
    terms.append(tuple(current))
    return SumOfProducts(tuple(terms))
