"""Smallest strongly regular equivalences by congruence closure.

Starting from the discrete partition, classes are merged only when every
equivalence with the requested quotient properties is forced to merge them.
The fixpoint is therefore the least such equivalence: the fundamental
relation for the requested axiom set.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import Hyperring, PreconditionError, elements
from .relations import Relation

__all__ = ["Partition", "QuotientAxioms", "STARRED", "preset", "smallest_regular", "starred"]


class Partition:
    """Union-find over ``{0..q-1}`` with union by rank and path halving."""

    def __init__(self, q: int):
        self.q = q
        self.parent = list(range(q))
        self.rank = [0] * q
        self.class_count = q

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "Partition":
        labels = list(labels)
        p = cls(len(labels))
        first = {}
        for x, lab in enumerate(labels):
            if lab in first:
                p.union(first[lab], x)
            else:
                first[lab] = x
        return p

    @classmethod
    def from_relation(cls, rel: Relation) -> "Partition":
        return cls.from_labels(rel.labels())

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of ``x`` and ``y``; report whether they were distinct."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.class_count -= 1
        return True

    def labels(self) -> tuple[int, ...]:
        """Restricted growth string: classes numbered by first appearance."""
        seen, out = {}, []
        for x in range(self.q):
            out.append(seen.setdefault(self.find(x), len(seen)))
        return tuple(out)

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x, lab in enumerate(self.labels()):
            out.setdefault(lab, []).append(x)
        return list(out.values())

    def class_of(self, x: int) -> list[int]:
        rx = self.find(x)
        return [y for y in range(self.q) if self.find(y) == rx]

    def class_mask(self, x: int) -> int:
        m = 0
        for y in self.class_of(x):
            m |= 1 << y
        return m

    def saturate(self, mask: int) -> int:
        """Union of the classes meeting ``mask``."""
        roots = {self.find(x) for x in elements(mask)}
        m = 0
        for y in range(self.q):
            if self.find(y) in roots:
                m |= 1 << y
        return m

    def to_relation(self) -> Relation:
        return Relation.from_labels(self.labels())

    def refines(self, other: "Partition") -> bool:
        """Every class of ``self`` lies inside a class of ``other``."""
        return all(other.find(x) == other.find(self.find(x)) for x in range(self.q))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.labels() == other.labels()

    def __hash__(self):
        return hash(self.labels())

    def __repr__(self):
        return f"Partition({self.classes()})"


@dataclass(frozen=True)
class QuotientAxioms:
    """Properties the quotient ring must have beyond being a ring.

    ``unit`` names an element whose class must be the multiplicative identity.
    """

    add_commutative: bool = False
    mul_commutative: bool = False
    unit: int | None = None

    def __le__(self, other: "QuotientAxioms") -> bool:
        return ((not self.add_commutative or other.add_commutative)
                and (not self.mul_commutative or other.mul_commutative)
                and (self.unit is None or self.unit == other.unit))


STARRED = ("gammaStar", "alphaStar", "lambdaStarE", "LambdaStarE")


def preset(kind: str, e: int | None = None) -> QuotientAxioms:
    if kind == "gammaStar":
        return QuotientAxioms()
    if kind == "alphaStar":
        return QuotientAxioms(True, True)
    if kind in ("lambdaStarE", "LambdaStarE"):
        if e is None:
            raise PreconditionError(f"{kind} needs an element e")
        return QuotientAxioms(True, kind == "LambdaStarE", e)
    raise PreconditionError(f"unknown starred relation {kind!r}")


def smallest_regular(r: Hyperring, ax: QuotientAxioms = QuotientAxioms(),
                     rng: random.Random | None = None) -> Partition:
    """Least strongly regular equivalence whose quotient satisfies ``ax``.

    ``rng`` shuffles the order in which merges are processed; the result does
    not depend on it.
    """
    q = r.q
    if ax.unit is not None and not 0 <= ax.unit < q:
        raise PreconditionError(f"unit {ax.unit} out of range for q={q}")
    ops = (r.plus, r.times)
    seeds = []
    for op in ops:
        for x in range(q):
            for y in range(q):
                cell = elements(op(x, y))
                seeds.extend((cell[0], z) for z in cell[1:])
    for flag, op in ((ax.add_commutative, r.plus), (ax.mul_commutative, r.times)):
        if flag:
            for x in range(q):
                for y in range(x + 1, q):
                    seeds.append((_low(op(x, y)), _low(op(y, x))))
    if ax.unit is not None:
        e = ax.unit
        for x in range(q):
            seeds.extend((x, z) for z in elements(r.times(x, e) | r.times(e, x)))
    if rng is not None:
        rng.shuffle(seeds)

    part = Partition(q)
    work = deque(seeds)
    while work:
        x, y = work.popleft()
        if not part.union(x, y):
            continue
        # x and y now share a class: their products with any a must too
        pending = []
        for op in ops:
            for a in range(q):
                pending.append((_low(op(x, a)), _low(op(y, a))))
                pending.append((_low(op(a, x)), _low(op(a, y))))
        if rng is not None:
            rng.shuffle(pending)
        work.extend(pending)
    return part


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def starred(r: Hyperring, kind: str, e: int | None = None) -> Partition:
    """Γ*, α*, λ*ₑ or Λ*ₑ computed as the least qualifying equivalence."""
    return smallest_regular(r, preset(kind, e))
