"""Brute-force ground truth: scan every set partition of a small carrier."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .closure import STARRED, Partition, QuotientAxioms, preset, smallest_regular
from .core import Hyperring, HyperstructureError
from .quotient import build_quotient
from .relations import Relation, is_strongly_regular, saturated_generate

__all__ = [
    "OracleError",
    "restricted_growth_strings",
    "qualifies",
    "minimal_partition",
    "KindAgreement",
    "cross_validate",
    "GENERATOR_FOR",
]

DEFAULT_CAP = 7

GENERATOR_FOR = {
    "gammaStar": "gamma",
    "alphaStar": "alpha",
    "lambdaStarE": "lambdaE",
    "LambdaStarE": "LambdaE",
}


class OracleError(HyperstructureError):
    pass


def restricted_growth_strings(q: int) -> Iterator[tuple[int, ...]]:
    """Each set partition of ``{0..q-1}`` once, as ``a[0]=0, a[i] <= 1 + max(a[:i])``."""
    if q == 0:
        yield ()
        return
    a = [0] * q
    maxes = [0] * q   # maxes[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        i = q - 1
        while i > 0 and a[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        maxes[i] = max(maxes[i - 1], a[i])
        for j in range(i + 1, q):
            a[j] = 0
            maxes[j] = maxes[i]


def qualifies(r: Hyperring, labels, ax: QuotientAxioms) -> bool:
    """Strongly regular, and the quotient ring has the properties in ``ax``."""
    if not is_strongly_regular(r, Relation.from_labels(labels)):
        return False
    qr = build_quotient(r, Partition.from_labels(labels))
    if not qr.is_ring:
        return False
    if ax.add_commutative and not qr.add_commutative:
        return False
    if ax.mul_commutative and not qr.mul_commutative:
        return False
    if ax.unit is not None and qr.identity_class != qr.class_index(ax.unit):
        return False
    return True


def minimal_partition(r: Hyperring, ax: QuotientAxioms = QuotientAxioms(),
                      cap: int = DEFAULT_CAP) -> Partition:
    """The least qualifying partition, found by exhaustion.

    Raises :class:`OracleError` if nothing qualifies or the minimum is not a
    least element (it must refine every other qualifying partition).
    """
    if r.q > cap:
        raise OracleError(f"q={r.q} exceeds the oracle cap {cap}")
    found = [Partition.from_labels(s) for s in restricted_growth_strings(r.q)
             if qualifies(r, s, ax)]
    if not found:
        raise OracleError("no qualifying partition: the structure is not a valid hyperring")
    least = max(found, key=lambda p: p.class_count)
    if not all(least.refines(p) for p in found):
        raise OracleError("qualifying partitions have no least element")
    return least


@dataclass
class KindAgreement:
    kind: str
    e: int | None
    oracle: Partition | None
    closure: Partition
    generated: Partition
    generator_stabilized: bool
    generator_sound: bool
    notes: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        same = self.closure == self.generated and self.generator_sound
        if self.oracle is not None:
            same = same and self.oracle == self.closure
        return same


def cross_validate(r: Hyperring, cap: int = DEFAULT_CAP, es=None) -> list[KindAgreement]:
    """Oracle vs closure engine vs saturated generators, for all four starred kinds."""
    es = range(r.q) if es is None else es
    out = []
    for kind in STARRED:
        for e in (es if kind in ("lambdaStarE", "LambdaStarE") else [None]):
            ax = preset(kind, e)
            closure = smallest_regular(r, ax)
            oracle = minimal_partition(r, ax, cap) if r.q <= cap else None
            sat = saturated_generate(r, GENERATOR_FOR[kind], e)
            generated = Partition.from_relation(sat.relation)
            target = closure.to_relation()
            sound = all(h <= target for h in sat.history)
            item = KindAgreement(kind, e, oracle, closure, generated, sat.stabilized, sound)
            if oracle is None:
                item.notes.append(f"oracle skipped: q={r.q} > cap {cap}")
            if not sat.stabilized:
                item.notes.append("generator did not stabilize within the round cap")
            out.append(item)
    return out
