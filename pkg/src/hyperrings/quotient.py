"""Quotient rings ``R/ρ`` for strongly regular partitions, and their fibers."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .closure import Partition
from .core import Hyperring, HyperstructureError, PreconditionError, elements, mask_of

__all__ = [
    "NotStronglyRegular",
    "QuotientRing",
    "FiberReport",
    "build_quotient",
    "kernel_fibers",
    "check_fiber_identities",
    "ring_isomorphic",
]


class NotStronglyRegular(HyperstructureError):
    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class QuotientRing:
    classes: tuple[tuple[int, ...], ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero_class: int | None
    identity_class: int | None
    is_ring: bool
    add_commutative: bool
    mul_commutative: bool

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def rep(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def class_index(self, x: int) -> int:
        for i, c in enumerate(self.classes):
            if x in c:
                return i
        raise PreconditionError(f"{x} is not in any class")


def _table(op, classes, index):
    n = len(classes)
    tab = [[-1] * n for _ in range(n)]
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            for x in ci:
                for y in cj:
                    for z in elements(op(x, y)):
                        k = index[z]
                        if tab[i][j] < 0:
                            tab[i][j] = k
                        elif tab[i][j] != k:
                            raise NotStronglyRegular(
                                f"classes {i},{j} do not have a single-valued result",
                                (x, y, z, ci, cj))
    return tuple(tuple(r) for r in tab)


def _ring_axioms(add, mul):
    n = len(add)
    rng = range(n)
    zeros = [z for z in rng if all(add[z][c] == c and add[c][z] == c for c in rng)]
    zero = zeros[0] if len(zeros) == 1 else None
    ok = zero is not None
    ok = ok and all(any(add[c][d] == zero and add[d][c] == zero for d in rng) for c in rng)
    ok = ok and all(add[add[a][b]][c] == add[a][add[b][c]]
                    and mul[mul[a][b]][c] == mul[a][mul[b][c]]
                    and mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
                    and mul[add[b][c]][a] == add[mul[b][a]][mul[c][a]]
                    for a, b, c in product(rng, repeat=3))
    ones = [u for u in rng if all(mul[u][c] == c and mul[c][u] == c for c in rng)]
    return zero, (ones[0] if ones else None), ok


def build_quotient(r: Hyperring, p: Partition) -> QuotientRing:
    """Operation tables on the classes of ``p``.

    Every product of every pair of representatives is scanned, so a partition
    that is not strongly regular is refused with a witness.
    """
    if p.q != r.q:
        raise PreconditionError("partition and hyperring have different carriers")
    classes = tuple(tuple(c) for c in p.classes())
    index = {x: i for i, c in enumerate(classes) for x in c}
    add = _table(r.plus, classes, index)
    mul = _table(r.times, classes, index)
    zero, one, is_ring = _ring_axioms(add, mul)
    n = len(classes)
    return QuotientRing(
        classes, add, mul, zero, one, is_ring,
        all(add[i][j] == add[j][i] for i in range(n) for j in range(n)),
        all(mul[i][j] == mul[j][i] for i in range(n) for j in range(n)),
    )


def kernel_fibers(r: Hyperring, p: Partition) -> tuple[int, int | None]:
    """Preimages of the zero class and (when it exists) the identity class."""
    qr = build_quotient(r, p)
    if qr.zero_class is None:
        raise PreconditionError("quotient has no zero class")
    k = mask_of(qr.classes[qr.zero_class])
    d = mask_of(qr.classes[qr.identity_class]) if qr.identity_class is not None else None
    return k, d


@dataclass(frozen=True)
class FiberReport:
    saturation: int           # union of the classes meeting M
    k_plus_m: int
    m_plus_k: int
    d_times_m: int | None
    m_times_d: int | None
    strong_checked: bool

    @property
    def sum_identity(self) -> bool:
        return self.k_plus_m == self.m_plus_k == self.saturation

    @property
    def product_inclusion(self) -> bool:
        if self.d_times_m is None:
            return True
        return not ((self.d_times_m | self.m_times_d) & ~self.saturation)

    @property
    def product_equality(self) -> bool:
        if not self.strong_checked or self.d_times_m is None:
            return True
        return self.d_times_m == self.m_times_d == self.saturation

    @property
    def ok(self) -> bool:
        return self.sum_identity and self.product_inclusion and self.product_equality


def check_fiber_identities(r: Hyperring, p: Partition, m: int,
                           strong: bool = False) -> FiberReport:
    """Compare ``K+M``, ``M+K``, ``D·M``, ``M·D`` against the saturation of ``M``.

    With ``strong=True`` the products must equal the saturation, not just
    lie inside it.
    """
    if m == 0 or m >> r.q:
        raise PreconditionError("M must be a non-empty subset of the carrier")
    k, d = kernel_fibers(r, p)
    sat = p.saturate(m)
    return FiberReport(
        sat, r.add(k, m), r.add(m, k),
        r.mul(d, m) if d is not None else None,
        r.mul(m, d) if d is not None else None,
        strong,
    )


def ring_isomorphic(a: QuotientRing, add2, mul2) -> bool:
    """Brute-force bijection search between a quotient and a ring given by tables."""
    n = a.class_count
    if len(add2) != n:
        return False
    for perm in permutations(range(n)):
        if all(perm[a.add[i][j]] == add2[perm[i]][perm[j]]
               and perm[a.mul[i][j]] == mul2[perm[i]][perm[j]]
               for i in range(n) for j in range(n)):
            return True
    return False
