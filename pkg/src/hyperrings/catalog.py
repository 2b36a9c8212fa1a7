"""Constructors for the standard test structures.

Finite rings are given by their (single-valued) addition and multiplication
tables; a ring becomes a hyperring by wrapping every value in a singleton.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Hyperring, HyperOp, StructureError, full_mask, mask_of, validate

__all__ = [
    "FiniteRing",
    "zmod",
    "upper_triangular_z2",
    "ring_as_hyperring",
    "coset_hyperring",
    "left_matrices_z2",
    "p_hyperring",
    "total",
    "b_hypergroup_ring",
    "catalog",
    "parse_catalog_spec",
    "standard_catalog",
    "SEMIGROUPS",
]


@dataclass(frozen=True)
class FiniteRing:
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.add)

    def zero(self) -> int:
        for z in range(self.n):
            if all(self.add[z][x] == x for x in range(self.n)):
                return z
        raise StructureError("no additive identity")

    def check(self) -> None:
        n = self.n
        rng = range(n)
        z = self.zero()
        for x, y, w in product(rng, repeat=3):
            if self.add[self.add[x][y]][w] != self.add[x][self.add[y][w]]:
                raise StructureError(f"{self.name}: addition not associative")
            if self.mul[self.mul[x][y]][w] != self.mul[x][self.mul[y][w]]:
                raise StructureError(f"{self.name}: multiplication not associative")
            if self.mul[x][self.add[y][w]] != self.add[self.mul[x][y]][self.mul[x][w]]:
                raise StructureError(f"{self.name}: not left distributive")
            if self.mul[self.add[y][w]][x] != self.add[self.mul[y][x]][self.mul[w][x]]:
                raise StructureError(f"{self.name}: not right distributive")
        for x in rng:
            if not any(self.add[x][y] == z for y in rng):
                raise StructureError(f"{self.name}: {x} has no additive inverse")
            for y in rng:
                if self.add[x][y] != self.add[y][x]:
                    raise StructureError(f"{self.name}: addition not commutative")

    def is_ideal(self, ideal: frozenset[int]) -> bool:
        if self.zero() not in ideal:
            return False
        for a, b in product(ideal, repeat=2):
            if self.add[a][b] not in ideal:
                return False
        for a in ideal:
            if not any(self.add[a][b] == self.zero() for b in ideal):
                return False
            for x in range(self.n):
                if self.mul[a][x] not in ideal or self.mul[x][a] not in ideal:
                    return False
        return True


def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise StructureError("Z/n needs n >= 1")
    return FiniteRing(
        tuple(tuple((x + y) % n for y in range(n)) for x in range(n)),
        tuple(tuple((x * y) % n for y in range(n)) for x in range(n)),
        f"Z{n}",
    )


def upper_triangular_z2() -> FiniteRing:
    """Upper triangular 2x2 matrices over Z2 (order 8, non-commutative, unital).

    ``[[a, b], [0, c]]`` is stored as index ``4a + 2b + c``.
    """
    def dec(i):
        return (i >> 2) & 1, (i >> 1) & 1, i & 1

    def enc(a, b, c):
        return 4 * a + 2 * b + c

    add, mul = [], []
    for i in range(8):
        a1, b1, c1 = dec(i)
        add_row, mul_row = [], []
        for j in range(8):
            a2, b2, c2 = dec(j)
            add_row.append(enc(a1 ^ a2, b1 ^ b2, c1 ^ c2))
            mul_row.append(enc(a1 & a2, (a1 & b2) ^ (b1 & c2), c1 & c2))
        add.append(tuple(add_row))
        mul.append(tuple(mul_row))
    return FiniteRing(tuple(add), tuple(mul), "UT2(Z2)")


def left_matrices_z2() -> FiniteRing:
    """Matrices ``[[a, b], [0, 0]]`` over Z2 (order 4, non-commutative, no unit).

    Stored as index ``2a + b``; the product is ``(a, b)(c, d) = (ac, ad)``.
    """
    add, mul = [], []
    for i in range(4):
        a, b = i >> 1, i & 1
        add.append(tuple(i ^ j for j in range(4)))
        mul.append(tuple(2 * (a & (j >> 1)) + (a & (j & 1)) for j in range(4)))
    return FiniteRing(tuple(add), tuple(mul), "L2(Z2)")


_RINGS = {"UT2": upper_triangular_z2, "L4": left_matrices_z2}


def _ring_from_name(name: str) -> FiniteRing:
    if name in _RINGS:
        return _RINGS[name]()
    if name.startswith("Z") and name[1:].isdigit():
        return zmod(int(name[1:]))
    raise StructureError(f"unknown ring {name!r} (use Z<n>, UT2 or L4)")


def ring_as_hyperring(ring: FiniteRing | str) -> Hyperring:
    if isinstance(ring, str):
        ring = _ring_from_name(ring)
    ring.check()
    n = ring.n
    plus = HyperOp(n, tuple(tuple(1 << ring.add[x][y] for y in range(n)) for x in range(n)))
    times = HyperOp(n, tuple(tuple(1 << ring.mul[x][y] for y in range(n)) for x in range(n)))
    return Hyperring(plus, times)


def coset_hyperring(ring: FiniteRing | str, ideal) -> Hyperring:
    """``x ⊕ y = (x+y) + I`` and ``x ⊙ y = xy + I`` for a two-sided ideal ``I``."""
    if isinstance(ring, str):
        ring = _ring_from_name(ring)
    ring.check()
    ideal = frozenset(ideal)
    if not ideal or any(not 0 <= i < ring.n for i in ideal) or not ring.is_ideal(ideal):
        raise StructureError(f"{sorted(ideal)} is not a two-sided ideal of {ring.name}")
    n = ring.n

    def coset(x):
        m = 0
        for i in ideal:
            m |= 1 << ring.add[x][i]
        return m

    plus = HyperOp(n, tuple(tuple(coset(ring.add[x][y]) for y in range(n)) for x in range(n)))
    times = HyperOp(n, tuple(tuple(coset(ring.mul[x][y]) for y in range(n)) for x in range(n)))
    return Hyperring(plus, times)


def p_hyperring(ring: FiniteRing | str, p) -> Hyperring:
    """Ring addition with the hyperproduct ``x ∗ y = {x·s·y : s in P}``.

    Distributivity only holds as an inclusion, so the result uses the
    inclusive axiom mode.
    """
    if isinstance(ring, str):
        ring = _ring_from_name(ring)
    ring.check()
    p = sorted(set(p))
    if not p or any(not 0 <= s < ring.n for s in p):
        raise StructureError(f"P={p} must be a non-empty subset of {ring.name}")
    n = ring.n
    plus = HyperOp(n, tuple(tuple(1 << ring.add[x][y] for y in range(n)) for x in range(n)))
    times = HyperOp(n, tuple(
        tuple(mask_of(ring.mul[ring.mul[x][s]][y] for s in p) for y in range(n))
        for x in range(n)))
    return Hyperring(plus, times, "inclusive")


def total(q: int) -> Hyperring:
    """Both operations return the whole carrier."""
    if q < 1:
        raise StructureError("total hyperring needs q >= 1")
    full = full_mask(q)
    op = HyperOp(q, tuple(tuple(full for _ in range(q)) for _ in range(q)))
    return Hyperring(op, op)


SEMIGROUPS = {
    "min": lambda x, y, q: min(x, y),
    "max": lambda x, y, q: max(x, y),
    "left": lambda x, y, q: x,
    "right": lambda x, y, q: y,
    "zero": lambda x, y, q: 0,
    "mulmod": lambda x, y, q: (x * y) % q,
}


def b_hypergroup_ring(q: int, mul: str = "min") -> Hyperring:
    """Biset addition ``x + y = {x, y}`` with a single-valued semigroup product.

    Any semigroup multiplication distributes (with equality) over the biset
    hyperaddition, so the result is always a hyperring.
    """
    if q < 1:
        raise StructureError("q must be >= 1")
    if mul not in SEMIGROUPS:
        raise StructureError(f"unknown semigroup {mul!r}; choose from {sorted(SEMIGROUPS)}")
    f = SEMIGROUPS[mul]
    plus = HyperOp(q, tuple(tuple((1 << x) | (1 << y) for y in range(q)) for x in range(q)))
    times = HyperOp(q, tuple(tuple(1 << f(x, y, q) for y in range(q)) for x in range(q)))
    return Hyperring(plus, times)


def catalog(name: str, *args, **kwargs) -> Hyperring:
    """Build a named structure and make sure it passes :func:`validate`.

    >>> catalog("coset-hyperring", "Z4", [0, 2]).plus(1, 1)
    5
    """
    builders = {
        "ring-as-hyperring": ring_as_hyperring,
        "coset-hyperring": coset_hyperring,
        "total": total,
        "b-hypergroup-ring": b_hypergroup_ring,
        "p-hyperring": p_hyperring,
    }
    if name not in builders:
        raise StructureError(f"unknown catalog family {name!r}; choose from {sorted(builders)}")
    r = builders[name](*args, **kwargs)
    report = validate(r)
    if not report.ok:
        bad = report.failures()[0]
        raise StructureError(f"{name}{args} fails {bad.name} at {bad.witness}")
    return r


def parse_catalog_spec(spec: str) -> Hyperring:
    """Parse ``name:params`` as used on the command line.

    ``ring-as-hyperring:Z4``, ``coset-hyperring:Z4/0,2``, ``total:3``,
    ``b-hypergroup-ring:3,min``, ``p-hyperring:Z4/1,3``.
    """
    name, _, params = spec.partition(":")
    try:
        if name == "ring-as-hyperring":
            return catalog(name, params)
        if name in ("coset-hyperring", "p-hyperring"):
            ring, _, subset = params.partition("/")
            return catalog(name, ring, [int(i) for i in subset.split(",") if i])
        if name == "total":
            return catalog(name, int(params))
        if name == "b-hypergroup-ring":
            q, _, mul = params.partition(",")
            return catalog(name, int(q), mul or "min")
    except ValueError as exc:
        if isinstance(exc, StructureError):
            raise
        raise StructureError(f"bad parameters in catalog spec {spec!r}: {exc}") from None
    return catalog(name)


def standard_catalog() -> dict[str, Hyperring]:
    """The fixture set used by the acceptance checks, keyed by catalog spec."""
    specs = [
        "ring-as-hyperring:Z2",
        "ring-as-hyperring:Z4",
        "ring-as-hyperring:UT2",
        "ring-as-hyperring:L4",
        "coset-hyperring:Z4/0,2",
        "coset-hyperring:UT2/0,2",
        "p-hyperring:Z4/1,3",
        "p-hyperring:Z5/2,3",
        "p-hyperring:L4/2,3",
        "total:2",
        "total:3",
        "total:4",
        "b-hypergroup-ring:2,zero",
        "b-hypergroup-ring:3,min",
        "b-hypergroup-ring:3,left",
    ]
    return {s: parse_catalog_spec(s) for s in specs}
