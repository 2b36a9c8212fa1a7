"""Finite hyperstructures: subset masks, hyperoperations, hyperrings, axiom checks.

Subsets of the carrier ``{0, ..., q-1}`` are plain Python ints used as bit
masks (bit ``i`` set means element ``i`` is present).  Every cell of a
hyperoperation table is such a mask and must be non-empty.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "HyperstructureError",
    "StructureError",
    "PreconditionError",
    "mask_of",
    "elements",
    "full_mask",
    "HyperOp",
    "Hyperring",
    "AxiomCheck",
    "ValidationReport",
    "extend",
    "validate",
]

# Above this carrier size the per-element extension rows are not tabulated.
_ROW_CACHE_LIMIT = 12


class HyperstructureError(ValueError):
    """Base class for errors raised by this package."""


class StructureError(HyperstructureError):
    """Malformed tables: wrong shape, empty cells, out-of-range elements."""


class PreconditionError(HyperstructureError):
    """An operation was called with arguments outside its domain."""


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def elements(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(q: int) -> int:
    return (1 << q) - 1


@dataclass(frozen=True, eq=False)
class HyperOp:
    """A hyperoperation on ``{0..q-1}`` stored as a ``q x q`` table of masks."""

    q: int
    table: tuple[tuple[int, ...], ...]
    _rows: list | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.q < 1:
            raise StructureError("carrier must be non-empty")
        if len(self.table) != self.q or any(len(r) != self.q for r in self.table):
            raise StructureError(f"table must be {self.q}x{self.q}")
        full = full_mask(self.q)
        for x, row in enumerate(self.table):
            for y, cell in enumerate(row):
                if cell == 0:
                    raise StructureError(f"empty cell at ({x},{y})")
                if cell & ~full:
                    raise StructureError(f"cell ({x},{y}) has elements outside [0,{self.q})")

    @classmethod
    def from_sets(cls, q: int, cells: Sequence[Sequence[Iterable[int]]]) -> "HyperOp":
        for x, row in enumerate(cells):
            for y, cell in enumerate(row):
                for z in cell:
                    if not 0 <= z < q:
                        raise StructureError(f"element {z} at ({x},{y}) out of range for q={q}")
        return cls(q, tuple(tuple(mask_of(c) for c in row) for row in cells))

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def __eq__(self, other):
        return isinstance(other, HyperOp) and self.q == other.q and self.table == other.table

    def __hash__(self):
        return hash((self.q, self.table))

    def as_sets(self) -> list[list[list[int]]]:
        return [[elements(c) for c in row] for row in self.table]

    def _row_table(self):
        # rows[x][B] = union of x∘y over y in B, built by peeling the low bit
        if self._rows is None:
            size = 1 << self.q
            rows = []
            for x in range(self.q):
                r = [0] * size
                tx = self.table[x]
                for b in range(1, size):
                    low = b & -b
                    r[b] = r[b ^ low] | tx[low.bit_length() - 1]
                rows.append(r)
            object.__setattr__(self, "_rows", rows)
        return self._rows

    def extend(self, a: int, b: int) -> int:
        """``A ∘ B`` for masks, without precondition checks."""
        out = 0
        if self.q <= _ROW_CACHE_LIMIT:
            rows = self._row_table()
            for x in elements(a):
                out |= rows[x][b]
            return out
        ys = elements(b)
        for x in elements(a):
            tx = self.table[x]
            for y in ys:
                out |= tx[y]
        return out


def extend(op: HyperOp, a: int, b: int, width: int | None = None) -> int:
    """Extension of ``op`` to non-empty subsets: the union of ``x∘y``, x in A, y in B.

    ``width`` (when given) is the carrier size the masks were built for and
    must match ``op.q``.
    """
    if width is not None and width != op.q:
        raise StructureError(f"mask width {width} does not match carrier size {op.q}")
    full = full_mask(op.q)
    if (a & ~full) or (b & ~full):
        raise StructureError("mask has bits outside the carrier")
    if a == 0 or b == 0:
        raise PreconditionError("extend needs non-empty subsets")
    return op.extend(a, b)


@dataclass(frozen=True)
class Hyperring:
    """``(R, +, ·)`` on ``{0..q-1}``.

    ``distributivity`` selects the axiom checked by :func:`validate`:
    ``"strong"`` asks for ``x(y+z) = xy+xz`` and ``(y+z)x = yx+zx``;
    ``"inclusive"`` only for the inclusions ``x(y+z) ⊆ xy+xz`` and
    ``(y+z)x ⊆ yx+zx``.
    """

    plus: HyperOp
    times: HyperOp
    distributivity: str = "strong"

    def __post_init__(self):
        if self.plus.q != self.times.q:
            raise StructureError("plus and times act on different carriers")
        if self.distributivity not in ("strong", "inclusive"):
            raise StructureError(f"unknown distributivity mode {self.distributivity!r}")

    @classmethod
    def from_tables(cls, plus, times, distributivity: str = "strong") -> "Hyperring":
        """Build from nested ``q x q`` lists of element collections."""
        q = len(plus)
        if len(times) != q:
            raise StructureError("plus and times tables have different sizes")
        return cls(HyperOp.from_sets(q, plus), HyperOp.from_sets(q, times), distributivity)

    @property
    def q(self) -> int:
        return self.plus.q

    @property
    def full(self) -> int:
        return full_mask(self.q)

    def add(self, a: int, b: int) -> int:
        return self.plus.extend(a, b)

    def mul(self, a: int, b: int) -> int:
        return self.times.extend(a, b)


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    ok: bool
    witness: tuple | None = None
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _associativity(op: HyperOp, name: str) -> AxiomCheck:
    q = op.q
    for x, y, z in product(range(q), repeat=3):
        left = op.extend(1 << x, op(y, z))
        right = op.extend(op(x, y), 1 << z)
        if left != right:
            return AxiomCheck(name, False, (x, y, z),
                              f"x(yz)={elements(left)} but (xy)z={elements(right)}")
    return AxiomCheck(name, True)


def _reproducibility(op: HyperOp) -> AxiomCheck:
    full = full_mask(op.q)
    for x in range(op.q):
        left = op.extend(1 << x, full)
        if left != full:
            return AxiomCheck("plus-reproducibility", False, (x, "left"),
                              f"x+R={elements(left)}")
        right = op.extend(full, 1 << x)
        if right != full:
            return AxiomCheck("plus-reproducibility", False, (x, "right"),
                              f"R+x={elements(right)}")
    return AxiomCheck("plus-reproducibility", True)


def _distributivity(r: Hyperring) -> AxiomCheck:
    strong = r.distributivity == "strong"
    name = f"distributivity-{r.distributivity}"
    for x, y, z in product(range(r.q), repeat=3):
        bx = 1 << x
        # left: x(y+z) vs xy+xz
        lhs = r.mul(bx, r.plus(y, z))
        rhs = r.add(r.times(x, y), r.times(x, z))
        if (strong and lhs != rhs) or (lhs & ~rhs):
            return AxiomCheck(name, False, (x, y, z, "left"),
                              f"x(y+z)={elements(lhs)} xy+xz={elements(rhs)}")
        lhs = r.mul(r.plus(y, z), bx)
        rhs = r.add(r.times(y, x), r.times(z, x))
        if (strong and lhs != rhs) or (lhs & ~rhs):
            return AxiomCheck(name, False, (x, y, z, "right"),
                              f"(y+z)x={elements(lhs)} yx+zx={elements(rhs)}")
    return AxiomCheck(name, True)


def validate(r: Hyperring) -> ValidationReport:
    """Run the hyperring axiom battery.

    Each failing axiom carries the first witness found in lexicographic order.
    """
    return ValidationReport((
        _associativity(r.plus, "plus-associativity"),
        _reproducibility(r.plus),
        _associativity(r.times, "times-associativity"),
        _distributivity(r),
    ))
