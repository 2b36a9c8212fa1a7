"""Single-cell edits of catalog tables, each breaking at least one axiom.

Rows are ``(catalog spec, operation, x, y, new cell)``.  The axioms each edit
breaks are recomputed by the reference checker in ``conftest``, not listed
here.
"""
from hyperrings.core import HyperOp, Hyperring, mask_of

MUTATIONS = [
    ("ring-as-hyperring:Z2", "times", 0, 1, [0, 1]),
    ("ring-as-hyperring:Z2", "plus", 0, 0, [1]),
    ("ring-as-hyperring:Z4", "times", 3, 0, [2]),
    ("ring-as-hyperring:Z4", "plus", 3, 0, [1, 2, 3]),
    ("ring-as-hyperring:UT2", "plus", 3, 0, [2, 4, 7]),
    ("ring-as-hyperring:UT2", "times", 0, 3, [2, 3]),
    ("ring-as-hyperring:L4", "plus", 2, 3, [0, 1]),
    ("ring-as-hyperring:L4", "plus", 2, 1, [1]),
    ("coset-hyperring:Z4/0,2", "plus", 2, 0, [0, 3]),
    ("coset-hyperring:Z4/0,2", "times", 2, 3, [1, 3]),
    ("total:2", "times", 1, 0, [0]),
    ("total:2", "times", 0, 1, [0]),
    ("total:3", "times", 1, 2, [2]),
    ("total:3", "plus", 2, 0, [2]),
    ("total:4", "times", 0, 1, [1]),
    ("total:4", "times", 2, 0, [2]),
    ("p-hyperring:Z4/1,3", "plus", 1, 3, [2]),
    ("p-hyperring:Z4/1,3", "plus", 3, 2, [0, 2, 3]),
    ("b-hypergroup-ring:3,min", "plus", 2, 0, [2]),
    ("b-hypergroup-ring:3,min", "plus", 1, 0, [2]),
]


def mutate(r: Hyperring, op: str, x: int, y: int, cell) -> Hyperring:
    old = getattr(r, op)
    table = [list(row) for row in old.table]
    table[x][y] = mask_of(cell)
    new = HyperOp(r.q, tuple(tuple(row) for row in table))
    if op == "plus":
        return Hyperring(new, r.times, r.distributivity)
    return Hyperring(r.plus, new, r.distributivity)
