"""Fundamental relations and quotient rings of a few small hyperrings.

Run with ``python demos/quotients.py``.
"""
from hyperrings import build_quotient, catalog, elements, starred, validate
from hyperrings.catalog import zmod
from hyperrings.quotient import ring_isomorphic


def show(title, r, e=None):
    print(f"\n== {title} (q={r.q}, {r.distributivity} distributive)")
    print("axioms ok:", validate(r).ok)
    for kind in ("gammaStar", "alphaStar", "lambdaStarE", "LambdaStarE"):
        if kind.lower().startswith("lambda") and e is None:
            continue
        p = starred(r, kind, e if "ambda" in kind else None)
        qr = build_quotient(r, p)
        ident = qr.classes[qr.identity_class] if qr.identity_class is not None else None
        print(f"  {kind:12s} classes={p.classes()} commutative={qr.mul_commutative}"
              f" identity={list(ident) if ident else None}")


z4 = catalog("coset-hyperring", "Z4", [0, 2])
show("Z4 modulo the ideal {0,2}", z4, e=1)
print("  1 + 1 =", elements(z4.plus(1, 1)))

ut2 = catalog("ring-as-hyperring", "UT2")
show("upper triangular 2x2 matrices over Z2", ut2, e=5)

# alpha* forgets the order of factors, so the noncommutative ring collapses
qr = build_quotient(ut2, starred(ut2, "alphaStar"))
xor = tuple(tuple(i ^ j for j in range(4)) for i in range(4))
band = tuple(tuple(i & j for j in range(4)) for i in range(4))
print("  UT2/alpha* is Z2 x Z2:", ring_isomorphic(qr, xor, band))
print("  UT2/alpha* is Z4:", ring_isomorphic(qr, zmod(4).add, zmod(4).mul))

show("total hyperring on three points", catalog("total", 3), e=0)
show("p-hyperring on Z5 with P={2,3}", catalog("p-hyperring", "Z5", [2, 3]), e=1)
