"""Parts, transitivity and strongness for the lambda_e relation.

Run with ``python demos/parts_tour.py``.
"""
from hyperrings import catalog, elements, starred
from hyperrings.parts import (
    completeness,
    is_lambda_e_part,
    lambda_e_strong_counterexample,
    part_escape,
    transitivity_report,
)
from hyperrings.quotient import check_fiber_identities, kernel_fibers

r = catalog("coset-hyperring", "Z4", [0, 2])
e = 1
p = starred(r, "lambdaStarE", e)
print("lambda*_1 classes on Z4/{0,2}:", p.classes())

for m in ([0, 2], [0, 1], [1]):
    mask = sum(1 << x for x in m)
    esc = part_escape(r, mask, e)
    print(f"  M={m}: part={is_lambda_e_part(r, mask, e)}"
          + (f", {esc[0]} is related to {esc[1]} outside M" if esc else ""))

rep = transitivity_report(r, e)
print("triad:", rep.transitive, rep.classes_are_neighborhoods, rep.neighborhoods_are_parts)

k, d = kernel_fibers(r, p)
print("K =", elements(k), " D =", elements(d))
fib = check_fiber_identities(r, p, 1 << 1, strong=True)
print("M={1}: K+M =", elements(fib.k_plus_m), " D*M =", elements(fib.d_times_m),
      " saturation =", elements(fib.saturation))

# strongness can fail on the invertibility clause
b = catalog("b-hypergroup-ring", 2, "zero")
print("\nb-hypergroup ring, e=0:", lambda_e_strong_counterexample(b, 0))
print("b-hypergroup ring, e=1:", lambda_e_strong_counterexample(b, 1))

# completeness: single letters break 1-completeness of the total hyperring
t = catalog("total", 3)
for n in (1, 2):
    c = completeness(t, n)
    print(f"total(3) {n}-complete: {c.n_complete}", c.n_witness or "")

ut2 = catalog("ring-as-hyperring", "UT2")
c = completeness(ut2, 2)
print("UT2 unit", c.unit, "2-complete:", c.n_complete,
      "Lambda-complete:", c.lambda_complete, "gamma == Lambda:", c.gamma_equals_lambda)
