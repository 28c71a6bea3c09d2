"""A custom banded Hessenberg operator defines its own basis.

Builds an operator with subdiagonal (1, 1/2, 1/2, ...) and a constant
diagonal 1/4, expands the running example in the resulting basis, and
verifies the partial sums converge to the same value as the Bessel route.
"""

from besselneumann import make_builtin, make_custom, parse, run_expansion

g = parse("exp(alpha*s)*(sin(s/3)+cos(s))")
params = {"alpha": 0.5}
s = 1.0

custom = make_custom(subdiag=[1.0, 0.5], bands=[[0.25]], C=3.0)
reference = make_builtin("bessel")

run_c = run_expansion(g, params, custom, 30, s, compute_bounds=False)
run_b = run_expansion(g, params, reference, 30, s, compute_bounds=False)

print(f"g({s:g}) = {run_c.g_reference:.15f}\n")
print(f"{'n':>3} {'custom rel err':>16} {'bessel rel err':>16}")
for rc, rb in zip(run_c.records[::3], run_b.records[::3]):
    print(f"{rc.n:>3} {rc.rel_error:>16.3e} {rb.rel_error:>16.3e}")

diff = abs(run_c.records[-1].partial_sum - run_b.records[-1].partial_sum)
print(f"\ndifference of the two n = 30 partial sums: {diff:.2e}")
