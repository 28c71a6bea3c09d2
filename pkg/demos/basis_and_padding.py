"""Basis functions come from a truncated matrix exponential; padding the
truncation dimension controls the error of the retained entries.

Shows the automatic padding rule, the a priori bound 2(tC)^n e^{tC} / n!,
and the agreement of the Bessel basis with the direct series oracle.
"""

import numpy as np

from besselneumann import (basis_error_bound, bessel_j_ref, default_pad,
                           eval_basis, make_builtin)

op = make_builtin("bessel")
n = 10

for t in (1.0, 10.0):
    pad = default_pad(op.norm_bound_C, t, n)
    auto = eval_basis(op, n, t)
    bare = eval_basis(op, n, t, pad=0)
    ref = np.array([bessel_j_ref(l, t) for l in range(n)])
    print(f"t = {t:g}: default pad = {pad}")
    print(f"  |auto - oracle|  max = {np.max(np.abs(auto - ref)):.2e}")
    print(f"  |pad 0 - oracle| max = {np.max(np.abs(bare - ref)):.2e}")
    print(f"  a priori bound at dimension n = {n}: "
          f"{basis_error_bound(op.norm_bound_C, t, n):.2e}\n")

print("decay of the truncation bound (C = 2, t = 10):")
for dim in (10, 20, 40, 60, 80):
    print(f"  n = {dim:>3}: {basis_error_bound(2.0, 10.0, dim):.3e}")
