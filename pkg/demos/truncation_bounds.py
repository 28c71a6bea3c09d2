"""Three a priori estimates for the expansion truncation error.

bound_simple:    ||W_n||_1 times the scalar exponential remainder R_n(|s| C).
bound_theorem1:  sup|w_j| times the weighted remainder-action bound, which
                 tracks the actual operator instead of only its norm.
element sum:     sum of the discarded entries of exp(s H_N) e_1.

The table compares all three against the measured error for the Bessel
expansion of g(s) = e^{s/2}(sin(s/3) + cos(s)) at s = 1.
"""

import numpy as np

from besselneumann import (element_tail_sum, make_builtin, parse,
                           run_expansion)

op = make_builtin("bessel")
s = 1.0
run = run_expansion(parse("exp(alpha*s)*(sin(s/3)+cos(s))"),
                    {"alpha": 0.5}, op, 25, s)
w_sup = float(np.max(np.abs(run.coefficient_vector.values)))

print(f"{'n':>3} {'measured':>12} {'simple':>12} {'theorem1':>12} "
      f"{'element sum':>12}")
for rec in run.records[::3]:
    elem = w_sup * element_tail_sum(op, None, s, rec.n, rec.n + 80)
    print(f"{rec.n:>3} {rec.abs_error:>12.3e} {rec.bound_simple:>12.3e} "
          f"{rec.bound_theorem1:>12.3e} {elem:>12.3e}")

print("\nthe operator-aware bounds are tighter than the norm-only estimate")
print("at every n; they dominate the measured error until it hits the")
print("double-precision roundoff floor near 1e-16, after which the bounds")
print("keep decaying while the measured error cannot.")
