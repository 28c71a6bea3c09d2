"""The coefficient solver recovers three classical expansions exactly.

Taylor:           exp(s)  in the monomial basis has all weights 1.
Jacobi-Anger:     cos(s) = J_0 - 2 J_2 + 2 J_4 - ...
Modified Bessel:  exp(s) = I_0 + 2 I_1 + 2 I_2 + ...
"""

import numpy as np

from besselneumann import (bessel_i_ref, bessel_j_ref, coefficients,
                           eval_jet, make_builtin, parse, truncate)

n = 12


def show(label, expr, kind, expect):
    jet = eval_jet(parse(expr), n)
    H = truncate(make_builtin(kind), n)
    w = coefficients(jet, H).values
    err = np.max(np.abs(w - expect))
    print(f"{label:<16} weights {np.round(w, 10)}")
    print(f"{'':<16} max deviation from closed form: {err:.2e}\n")
    return w


show("Taylor", "exp(s)", "jordan", np.ones(n))
w_cos = show("Jacobi-Anger", "cos(s)", "bessel",
             np.array([1, 0, -2, 0, 2, 0, -2, 0, 2, 0, -2, 0], dtype=float))
expect_i = np.full(n, 2.0)
expect_i[0] = 1.0
w_exp = show("modified", "exp(s)", "modified_bessel", expect_i)

# evaluate both identities at a sample point via the series oracles
s = 0.8
js = np.array([bessel_j_ref(l, s) for l in range(n)])
iv = np.array([bessel_i_ref(l, s) for l in range(n)])
print(f"at s = {s}:")
print(f"  sum w_l J_l(s) = {w_cos @ js:.15f}   cos(s) = {np.cos(s):.15f}")
print(f"  sum w_l I_l(s) = {w_exp @ iv:.15f}   exp(s) = {np.exp(s):.15f}")
