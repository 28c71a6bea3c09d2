"""Convergence of the expansion of g(s) = e^{s/2}(sin(s/3) + cos(s)) in
four bases: monomials, Bessel, modified Bessel, and shifted Bessel.

Prints the relative-error table for s = 1 (n up to 40) and s = 10
(n up to 60).  Pass an SVG path as the first argument to also save the
error curves as a plot.
"""

import sys
import warnings

import numpy as np

from besselneumann import make_builtin, parse, run_expansion

warnings.filterwarnings("ignore", message="Krylov matrix condition")

g = parse("exp(alpha*s)*(sin(s/3)+cos(s))")
params = {"alpha": 0.5}
operators = [make_builtin("jordan"), make_builtin("bessel"),
             make_builtin("modified_bessel"),
             make_builtin("shifted_bessel", 0.5)]

runs = {}
for s, n_max in ((1.0, 40), (10.0, 60)):
    print(f"\nrelative error at s = {s:g}")
    print(f"{'n':>4}" + "".join(f"{op.name:>18}" for op in operators))
    for op in operators:
        runs[(op.name, s)] = run_expansion(g, params, op, n_max, s)
    for i in range(0, n_max, 5):
        row = f"{i + 1:>4}"
        for op in operators:
            row += f"{runs[(op.name, s)].records[i].rel_error:>18.3e}"
        print(row)

if len(sys.argv) > 1:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    for ax, s in zip(axes, (1.0, 10.0)):
        for op in operators:
            errs = [r.rel_error for r in runs[(op.name, s)].records]
            ax.semilogy(np.arange(1, len(errs) + 1), errs, label=op.name)
        ax.set_xlabel("n")
        ax.set_ylabel("relative error")
        ax.set_title(f"s = {s:g}")
        ax.legend()
    fig.tight_layout()
    fig.savefig(sys.argv[1])
    print(f"\nsaved plot to {sys.argv[1]}")
