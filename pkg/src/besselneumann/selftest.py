"""Built-in identity checks, runnable without pytest via the CLI.

Each suite verifies a classical identity against the expansion machinery:
Taylor coefficients through the Jordan operator, the Jacobi-Anger
expansions of cos and sin through the Bessel operator, the exponential
through the modified-Bessel operator, monomial columns of the Jordan
matrix exponential, and the exponential-remainder helpers.
"""

from __future__ import annotations

import math
from typing import Callable, TextIO

import numpy as np

from .bounds import remainder_action, remainder_scalar
from .coefficients import coefficients
from .exprlang import eval_jet, parse
from .hessenberg import make_builtin, truncate
from .matexp import expm, expm_action_e1
from .pipeline import run_expansion

__all__ = ["run", "SUITES"]


def _check_taylor() -> str | None:
    """w_l = g^(l)(0) for the Jordan operator; exp gives all-ones."""
    op = make_builtin("jordan")
    ast = parse("exp(s)")
    run_ = run_expansion(ast, {}, op, 20, 1.0, compute_bounds=False)
    w = run_.coefficient_vector.values
    if np.max(np.abs(w - 1.0)) > 1e-12:
        return "Jordan/Taylor identity violated: w_l != 1 for exp(s)"
    rel = abs(run_.records[-1].partial_sum - math.e) / math.e
    if rel > 1e-12:
        return f"Taylor partial sum of exp at s=1 off by {rel:.2e} relative"
    return None


def _check_jacobi_anger() -> str | None:
    """cos = J_0 + 2 sum (-1)^k J_2k, sin = 2 sum (-1)^k J_{2k+1}."""
    H = truncate(make_builtin("bessel"), 12)
    w_cos = coefficients(eval_jet(parse("cos(s)"), 12), H).values
    expect_cos = np.array([1, 0, -2, 0, 2, 0, -2, 0, 2, 0, -2, 0], dtype=float)
    if np.max(np.abs(w_cos - expect_cos)) > 1e-8:
        return "Jacobi-Anger identity violated for cos(s) in the Bessel basis"
    w_sin = coefficients(eval_jet(parse("sin(s)"), 12), H).values
    expect_sin = np.array([0, 2, 0, -2, 0, 2, 0, -2, 0, 2, 0, -2], dtype=float)
    if np.max(np.abs(w_sin - expect_sin)) > 1e-8:
        return "Jacobi-Anger identity violated for sin(s) in the Bessel basis"
    return None


def _check_modified_bessel_exp() -> str | None:
    """exp = I_0 + 2 sum_k I_k."""
    H = truncate(make_builtin("modified_bessel"), 10)
    w = coefficients(eval_jet(parse("exp(s)"), 10), H).values
    expect = np.full(10, 2.0)
    expect[0] = 1.0
    if np.max(np.abs(w - expect)) > 1e-8:
        return "modified-Bessel expansion of exp(s) is not (1,2,2,...)"
    return None


def _check_expm() -> str | None:
    """Jordan exponential columns t^l/l!; inverse relation expm(A)expm(-A)=I."""
    H = truncate(make_builtin("jordan"), 10)
    for t in (1.0, 5.0, 10.0):
        got = expm_action_e1(H, t)
        expect = np.array([t ** l / math.factorial(l) for l in range(10)])
        if np.max(np.abs(got - expect)) > 1e-13 * max(1.0, expect.max()):
            return f"exp(t*Jordan)e_1 differs from t^l/l! at t={t:g}"
    rng = np.random.default_rng(20230815)
    for _ in range(100):
        n = int(rng.integers(2, 51))
        A = np.triu(rng.standard_normal((n, n)), -1)
        norm = np.linalg.norm(A, 1)
        if norm > 0:
            A *= rng.uniform(0.1, 4.0) / norm
        E = expm(A) @ expm(-A)
        if np.linalg.norm(E - np.eye(n), 1) > 1e-12:
            return "expm(A) expm(-A) deviates from the identity"
    return None


def _check_remainders() -> str | None:
    """R_1(1) = e-1, R_3(2) = e^2-5, and the monomial remainder tail."""
    if abs(remainder_scalar(1.0, 1) - (math.e - 1.0)) > 1e-12:
        return "remainder_scalar(1,1) != e - 1"
    if abs(remainder_scalar(2.0, 3) - (math.e ** 2 - 5.0)) > 1e-12:
        return "remainder_scalar(2,3) != e^2 - 5"
    H = truncate(make_builtin("jordan"), 6)
    got = remainder_action(H, 1.0, 2)
    expect = np.array([0, 0, 1 / 2, 1 / 6, 1 / 24, 1 / 120])
    if np.max(np.abs(got - expect)) > 1e-15:
        return "remainder_action on the Jordan truncation is not the monomial tail"
    return None


SUITES: list[tuple[str, Callable[[], str | None]]] = [
    ("jordan-taylor coefficients", _check_taylor),
    ("jacobi-anger cross-check", _check_jacobi_anger),
    ("modified-bessel exp identity", _check_modified_bessel_exp),
    ("matrix exponential engine", _check_expm),
    ("exponential remainder tails", _check_remainders),
]


def run(out: TextIO) -> bool:
    """Run every suite, print one line per suite, return overall success."""
    all_ok = True
    for name, check in SUITES:
        failure = check()
        if failure is None:
            out.write(f"PASS  {name}\n")
        else:
            out.write(f"FAIL  {name}: {failure}\n")
            all_ok = False
    return all_ok
