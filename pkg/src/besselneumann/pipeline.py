"""End-to-end expansion experiments.

One run: differentiate g at the origin, truncate the operator, solve for
the coefficient row, evaluate the basis at s with default padding, and form
every nested partial sum sum_{l<n} w_l phi_l(s) for n = 1..n_max together
with true errors (against direct pointwise evaluation of g) and the two
truncation bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .basisfun import default_pad, eval_basis
from .bounds import ones_weights, remainder_scalar, theorem1_bound
from .coefficients import CoefficientVector, coefficients
from .errors import BesselNeumannError
from .exprlang import ExprAst, eval_jet, eval_point
from .hessenberg import HessenbergOperator, truncate

__all__ = ["ExpansionRecord", "ExpansionRun", "SweepCell", "run_expansion",
           "convergence_sweep", "default_n_max"]

THEOREM1_MARGIN = 80


@dataclass(frozen=True)
class ExpansionRecord:
    """Per-n row of a convergence run."""

    n: int
    partial_sum: float
    abs_error: float
    rel_error: float
    bound_simple: float
    bound_theorem1: float


@dataclass(frozen=True)
class ExpansionRun:
    operator_name: str
    s: float
    g_reference: float
    records: list[ExpansionRecord]
    coefficient_vector: CoefficientVector
    pad_used: int

    @property
    def n_values(self) -> list[int]:
        return [r.n for r in self.records]


@dataclass(frozen=True)
class SweepCell:
    operator_name: str
    s: float
    run: ExpansionRun | None = None
    error: str | None = None


def default_n_max(s: float) -> int:
    """40 terms at |s| <= 1, 60 beyond (sized from the remainder decay of
    the exponential series at z = |s| C)."""
    return 40 if abs(s) <= 1.0 else 60


def run_expansion(g: ExprAst, params: Mapping[str, float] | None,
                  op: HessenbergOperator, n_max: int, s: float,
                  compute_bounds: bool = True) -> ExpansionRun:
    """One full expansion experiment at a single evaluation point."""
    if n_max < 1:
        raise BesselNeumannError(f"n_max must be >= 1, got {n_max}")
    jet = eval_jet(g, n_max, params)
    H = truncate(op, n_max)
    coeff = coefficients(jet, H)
    pad = default_pad(op.norm_bound_C, s, n_max)
    phi = eval_basis(op, n_max, s, pad)
    g_ref = eval_point(g, s, params)

    w = coeff.values
    partials = np.cumsum(w * phi)
    abs_err = np.abs(g_ref - partials)
    w_abs = np.abs(w)
    w_sum = float(np.sum(w_abs))   # stand-in for ||W_inf||_1
    w_sup = float(np.max(w_abs))   # stand-in for sup_j |w_j|
    zC = abs(s) * op.norm_bound_C
    ones = ones_weights()

    records = []
    for n in range(1, n_max + 1):
        ae = float(abs_err[n - 1])
        re = ae / abs(g_ref) if g_ref != 0.0 else float("inf")
        simple = w_sum * remainder_scalar(zC, n)
        if compute_bounds:
            thm1 = w_sup * theorem1_bound(op, ones, s, n, n + THEOREM1_MARGIN)
        else:
            thm1 = float("nan")
        records.append(ExpansionRecord(
            n=n, partial_sum=float(partials[n - 1]), abs_error=ae,
            rel_error=re, bound_simple=simple, bound_theorem1=thm1))
    return ExpansionRun(operator_name=op.name, s=s, g_reference=g_ref,
                        records=records, coefficient_vector=coeff,
                        pad_used=pad)


def convergence_sweep(g: ExprAst, params: Mapping[str, float] | None,
                      operators: Sequence[HessenbergOperator],
                      s_values: Sequence[float],
                      n_max: int | None = None,
                      compute_bounds: bool = True) -> list[SweepCell]:
    """Cartesian product of operators and evaluation points.

    A failing cell is recorded with its error message; it does not abort
    the rest of the sweep.  Output order is deterministic: operators outer,
    s values inner.
    """
    cells = []
    for op in operators:
        for s in s_values:
            nm = n_max if n_max is not None else default_n_max(s)
            try:
                run = run_expansion(g, params, op, nm, s,
                                    compute_bounds=compute_bounds)
                cells.append(SweepCell(op.name, s, run=run))
            except BesselNeumannError as exc:
                cells.append(SweepCell(op.name, s, error=str(exc)))
    return cells
