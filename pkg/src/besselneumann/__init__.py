"""Generalized Bessel-Neumann expansions g(s) = sum_l w_l phi_l(s), where
the basis functions phi_l solve an infinite Hessenberg ODE.

The built-in operators reproduce the Taylor, Bessel and modified-Bessel
expansions; custom banded operators generate new bases.  The package
computes coefficients from Taylor jets via a triangular Krylov solve,
evaluates the basis through a truncated matrix exponential, and evaluates
truncation-error bounds.
"""

from .basisfun import (basis_error_bound, bessel_i_ref, bessel_j_ref,
                       default_pad, eval_basis)
from .bounds import (WeightSequence, element_tail_sum, factorial_weights,
                     geometric_weights, ones_weights, remainder_action,
                     remainder_scalar, theorem1_bound)
from .coefficients import CoefficientVector, coefficients, krylov_matrix
from .errors import (BesselNeumannError, DomainError, NumericalError,
                     ParseError)
from .exprlang import eval_jet, eval_point, parse
from .hessenberg import HessenbergOperator, make_builtin, make_custom, truncate
from .jets import (TaylorJet, derivatives_row, jet_add, jet_elementary,
                   jet_mul, jet_scale)
from .matexp import expm, expm_action_e1
from .pipeline import (ExpansionRecord, ExpansionRun, SweepCell,
                       convergence_sweep, default_n_max, run_expansion)

__version__ = "0.1.0"

__all__ = [
    "BesselNeumannError", "DomainError", "NumericalError", "ParseError",
    "HessenbergOperator", "make_builtin", "make_custom", "truncate",
    "TaylorJet", "jet_add", "jet_mul", "jet_scale", "jet_elementary",
    "derivatives_row",
    "parse", "eval_jet", "eval_point",
    "expm", "expm_action_e1",
    "CoefficientVector", "krylov_matrix", "coefficients",
    "eval_basis", "default_pad", "basis_error_bound",
    "bessel_j_ref", "bessel_i_ref",
    "WeightSequence", "ones_weights", "geometric_weights",
    "factorial_weights", "remainder_scalar", "remainder_action",
    "theorem1_bound", "element_tail_sum",
    "ExpansionRecord", "ExpansionRun", "SweepCell", "run_expansion",
    "convergence_sweep", "default_n_max",
]
