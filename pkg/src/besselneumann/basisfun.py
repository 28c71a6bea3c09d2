"""Basis-function evaluation via the truncated matrix exponential, the
truncation bound 2(tC)^n e^{tC} / n!, and independent Bessel oracles.

The basis vector (phi_0(t), ..., phi_{n-1}(t)) is approximated by the first
n entries of exp(t H_N) e_1 where N = n + pad.  With pad = 0 this is the
bare truncation; padding pushes the truncation error of the retained
entries down by applying the same bound at dimension n + pad.

The oracles sum the ascending power series of J_l and I_l with compensated
accumulation and never touch the operator machinery, so they can referee it.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import BesselNeumannError
from .hessenberg import HessenbergOperator, truncate
from .matexp import expm_action_e1

__all__ = ["eval_basis", "default_pad", "basis_error_bound",
           "bessel_j_ref", "bessel_i_ref"]

DEFAULT_PAD_TOL = 1e-13
MAX_PAD = 200


def basis_error_bound(C: float, t: float, n: int) -> float:
    """The superlinear truncation bound 2 (tC)^n e^{tC} / n!.

    Evaluated in log space so that (tC)^n and n! never overflow separately.
    """
    if C <= 0:
        raise BesselNeumannError(f"norm bound C must be positive, got {C}")
    if t < 0:
        raise BesselNeumannError(f"t must be nonnegative, got {t}")
    if n < 0:
        raise BesselNeumannError(f"n must be nonnegative, got {n}")
    z = t * C
    if z == 0.0:
        return 2.0 if n == 0 else 0.0
    log_bound = n * math.log(z) + z - math.lgamma(n + 1)
    if log_bound > 709.0:  # exp() overflow threshold in double precision
        return math.inf
    return 2.0 * math.exp(log_bound)


def default_pad(C: float, t: float, n: int,
                tol: float = DEFAULT_PAD_TOL) -> int:
    """Smallest pad p with basis_error_bound(C, |t|, n + p) <= tol, capped
    at MAX_PAD."""
    t = abs(t)
    for p in range(MAX_PAD + 1):
        if basis_error_bound(C, t, n + p) <= tol:
            return p
    return MAX_PAD


def eval_basis(op: HessenbergOperator, n: int, t: float,
               pad: int | None = None) -> np.ndarray:
    """First n basis-function values phi_0(t), ..., phi_{n-1}(t).

    ``pad=None`` selects the default padding rule; ``pad=0`` evaluates
    exp(t H_n) e_1 directly.
    """
    if n < 1:
        raise BesselNeumannError(f"n must be >= 1, got {n}")
    if pad is None:
        pad = default_pad(op.norm_bound_C, t, n)
    if pad < 0:
        raise BesselNeumannError(f"pad must be nonnegative, got {pad}")
    H = truncate(op, n + pad)
    return expm_action_e1(H, t)[:n]


_SERIES_MAX_T = 50.0
_SERIES_MAX_ELL = 200
_SERIES_RTOL = 1e-18


def _bessel_series(ell: int, t: float, signed: bool) -> float:
    """Ascending series sum_k (+/-1)^k (t/2)^(2k+ell) / (k! (k+ell)!),
    Kahan-compensated, stopped when the term drops below 1e-18 relative."""
    if ell < 0 or ell > _SERIES_MAX_ELL:
        raise BesselNeumannError(
            f"order {ell} outside the supported range [0, {_SERIES_MAX_ELL}]")
    if abs(t) > _SERIES_MAX_T:
        raise BesselNeumannError(
            f"argument {t} outside the supported range |t| <= {_SERIES_MAX_T}")
    if t == 0.0:
        return 1.0 if ell == 0 else 0.0
    half = 0.5 * t
    # term_0 = (t/2)^ell / ell!, in log space for large ell
    term = math.exp(ell * math.log(abs(half)) - math.lgamma(ell + 1))
    if half < 0 and ell % 2 == 1:
        term = -term
    total = 0.0
    comp = 0.0
    k = 0
    ratio_sign = -1.0 if signed else 1.0
    while True:
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        k += 1
        term *= ratio_sign * half * half / (k * (k + ell))
        if abs(term) <= _SERIES_RTOL * max(abs(total), 1e-300):
            return total
        if k > 2000:
            raise BesselNeumannError("Bessel series did not converge")


def bessel_j_ref(ell: int, t: float) -> float:
    """Reference J_ell(t) by direct series summation (alternating terms)."""
    return _bessel_series(ell, t, signed=True)


def bessel_i_ref(ell: int, t: float) -> float:
    """Reference I_ell(t) by direct series summation (all terms positive)."""
    return _bessel_series(ell, t, signed=False)
