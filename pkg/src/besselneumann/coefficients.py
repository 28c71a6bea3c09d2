"""Krylov matrices and expansion coefficients.

The coefficient row ``W_n`` satisfies ``W_n K_n = G_n`` where ``K_n`` has
columns ``e_1, H e_1, ..., H^{n-1} e_1`` and ``G_n`` is the derivative row
of the expanded function.  For a Hessenberg ``H`` the Krylov matrix is
upper triangular, so the system is solved by back-substitution.  The solve
defaults to the factorial-scaled formulation: columns ``H^l e_1 / l!``
against the scaled Taylor coefficients, which is the same system
right-multiplied by ``diag(1/l!)`` but keeps every magnitude tame.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.linalg import lapack

from .errors import NumericalError
from .jets import TaylorJet

__all__ = ["CoefficientVector", "krylov_matrix", "coefficients",
           "CONDITION_WARN_THRESHOLD"]

_HESSENBERG_TOL = 1e-14
CONDITION_WARN_THRESHOLD = 1e12


@dataclass(frozen=True)
class CoefficientVector:
    """Expansion coefficients w_0..w_{n-1} with solve diagnostics.

    ``residual`` is the infinity norm of ``W K - G`` in the scaled
    formulation; ``condition_estimate`` is a 1-norm condition estimate of
    the triangular Krylov factor.
    """

    values: np.ndarray
    residual: float
    condition_estimate: float

    def __len__(self) -> int:
        return self.values.size


def _check_hessenberg(H: np.ndarray) -> np.ndarray:
    H = np.asarray(H, dtype=float)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise NumericalError(f"expected a square matrix, got shape {H.shape}")
    n = H.shape[0]
    if n > 2:
        below = np.abs(np.tril(H, -2))
        if below.max() > _HESSENBERG_TOL:
            i, j = np.unravel_index(below.argmax(), below.shape)
            raise NumericalError(
                f"matrix is not upper Hessenberg: entry ({i + 1},{j + 1}) = {H[i, j]}")
    return H


def krylov_matrix(H: np.ndarray, scaled: bool = True) -> np.ndarray:
    """Upper-triangular Krylov matrix with columns H^l e_1 (over l!, if scaled)."""
    H = _check_hessenberg(H)
    n = H.shape[0]
    K = np.zeros((n, n))
    v = np.zeros(n)
    v[0] = 1.0
    K[:, 0] = v
    for col in range(1, n):
        v = H @ v
        if scaled:
            v = v / col
        K[:, col] = v
    # Hessenberg structure makes entries below the diagonal exactly zero;
    # enforce it so the triangular solver sees a clean factor.
    return np.triu(K)


def coefficients(g: TaylorJet, H: np.ndarray) -> CoefficientVector:
    """Solve ``W_n K_n = G_n`` for the coefficient row of the expansion of g.

    Requires ``g.order >= n`` and nonzero subdiagonal entries of ``H`` (the
    Krylov matrix is invertible exactly in that case).  A condition estimate
    above 1e12 emits a warning, not an error.
    """
    H = _check_hessenberg(H)
    n = H.shape[0]
    if g.order < n:
        raise NumericalError(
            f"jet order {g.order} is too small for truncation size {n}")
    sub = np.diag(H, -1)
    if np.any(sub == 0.0):
        k = int(np.argmin(sub != 0.0))
        raise NumericalError(
            f"subdiagonal entry ({k + 2},{k + 1}) of H is zero: "
            "the Krylov matrix is singular and no coefficients exist")

    K = krylov_matrix(H, scaled=True)
    gtil = g.coeffs[:n]
    # Row system W K = G  <=>  K^T W^T = G^T with K^T lower triangular.
    w = scipy.linalg.solve_triangular(K.T, gtil, lower=True, check_finite=False)

    residual = float(np.max(np.abs(w @ K - gtil))) if n else 0.0
    rcond, info = lapack.dtrcon(K, norm="1", uplo="U", diag="N")
    cond = float(1.0 / rcond) if (info == 0 and rcond > 0) else np.inf
    if cond > CONDITION_WARN_THRESHOLD:
        warnings.warn(
            f"Krylov matrix condition estimate {cond:.3e} exceeds "
            f"{CONDITION_WARN_THRESHOLD:.0e}; coefficients may be inaccurate",
            RuntimeWarning, stacklevel=2)
    return CoefficientVector(values=w, residual=residual, condition_estimate=cond)
