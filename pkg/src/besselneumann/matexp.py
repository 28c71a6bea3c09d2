"""Dense matrix exponential by Pade scaling-and-squaring.

Diagonal Pade approximants of degree {3, 5, 7, 9, 13} with the published
double-precision 1-norm thresholds; the input is scaled by 2^-s until its
1-norm falls under the degree-13 threshold, the approximant is evaluated,
and the result is squared s times.  The rational solve uses LU with partial
pivoting and aborts if the denominator is singular to working precision.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import NumericalError

__all__ = ["expm", "expm_action_e1"]

# (degree, 1-norm threshold theta_m) for backward error <= unit roundoff.
_THETA = [
    (3, 1.495585217958292e-2),
    (5, 2.539398330063230e-1),
    (7, 9.504178996162932e-1),
    (9, 2.097847961257068e0),
    (13, 5.371920351148152e0),
]

_PADE_B = {
    3: (120.0, 60.0, 12.0, 1.0),
    5: (30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0),
    7: (17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0),
    9: (17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
        2162160.0, 110880.0, 3960.0, 90.0, 1.0),
    13: (64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
         1187353796428800.0, 129060195264000.0, 10559470521600.0,
         670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
         960960.0, 16380.0, 182.0, 1.0),
}


def _pade_uv(A: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Split p_m(A) = U + V with U odd and V even in A, so that the
    approximant is (V - U)^{-1} (V + U)."""
    n = A.shape[0]
    b = _PADE_B[m]
    I = np.eye(n)
    A2 = A @ A
    if m == 13:
        A4 = A2 @ A2
        A6 = A2 @ A4
        U = A @ (A6 @ (b[13] * A6 + b[11] * A4 + b[9] * A2)
                 + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I)
        V = (A6 @ (b[12] * A6 + b[10] * A4 + b[8] * A2)
             + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I)
        return U, V
    powers = [I, A2]
    for _ in range((m - 1) // 2 - 1):
        powers.append(powers[-1] @ A2)
    U = A @ sum(b[2 * k + 1] * powers[k] for k in range((m + 1) // 2))
    V = sum(b[2 * k] * powers[k] for k in range((m + 1) // 2 + (m % 2 == 0)))
    return U, V


def expm(A: np.ndarray) -> np.ndarray:
    """Matrix exponential of a square array of finite doubles."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NumericalError(f"expm requires a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NumericalError("expm input contains non-finite entries")
    norm1 = np.linalg.norm(A, 1) if A.size else 0.0

    s = 0
    m = _THETA[-1][0]
    for deg, theta in _THETA:
        if norm1 <= theta:
            m = deg
            break
    else:
        s = max(0, int(np.ceil(np.log2(norm1 / _THETA[-1][1]))))
    B = A / (2.0 ** s)

    U, V = _pade_uv(B, m)
    P = V + U
    Q = V - U
    lu, piv = scipy.linalg.lu_factor(Q, check_finite=False)
    diag = np.abs(np.diag(lu))
    if diag.size and diag.min() <= np.finfo(float).eps * max(1.0, diag.max()):
        raise NumericalError("Pade denominator is singular to working precision")
    E = scipy.linalg.lu_solve((lu, piv), P, check_finite=False)

    for _ in range(s):
        E = E @ E
        if not np.all(np.isfinite(E)):
            raise NumericalError("overflow while squaring the matrix exponential")
    if not np.all(np.isfinite(E)):
        raise NumericalError("matrix exponential overflowed double precision")
    return E


def expm_action_e1(A: np.ndarray, t: float) -> np.ndarray:
    """First column of exp(t A): the solution at time t of x' = Ax, x(0) = e_1.

    Dimensions stay in the hundreds here, so the full exponential is formed
    and its first column extracted.
    """
    A = np.asarray(A, dtype=float)
    if t == 0.0:
        e1 = np.zeros(A.shape[0])
        e1[0] = 1.0
        return e1
    return expm(t * A)[:, 0].copy()
