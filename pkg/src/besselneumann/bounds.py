"""Truncation-error bounds for the expansion.

Three routes, all driven by the exponential remainder
R_n(z) = sum_{l>=n} z^l / l!:

* a scalar bound from the norm of the operator,
* the diagonally-scaled bound  |e_n| <= d_0 ||R_n(s D H D^-1) e_1||_2,
* element sums of the tail of exp(s H) e_1 (ridge decay of banded matrix
  functions, evaluated numerically).

Infinite objects are stood in for by an N x N truncation; the scaled bound
re-evaluates itself at N + 20 and warns when the two disagree.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BesselNeumannError, NumericalError
from .hessenberg import HessenbergOperator, truncate
from .matexp import expm_action_e1

__all__ = ["WeightSequence", "ones_weights", "geometric_weights",
           "factorial_weights", "remainder_scalar", "remainder_action",
           "theorem1_bound", "element_tail_sum"]

_TAIL_RTOL = 1e-18


@dataclass(frozen=True)
class WeightSequence:
    """Positive bounding sequence d_0, d_1, ... for coefficient moduli."""

    generate: Callable[[int], float]
    name: str

    def values(self, n: int) -> np.ndarray:
        d = np.array([self.generate(k) for k in range(n)], dtype=float)
        if np.any(d <= 0) or not np.all(np.isfinite(d)):
            raise BesselNeumannError(
                f"weight sequence {self.name!r} is not strictly positive "
                f"and finite up to index {n - 1}")
        return d


def ones_weights() -> WeightSequence:
    return WeightSequence(lambda k: 1.0, "ones")


def geometric_weights(r: float) -> WeightSequence:
    if r <= 0:
        raise BesselNeumannError(f"geometric ratio must be positive, got {r}")
    return WeightSequence(lambda k: r ** k, f"geometric(r={r:g})")


def factorial_weights() -> WeightSequence:
    return WeightSequence(lambda k: math.factorial(k), "factorial")


def remainder_scalar(z: float, n: int) -> float:
    """Tail sum R_n(z) = sum_{l>=n} z^l / l! for z >= 0.

    Summed term by term from l = n upward (never as e^z minus a partial
    sum, which cancels catastrophically for large n).
    """
    if z < 0:
        raise BesselNeumannError(f"remainder_scalar requires z >= 0, got {z}")
    if n < 0:
        raise BesselNeumannError(f"n must be nonnegative, got {n}")
    if z == 0.0:
        return 1.0 if n == 0 else 0.0
    # first term z^n / n! in log space
    term = math.exp(n * math.log(z) - math.lgamma(n + 1))
    total = 0.0
    l = n
    while True:
        total += term
        l += 1
        term *= z / l
        if term <= _TAIL_RTOL * total:
            return total


def remainder_action(H: np.ndarray, s: float, n: int) -> np.ndarray:
    """The vector R_n(sH) e_1, accumulated by repeated matrix-vector
    products v_{l+1} = (s / (l+1)) H v_l starting from e_1."""
    H = np.asarray(H, dtype=float)
    N = H.shape[0]
    if n < 0:
        raise BesselNeumannError(f"n must be nonnegative, got {n}")
    v = np.zeros(N)
    v[0] = 1.0
    for l in range(1, n + 1):
        v = (s / l) * (H @ v)
    total = np.zeros(N)
    l = n
    max_terms = 10 * N
    for _ in range(max_terms):
        total += v
        l += 1
        v = (s / l) * (H @ v)
        if np.linalg.norm(v) <= _TAIL_RTOL * max(np.linalg.norm(total), 1e-300):
            return total
    raise NumericalError(
        f"remainder series did not converge within {max_terms} terms; "
        "s * ||H|| is too large for dimension N = %d" % N)


def _scaled_truncation(op: HessenbergOperator, D: WeightSequence, N: int) -> np.ndarray:
    H = truncate(op, N)
    d = D.values(N)
    return (d[:, None] * H) / d[None, :]


def theorem1_bound(op: HessenbergOperator, D: WeightSequence, s: float,
                   n: int, N: int) -> float:
    """The scaled truncation bound d_0 ||R_n(s D H D^-1) e_1||_2.

    Valid for the expansion error whenever |w_i| <= d_i for all i.  N is a
    finite stand-in for the infinite operator; the value is re-evaluated at
    N + 20 and a warning is emitted if the two differ by more than 1e-8
    relative.
    """
    if N < n:
        raise BesselNeumannError(f"N = {N} must be at least n = {n}")
    d0 = D.generate(0)

    def value_at(dim: int) -> float:
        Ht = _scaled_truncation(op, D, dim)
        return d0 * float(np.linalg.norm(remainder_action(Ht, s, n)))

    val = value_at(N)
    check = value_at(N + 20)
    if abs(check - val) > 1e-8 * max(abs(val), 1e-300):
        warnings.warn(
            f"theorem1_bound not converged in truncation dimension: "
            f"N={N} gives {val:.6e}, N+20 gives {check:.6e}; increase N",
            RuntimeWarning, stacklevel=2)
    return val


def element_tail_sum(op: HessenbergOperator, weights: WeightSequence | None,
                     s: float, n: int, N: int) -> float:
    """Sum of |entry j| of exp(s H~_N) e_1 for j = n+1 .. N, times d_0.

    H~ is the similarity-scaled matrix D H D^-1 when weights are given,
    else the plain truncation.  This is the element-decay form of the
    truncation bound; valid when sup_{j>n} |w_j| / d_j <= 1.
    """
    if n >= N:
        return 0.0
    if weights is None:
        Ht = truncate(op, N)
        d0 = 1.0
    else:
        Ht = _scaled_truncation(op, weights, N)
        d0 = weights.generate(0)
    v = expm_action_e1(Ht, s)
    return d0 * float(np.sum(np.abs(v[n:])))
