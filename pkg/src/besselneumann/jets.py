"""Truncated Taylor (jet) arithmetic at the origin.

A jet stores the scaled coefficients ``c_k = g^(k)(0) / k!`` of an analytic
function, so arithmetic never touches factorial-sized numbers; factorials
are applied only when raw derivatives are extracted with
:func:`derivatives_row`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BesselNeumannError, DomainError

__all__ = ["TaylorJet", "constant_jet", "variable_jet", "jet_add", "jet_sub",
           "jet_mul", "jet_scale", "jet_pow", "jet_elementary",
           "derivatives_row", "MAX_ORDER"]

# 170! is the largest factorial finite in double precision.
MAX_ORDER = 170


@dataclass(frozen=True)
class TaylorJet:
    """Scaled Taylor coefficients (c_0, ..., c_{m-1}) of a function at 0."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise BesselNeumannError("jet coefficients must be a non-empty 1-D array")
        if c.size > MAX_ORDER:
            raise BesselNeumannError(
                f"jet order {c.size} exceeds the supported maximum {MAX_ORDER}")
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size

    def __call__(self, s: float) -> float:
        """Evaluate the truncated polynomial sum c_k s^k (Horner)."""
        acc = 0.0
        for c in self.coeffs[::-1]:
            acc = acc * s + c
        return acc


def constant_jet(value: float, order: int) -> TaylorJet:
    c = np.zeros(order)
    c[0] = value
    return TaylorJet(c)


def variable_jet(order: int) -> TaylorJet:
    """The jet of the identity function s."""
    c = np.zeros(order)
    if order >= 2:
        c[1] = 1.0
    return TaylorJet(c)


def _check_orders(a: TaylorJet, b: TaylorJet) -> int:
    if a.order != b.order:
        raise BesselNeumannError(
            f"jet order mismatch: {a.order} vs {b.order}")
    return a.order


def jet_add(a: TaylorJet, b: TaylorJet) -> TaylorJet:
    _check_orders(a, b)
    return TaylorJet(a.coeffs + b.coeffs)


def jet_sub(a: TaylorJet, b: TaylorJet) -> TaylorJet:
    _check_orders(a, b)
    return TaylorJet(a.coeffs - b.coeffs)


def jet_scale(a: TaylorJet, lam: float) -> TaylorJet:
    return TaylorJet(a.coeffs * lam)


def jet_mul(a: TaylorJet, b: TaylorJet) -> TaylorJet:
    """Cauchy product truncated to the common order."""
    m = _check_orders(a, b)
    out = np.convolve(a.coeffs, b.coeffs)[:m]
    return TaylorJet(out)


def jet_pow(a: TaylorJet, k: int) -> TaylorJet:
    if k < 0:
        raise BesselNeumannError("jet_pow requires a nonnegative integer exponent")
    result = constant_jet(1.0, a.order)
    base = a
    while k:
        if k & 1:
            result = jet_mul(result, base)
        base = jet_mul(base, base)
        k >>= 1
    return result


def _compose_exp(u: np.ndarray) -> np.ndarray:
    m = u.size
    v = np.zeros(m)
    v[0] = math.exp(u[0])
    for k in range(1, m):
        # v' = u' v  =>  k v_k = sum_{j=1}^{k} j u_j v_{k-j}
        v[k] = np.dot(np.arange(1, k + 1) * u[1:k + 1], v[k - 1::-1]) / k
    return v


def _compose_sin_cos(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    m = u.size
    s = np.zeros(m)
    c = np.zeros(m)
    s[0] = math.sin(u[0])
    c[0] = math.cos(u[0])
    for k in range(1, m):
        ju = np.arange(1, k + 1) * u[1:k + 1]
        s[k] = np.dot(ju, c[k - 1::-1]) / k
        c[k] = -np.dot(ju, s[k - 1::-1]) / k
    return s, c


def _compose_log(u: np.ndarray) -> np.ndarray:
    if u[0] <= 0:
        raise DomainError(f"log of a series with constant term {u[0]} is not analytic at 0")
    m = u.size
    v = np.zeros(m)
    v[0] = math.log(u[0])
    for k in range(1, m):
        conv = np.dot(np.arange(1, k) * v[1:k], u[k - 1:0:-1]) if k > 1 else 0.0
        v[k] = (u[k] - conv / k) / u[0]
    return v


def _compose_recip(u: np.ndarray) -> np.ndarray:
    if u[0] == 0:
        raise DomainError("reciprocal of a series vanishing at 0 is not analytic")
    m = u.size
    v = np.zeros(m)
    v[0] = 1.0 / u[0]
    for k in range(1, m):
        v[k] = -np.dot(u[1:k + 1], v[k - 1::-1]) / u[0]
    return v


def _compose_sqrt(u: np.ndarray) -> np.ndarray:
    if u[0] <= 0:
        raise DomainError(f"sqrt of a series with constant term {u[0]} is not analytic at 0")
    m = u.size
    v = np.zeros(m)
    v[0] = math.sqrt(u[0])
    for k in range(1, m):
        conv = np.dot(v[1:k], v[k - 1:0:-1]) if k > 1 else 0.0
        v[k] = (u[k] - conv) / (2.0 * v[0])
    return v


_ELEMENTARY = {
    "exp": lambda u: _compose_exp(u),
    "sin": lambda u: _compose_sin_cos(u)[0],
    "cos": lambda u: _compose_sin_cos(u)[1],
    "log": _compose_log,
    "recip": _compose_recip,
    "sqrt": _compose_sqrt,
}


def jet_elementary(f: str, u: TaylorJet) -> TaylorJet:
    """Taylor coefficients of ``f(u(t))`` to the order of ``u``.

    ``sin`` and ``cos`` are produced by the coupled convolution recurrence;
    ``log``/``recip``/``sqrt`` require the constant term of ``u`` to lie in
    the function's domain of analyticity.
    """
    try:
        rule = _ELEMENTARY[f]
    except KeyError:
        raise BesselNeumannError(f"unknown elementary function {f!r}") from None
    return TaylorJet(rule(u.coeffs))


def derivatives_row(g: TaylorJet, n: int) -> np.ndarray:
    """Raw derivatives (g(0), g'(0), ..., g^(n-1)(0)) extracted from the jet."""
    if n > g.order:
        raise BesselNeumannError(
            f"requested {n} derivatives from a jet of order {g.order}")
    facts = np.array([math.factorial(k) for k in range(n)], dtype=float)
    return g.coeffs[:n] * facts
