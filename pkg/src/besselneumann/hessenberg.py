"""Infinite upper Hessenberg operators and their finite truncations.

An operator is described by an entry generator ``entry(i, j)`` over 1-based
indices, together with an upper bandwidth and a norm bound ``C`` such that
every finite leading truncation satisfies ``||H_n||_2 <= C``.  The built-in
operators generate the classical basis-function families:

* ``jordan`` -- scaled monomials ``t^l / l!`` (Taylor expansion),
* ``bessel`` -- Bessel functions of the first kind ``J_l(t)``,
* ``modified_bessel`` -- modified Bessel functions ``I_l(t)``,
* ``shifted_bessel`` -- the Bessel operator plus ``alpha`` times the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import BesselNeumannError

__all__ = ["HessenbergOperator", "make_builtin", "make_custom", "truncate",
           "BUILTIN_KINDS"]

BUILTIN_KINDS = ("jordan", "bessel", "modified_bessel", "shifted_bessel")


@dataclass(frozen=True)
class HessenbergOperator:
    """Immutable description of an infinite upper Hessenberg operator.

    ``entry(i, j)`` returns the scalar at row ``i``, column ``j`` (1-based)
    and must vanish for ``i > j + 1``.  ``norm_bound_C`` is an upper bound
    on the spectral norm of the infinite operator (hence of every
    truncation).
    """

    kind: str
    entry: Callable[[int, int], float]
    upper_bandwidth: int
    norm_bound_C: float
    alpha: float | None = None
    name: str = field(default="")

    def __post_init__(self):
        if not self.name:
            object.__setattr__(self, "name", self.kind)


def _jordan_entry(i: int, j: int) -> float:
    return 1.0 if i == j + 1 else 0.0


def _bessel_entry(i: int, j: int) -> float:
    # First row reflects J_0' = -J_1; remaining rows J_l' = (J_{l-1} - J_{l+1})/2.
    if i == j + 1:
        return 0.5
    if j == i + 1:
        return -1.0 if i == 1 else -0.5
    return 0.0


def _modified_bessel_entry(i: int, j: int) -> float:
    # First row reflects I_0' = I_1; remaining rows I_l' = (I_{l-1} + I_{l+1})/2.
    if i == j + 1:
        return 0.5
    if j == i + 1:
        return 1.0 if i == 1 else 0.5
    return 0.0


def make_builtin(kind: str, alpha: float | None = None) -> HessenbergOperator:
    """Construct one of the built-in operators.

    ``alpha`` must be supplied exactly when ``kind == "shifted_bessel"``;
    that operator is the Bessel one plus ``alpha * I`` and carries the norm
    bound ``2 + |alpha|``.  The other built-ins carry the bound ``C = 2``.
    """
    if kind not in BUILTIN_KINDS:
        raise BesselNeumannError(
            f"unknown operator kind {kind!r}; expected one of {BUILTIN_KINDS}")
    if kind == "shifted_bessel":
        if alpha is None:
            raise BesselNeumannError("shifted_bessel requires alpha")
        a = float(alpha)

        def entry(i: int, j: int, _a=a) -> float:
            return _bessel_entry(i, j) + (_a if i == j else 0.0)

        return HessenbergOperator(kind, entry, 1, 2.0 + abs(a), alpha=a,
                                  name=f"shifted_bessel(alpha={a:g})")
    if alpha is not None:
        raise BesselNeumannError(f"alpha is only meaningful for shifted_bessel, not {kind!r}")
    if kind == "jordan":
        return HessenbergOperator(kind, _jordan_entry, 0, 2.0)
    if kind == "bessel":
        return HessenbergOperator(kind, _bessel_entry, 1, 2.0)
    return HessenbergOperator(kind, _modified_bessel_entry, 1, 2.0)


def _as_generator(values: Sequence[float] | Callable[[int], float]) -> Callable[[int], float]:
    """Turn a finite sequence into an index generator (1-based index).

    Finite sequences extend past their end by repeating the last value, so a
    constant band is written as a one-element list.
    """
    if callable(values):
        return values
    seq = [float(v) for v in values]
    if not seq:
        raise BesselNeumannError("band sequence must be non-empty")

    def gen(k: int, _seq=seq) -> float:
        return _seq[k - 1] if k <= len(_seq) else _seq[-1]

    return gen


def make_custom(subdiag: Sequence[float] | Callable[[int], float],
                bands: Sequence[Sequence[float] | Callable[[int], float]],
                C: float) -> HessenbergOperator:
    """Build a banded Hessenberg operator from explicit bands.

    ``subdiag[k]`` is the entry at (k+2, k+1); ``bands[d]`` generates the
    diagonal at offset ``d`` above the main diagonal (``bands[0]`` is the
    main diagonal itself), indexed by row.  Every subdiagonal value must be
    nonzero (otherwise the Krylov matrix is singular) and the caller must
    supply the norm bound ``C > 0``: finite truncations cannot certify a
    bound for the infinite operator.
    """
    if C <= 0 or not np.isfinite(C):
        raise BesselNeumannError(f"norm bound C must be positive and finite, got {C}")
    sub = _as_generator(subdiag)
    if not callable(subdiag):
        for k, v in enumerate(subdiag):
            if v == 0.0:
                raise BesselNeumannError(
                    f"subdiagonal entry {k} is zero; the Krylov matrix would be singular")
    band_gens = [_as_generator(b) for b in bands]
    width = max(0, len(band_gens) - 1)

    def entry(i: int, j: int, _sub=sub, _bands=band_gens) -> float:
        if i == j + 1:
            v = _sub(j)
            if v == 0.0:
                raise BesselNeumannError(
                    f"subdiagonal entry at column {j} is zero; "
                    "the Krylov matrix would be singular")
            return v
        d = j - i
        if 0 <= d < len(_bands):
            return _bands[d](i)
        return 0.0

    return HessenbergOperator("custom_banded", entry, width, float(C))


def truncate(op: HessenbergOperator, n: int) -> np.ndarray:
    """Leading ``n x n`` submatrix of the infinite operator, as a dense array."""
    if n < 1:
        raise BesselNeumannError(f"truncation size must be >= 1, got {n}")
    H = np.zeros((n, n))
    w = op.upper_bandwidth
    for i in range(1, n + 1):
        lo = max(1, i - 1)
        hi = min(n, i + w)
        for j in range(lo, hi + 1):
            H[i - 1, j - 1] = op.entry(i, j)
    return H
