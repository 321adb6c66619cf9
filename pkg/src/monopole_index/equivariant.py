"""S^1-equivariant fixed-point evaluation of the index of the compact lift.

For weights ``k_{p,i}`` at the singular points ``Z`` and as many trivial
points ``Z'`` the fixed-point sum collapses to ``-z P(z) / (z - 1)^2`` with
``P(z) = sum_p (sum_i z^{k_{p,i}} - r)``.  The index is the S^1-average,
i.e. the constant coefficient, and equals ``-/+ sum_{k > 0} k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .errors import ConstraintError, InternalConsistencyError
from .laurent import LaurentPoly

Chirality = Literal["+", "-"]


def chirality_sign(chirality: str) -> int:
    if chirality == "+":
        return 1
    if chirality == "-":
        return -1
    raise ValueError(f"chirality must be '+' or '-', got {chirality!r}")


@dataclass(frozen=True)
class FixedPointDatum:
    """Weights of the circle action at one fixed point of the compact lift.

    Z-type points sit over singularities and carry the bundle weights;
    Z'-type points carry the trivial rank-``r`` bundle.
    """

    kind: Literal["Z", "Z'"]
    bundle_weights: tuple[int, ...]

    @property
    def spinor_plus(self) -> tuple[int, int]:
        return (0, 0) if self.kind == "Z" else (-1, 1)

    @property
    def spinor_minus(self) -> tuple[int, int]:
        return (-1, 1) if self.kind == "Z" else (0, 0)


def fixed_point_data(weights_by_point: Sequence[Sequence[int]], rank: int) -> list[FixedPointDatum]:
    """One Z-point per singularity and an equal number of Z'-points."""
    z = [FixedPointDatum("Z", tuple(int(k) for k in w)) for w in weights_by_point]
    zp = [FixedPointDatum("Z'", (0,) * rank) for _ in weights_by_point]
    return z + zp


def _check_weights(weights_by_point: Sequence[Sequence[int]], rank: int) -> None:
    for w in weights_by_point:
        if len(w) != rank:
            raise ConstraintError(f"weight vector {tuple(w)} does not have length {rank}")
    total = sum(int(k) for w in weights_by_point for k in w)
    if total != 0:
        raise ConstraintError(f"total weight {total} ≠ 0")


def character_poly(weights_by_point: Sequence[Sequence[int]], rank: int) -> LaurentPoly:
    """``P(z) = sum_p (sum_i z^{k_{p,i}} - r)``."""
    P = LaurentPoly()
    for w in weights_by_point:
        P = P + LaurentPoly.from_exponents(w) - rank
    return P


def fixed_point_quotient(weights_by_point: Sequence[Sequence[int]], rank: int) -> LaurentPoly:
    """Sum of local contributions ``(S+ - S-) E / lambda_{-1}(T)`` from spinor weights.

    The denominator ``(1 - z)^2 (1 - z^-1)^2 = z^-2 (z - 1)^4`` is common to all
    fixed points; the numerator is assembled from :class:`FixedPointDatum`.
    """
    num = LaurentPoly()
    for d in fixed_point_data(weights_by_point, rank):
        spin = LaurentPoly.from_exponents(d.spinor_plus) - LaurentPoly.from_exponents(d.spinor_minus)
        num = num + spin * LaurentPoly.from_exponents(d.bundle_weights)
    try:
        return num.exact_div_z_minus_one_power(4).shift(2)
    except ArithmeticError as exc:
        raise ConstraintError(f"fixed-point sum is not a Laurent polynomial: {exc}") from exc


def lefschetz_symbolic(weights_by_point: Sequence[Sequence[int]], rank: int, chirality: str) -> int:
    """Exact equivariant index of the compact lift.

    Raises
    ------
    ConstraintError
        If the total weight is nonzero.
    """
    sign = chirality_sign(chirality)
    _check_weights(weights_by_point, rank)
    P = character_poly(weights_by_point, rank)
    if P.value_at_one() != 0 or P.derivative_at_one() != 0:
        raise InternalConsistencyError("P(1) or P'(1) nonzero despite zero total weight")
    try:
        Q = P.shift(1).exact_div_z_minus_one_power(2)
    except ArithmeticError as exc:
        raise InternalConsistencyError(str(exc)) from exc
    return -sign * Q.coeff(0)


def lefschetz_numeric(
    weights_by_point: Sequence[Sequence[int]],
    rank: int,
    chirality: str,
    quadrature_n: int = 4096,
) -> float:
    """Midpoint quadrature of the fixed-point integral over the circle.

    The integrand ``[sum cos(k theta) - r|Z|] / (2 (1 - cos theta))`` is
    rewritten as ``-(1/2) sum (sin(k theta/2) / sin(theta/2))^2`` to avoid
    cancellation near ``theta = 0``.
    """
    sign = chirality_sign(chirality)
    _check_weights(weights_by_point, rank)
    if quadrature_n < 1:
        raise ValueError("quadrature_n must be positive")
    theta = (np.arange(quadrature_n) + 0.5) * (2 * np.pi / quadrature_n)
    half = np.sin(theta / 2)
    acc = np.zeros_like(theta)
    for k in (int(k) for w in weights_by_point for k in w):
        acc += (np.sin(k * theta / 2) / half) ** 2
    return float(sign * np.mean(-0.5 * acc))


def fejer_average(k: int) -> Fraction:
    """``(2 pi)^-1 int (1 - cos k theta) / (1 - cos theta) = |k|``.

    The integrand is the square of the Dirichlet kernel
    ``sum_{m} e^{i m theta}`` over ``|k|`` consecutive frequencies, whose
    constant Fourier coefficient counts the frequencies.
    """
    n = abs(int(k))
    dirichlet = LaurentPoly.from_exponents(range(n))
    conj = LaurentPoly.from_exponents(-e for e in range(n))
    return Fraction((dirichlet * conj).coeff(0))
