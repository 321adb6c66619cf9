"""Configuration data and explicit fields of superposed abelian Dirac monopoles.

A configuration is a direct sum of ``rank`` line bundles.  Each singular
point ``p`` carries an integer weight vector ``k_p``; component ``j`` has
Higgs field ``i (a_j + sum_p k_{p,j} / (2 |x - p|))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .errors import DomainError

Mode = Literal["compact-model", "complete-with-boundary"]
Chart = Literal["north", "south"]
MODES: tuple[str, ...] = ("compact-model", "complete-with-boundary")


@dataclass(frozen=True)
class SingularPoint:
    """A Dirac-type singularity: a position in R^3 and its weight vector."""

    position: tuple[float, float, float]
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "position", tuple(float(c) for c in self.position))
        object.__setattr__(self, "weights", tuple(self.weights))


@dataclass(frozen=True)
class MonopoleConfig:
    """Immutable monopole configuration.

    Parameters
    ----------
    rank : int
        Number of diagonal line components.
    singularities : sequence of SingularPoint
    mass : sequence of float, optional
        Asymptotic eigenvalues ``a_j`` of ``-i Phi``.  Defaults to zeros.
    boundary_radius : float, optional
        Radius of the origin-centred boundary sphere.  Required for
        ``complete-with-boundary`` configurations.
    mode : {"compact-model", "complete-with-boundary"}
    """

    rank: int
    singularities: tuple[SingularPoint, ...]
    mass: tuple[float, ...] = ()
    boundary_radius: float | None = None
    mode: Mode = "complete-with-boundary"

    def __post_init__(self):
        object.__setattr__(self, "singularities", tuple(self.singularities))
        mass = tuple(float(a) for a in self.mass)
        if not mass and isinstance(self.rank, int) and self.rank > 0:
            mass = (0.0,) * self.rank
        object.__setattr__(self, "mass", mass)

    def total_weights(self) -> tuple[int, ...]:
        """Per-component totals ``d_j = sum_p k_{p,j}``."""
        d = [0] * self.rank
        for p in self.singularities:
            for j, kj in enumerate(p.weights):
                d[j] += int(kj)
        return tuple(d)

    def all_weights(self) -> list[int]:
        return [int(k) for p in self.singularities for k in p.weights]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    errors: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()


def _is_int(v) -> bool:
    return isinstance(v, (int, np.integer)) and not isinstance(v, bool)


def validate_config(cfg: MonopoleConfig) -> ValidationReport:
    """Check every configuration invariant and collect the violations.

    Never raises.  Warnings flag configurations whose boundary sphere sits
    so close to a singularity that ``-i Phi`` may change sign on it, in which
    case the split by the sign of ``a_j`` is only an asymptotic statement.
    """
    errors: list[str] = []
    warnings: list[str] = []
    if not _is_int(cfg.rank) or cfg.rank < 1:
        errors.append(f"rank must be a positive integer, got {cfg.rank!r}")
        return ValidationReport(False, tuple(errors))
    if cfg.mode not in MODES:
        errors.append(f"unknown mode {cfg.mode!r}")

    for i, p in enumerate(cfg.singularities):
        if len(p.weights) != cfg.rank:
            errors.append(
                f"singularities[{i}].weights has length {len(p.weights)}, rank is {cfg.rank}"
            )
        if not all(_is_int(k) for k in p.weights):
            errors.append(f"singularities[{i}].weights must be integers")
        if len(p.position) != 3 or not all(math.isfinite(c) for c in p.position):
            errors.append(f"singularities[{i}].position must be 3 finite reals")
    seen: dict[tuple, int] = {}
    for i, p in enumerate(cfg.singularities):
        if p.position in seen:
            errors.append(f"singularities[{i}] coincides with singularities[{seen[p.position]}]")
        else:
            seen[p.position] = i

    if len(cfg.mass) != cfg.rank:
        errors.append(f"mass has length {len(cfg.mass)}, rank is {cfg.rank}")
    elif not all(math.isfinite(a) for a in cfg.mass):
        errors.append("mass entries must be finite")

    R = cfg.boundary_radius
    if R is not None:
        if not (math.isfinite(R) and R > 0):
            errors.append(f"boundary_radius must be positive, got {R}")
        else:
            for i, p in enumerate(cfg.singularities):
                if len(p.position) == 3 and math.dist(p.position, (0.0, 0.0, 0.0)) >= R:
                    errors.append(
                        f"boundary_radius {R} does not enclose singularities[{i}]"
                    )

    if errors:
        return ValidationReport(False, tuple(errors), tuple(warnings))

    if cfg.mode == "compact-model":
        total = sum(cfg.all_weights())
        if total != 0:
            errors.append(f"total weight {total} ≠ 0")
    else:
        if R is None:
            errors.append("boundary_radius is required for complete-with-boundary")
        for j, a in enumerate(cfg.mass):
            if a == 0:
                errors.append(f"zero mass violates Råde condition (component {j})")
        if R is not None and not errors:
            for j, a in enumerate(cfg.mass):
                pull = sum(
                    abs(p.weights[j]) / (2.0 * (R - math.dist(p.position, (0, 0, 0))))
                    for p in cfg.singularities
                )
                if abs(a) <= pull:
                    warnings.append(
                        f"component {j}: |a|={abs(a):g} does not dominate the "
                        f"singular term bound {pull:g} on the boundary sphere"
                    )
    return ValidationReport(not errors, tuple(errors), tuple(warnings))


def higgs_sampler(cfg: MonopoleConfig, x: Sequence[float]) -> np.ndarray:
    """Evaluate ``Phi(x) = i diag(a_j + sum_p k_{p,j} / (2 |x - p|))``.

    Raises
    ------
    DomainError
        If ``x`` is one of the singular points.
    """
    x = np.asarray(x, dtype=float)
    vals = np.array(cfg.mass, dtype=float)
    for p in cfg.singularities:
        dist = float(np.linalg.norm(x - np.asarray(p.position)))
        if dist == 0.0:
            raise DomainError(f"Higgs field is singular at {p.position}")
        vals = vals + np.asarray(p.weights, dtype=float) / (2.0 * dist)
    return np.diag(1j * vals)


@dataclass(frozen=True)
class ChartConnection:
    """Two-chart connection of charge ``charge`` on the round sphere.

    The real form ``a`` (with ``A = -i a``) is ``coefficient(theta) dphi``:
    north ``(k/2)(1 - cos theta)``, south ``-(k/2)(1 + cos theta)``.
    The transition ``a_N - a_S = k dphi`` has winding ``k``.
    """

    charge: int
    chart: Chart

    def coefficient(self, theta):
        theta = np.asarray(theta, dtype=float)
        if self.chart == "north":
            return 0.5 * self.charge * (1.0 - np.cos(theta))
        return -0.5 * self.charge * (1.0 + np.cos(theta))

    def transition_winding(self) -> int:
        return int(self.charge)


def chart_connections(cfg: MonopoleConfig, j: int) -> list[ChartConnection]:
    """North and south charts of the charge ``d_j = sum_p k_{p,j}`` bundle."""
    if not 0 <= j < cfg.rank:
        raise IndexError(f"component {j} out of range for rank {cfg.rank}")
    d = cfg.total_weights()[j]
    return [ChartConnection(d, "north"), ChartConnection(d, "south")]


def single_point_config(k: int, a: float, radius: float = 1.0) -> MonopoleConfig:
    """Rank-one flat Dirac monopole of weight ``k`` at the origin with mass ``a``."""
    return MonopoleConfig(
        rank=1,
        singularities=(SingularPoint((0.0, 0.0, 0.0), (int(k),)),),
        mass=(float(a),),
        boundary_radius=float(radius),
        mode="complete-with-boundary",
    )
