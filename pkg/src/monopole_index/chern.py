"""Integer first Chern numbers of diagonal bundles on the boundary sphere.

The lattice field-strength method: link phases are integrals of the chart
connection along mesh edges, each plaquette contributes the principal
argument of its holonomy, and the sum over plaquettes is ``2 pi`` times an
integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import RadeConditionError, ResolutionError
from .model import ChartConnection, MonopoleConfig, chart_connections

MIN_THETA = 40
MIN_PHI = 80


@dataclass(frozen=True)
class SphereMesh:
    """Latitude-longitude mesh with the equator as a grid row."""

    n_theta: int
    n_phi: int
    radius: float = 1.0

    def __post_init__(self):
        if self.n_theta < MIN_THETA or self.n_phi < MIN_PHI:
            raise ResolutionError(
                f"mesh {self.n_theta}x{self.n_phi} below the floor {MIN_THETA}x{MIN_PHI}"
            )
        if self.n_theta % 2:
            raise ResolutionError("n_theta must be even so the equator is a grid row")
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    @property
    def theta(self) -> np.ndarray:
        return np.linspace(0.0, np.pi, self.n_theta + 1)

    @property
    def phi(self) -> np.ndarray:
        # unwrapped so that the last column closes at 2 pi
        return np.linspace(0.0, 2 * np.pi, self.n_phi + 1)

    def refined(self, factor: int = 2) -> "SphereMesh":
        return SphereMesh(self.n_theta * factor, self.n_phi * factor, self.radius)


def plaquette_chern(mesh: SphereMesh, charts: Sequence[ChartConnection]) -> int:
    """Outward degree of the line bundle described by ``charts``.

    Vertices with ``theta <= pi/2`` use the north chart, the rest the south
    chart.  A meridian link leaving the north chart picks up the transition
    phase ``-k phi``.  Plaquettes are traversed theta-first, which is the
    outward orientation.

    Raises
    ------
    ResolutionError
        If a plaquette phase lies within ``1e-3`` of the branch cut.
    """
    by_name = {c.chart: c for c in charts}
    if set(by_name) != {"north", "south"}:
        raise ValueError("need exactly one north and one south chart")
    north, south = by_name["north"], by_name["south"]
    if north.charge != south.charge:
        raise ValueError("north and south charts disagree on the charge")
    k = north.transition_winding()

    th = mesh.theta
    ph = mesh.phi
    dphi = ph[1] - ph[0]
    in_north = th <= np.pi / 2 + 1e-12
    a_row = np.where(in_north, north.coefficient(th), south.coefficient(th))
    # phi-link phase on row i (constant along the row)
    phi_link = a_row * dphi
    # theta-link from row i to i+1 at column j: transition if charts change
    crossing = in_north[:-1] & ~in_north[1:]
    theta_link = np.where(crossing[:, None], -k * ph[None, :], 0.0)

    # loop (i,j) -> (i+1,j) -> (i+1,j+1) -> (i,j+1)
    phase = (
        theta_link[:, :-1]
        + phi_link[1:, None]
        - theta_link[:, 1:]
        - phi_link[:-1, None]
    )
    principal = np.angle(np.exp(1j * phase))
    if np.any(np.pi - np.abs(principal) < 1e-3):
        raise ResolutionError("plaquette phase near ±π; refine the mesh")
    total = principal.sum() / (2 * np.pi)
    nearest = int(round(total))
    if abs(total - nearest) > 1e-6:
        raise ResolutionError(f"plaquette sum {total} is not an integer")
    return nearest


@dataclass(frozen=True)
class EigenbundleSplit:
    plus_components: tuple[int, ...]
    minus_components: tuple[int, ...]


def split_eigenbundles(cfg: MonopoleConfig, chirality: str) -> EigenbundleSplit:
    """Assign each component to ``V+`` or ``V-`` by the sign of ``a_j``."""
    if chirality not in ("+", "-"):
        raise ValueError(f"chirality must be '+' or '-', got {chirality!r}")
    plus, minus = [], []
    for j, a in enumerate(cfg.mass):
        if a == 0:
            raise RadeConditionError(f"component {j} has zero mass")
        positive = a > 0 if chirality == "+" else a < 0
        (plus if positive else minus).append(j)
    return EigenbundleSplit(tuple(plus), tuple(minus))


def default_mesh(cfg: MonopoleConfig) -> SphereMesh:
    return SphereMesh(MIN_THETA, MIN_PHI, cfg.boundary_radius or 1.0)


def component_degrees(cfg: MonopoleConfig, mesh: SphereMesh | None = None) -> list[int]:
    """Outward degree of every diagonal component on the boundary sphere."""
    mesh = mesh or default_mesh(cfg)
    return [plaquette_chern(mesh, chart_connections(cfg, j)) for j in range(cfg.rank)]


def boundary_ch(cfg: MonopoleConfig, chirality: str, mesh: SphereMesh | None = None, which: str = "+") -> int:
    """``int_{boundary} ch(V^which)`` with the inward-normal orientation.

    ``which="+"`` integrates over ``V+``, ``which="-"`` over ``V-``.
    """
    split = split_eigenbundles(cfg, chirality)
    comps = split.plus_components if which == "+" else split.minus_components
    degrees = component_degrees(cfg, mesh)
    return -sum(degrees[j] for j in comps)
