"""Spectrum of the Dirac operator on S^2 twisted by O(k).

In spin-weight language the plus block of ``D^2`` acts on sections of
``O(k - 1)`` and the minus block on ``O(k + 1)``.  Per azimuthal Fourier
sector both reduce to a Sturm-Liouville problem in the colatitude.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .model import ChartConnection


@dataclass(frozen=True)
class AngularMode:
    k: int
    q: int
    n: int
    sqrt_n: float


def analytic_modes(k: int, q_max: int) -> list[AngularMode]:
    """Nonzero levels ``n = q^2 + |k| q`` for ``q = 1..q_max``."""
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    out = []
    for q in range(1, q_max + 1):
        n = q * q + abs(k) * q
        out.append(AngularMode(int(k), q, n, float(np.sqrt(n))))
    return out


def kernel_dims(k: int) -> tuple[int, int]:
    """Kernel dimensions ``(h0(O(k-1)), h1(O(k-1)))`` = ``(max(k,0), max(-k,0))``."""
    return max(int(k), 0), max(-int(k), 0)


def sector_eigenvalues(
    charge: int, shift: float, nu: int, grid_size: int, upper: float
) -> np.ndarray:
    """Eigenvalues below ``upper`` of one azimuthal sector.

    The operator is ``-(1/sin) d(sin d) + m(theta)^2 / sin^2 + shift`` where
    ``m = nu - a(theta)`` uses the chart connection of ``charge`` (south chart
    gauge-shifted by the transition ``nu -> nu - charge``).  The grid is
    cell-centred, ``theta_j = (j + 1/2) h``; fluxes vanish at the poles so no
    boundary condition is imposed.
    """
    N = int(grid_size)
    h = np.pi / N
    th = (np.arange(N) + 0.5) * h
    sig = np.sin(np.arange(1, N) * h)
    m = np.sin(th)
    north = ChartConnection(charge, "north").coefficient(th)
    south = ChartConnection(charge, "south").coefficient(th)
    eff = np.where(th < np.pi / 2, nu - north, (nu - charge) - south)
    stiff = np.zeros(N)
    stiff[:-1] += sig
    stiff[1:] += sig
    d = stiff / (h * h * m) + eff**2 / m**2 + shift
    e = -sig / (h * h * np.sqrt(m[:-1] * m[1:]))
    lo = min(d.min(), shift) - 1.0
    if upper <= lo:
        return np.empty(0)
    return eigh_tridiagonal(d, e, eigvals_only=True, select="v", select_range=(lo, upper))


def _block(charge: int, shift: float, sectors, grid_size: int, upper: float) -> dict[int, np.ndarray]:
    return {nu: sector_eigenvalues(charge, shift, nu, grid_size, upper) for nu in sectors}


@dataclass
class SpectrumReport:
    """Numeric ``D^2`` levels matched against ``q^2 + |k| q``.

    ``sectors_plus`` / ``sectors_minus`` map the azimuthal label to the
    eigenvalues found below the search window.  ``multiplicities`` are
    measured counts per matched level and chirality.
    """

    k: int
    q_max: int
    grid_size: int
    sectors_plus: dict[int, np.ndarray]
    sectors_minus: dict[int, np.ndarray]
    analytic_levels: list[int]
    numeric_levels: list[float]
    multiplicities: list[tuple[int, int]]
    max_rel_error: float
    zero_modes: tuple[int, int]
    zero_threshold: float
    matched: bool
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "q_max": self.q_max,
            "grid_size": self.grid_size,
            "analytic_levels": list(self.analytic_levels),
            "numeric_levels": [float(v) for v in self.numeric_levels],
            "multiplicities": [list(m) for m in self.multiplicities],
            "max_rel_error": float(self.max_rel_error),
            "zero_modes": list(self.zero_modes),
            "zero_threshold": float(self.zero_threshold),
            "matched": bool(self.matched),
            "flags": list(self.flags),
        }


def discretized_spectrum(
    k: int, q_max: int, grid_size: int = 256, tol: float = 1e-2
) -> SpectrumReport:
    """Eigen-solve both chirality blocks of ``D^2`` and match the levels.

    Matching failures are reported through ``matched`` and ``flags``.
    """
    if grid_size < 64:
        raise ValueError("grid_size must be at least 64")
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    k = int(k)
    levels = [m.n for m in analytic_modes(k, q_max + 1)]
    target, beyond = levels[:-1], levels[-1]
    upper = 0.5 * (target[-1] + beyond)
    threshold = 10.0 * levels[0] / grid_size
    span = abs(k) + q_max + 2
    sectors = range(-span, span + 1)
    s_plus, s_minus = (k - 1) / 2.0, (k + 1) / 2.0
    plus = _block(k - 1, -s_plus, sectors, grid_size, upper)
    minus = _block(k + 1, s_minus, sectors, grid_size, upper)

    tagged = [(v, 0) for w in plus.values() for v in w] + [(v, 1) for w in minus.values() for v in w]
    tagged.sort()
    zero = [0, 0]
    nonzero: list[tuple[float, int]] = []
    for v, c in tagged:
        if abs(v) < threshold:
            zero[c] += 1
        else:
            nonzero.append((v, c))

    clusters: list[list[tuple[float, int]]] = []
    for v, c in nonzero:
        if clusters and v <= clusters[-1][-1][0] * (1 + 0.1):
            clusters[-1].append((v, c))
        else:
            clusters.append([(v, c)])

    flags: list[str] = []
    numeric_levels: list[float] = []
    mults: list[tuple[int, int]] = []
    used: set[int] = set()
    max_err = 0.0
    for cl in clusters:
        vals = np.array([v for v, _ in cl])
        mean = float(vals.mean())
        idx = int(np.argmin([abs(mean - n) / n for n in target]))
        if idx in used:
            flags.append(f"numeric level {mean:.6g} matches an already matched level {target[idx]}")
            continue
        used.add(idx)
        err = float(np.max(np.abs(vals - target[idx]) / target[idx]))
        max_err = max(max_err, err)
        numeric_levels.append(mean)
        mults.append((sum(1 for _, c in cl if c == 0), sum(1 for _, c in cl if c == 1)))
    if len(used) != len(target):
        missing = [target[i] for i in range(len(target)) if i not in used]
        flags.append(f"analytic levels without numeric match: {missing}")
    if max_err >= tol:
        flags.append(f"max relative error {max_err:.3g} exceeds tolerance {tol:g}")
    return SpectrumReport(
        k=k,
        q_max=q_max,
        grid_size=grid_size,
        sectors_plus=plus,
        sectors_minus=minus,
        analytic_levels=target,
        numeric_levels=numeric_levels,
        multiplicities=mults,
        max_rel_error=max_err,
        zero_modes=(zero[0], zero[1]),
        zero_threshold=threshold,
        matched=not flags,
        flags=flags,
    )
