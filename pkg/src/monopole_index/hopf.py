"""Flat-case lift of Dirac monopoles to instantons through the Hopf map.

Coordinates on R^4 = C^2 are ``(x1, y1, x2, y2)`` with ``z_j = x_j + i y_j``;
on R^3 they are ``(t, x, y)``.  The circle acts by
``(z1, z2) -> (e^{i theta} z1, e^{-i theta} z2)``.  Connections are stored as
real 1-forms ``b`` with ``A = -i b``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import sympy as sp

from .errors import ChartError, DomainError

M_T = np.array([[1j, 0], [0, -1j]])
M_X = np.array([[0, -1], [1, 0]], dtype=complex)
M_Y = np.array([[0, 1j], [1j, 0]])
CLIFFORD_3D = (M_T, M_X, M_Y)

Section = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class HopfPoint:
    z1: complex
    z2: complex

    def __post_init__(self):
        if self.z1 == 0 and self.z2 == 0:
            raise DomainError("the origin is excluded")

    @classmethod
    def from_real(cls, coords) -> "HopfPoint":
        x1, y1, x2, y2 = (float(c) for c in coords)
        return cls(complex(x1, y1), complex(x2, y2))

    @property
    def real(self) -> np.ndarray:
        return np.array([self.z1.real, self.z1.imag, self.z2.real, self.z2.imag])

    @property
    def r4_sq(self) -> float:
        return abs(self.z1) ** 2 + abs(self.z2) ** 2

    def rotate(self, theta: float) -> "HopfPoint":
        e = complex(math.cos(theta), math.sin(theta))
        return HopfPoint(e * self.z1, self.z2 / e)


def _as_real(p) -> np.ndarray:
    return p.real if isinstance(p, HopfPoint) else np.asarray(p, dtype=float)


def hopf_map(p) -> np.ndarray:
    """``(|z1|^2 - |z2|^2, Re 2 z1 z2, Im 2 z1 z2)``; vectorized over trailing axes."""
    x1, y1, x2, y2 = _as_real(p)
    if np.ndim(x1) == 0 and x1 == y1 == x2 == y2 == 0:
        raise DomainError("the Hopf map is evaluated away from the origin")
    return np.array(
        [
            x1 * x1 + y1 * y1 - x2 * x2 - y2 * y2,
            2 * (x1 * x2 - y1 * y2),
            2 * (x1 * y2 + y1 * x2),
        ]
    )


def hopf_jacobian(p) -> np.ndarray:
    """3x4 matrix of ``d pi``; row ``i`` is the pulled-back covector ``pi^* dX_i``."""
    x1, y1, x2, y2 = _as_real(p)
    return 2 * np.array(
        [
            [x1, y1, -x2, -y2],
            [x2, -y2, x1, -y1],
            [y2, x2, y1, x1],
        ]
    )


def theta_generator(p) -> np.ndarray:
    """Generator ``d/dtheta`` of the circle action."""
    x1, y1, x2, y2 = _as_real(p)
    return np.array([-y1, x1, y2, -x2])


def xi_form(p) -> np.ndarray:
    """``xi = 2(-y1 dx1 + x1 dy1 + y2 dx2 - x2 dy2)``."""
    return 2 * theta_generator(p)


def f_function(X) -> float:
    """``f = 1 / (2 r3)`` on R^3 minus the origin."""
    return 1.0 / (2.0 * np.linalg.norm(X, axis=0))


def omega_form(p) -> np.ndarray:
    """Connection form ``omega = (pi^* f) xi`` of the Hopf fibration."""
    P = _as_real(p)
    return f_function(hopf_map(P)) * xi_form(P)


def connection_residuals(p, n_checks: int = 8, seed: int = 0) -> dict[str, float]:
    """Residuals of the defining properties of ``omega`` at ``p``.

    ``generator``: ``omega(d/dtheta) - 1``.  ``invariance``: largest change of
    ``omega`` under the circle action (pulled back by the rotation).
    ``horizontal``: ``omega`` on vectors orthogonal to the fibre.
    ``vertical``: length of ``d pi (d/dtheta)``.
    """
    P = _as_real(p)
    hp = HopfPoint.from_real(P)
    gen = theta_generator(P)
    w = omega_form(P)
    rng = np.random.default_rng(seed)
    inv = 0.0
    for theta in rng.uniform(0, 2 * np.pi, n_checks):
        Q = hp.rotate(theta).real
        c, s = math.cos(theta), math.sin(theta)
        # d R_theta acts on (x1,y1) by rotation theta and on (x2,y2) by -theta
        R = np.array([[c, -s, 0, 0], [s, c, 0, 0], [0, 0, c, s], [0, 0, -s, c]])
        inv = max(inv, float(np.abs(omega_form(Q) @ R - w).max()))
    hor = 0.0
    unit = gen / np.linalg.norm(gen)
    for v in rng.normal(size=(n_checks, 4)):
        v = v - (v @ unit) * unit
        hor = max(hor, abs(float(w @ v)) / np.linalg.norm(v))
    return {
        "generator": float(w @ gen - 1.0),
        "invariance": inv,
        "horizontal": hor,
        "vertical": float(np.linalg.norm(hopf_jacobian(P) @ gen)),
    }


# ----------------------------------------------------------------------------
# lifted connection and its curvature
# ----------------------------------------------------------------------------


def chart_of(X) -> str:
    """North chart on ``t >= 0``, south chart otherwise."""
    return "north" if X[0] >= 0 else "south"


def monopole_form(X, k: int, chart: str | None = None) -> np.ndarray:
    """Real form ``a`` of the charge-``k`` Dirac monopole in ``(t, x, y)`` components.

    North chart: ``(k/2)(1 - t/r) dphi``; south: ``-(k/2)(1 + t/r) dphi`` with
    ``dphi = (x dy - y dx) / (x^2 + y^2)``.
    """
    t, x, y = X
    chart = chart or chart_of(X)
    r = math.sqrt(t * t + x * x + y * y)
    # (1 -+ t/r) / rho^2 = 1 / (r (r +- t)), regular on the chart's own half-axis
    denom = r * (r + t) if chart == "north" else -r * (r - t)
    if denom == 0:
        raise ChartError("point on the singular half-axis of the chart")
    coef = 0.5 * k / denom
    return coef * np.array([0.0, -y, x])


def lifted_form(p, k: int, chart: str | None = None, include_monopole: bool = True, include_fibre: bool = True) -> np.ndarray:
    """Real form of ``A4 = pi^* A - xi pi^* Phi``, that is ``pi^* a + k omega``."""
    P = _as_real(p)
    X = hopf_map(P)
    b = np.zeros(4)
    if include_monopole:
        b = b + monopole_form(X, k, chart) @ hopf_jacobian(P)
    if include_fibre:
        b = b + k * omega_form(P)
    return b


def hodge_star_2form(F: np.ndarray, metric: np.ndarray) -> np.ndarray:
    """Hodge star of an antisymmetric 4x4 array for ``metric`` and orientation ``dx1 dy1 dx2 dy2``."""
    ginv = np.linalg.inv(metric)
    vol = math.sqrt(abs(np.linalg.det(metric)))
    Fup = ginv @ F @ ginv.T
    star = np.zeros((4, 4))
    for perm in itertools.permutations(range(4)):
        a, b, c, d = perm
        sign = _perm_sign(perm)
        star[a, b] += 0.5 * vol * sign * Fup[c, d]
    return star


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


G_P = 2.0 * np.eye(4)


def plaquette_curvature(
    form: Callable[[np.ndarray], np.ndarray], P: np.ndarray, h: float, link_rule: str = "endpoint"
) -> np.ndarray:
    """Field strength from phases of the elementary plaquettes with corner ``P``.

    ``link_rule="endpoint"`` uses the phase ``b_mu(x) h`` of the link
    starting at ``x`` (first order); ``"midpoint"`` evaluates ``b_mu`` at
    the link midpoint (second order).
    """
    P = np.asarray(P, dtype=float)
    E = np.eye(4) * h
    if link_rule not in ("endpoint", "midpoint"):
        raise ValueError(f"unknown link rule {link_rule!r}")
    mid = 0.5 if link_rule == "midpoint" else 0.0

    def link(x, mu):
        return form(x + mid * E[mu])[mu] * h

    F = np.zeros((4, 4))
    for m in range(4):
        for n in range(m + 1, 4):
            phase = link(P, m) + link(P + E[m], n) - link(P + E[n], m) - link(P, n)
            F[m, n] = phase / (h * h)
            F[n, m] = -F[m, n]
    return F


def _check_stencil(P: np.ndarray, h: float) -> str:
    r4 = float(np.linalg.norm(P))
    if r4 <= 10 * h:
        raise ChartError("point too close to the origin for the stencil")
    X = hopf_map(P)
    # |grad t| = 2 r4 bounds how far the stencil moves t
    if abs(X[0]) <= 10 * h * 2 * r4:
        raise ChartError("stencil reaches the chart seam t = 0")
    return chart_of(X)


def asd_residual(k: int, p, h: float = 1e-4, link_rule: str = "endpoint") -> float:
    """``|F + *F|`` of the lifted connection relative to the lifted monopole curvature.

    ``*`` is taken with ``g_P = 2 g_Euc``.  The normalizer is the
    plaquette curvature of ``pi^* a`` alone, which is nonzero for
    ``k != 0``; for ``k = 0`` the connection is trivial and 0 is returned.
    """
    P = _as_real(p)
    chart = _check_stencil(P, h)
    if k == 0:
        return 0.0
    F = plaquette_curvature(lambda Q: lifted_form(Q, k, chart), P, h, link_rule)
    scale = np.linalg.norm(
        plaquette_curvature(lambda Q: lifted_form(Q, k, chart, include_fibre=False), P, h, link_rule)
    )
    return float(np.linalg.norm(F + hodge_star_2form(F, G_P)) / scale)


# ----------------------------------------------------------------------------
# Clifford modules
# ----------------------------------------------------------------------------


def clifford_rep_check() -> dict[str, bool]:
    """Exact verification of the block Clifford representation on ``S+ + S-``.

    ``clif(xi) = f^{-1/2} [[0, I], [-I, 0]]`` and
    ``clif(pi^* alpha) = f^{-1/2} [[0, c(alpha)], [c(alpha), 0]]`` with the
    3D matrices ``c``; the dual metric is ``|xi|^2 = 1/f``,
    ``<pi^* alpha, pi^* beta> = <alpha, beta>/f``, ``<xi, pi^* alpha> = 0``.
    """
    f = sp.symbols("f", positive=True)
    I2 = sp.eye(2)
    Z2 = sp.zeros(2)
    c3 = [sp.Matrix(M.tolist()).applyfunc(sp.nsimplify) for M in CLIFFORD_3D]

    def block(top, bottom):
        return sp.BlockMatrix([[Z2, top], [bottom, Z2]]).as_explicit() / sp.sqrt(f)

    gens = {"xi": block(I2, -I2)}
    for name, c in zip(("dt", "dx", "dy"), c3):
        gens[name] = block(c, c)

    def gram(a, b):
        if a == b:
            return 1 / f
        return sp.Integer(0)

    report: dict[str, bool] = {}
    for a, b in itertools.combinations_with_replacement(gens, 2):
        anti = gens[a] * gens[b] + gens[b] * gens[a]
        report[f"anticommutator({a},{b})"] = sp.simplify(anti + 2 * gram(a, b) * sp.eye(4)) == sp.zeros(4)
    for (i, ci), (j, cj) in itertools.combinations_with_replacement(enumerate(c3), 2):
        rel = ci * cj + cj * ci + 2 * (1 if i == j else 0) * I2
        report[f"frame3d({i},{j})"] = rel == sp.zeros(2)
    vol = sp.I ** 2 * c3[0] * c3[1] * c3[2]
    report["volume_normalization"] = vol == -I2
    return report


def _split(alpha: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(1,0) and (0,1) coefficients of a real covector on C^2."""
    ax1, ay1, ax2, ay2 = alpha
    return (
        np.array([(ax1 - 1j * ay1) / 2, (ax2 - 1j * ay2) / 2]),
        np.array([(ax1 + 1j * ay1) / 2, (ax2 + 1j * ay2) / 2]),
    )


def spinor_frames(p) -> tuple[complex, np.ndarray]:
    """Circle-invariant frames of ``S+ = Omega^{0,0} + Omega^{0,2}`` and ``S- = Omega^{0,1}``.

    Returns the ``dzb1 ^ dzb2`` coefficient of ``e+_2`` and the 2x2 matrix
    whose columns are ``e-_1``, ``e-_2`` in the ``(dzb1, dzb2)`` basis.
    """
    P = _as_real(p)
    J = hopf_jacobian(P)
    _, u = _split(-xi_form(P))
    u = u / np.linalg.norm(u)
    _, wx = _split(J[1])
    _, wy = _split(J[2])
    w = wx - 1j * wy  # (pi^* d zbar)^{0,1}
    w = w / np.linalg.norm(w)
    uw = u[0] * w[1] - u[1] * w[0]
    return -uw, np.column_stack([u, w])


def _clif_plus_to_minus(alpha: np.ndarray) -> np.ndarray:
    """``sqrt(2)(alpha^{0,1} ^ - contraction with alpha^{1,0})`` from ``S+`` to ``S-``, coordinate bases.

    With ``g_P = 2 g_Euc`` the metric dual of ``dz_j`` contracts ``dzb_j`` to 1.
    """
    beta, gamma = _split(alpha)
    M = np.zeros((2, 2), complex)
    M[:, 0] = np.sqrt(2) * gamma
    M[:, 1] = -np.sqrt(2) * np.array([-beta[1], beta[0]])
    return M


def lifted_clifford_residual(p) -> float:
    """Largest deviation of the frame matrices of ``clif_P`` from the block form.

    In the frames of :func:`spinor_frames`, ``f^{1/2} clif(xi)`` must map
    ``S+`` to ``S-`` by ``-I`` and ``f^{1/2} clif(pi^* alpha)`` by ``c(alpha)``.
    """
    P = _as_real(p)
    e2, Em = spinor_frames(P)
    Ep = np.diag([1.0, e2])
    sf = math.sqrt(f_function(hopf_map(P)))
    J = hopf_jacobian(P)

    def in_frames(alpha):
        return np.linalg.solve(Em, _clif_plus_to_minus(alpha) @ Ep)

    err = np.abs(in_frames(sf * xi_form(P)) + np.eye(2)).max()
    for i, M in enumerate(CLIFFORD_3D):
        err = max(err, np.abs(in_frames(sf * J[i]) - M).max())
    return float(err)


# ----------------------------------------------------------------------------
# Dirac intertwining
# ----------------------------------------------------------------------------


def gaussian_bump_section(center=(0.3, 0.2, -0.1), width: float = 1.0) -> Section:
    """Gaussian times a polynomial spinor; vectorized over trailing axes."""
    c = np.asarray(center, dtype=float)

    def s(X):
        X = np.asarray(X, dtype=float)
        d = X - c.reshape((3,) + (1,) * (X.ndim - 1))
        g = np.exp(-np.sum(d * d, axis=0) / width**2)
        t, x, y = X
        return np.array([g * (1 + 0.5j * x), g * (t - 0.3j * y)])

    return s


def polynomial_bump_section(center=(0.8, 0.3, 0.2), radius: float = 0.6) -> Section:
    """``(1 - |X - c|^2 / R^2)^4`` inside the ball times a polynomial spinor."""
    c = np.asarray(center, dtype=float)

    def s(X):
        X = np.asarray(X, dtype=float)
        d = X - c.reshape((3,) + (1,) * (X.ndim - 1))
        q = 1 - np.sum(d * d, axis=0) / radius**2
        g = np.where(q > 0, q, 0.0) ** 4
        t, x, y = X
        return np.array([g * (x + 1j * y), g * (1 - 1j * t)])

    return s


def zero_section(X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    return np.zeros((2,) + X.shape[1:], dtype=complex)


def _lhs(section: Section, P: np.ndarray, k: int, chart: str, h: float) -> np.ndarray:
    X = hopf_map(P)

    def sig(Y):
        return f_function(Y) ** -0.5 * section(Y)

    A = -1j * monopole_form(X, k, chart)
    out = np.zeros(2, complex)
    s0 = sig(X)
    for i, M in enumerate(CLIFFORD_3D):
        e = np.zeros(3)
        e[i] = h
        d = (sig(X + e) - sig(X - e)) / (2 * h)
        out += M @ (d + A[i] * s0)
    out += 1j * k * f_function(X) * s0  # + Phi
    return (2 * np.pi * f_function(X)) ** -0.5 * out


def _rhs(section: Section, P: np.ndarray, k: int, chart: str, h: float) -> np.ndarray:
    def phi(Q):
        X = hopf_map(Q)
        c = (2 * np.pi * f_function(X)) ** -0.5 * section(X)
        e2, _ = spinor_frames(Q)
        return np.array([c[0], c[1] * e2])

    b = lifted_form(P, k, chart)
    Azb = -1j * np.array([b[0] + 1j * b[1], b[2] + 1j * b[3]]) / 2
    Az = -1j * np.array([b[0] - 1j * b[1], b[2] - 1j * b[3]]) / 2
    d = []
    for m in range(4):
        e = np.zeros(4)
        e[m] = h
        d.append((phi(P + e) - phi(P - e)) / (2 * h))
    p0 = phi(P)
    dzb = [(d[0] + 1j * d[1]) / 2, (d[2] + 1j * d[3]) / 2]
    dz = [(d[0] - 1j * d[1]) / 2, (d[2] - 1j * d[3]) / 2]
    out = np.array([dzb[j][0] + Azb[j] * p0[0] for j in range(2)])
    # dbar^* of the (0,2) part phi dzb1 ^ dzb2 is D2 phi dzb1 - D1 phi dzb2
    D1 = dz[0][1] + Az[0] * p0[1]
    D2 = dz[1][1] + Az[1] * p0[1]
    out = out + np.array([D2, -D1])
    out *= math.sqrt(2)
    _, Em = spinor_frames(P)
    return np.linalg.solve(Em, out)


def dirac_intertwine_residual(k: int, section: Section, p, h: float = 1e-4) -> float:
    """Relative difference of ``pi^dagger D+ f^{-1/2} s`` and ``D+_{A4} pi^dagger s`` at ``p``.

    The left side is evaluated on R^3 with centred differences of step ``h``,
    the right side on R^4 in complex coordinates, also centred.
    """
    P = _as_real(p)
    chart = _check_stencil(P, h)
    L = _lhs(section, P, k, chart, h)
    R = _rhs(section, P, k, chart, h)
    nl = np.linalg.norm(L)
    if nl == 0.0:
        return float(np.linalg.norm(R))
    return float(np.linalg.norm(L - R) / nl)


def lift_isometry_ratio(section: Section, half_width: float = 3.0, n: int = 36) -> float:
    """``||pi^dagger s||^2_{L^2(P)} / ||s||^2_{L^2(X)}`` by tensor trapezoid rules.

    The volume form on ``P`` is that of ``g_P = 2 g_Euc``, four times the
    Euclidean one.  Both integrals are computed on boxes large enough to
    contain the numerical support of ``s``.
    """
    g3 = np.linspace(-half_width, half_width, 2 * n + 1)
    X = np.stack(np.meshgrid(g3, g3, g3, indexing="ij"))
    dens3 = np.sum(np.abs(section(X)) ** 2, axis=0)
    norm3 = dens3.sum() * (g3[1] - g3[0]) ** 3

    w4 = math.sqrt(math.sqrt(3.0) * half_width)
    g4 = np.linspace(-w4, w4, 2 * n + 1)
    g4 = g4 + 0.5 * (g4[1] - g4[0]) * 1e-3  # keep the origin off the grid
    P = np.stack(np.meshgrid(g4, g4, g4, g4, indexing="ij"))
    Xp = hopf_map(P)
    fX = f_function(Xp)
    dens4 = np.sum(np.abs(section(Xp)) ** 2, axis=0) / (2 * np.pi * fX)
    norm4 = 4.0 * dens4.sum() * (g4[1] - g4[0]) ** 4
    return float(norm4 / norm3)
