"""Per-mode radial analysis of the Dirac operator of a flat Dirac monopole.

After separating the angular dependence, ``D^{+/-}`` acting on the span of
one pair of monopole harmonics becomes ``L u = J (u' - (A/r + B) u)`` on
``L^2((0, inf), r^2 dr)`` with constant 2x2 matrices ``J``, ``A``, ``B``.
This module builds those systems, their Frobenius solutions, the integral
operator inverting ``t d/dt (g/t) + alpha g/t = f``, the resulting Green
operator, and a shooting computation of kernel and cokernel dimensions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Literal, Mapping

import numpy as np
import sympy as sp
from scipy.integrate import simpson, solve_ivp

from .errors import ConstraintError, InputError, NumericalIndeterminacyError
from .sphere_dirac import kernel_dims

End = Literal["near-zero", "near-infinity"]

_J_DIRAC = np.diag([1j, -1j])


# ----------------------------------------------------------------------------
# mode operators
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ModeOperator:
    """First-order system ``u -> lead (u' - (A/r + B) u)``.

    ``rows`` marks the components that carry angular partners; in the
    harmonic sector ``q = 0`` only one of the two exists.  ``provenance``
    records how the operator was built.
    """

    A: np.ndarray
    B: np.ndarray
    chirality: str
    provenance: tuple
    lead: np.ndarray = field(default_factory=lambda: np.eye(2, dtype=complex))
    rows: tuple[bool, bool] = (True, True)

    def __post_init__(self):
        for name in ("A", "B", "lead"):
            object.__setattr__(self, name, np.array(getattr(self, name), dtype=complex))

    @property
    def active(self) -> np.ndarray:
        return np.flatnonzero(self.rows)

    def restricted(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(A, B, lead)`` on the active rows only."""
        idx = self.active
        sub = np.ix_(idx, idx)
        return self.A[sub], self.B[sub], self.lead[sub]

    def apply(self, r: np.ndarray, u: np.ndarray, du: np.ndarray) -> np.ndarray:
        """Evaluate the operator given samples of ``u`` and ``u'`` (shape ``(2, n)``)."""
        r = np.asarray(r, dtype=float)
        rhs = np.einsum("ij,jn->in", self.A, u) / r + np.einsum("ij,jn->in", self.B, u)
        out = np.einsum("ij,jn->in", self.lead, du - rhs)
        out[~np.asarray(self.rows)] = 0.0
        return out

    def formal_adjoint(self) -> "ModeOperator":
        """Formal adjoint in ``L^2(r^2 dr)``.

        Integrating ``<L u, w>`` by parts against ``r^2 dr`` gives
        ``L* w = -lead^H (w' + (2/r) w + lead^{-H} C^H lead^H w)`` with
        ``C = A/r + B``.
        """
        J = self.lead
        JH = J.conj().T
        JmH = np.linalg.inv(JH)
        A2 = -2.0 * np.eye(2) - JmH @ self.A.conj().T @ JH
        B2 = -JmH @ self.B.conj().T @ JH
        flip = {"+": "-", "-": "+"}.get(self.chirality, self.chirality)
        return ModeOperator(A2, B2, flip, ("adjoint",) + tuple(self.provenance), -JH, self.rows)


def mode_matrices_exact(k: int, q: int, chirality: str) -> sp.Matrix:
    """Exact coefficient ``A`` of ``1/r`` for the Dirac mode system."""
    k, q = int(k), int(q)
    sgn = 1 if chirality == "+" else -1
    root = sp.sqrt(q * q + abs(k) * q)
    return sp.Matrix(
        [
            [-sp.Rational(2 + sgn * k, 2), sp.I * root],
            [-sp.I * root, -sp.Rational(2 - sgn * k, 2)],
        ]
    )


def _harmonic_rows(k: int) -> tuple[bool, bool]:
    return (k > 0, k < 0)


def mode_operator(k: int, a: float, q: int, chirality: str) -> ModeOperator:
    """Radial system of ``D^{+/-}`` for the monopole ``(A_k, Phi_{a,k})``.

    The coupling between the two harmonic components is ``sqrt(q^2 + |k| q)``.
    ``q = 0`` is the harmonic sector: only the component with angular
    partners (upper for ``k > 0``, lower for ``k < 0``) is active.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    if chirality not in ("+", "-"):
        raise ValueError(f"chirality must be '+' or '-', got {chirality!r}")
    sgn = 1 if chirality == "+" else -1
    A = np.array(mode_matrices_exact(k, q, chirality).evalf(), dtype=complex)
    B = np.diag([-sgn * a, sgn * a]).astype(complex)
    rows = (True, True) if q > 0 else _harmonic_rows(k)
    return ModeOperator(A, B, chirality, (int(k), float(a), int(q)), _J_DIRAC, rows)


def raw_coupling_operator(k: int, n: float, a: float) -> ModeOperator:
    """``P v = v' - (A v / r + B v)`` with off-diagonal ``n`` taken as written.

    ``A = [[-(2+k)/2, i n], [-i n, -(2-k)/2]]`` and ``B = diag(a, -a)``.
    """
    A = np.array([[-(2 + k) / 2, 1j * n], [-1j * n, -(2 - k) / 2]], dtype=complex)
    B = np.diag([a, -a]).astype(complex)
    return ModeOperator(A, B, "+", ("raw", int(k), float(n), float(a)))


# ----------------------------------------------------------------------------
# closed-form kernels of the massless system
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentSolution:
    """``(u+, u-) r^beta`` with exact coefficients."""

    beta: sp.Rational
    coeffs: tuple
    label: str
    multiplicity: int = 1

    def coeffs_numeric(self) -> np.ndarray:
        return np.array([complex(sp.N(c)) for c in self.coeffs])

    def evaluate(self, r) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return self.coeffs_numeric()[:, None] * r[None, :] ** float(self.beta)


def kernel_basis_flat(k: int, q: int, chirality: str) -> list[ExponentSolution]:
    """Power-law solutions of the massless mode system that are L^2 near 0.

    For ``q >= 1`` the admissible exponent is ``-1 + q + |k|/2``.  In the
    harmonic sector only chirality ``-`` has solutions, ``r^(-1 +/- k/2)``.
    """
    k, q = int(k), int(q)
    if q >= 1:
        n = q * q + abs(k) * q
        beta = sp.Rational(-2 + 2 * q + abs(k), 2)
        if chirality == "+":
            ratio = sp.Integer(q + max(0, k)) / (sp.I * sp.sqrt(n))
            label = "a"
        else:
            ratio = sp.Integer(q + max(0, -k)) / (sp.I * sp.sqrt(n))
            label = "b"
        return [ExponentSolution(beta, (sp.Integer(1), ratio), label)]
    if chirality == "+":
        return []
    plus, minus = kernel_dims(k)
    out = []
    if plus:
        out.append(ExponentSolution(sp.Rational(-2 + k, 2), (sp.Integer(1), sp.Integer(0)), "rho+", plus))
    if minus:
        out.append(ExponentSolution(sp.Rational(-2 - k, 2), (sp.Integer(0), sp.Integer(1)), "rho-", minus))
    return out


def exponent_residual(sol: ExponentSolution, k: int, q: int, chirality: str) -> sp.Matrix:
    """Exact ``(beta - A) u``, the coefficient of ``r^(beta-1)`` in ``P(u r^beta)``."""
    A = mode_matrices_exact(k, q, chirality)
    u = sp.Matrix(sol.coeffs)
    return (sol.beta * sp.eye(2) - A) * u


def l2_membership(beta: float, end: End, rate: float | None = None) -> bool:
    """Whether ``r^beta`` (times ``exp(rate r)`` near infinity) is in ``L^2(r^2 dr)``."""
    if end == "near-zero":
        return 2 * beta + 2 > -1
    if end == "near-infinity":
        if rate is None:
            return 2 * beta + 2 < -1
        return rate < 0 or (rate == 0 and 2 * beta + 2 < -1)
    raise ValueError(f"unknown end {end!r}")


# ----------------------------------------------------------------------------
# grids and the K_alpha operator
# ----------------------------------------------------------------------------


def log_grid(r0: float = 1.0, n: int = 2000, ratio: float = 1e-6) -> np.ndarray:
    """``n`` logarithmically spaced points on ``[ratio * r0, r0]``."""
    return np.geomspace(ratio * r0, r0, n)


def _log_step(t: np.ndarray) -> float:
    t = np.asarray(t, dtype=float)
    if t.ndim != 1 or t.size < 5:
        raise InputError("grid must be one-dimensional with at least 5 points")
    if not np.all(t > 0) or not np.all(np.diff(t) > 0):
        raise InputError("grid must be positive and strictly increasing")
    u = np.log(t)
    du = np.diff(u)
    if not np.allclose(du, du[0], rtol=1e-8, atol=0):
        raise InputError("grid must be logarithmically uniform")
    return float(du.mean())


@dataclass
class RadialGridFunction:
    """Samples of a C^2-valued radial function on a logarithmic grid."""

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.atleast_2d(np.asarray(self.values, dtype=complex))
        _log_step(self.grid)
        if self.values.shape[-1] != self.grid.size:
            raise InputError("values and grid lengths differ")

    def norm(self) -> float:
        """``L^2(r^2 dr)`` norm."""
        return weighted_norm(self.grid, self.values)


def weighted_norm(r: np.ndarray, values: np.ndarray) -> float:
    """``(int |v|^2 r^2 dr)^(1/2)`` by Simpson's rule in ``log r``."""
    dens = np.sum(np.abs(np.atleast_2d(values)) ** 2, axis=0) * r**3
    return float(np.sqrt(simpson(dens, x=np.log(r))))


def log_derivative(values: np.ndarray, delta: float) -> np.ndarray:
    """Fourth-order finite-difference ``d/du`` along the last axis."""
    y = np.asarray(values)
    d = np.empty_like(y)
    d[..., 2:-2] = (-y[..., 4:] + 8 * y[..., 3:-1] - 8 * y[..., 1:-3] + y[..., :-4]) / 12
    d[..., 0] = (-25 * y[..., 0] + 48 * y[..., 1] - 36 * y[..., 2] + 16 * y[..., 3] - 3 * y[..., 4]) / 12
    d[..., 1] = (-3 * y[..., 0] - 10 * y[..., 1] + 18 * y[..., 2] - 6 * y[..., 3] + y[..., 4]) / 12
    d[..., -1] = (25 * y[..., -1] - 48 * y[..., -2] + 36 * y[..., -3] - 16 * y[..., -4] + 3 * y[..., -5]) / 12
    d[..., -2] = (3 * y[..., -1] + 10 * y[..., -2] - 18 * y[..., -3] + 6 * y[..., -4] - y[..., -5]) / 12
    return d / delta


def _exp_moments(c: float, m_max: int = 3) -> np.ndarray:
    """``int_0^1 s^m e^{c s} ds`` for ``m = 0..m_max``."""
    if abs(c) < 0.5:
        out = np.zeros(m_max + 1)
        term = 1.0
        for j in range(40):
            out += term / (np.arange(m_max + 1) + j + 1)
            term *= c / (j + 1)
        return out
    out = np.empty(m_max + 1)
    e = math.exp(c)
    out[0] = (e - 1.0) / c
    for m in range(1, m_max + 1):
        out[m] = (e - m * out[m - 1]) / c
    return out


def _lagrange_power_coeffs(nodes) -> np.ndarray:
    """Row ``j`` holds the monomial coefficients of the Lagrange basis ``l_j``."""
    V = np.vander(np.asarray(nodes, dtype=float), 4, increasing=True)
    return np.linalg.inv(V).T


_STENCILS = {
    "first": (np.array([0, 1, 2, 3]), _lagrange_power_coeffs([0, 1, 2, 3])),
    "interior": (np.array([-1, 0, 1, 2]), _lagrange_power_coeffs([-1, 0, 1, 2])),
    "last": (np.array([-2, -1, 0, 1]), _lagrange_power_coeffs([-2, -1, 0, 1])),
}


def _cell_integrals(u: np.ndarray, F: np.ndarray, alpha: float) -> np.ndarray:
    """``int_{u_i}^{u_{i+1}} F(v) e^{alpha v} dv`` for each cell.

    ``F`` is replaced by its cubic Lagrange interpolant on four neighbouring
    nodes; the exponential weight is integrated exactly against each
    monomial.
    """
    n = u.size
    delta = u[1] - u[0]
    mom = _exp_moments(alpha * delta)
    out = np.zeros(F.shape[:-1] + (n - 1,), dtype=F.dtype)
    for kind, cells in (
        ("first", np.array([0])),
        ("interior", np.arange(1, n - 2)),
        ("last", np.array([n - 2])),
    ):
        offs, coeffs = _STENCILS[kind]
        w = delta * coeffs @ mom  # weight per stencil node
        idx = cells[:, None] + offs[None, :]
        vals = F[..., idx]  # (..., cells, 4)
        out[..., cells] = (vals @ w) * np.exp(alpha * u[cells])
    return out


def k_alpha_apply(alpha: float, t0: float, t: np.ndarray, f: np.ndarray) -> np.ndarray:
    """Solve ``t d/dt (g/t) + alpha g/t = f`` with the L^2-bounded solution.

    ``alpha > 1/2``: ``g = t^(1-alpha) int_0^t f x^(alpha-1) dx``;
    otherwise ``g = -t^(1-alpha) int_t^t0 f x^(alpha-1) dx``.  ``t`` is a
    logarithmic grid ending at ``t0``; below ``t[0]`` ``f`` is held at
    ``f[0]``.

    Raises
    ------
    InputError
        For non-finite samples or an unusable grid.
    """
    t = np.asarray(t, dtype=float)
    f = np.asarray(f)
    _log_step(t)
    if not np.isclose(t[-1], t0, rtol=1e-12):
        raise InputError("grid must end at t0")
    if f.shape[-1] != t.size:
        raise InputError("f and grid lengths differ")
    if not np.all(np.isfinite(f)):
        raise InputError("f has non-finite samples")
    u = np.log(t)
    cells = _cell_integrals(u, f, alpha)
    if alpha > 0.5:
        head = f[..., 0] * t[0] ** alpha / alpha
        acc = np.concatenate([np.zeros(f.shape[:-1] + (1,), dtype=cells.dtype), np.cumsum(cells, axis=-1)], axis=-1)
        integral = head[..., None] + acc
        return t ** (1 - alpha) * integral
    tail = np.cumsum(cells[..., ::-1], axis=-1)[..., ::-1]
    integral = np.concatenate([tail, np.zeros(f.shape[:-1] + (1,), dtype=cells.dtype)], axis=-1)
    return -(t ** (1 - alpha)) * integral


def k_alpha_constant(alpha: float) -> float:
    """``C_alpha = |2 alpha - 1|^(-1/2)``, with ``C_(1/2) = 1``."""
    return 1.0 if alpha == 0.5 else abs(2 * alpha - 1) ** -0.5


def l2_norm_dt(t: np.ndarray, f: np.ndarray) -> float:
    """``L^2((0, t0), dt)`` norm of the sampled ``f`` with the constant extension below ``t[0]``."""
    u = np.log(t)
    sq = np.abs(f) ** 2
    total = sq[0] * t[0] + np.sum(_cell_integrals(u, sq, 1.0).real)
    return float(np.sqrt(total))


def k_alpha_bound(alpha: float, t0: float, t: np.ndarray, f_norm: float) -> np.ndarray:
    """Right-hand side ``C_alpha |f| t^(1/2) (1 + log(t0/t)^(1/2))``."""
    t = np.asarray(t, dtype=float)
    return k_alpha_constant(alpha) * f_norm * np.sqrt(t) * (1 + np.sqrt(np.log(t0 / t)))


def k_alpha_residual(alpha: float, t: np.ndarray, g: np.ndarray, f: np.ndarray) -> np.ndarray:
    """Pointwise ``t d/dt(g/t) + alpha g/t - f`` by fourth-order differences."""
    delta = _log_step(t)
    h = g / t
    return log_derivative(h, delta) + alpha * h - f


# ----------------------------------------------------------------------------
# Green operator
# ----------------------------------------------------------------------------


def _snap_half(x: float) -> float:
    y = round(2 * x) / 2
    return y if abs(x - y) < 1e-9 else x


def green_apply(
    k: int,
    chirality: str,
    s: Mapping[int, RadialGridFunction],
    r0: float,
) -> dict[int, RadialGridFunction]:
    """Apply the right inverse of the massless ``D^{+/-}`` mode by mode.

    Each mode's Hermitian ``A`` is diagonalized by a constant unitary;
    each scalar branch ``w' - lambda w / r = sigma`` is solved by
    ``K_alpha`` with ``alpha = -lambda`` acting on ``r sigma``.
    """
    if not s:
        return {}
    grid = next(iter(s.values())).grid
    for q, fn in s.items():
        if fn.grid.shape != grid.shape or not np.array_equal(fn.grid, grid):
            raise InputError(f"mode {q} uses a different grid")
        if fn.values.shape != (2, grid.size):
            raise InputError(f"mode {q} values must have shape (2, {grid.size})")
    if not np.isclose(grid[-1], r0, rtol=1e-12):
        raise InputError("grid must end at r0")
    out: dict[int, RadialGridFunction] = {}
    for q, fn in s.items():
        op = mode_operator(k, 0.0, q, chirality)
        vals = np.zeros_like(fn.values)
        idx = op.active
        if idx.size:
            A, _, lead = op.restricted()
            sigma = np.linalg.solve(lead, fn.values[idx])
            lam, U = np.linalg.eigh(A)
            src = U.conj().T @ sigma
            w = np.empty_like(src)
            for j, lj in enumerate(lam):
                alpha = _snap_half(-float(lj))
                w[j] = k_alpha_apply(alpha, r0, grid, grid * src[j]) / grid
            vals[idx] = U @ w
        out[q] = RadialGridFunction(grid, vals)
    return out


def apply_mode_fd(op: ModeOperator, fn: RadialGridFunction) -> np.ndarray:
    """Apply ``op`` to grid samples using a finite-difference derivative."""
    delta = _log_step(fn.grid)
    du = log_derivative(fn.values, delta) / fn.grid
    return op.apply(fn.grid, fn.values, du)


def green_residual(
    k: int,
    chirality: str,
    t: Mapping[int, RadialGridFunction],
    s: Mapping[int, RadialGridFunction],
) -> float:
    """``||D t - s|| / ||s||`` summed over modes in ``L^2(r^2 dr)``."""
    num = 0.0
    den = 0.0
    for q, sf in s.items():
        op = mode_operator(k, 0.0, q, chirality)
        Dt = apply_mode_fd(op, t[q])
        mask = np.asarray(op.rows)
        num += weighted_norm(sf.grid, (Dt - sf.values)[mask]) ** 2 if mask.any() else 0.0
        den += weighted_norm(sf.grid, sf.values[mask]) ** 2 if mask.any() else 0.0
    if den == 0.0:
        return 0.0 if num == 0.0 else math.inf
    return math.sqrt(num / den)


# ----------------------------------------------------------------------------
# shooting
# ----------------------------------------------------------------------------


@dataclass
class ShootingReport:
    kernel_dim: int
    cokernel_dim: int
    exponents: list[complex]
    admissible: list[complex]
    diagnostics: dict

    @property
    def index(self) -> int:
        return self.kernel_dim - self.cokernel_dim


def _propagate(A, B, Y0, s0, s1, shift: float = 0.0):
    """Integrate ``dY/ds = (A + e^s B) Y`` in ``s = log r``.

    The solution is carried as ``r^(-shift) Y``; a scalar factor leaves
    spans unchanged and keeps large exponents from overflowing.
    """
    m = A.shape[0]
    ncol = Y0.shape[1]
    As = A - shift * np.eye(m)

    def rhs(s, y):
        return ((As + math.exp(s) * B) @ y.reshape(m, ncol)).ravel()

    sol = solve_ivp(rhs, (s0, s1), Y0.ravel().astype(complex), method="DOP853", rtol=1e-8, atol=1e-14)
    if not sol.success:
        raise NumericalIndeterminacyError("radial integration failed", {"message": sol.message})
    return sol.y[:, -1].reshape(m, ncol)


def _kernel_dim(A, B, r_min, r_max, tol, scale) -> tuple[int, dict]:
    lam, V = np.linalg.eig(A)
    mu, W = np.linalg.eig(B)
    if np.any(np.abs(mu.real) <= 1e-12 * max(1.0, np.abs(mu).max())):
        raise ConstraintError("B has an eigenvalue with zero real part; decay cannot be classified")
    adm = [i for i, l in enumerate(lam) if l2_membership(l.real, "near-zero")]
    dec = [i for i, m_ in enumerate(mu) if m_.real < 0]
    diag: dict = {"exponents": lam.tolist(), "b_eigenvalues": mu.tolist()}
    if not adm or not dec:
        return 0, diag
    m = A.shape[0]
    b = float(np.min(np.abs(mu.real)))
    r_match = scale / b
    r_min = r_min if r_min is not None else 1e-6 * r_match
    if r_max is None:
        # scalar rows need A/r_max small next to tol*|B|; coupled rows only need decay
        span = 40.0 + (20.0 * max(1.0, float(np.abs(lam).max())) if m == 1 else 0.0)
        r_max = r_match + span / b
    Y0 = V[:, adm] / np.linalg.norm(V[:, adm], axis=0)
    if m == 1:
        # scalar: classify by the log-derivative at r_max
        y = _propagate(A, B, Y0, math.log(r_min), math.log(r_max), lam[0].real)
        logder = float(((A / r_max + B) @ y)[0, 0].real / y[0, 0].real) if y[0, 0].real else float("nan")
        target = mu[0].real
        diag.update(r_max=r_max, log_derivative=logder)
        margin = tol * abs(target)
        if abs(logder - target) <= margin:
            return (1 if target < 0 else 0), diag
        raise NumericalIndeterminacyError("log-derivative does not match an eigenvalue of B", diag)
    if len(adm) == m:
        return len(dec), diag
    if len(dec) == m:
        return len(adm), diag
    shift = max(lam[i].real for i in adm)
    Ya = _propagate(A, B, Y0, math.log(r_min), math.log(r_match), shift)
    Z0 = W[:, dec] / np.linalg.norm(W[:, dec], axis=0)
    Yd = _propagate(A, B, Z0, math.log(r_max), math.log(r_match))
    Qa, _ = np.linalg.qr(Ya / np.linalg.norm(Ya, axis=0))
    Qd, _ = np.linalg.qr(Yd / np.linalg.norm(Yd, axis=0))
    cosines = np.clip(np.linalg.svd(Qa.conj().T @ Qd, compute_uv=False), 0.0, 1.0)
    sines = np.sqrt(1.0 - cosines**2)
    diag.update(r_match=r_match, r_min=r_min, r_max=r_max, principal_sines=sines.tolist())
    if np.any((sines > 1e-6) & (sines < 1e-3)):
        raise NumericalIndeterminacyError("admissible and decaying subspaces neither meet nor separate", diag)
    return int(np.sum(sines <= 1e-6)), diag


def shooting_analysis(
    op: ModeOperator,
    r_min: float | None = None,
    r_max: float | None = None,
    tol: float = 0.1,
    scale: float = 1.0,
) -> ShootingReport:
    """Kernel and cokernel dimensions of a mode operator by shooting.

    Admissible solutions start from the indicial exponents of ``A`` with real
    part above ``-3/2``.  Decaying solutions start from the eigenvectors of
    ``B`` with negative real part.  A kernel element is an admissible
    solution that also decays.  For a single active row this is read off
    from the log-derivative at ``r_max``; for two rows both families are
    integrated to a matching radius and the dimension of the intersection
    of the spans is computed from principal angles.  The cokernel is the
    kernel of the formal adjoint.
    """
    A, B, _ = op.restricted()
    if A.shape[0] == 0:
        return ShootingReport(0, 0, [], [], {"active_rows": 0})
    ker, dk = _kernel_dim(A, B, r_min, r_max, tol, scale)
    adj = op.formal_adjoint()
    A2, B2, _ = adj.restricted()
    coker, dc = _kernel_dim(A2, B2, r_min, r_max, tol, scale)
    lam = np.linalg.eigvals(A)
    return ShootingReport(
        ker,
        coker,
        lam.tolist(),
        [l for l in lam.tolist() if l2_membership(l.real, "near-zero")],
        {"kernel": dk, "cokernel": dc},
    )


def shooting_index(
    op: ModeOperator, r_min: float | None = None, r_max: float | None = None, tol: float = 0.1
) -> int:
    """``dim ker - dim coker`` of a mode operator; see :func:`shooting_analysis`."""
    return shooting_analysis(op, r_min, r_max, tol).index
