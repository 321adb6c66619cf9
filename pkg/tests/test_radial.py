import numpy as np
import pytest
import sympy as sp
from scipy.integrate import simpson

from monopole_index.errors import InputError, NumericalIndeterminacyError
from monopole_index.radial import (
    ModeOperator,
    RadialGridFunction,
    apply_mode_fd,
    exponent_residual,
    green_apply,
    green_residual,
    k_alpha_apply,
    k_alpha_bound,
    k_alpha_constant,
    k_alpha_residual,
    kernel_basis_flat,
    l2_norm_dt,
    l2_membership,
    raw_coupling_operator,
    log_grid,
    mode_matrices_exact,
    mode_operator,
    shooting_analysis,
    shooting_index,
)

# ---------------------------------------------------------------- mode matrices


def test_mode_matrix_k1_q1():
    A = mode_matrices_exact(1, 1, "+")
    expected = sp.Matrix([[-sp.Rational(3, 2), sp.I * sp.sqrt(2)], [-sp.I * sp.sqrt(2), -sp.Rational(1, 2)]])
    assert sp.simplify(A - expected) == sp.zeros(2, 2)
    np.testing.assert_allclose(mode_operator(1, 0.0, 1, "+").A, np.array(expected, dtype=complex))


def test_k0_harmonic_sector_is_decoupled_scalar_pair():
    op = mode_operator(0, 1.0, 0, "+")
    np.testing.assert_allclose(op.A, -np.eye(2))
    np.testing.assert_allclose(op.B, np.diag([-1.0, 1.0]))


def test_a_is_hermitian():
    for k in (-2, 0, 3):
        for q in (1, 4):
            A = mode_operator(k, 0.5, q, "-").A
            np.testing.assert_allclose(A, A.conj().T)


# ---------------------------------------------------------------- kernels


def test_kernel_k1_q1_plus():
    (sol,) = kernel_basis_flat(1, 1, "+")
    assert sol.beta == sp.Rational(1, 2)
    assert sp.simplify(sol.coeffs[1] / sol.coeffs[0] + sp.I * sp.sqrt(2)) == 0


def test_kernel_k2_q0_minus():
    (sol,) = kernel_basis_flat(2, 0, "-")
    assert sol.label == "rho+"
    assert sol.beta == 0
    assert sol.multiplicity == 2


@pytest.mark.parametrize("k", [-3, 0, 2])
@pytest.mark.parametrize("q", [0, 1, 3])
@pytest.mark.parametrize("chirality", ["+", "-"])
def test_kernel_solutions_are_exact(k, q, chirality):
    for sol in kernel_basis_flat(k, q, chirality):
        assert sp.simplify(exponent_residual(sol, k, q, chirality)) == sp.zeros(2, 1)


def test_kernel_solution_numeric_annihilation():
    op = mode_operator(2, 0.0, 2, "+")
    r = np.linspace(0.5, 2.0, 7)
    for sol in kernel_basis_flat(2, 2, "+"):
        u = sol.evaluate(r)
        du = float(sol.beta) * u / r
        np.testing.assert_allclose(op.apply(r, u, du), 0.0, atol=1e-12)


@pytest.mark.parametrize(
    "beta, end, rate, expected",
    [(-1.0, "near-zero", None, True), (-1.5, "near-zero", None, False), (5.0, "near-infinity", 1.0, False)],
)
def test_l2_membership(beta, end, rate, expected):
    assert l2_membership(beta, end, rate) is expected


# ---------------------------------------------------------------- adjoint


def _bump(r, c, w, coef):
    g = np.exp(-(((r - c) / w) ** 2))
    dg = -2 * (r - c) / w**2 * g
    return np.outer(coef, g), np.outer(coef, dg)


@pytest.mark.parametrize("k, a, q", [(2, 0.8, 1), (-1, -1.3, 3), (0, 2.0, 2)])
def test_formal_adjoint_by_parts(k, a, q):
    r = np.linspace(0.2, 3.0, 20001)
    P = mode_operator(k, a, q, "+")
    Pa = P.formal_adjoint()
    u, du = _bump(r, 1.2, 0.2, np.array([1 + 0.5j, -0.3j]))
    w, dw = _bump(r, 1.4, 0.25, np.array([0.2 - 1j, 0.7]))
    lhs = simpson(np.sum(P.apply(r, u, du) * w.conj(), 0) * r**2, x=r)
    rhs = simpson(np.sum(u * Pa.apply(r, w, dw).conj(), 0) * r**2, x=r)
    assert lhs == pytest.approx(rhs, rel=1e-9)


def test_adjoint_swaps_chirality():
    P = mode_operator(2, 0.7, 2, "+")
    M = mode_operator(2, 0.7, 2, "-")
    Pa = P.formal_adjoint()
    np.testing.assert_allclose(Pa.A, M.A)
    np.testing.assert_allclose(Pa.B, M.B)
    assert Pa.chirality == "-"


# ---------------------------------------------------------------- K_alpha


def test_k_alpha_constant_function_alpha_one():
    t = log_grid(1.0, 2000)
    g = k_alpha_apply(1.0, 1.0, t, np.ones_like(t))
    np.testing.assert_allclose(g, t, atol=1e-10)


def test_k_alpha_constant_function_alpha_zero():
    t = log_grid(1.0, 2000)
    g = k_alpha_apply(0.0, 1.0, t, np.ones_like(t))
    np.testing.assert_allclose(g, t * np.log(t), atol=1e-10)


def test_k_alpha_constant_values():
    assert k_alpha_constant(0.5) == 1.0
    assert k_alpha_constant(3.0) == pytest.approx(1 / np.sqrt(5))


def test_k_alpha_bound_random_alpha_three():
    t = log_grid(1.0, 2000)
    rng = np.random.default_rng(7)
    f = rng.normal(size=t.size)
    g = k_alpha_apply(3.0, 1.0, t, f)
    assert np.all(np.abs(g) <= k_alpha_bound(3.0, 1.0, t, l2_norm_dt(t, f)))


@pytest.mark.parametrize("alpha", [-2.0, 0.5, 3.0])
def test_k_alpha_ode_residual(alpha):
    t = log_grid(1.0, 2000)
    f = np.exp(-t) * np.sin(5 * t)
    g = k_alpha_apply(alpha, 1.0, t, f)
    assert np.abs(k_alpha_residual(alpha, t, g, f)).max() < 1e-6


def test_k_alpha_rejects_nonfinite():
    t = log_grid(1.0, 200)
    f = np.ones_like(t)
    f[3] = np.nan
    with pytest.raises(InputError):
        k_alpha_apply(1.0, 1.0, t, f)


# ---------------------------------------------------------------- Green operator


def _mode_data(r, rng, qs):
    out = {}
    for q in qs:
        c = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        vals = np.stack([c[i, 0] * r * np.exp(-r) + c[i, 1] * np.exp(-((r - 0.5) ** 2) / 0.03) for i in range(2)])
        out[q] = RadialGridFunction(r, vals)
    return out


def test_green_single_mode():
    r = log_grid(1.0, 2000)
    s = _mode_data(r, np.random.default_rng(1), [1])
    t = green_apply(1, "+", s, 1.0)
    assert green_residual(1, "+", t, s) < 1e-3


def test_green_zero_input():
    r = log_grid(1.0, 2000)
    s = {q: RadialGridFunction(r, np.zeros((2, r.size), dtype=complex)) for q in range(3)}
    t = green_apply(2, "-", s, 1.0)
    for q in s:
        assert np.all(t[q].values == 0)


def test_green_recovers_preimage_up_to_kernel():
    r = log_grid(1.0, 2000)
    k, q = 2, 1
    op = mode_operator(k, 0.0, q, "+")
    t0 = RadialGridFunction(r, np.stack([np.exp(-((r - 0.4) ** 2) / 0.01), 1j * np.exp(-((r - 0.6) ** 2) / 0.01)]))
    s = {q: RadialGridFunction(r, apply_mode_fd(op, t0))}
    t = green_apply(k, "+", s, 1.0)
    diff = RadialGridFunction(r, t[q].values - t0.values)
    inner = slice(10, -10)
    assert np.abs(apply_mode_fd(op, diff)[:, inner]).max() < 1e-3 * np.abs(s[q].values).max()


def test_green_rejects_mismatched_grids():
    s = {0: RadialGridFunction(log_grid(1.0, 200), np.zeros((2, 200))), 1: RadialGridFunction(log_grid(1.0, 300), np.zeros((2, 300)))}
    with pytest.raises(InputError):
        green_apply(1, "+", s, 1.0)


# ---------------------------------------------------------------- shooting


def test_raw_coupling_operator_index_zero():
    assert shooting_index(raw_coupling_operator(1, 2, 1.0)) == 0


def test_scalar_decaying_row():
    # e^{-r} solves u' = -u and lies in L^2(r^2 dr) at both ends
    op = ModeOperator(np.diag([0.0, 0.0]), np.diag([-1.0, 0.0]), "+", ("scalar",), rows=(True, False))
    rep = shooting_analysis(op)
    assert (rep.kernel_dim, rep.cokernel_dim, rep.index) == (1, 0, 1)


def test_harmonic_sector_ak_positive():
    assert shooting_index(mode_operator(1, 1.0, 0, "+")) == 0


def test_harmonic_sector_cokernel_ak_negative():
    rep = shooting_analysis(mode_operator(-2, 1.0, 0, "+"))
    assert (rep.kernel_dim, rep.cokernel_dim) == (0, 1)


def test_truncated_domain_is_indeterminate():
    op = ModeOperator(np.diag([5.0, 0.0]), np.diag([-1.0, 0.0]), "+", ("scalar",), rows=(True, False))
    with pytest.raises(NumericalIndeterminacyError) as info:
        shooting_analysis(op, r_min=1e-3, r_max=2.0)
    assert "log_derivative" in info.value.diagnostics


def test_exponents_reported():
    rep = shooting_analysis(mode_operator(3, 2.0, 2, "+"))
    lam = np.linalg.eigvalsh(mode_operator(3, 2.0, 2, "+").A)
    np.testing.assert_allclose(sorted(np.real(rep.exponents)), sorted(lam), atol=1e-12)
