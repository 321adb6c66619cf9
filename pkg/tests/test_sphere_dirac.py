import numpy as np
import pytest

from monopole_index.sphere_dirac import analytic_modes, discretized_spectrum, kernel_dims


@pytest.mark.parametrize("k, q, n", [(0, 1, 1), (1, 2, 6), (-3, 1, 4)])
def test_analytic_level(k, q, n):
    mode = next(m for m in analytic_modes(k, q) if m.q == q)
    assert mode.n == n
    assert mode.sqrt_n == pytest.approx(np.sqrt(n))


@pytest.mark.parametrize("k, dims", [(2, (2, 0)), (0, (0, 0)), (-1, (0, 1))])
def test_kernel_dims(k, dims):
    assert kernel_dims(k) == dims


def test_levels_k0():
    rep = discretized_spectrum(0, 3)
    np.testing.assert_allclose(rep.numeric_levels, [1, 4, 9], rtol=1e-2)
    assert rep.matched and not rep.flags


def test_levels_k1():
    rep = discretized_spectrum(1, 3)
    np.testing.assert_allclose(rep.numeric_levels, [2, 6, 12], rtol=1e-2)


def test_zero_modes_k2():
    rep = discretized_spectrum(2, 2)
    assert rep.zero_modes == (2, 0)


def test_multiplicity_matches_harmonic_count():
    # sections of charge k at level q span 2q + |k| dimensions on each side
    rep = discretized_spectrum(-2, 3)
    assert rep.multiplicities == [(2 * q + 2, 2 * q + 2) for q in range(1, 4)]


def test_grid_refinement_reduces_error():
    coarse = discretized_spectrum(3, 3, grid_size=128)
    fine = discretized_spectrum(3, 3, grid_size=256)
    assert fine.max_rel_error < coarse.max_rel_error


def test_mismatch_is_flagged_not_raised():
    rep = discretized_spectrum(1, 3, grid_size=64, tol=1e-6)
    assert not rep.matched
    assert rep.flags


def test_grid_below_floor_rejected():
    with pytest.raises(ValueError):
        discretized_spectrum(1, 3, grid_size=16)
