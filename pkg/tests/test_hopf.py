import math

import numpy as np
import pytest

from monopole_index.errors import ChartError, DomainError
from monopole_index.hopf import (
    HopfPoint,
    asd_residual,
    clifford_rep_check,
    connection_residuals,
    dirac_intertwine_residual,
    gaussian_bump_section,
    hodge_star_2form,
    hopf_map,
    lift_isometry_ratio,
    lifted_clifford_residual,
    polynomial_bump_section,
    zero_section,
)


def _lift(X):
    """A preimage of ``X`` under the Hopf map with ``z1`` real."""
    t, x, y = X
    r = math.sqrt(t * t + x * x + y * y)
    z1 = math.sqrt((r + t) / 2)
    z2 = complex(x, y) / (2 * z1)
    return np.array([z1, 0.0, z2.real, z2.imag])


def test_hopf_map_examples():
    np.testing.assert_allclose(hopf_map(HopfPoint(1, 0).real), [1, 0, 0])
    np.testing.assert_allclose(hopf_map(HopfPoint(0, 1).real), [-1, 0, 0])


def test_hopf_map_norm():
    P = np.random.default_rng(0).normal(size=(4, 1000))
    X = hopf_map(P)
    assert np.abs(np.linalg.norm(X, axis=0) - np.sum(P**2, axis=0)).max() < 1e-12


def test_fibre_invariance():
    rng = np.random.default_rng(1)
    for _ in range(200):
        p = HopfPoint(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
        q = p.rotate(rng.uniform(0, 2 * np.pi))
        np.testing.assert_allclose(hopf_map(q.real), hopf_map(p.real), atol=1e-12)
        assert q.r4_sq == pytest.approx(p.r4_sq)


def test_origin_rejected():
    with pytest.raises(DomainError):
        HopfPoint(0, 0)


def test_lift_helper_is_preimage():
    X = np.array([0.8, 0.3, 0.2])
    np.testing.assert_allclose(hopf_map(_lift(X)), X, atol=1e-14)


@pytest.mark.parametrize("scale", [1.0, 0.1, 7.0])
def test_connection_generator_and_invariance(scale):
    p = scale * np.array([0.6, 0.2, -0.3, 0.5])
    res = connection_residuals(p)
    assert max(abs(v) for v in res.values()) < 1e-10


def test_connection_at_unit_point():
    assert abs(connection_residuals(HopfPoint(1, 0).real)["generator"]) < 1e-12


def test_hodge_star_conformal_invariance():
    F = np.random.default_rng(2).normal(size=(4, 4))
    F = F - F.T
    np.testing.assert_allclose(hodge_star_2form(F, 2 * np.eye(4)), hodge_star_2form(F, np.eye(4)), atol=1e-14)
    np.testing.assert_allclose(hodge_star_2form(hodge_star_2form(F, np.eye(4)), np.eye(4)), F, atol=1e-14)


def test_asd_trivial_bundle():
    assert asd_residual(0, np.array([0.6, 0.2, -0.3, 0.5])) == 0.0


@pytest.mark.parametrize("k", [1, 2])
def test_asd_near_unit_point(k):
    assert asd_residual(k, HopfPoint(1 / math.sqrt(2), 0).real, 1e-4) < 1e-4


def test_asd_first_order_convergence():
    p = np.array([0.6, 0.2, -0.3, 0.5])
    hs = np.array([1e-3, 5e-4, 1e-4])
    res = np.array([asd_residual(1, p, h) for h in hs])
    slope = np.polyfit(np.log(hs), np.log(res), 1)[0]
    assert slope == pytest.approx(1.0, abs=0.1)


def test_asd_midpoint_links_second_order():
    p = np.array([0.6, 0.2, -0.3, 0.5])
    hs = np.array([1e-3, 5e-4])
    res = np.array([asd_residual(2, p, h, link_rule="midpoint") for h in hs])
    assert np.log(res[0] / res[1]) / np.log(2) == pytest.approx(2.0, abs=0.2)


def test_asd_seam_rejected():
    with pytest.raises(ChartError):
        asd_residual(1, HopfPoint(1 / math.sqrt(2), 1 / math.sqrt(2)).real, 1e-4)


def test_clifford_exact():
    report = clifford_rep_check()
    assert report and all(report.values())


def test_lifted_clifford_numeric():
    assert lifted_clifford_residual(np.array([0.6, 0.2, -0.3, 0.5])) < 1e-12


def test_dirac_intertwine_gaussian_k0():
    p = _lift(np.array([0.5, 0.4, -0.2]))
    assert dirac_intertwine_residual(0, gaussian_bump_section(), p, 1e-4) < 1e-3


def test_dirac_intertwine_polynomial_k1():
    section = polynomial_bump_section()
    p = _lift(np.array([0.8, 0.3, 0.2]) + 0.1)
    assert np.any(section(hopf_map(p)[:, None]) != 0)
    assert dirac_intertwine_residual(1, section, p, 1e-4) < 1e-3


def test_dirac_intertwine_zero_section():
    assert dirac_intertwine_residual(1, zero_section, np.array([0.6, 0.2, -0.3, 0.5])) == 0.0


def test_lift_is_isometric():
    assert lift_isometry_ratio(gaussian_bump_section(), n=24) == pytest.approx(1.0, rel=1e-6)
