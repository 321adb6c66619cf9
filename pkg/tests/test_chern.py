import pytest

from monopole_index.chern import (
    SphereMesh,
    boundary_ch,
    component_degrees,
    plaquette_chern,
    split_eigenbundles,
)
from monopole_index.errors import RadeConditionError, ResolutionError
from monopole_index.model import ChartConnection, MonopoleConfig, SingularPoint, single_point_config


def _charts(k):
    return [ChartConnection(k, "north"), ChartConnection(k, "south")]


@pytest.mark.parametrize("k", [1, -3, 0, 6, -6])
def test_plaquette_chern_integer(k):
    mesh = SphereMesh(40, 80)
    assert plaquette_chern(mesh, _charts(k)) == k
    assert plaquette_chern(mesh.refined(), _charts(k)) == k


def test_mesh_floor_and_parity():
    with pytest.raises(ResolutionError):
        SphereMesh(20, 40)
    with pytest.raises(ResolutionError):
        SphereMesh(41, 80)


def test_large_flux_per_plaquette_requests_refinement():
    mesh = SphereMesh(40, 80)
    with pytest.raises(ResolutionError):
        plaquette_chern(mesh, _charts(1026))
    assert plaquette_chern(mesh.refined(), _charts(1026)) == 1026


def test_split_rank_one():
    split = split_eigenbundles(single_point_config(1, 1.0), "+")
    assert split.plus_components == (0,) and split.minus_components == ()


def _pair(mass=(1.0, -1.0)):
    return MonopoleConfig(2, (SingularPoint((0.0, 0.0, 0.0), (1, -1)),), mass=mass, boundary_radius=2.0)


def test_split_rank_two_and_chirality_swap():
    plus = split_eigenbundles(_pair(), "+")
    minus = split_eigenbundles(_pair(), "-")
    assert (plus.plus_components, plus.minus_components) == ((0,), (1,))
    assert (minus.plus_components, minus.minus_components) == ((1,), (0,))


def test_split_zero_mass_raises():
    with pytest.raises(RadeConditionError):
        split_eigenbundles(_pair((1.0, 0.0)), "+")


def test_boundary_ch_examples():
    assert boundary_ch(single_point_config(1, 1.0), "+") == -1
    assert boundary_ch(_pair(), "+") == -1


def test_boundary_ch_empty_split():
    assert boundary_ch(single_point_config(2, -1.0), "+", which="+") == 0


def test_component_degrees_sum_weights():
    cfg = MonopoleConfig(
        2,
        (SingularPoint((0.0, 0.0, 0.5), (1, -1)), SingularPoint((0.3, -0.2, 0.0), (2, 0))),
        mass=(1.5, -2.0),
        boundary_radius=3.0,
    )
    assert component_degrees(cfg) == [3, -1]
