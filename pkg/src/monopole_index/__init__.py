"""L2-indices of Dirac operators of Dirac-type singular monopoles."""

__version__ = "0.1.0"

from .chern import SphereMesh, boundary_ch, plaquette_chern, split_eigenbundles
from .config import parse_config, serialize_config
from .equivariant import fejer_average, lefschetz_numeric, lefschetz_symbolic
from .index import IndexReport, cross_check, main_index, twisted_flat_index
from .laurent import LaurentPoly
from .model import (
    ChartConnection,
    MonopoleConfig,
    SingularPoint,
    chart_connections,
    higgs_sampler,
    validate_config,
)
from .radial import (
    green_apply,
    k_alpha_apply,
    kernel_basis_flat,
    l2_membership,
    mode_operator,
    shooting_index,
)
from .sphere_dirac import analytic_modes, discretized_spectrum, kernel_dims

__all__ = [
    "ChartConnection",
    "IndexReport",
    "LaurentPoly",
    "MonopoleConfig",
    "SingularPoint",
    "SphereMesh",
    "analytic_modes",
    "boundary_ch",
    "chart_connections",
    "cross_check",
    "discretized_spectrum",
    "fejer_average",
    "green_apply",
    "higgs_sampler",
    "k_alpha_apply",
    "kernel_basis_flat",
    "kernel_dims",
    "l2_membership",
    "lefschetz_numeric",
    "lefschetz_symbolic",
    "main_index",
    "mode_operator",
    "parse_config",
    "plaquette_chern",
    "serialize_config",
    "shooting_index",
    "split_eigenbundles",
    "twisted_flat_index",
    "validate_config",
]
