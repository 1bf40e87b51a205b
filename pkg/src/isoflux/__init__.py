"""Strictly isospectral (double-Darboux) deformations of line-source
thermal-neutron diffusion, built on a self-contained modified-Bessel kernel."""

from .bessel import bessel_i0, bessel_i1, bessel_k0, bessel_k1
from .darboux import INFINITE_LAMBDA, CoverageError, DarbouxFamily, well_position
from .diffusion import (
    LineSource,
    Medium,
    Superposition,
    flux_general,
    flux_general_prime,
    flux_physical,
    pillbox_flow,
)
from .numerics import (
    CumulativeNorm,
    RadialGrid,
    cumulative_integral,
    first_derivative_fd,
    gauss_panel,
    second_derivative_fd,
)
from .verify import ResidualReport, report_to_json_line, run_suite
from .witten import SchrodingerProfile, potential_bosonic

__version__ = "0.1.0"

__all__ = [
    "bessel_i0",
    "bessel_i1",
    "bessel_k0",
    "bessel_k1",
    "Medium",
    "LineSource",
    "Superposition",
    "flux_general",
    "flux_general_prime",
    "flux_physical",
    "pillbox_flow",
    "RadialGrid",
    "CumulativeNorm",
    "cumulative_integral",
    "gauss_panel",
    "first_derivative_fd",
    "second_derivative_fd",
    "SchrodingerProfile",
    "potential_bosonic",
    "DarbouxFamily",
    "INFINITE_LAMBDA",
    "CoverageError",
    "well_position",
    "ResidualReport",
    "run_suite",
    "report_to_json_line",
    "__version__",
]
