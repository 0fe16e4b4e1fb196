"""Genuine tripartite entanglement of three localized spins in the
degenerate Fermi gas: reduced state, witnesses, robustness bound and the
distance thresholds that bracket where the entanglement disappears."""

__version__ = "0.1.0"

from .bisep import (
    ConvexRegion,
    SectionSpec,
    bisep_hull,
    in_region,
    in_region_1_23,
    point_in_hull,
    r_max_solver,
    region_boundary,
)
from .couplings import Couplings
from .couplings import from_config as couplings_from_config
from .couplings import validate as validate_couplings
from .couplings import zero_limit as couplings_zero_limit
from .errors import (
    BracketError,
    ConvergenceFailure,
    DegenerateDenominatorError,
    DomainError,
    EmptyRegionError,
    FermiGteError,
    InvalidCouplingsError,
    NonHermitianInputError,
)
from .geometry import TriangleConfig, collinear, equilateral, isosceles, polar
from .scan import (
    PolarBoundaryRow,
    SweepRow,
    analytic_limit_thresholds,
    find_rmin,
    sweep_collinear,
    sweep_distance,
    sweep_isosceles,
    sweep_polar_boundary,
)
from .specfun import Dimensionality, bessel_j1, f_factor, spherical_j1
from .tristate import (
    WernerCoords,
    expectation,
    matrix_from_text,
    matrix_to_text,
    min_eigenvalue,
    rho3,
    werner_coords,
)
from .witnesses import (
    GTE_THRESHOLD,
    GridScanReport,
    LocalBasis,
    WitnessOperator,
    bounded_energy_witness,
    energy_gte_test,
    energy_observable,
    er_lower_bound,
    er_lower_bound_matrix,
    ghz_state,
    grid_scan_ghz_w,
    pauli_dot,
    projective_witness,
    w_state,
)

__all__ = [
    "__version__",
    "BracketError",
    "ConvexRegion",
    "ConvergenceFailure",
    "Couplings",
    "DegenerateDenominatorError",
    "Dimensionality",
    "DomainError",
    "EmptyRegionError",
    "FermiGteError",
    "GridScanReport",
    "GTE_THRESHOLD",
    "InvalidCouplingsError",
    "LocalBasis",
    "NonHermitianInputError",
    "PolarBoundaryRow",
    "SectionSpec",
    "SweepRow",
    "TriangleConfig",
    "WernerCoords",
    "WitnessOperator",
    "analytic_limit_thresholds",
    "bessel_j1",
    "bisep_hull",
    "bounded_energy_witness",
    "collinear",
    "couplings_from_config",
    "couplings_zero_limit",
    "energy_gte_test",
    "energy_observable",
    "equilateral",
    "er_lower_bound",
    "er_lower_bound_matrix",
    "expectation",
    "f_factor",
    "find_rmin",
    "ghz_state",
    "grid_scan_ghz_w",
    "in_region",
    "in_region_1_23",
    "isosceles",
    "matrix_from_text",
    "matrix_to_text",
    "min_eigenvalue",
    "pauli_dot",
    "point_in_hull",
    "polar",
    "projective_witness",
    "r_max_solver",
    "region_boundary",
    "rho3",
    "spherical_j1",
    "sweep_collinear",
    "sweep_distance",
    "sweep_isosceles",
    "sweep_polar_boundary",
    "validate_couplings",
    "w_state",
    "werner_coords",
]
