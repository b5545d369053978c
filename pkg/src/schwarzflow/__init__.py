"""
Schwarz-function reflection and Cauchy-problem representations for the
Laplace and Helmholtz equations, with Hele-Shaw and elliptic-growth pressure
fields built on them.
"""

__version__ = "0.1.0"

from .cauchy_rep import (
    CauchyData,
    RiemannKernel,
    cauchy_data_from_solution,
    solve_cauchy_general,
    solve_cauchy_helmholtz,
    solve_cauchy_laplace,
)
from .curves import (
    Circle,
    CircleFamily,
    ComplexPoint,
    ConfocalEllipseFamily,
    ConstantArea,
    ConstantEccentricity,
    CustomRates,
    Ellipse,
    EllipseFamily,
    GapConservation,
    Line,
    PrescribedRates,
    reflect,
    schwarz,
    schwarz_derivative,
    schwarz_inverse,
    schwarz_time_derivative,
)
from .elliptic_growth import GrowthScenario, HelmholtzKernel, growth_pressure
from .heleshaw import (
    GapLaw,
    HeleShawParams,
    SourceStructure,
    flux_balance,
    interfocal_density,
    normal_velocity,
    pressure_gap,
    pressure_sink_source,
)
from .numerics import (
    BranchTracker,
    IntegrationPath,
    integrate_path,
    j0_product,
    j0_product_partials,
    sqrt_branch,
)
from .reflection import AnalyticDatum, StudyRectangle, dirichlet_pair_sum, neumann_jump, study_rectangle
from .verify import VerificationReport, boundary_check, kinematic_check, pde_residual

__all__ = [
    "AnalyticDatum",
    "boundary_check",
    "BranchTracker",
    "cauchy_data_from_solution",
    "CauchyData",
    "Circle",
    "CircleFamily",
    "ComplexPoint",
    "ConfocalEllipseFamily",
    "ConstantArea",
    "ConstantEccentricity",
    "CustomRates",
    "dirichlet_pair_sum",
    "Ellipse",
    "EllipseFamily",
    "flux_balance",
    "GapConservation",
    "GapLaw",
    "growth_pressure",
    "GrowthScenario",
    "HeleShawParams",
    "HelmholtzKernel",
    "integrate_path",
    "IntegrationPath",
    "interfocal_density",
    "j0_product",
    "j0_product_partials",
    "kinematic_check",
    "Line",
    "neumann_jump",
    "normal_velocity",
    "pde_residual",
    "PrescribedRates",
    "pressure_gap",
    "pressure_sink_source",
    "reflect",
    "RiemannKernel",
    "schwarz",
    "schwarz_derivative",
    "schwarz_inverse",
    "schwarz_time_derivative",
    "solve_cauchy_general",
    "solve_cauchy_helmholtz",
    "solve_cauchy_laplace",
    "SourceStructure",
    "sqrt_branch",
    "study_rectangle",
    "StudyRectangle",
    "VerificationReport",
]
