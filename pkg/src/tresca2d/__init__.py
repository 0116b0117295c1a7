"""Scalar contact problems on the unit disk with P1/P2 finite elements.

The package solves three boundary-value problems for -Δu = f on a
triangulated unit disk with a boundary split into Dirichlet, Neumann and
contact arcs: the linear Dirichlet–Neumann problem, the Tresca friction
problem (nonsmooth but unconstrained), and the Signorini problem
(constrained to a convex cone).  On top of the solvers sits a sensitivity
study: the derivative of the friction solution with respect to a data
perturbation solves a Signorini problem on a partition of the contact
boundary determined by the unperturbed solution, and the study verifies
the first-order expansion ``u_t ≈ u_0 + t·u_0'`` at quadratic order.
"""

from __future__ import annotations

from .epi import (
    ConeK,
    GPointData,
    classify_K,
    delta2_G,
    epi_derivative_G,
    mosco_pointwise_check,
    prox_abs_scaled,
    subdiff_abs,
)
from .expressions import ExpressionError, parse_expression
from .fem import DiscreteField, h1_norm, h1d_seminorm, interpolate, l2_norm
from .mesh import (
    AngleRange,
    BoundaryLabel,
    Mesh2D,
    MeshError,
    generate_unit_disk,
    p2_enrich,
    read_mesh,
    write_mesh,
)
from .sensitivity import (
    BoundaryPartition,
    PerturbationFamily,
    StudyOptions,
    StudyResult,
    builtin_disk_example,
    classify_partition,
    convergence_study,
    derivative_problem,
    linear_response_ratio,
    solve_family_member,
)
from .solvers import (
    CycleError,
    RegionTag,
    SignoriniProblem,
    SolveReport,
    SolverError,
    TrescaProblem,
    complementarity_residuals,
    energy,
    projected_gradient,
    solve_dirichlet_neumann,
    solve_signorini_switching,
    solve_tresca_switching,
)

__version__ = "0.1.0"

__all__ = [
    "AngleRange",
    "BoundaryLabel",
    "BoundaryPartition",
    "ConeK",
    "CycleError",
    "DiscreteField",
    "ExpressionError",
    "GPointData",
    "Mesh2D",
    "MeshError",
    "PerturbationFamily",
    "RegionTag",
    "SignoriniProblem",
    "SolveReport",
    "SolverError",
    "StudyOptions",
    "StudyResult",
    "TrescaProblem",
    "__version__",
    "builtin_disk_example",
    "classify_K",
    "classify_partition",
    "complementarity_residuals",
    "convergence_study",
    "delta2_G",
    "derivative_problem",
    "energy",
    "epi_derivative_G",
    "generate_unit_disk",
    "h1_norm",
    "h1d_seminorm",
    "interpolate",
    "l2_norm",
    "linear_response_ratio",
    "mosco_pointwise_check",
    "p2_enrich",
    "parse_expression",
    "projected_gradient",
    "prox_abs_scaled",
    "read_mesh",
    "solve_dirichlet_neumann",
    "solve_family_member",
    "solve_signorini_switching",
    "solve_tresca_switching",
    "subdiff_abs",
    "write_mesh",
]
