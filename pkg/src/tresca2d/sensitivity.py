"""Sensitivity of the friction solution to one-parameter data perturbations.

Given a family ``(f_t, k_t, g_t)`` of loads, tractions, and friction
thresholds, the solution map ``t -> u_t`` is differentiable at ``t = 0`` and
its derivative solves a one-sided (Signorini-type) problem on a partition of
the contact boundary determined by the unperturbed solution: where ``u_0``
slides the derivative sees a plain Neumann datum, where the flux is strictly
below the threshold it is pinned, and where ``u_0 = 0`` with a grazing flux
it satisfies a one-sided complementarity condition.  This module classifies
that partition from a converged solve at ``t = 0``, assembles and solves the
derivative problem, and measures ``err(t) = ||u_t - u_0 - t u_0'||_{H^1}``,
which should decay like ``t^2`` until discretization error dominates.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .fem import (
    DiscreteField,
    assemble_boundary_mass_lumped,
    assemble_mass,
    assemble_stiffness,
    h1_norm,
    h1d_seminorm,
    interpolate,
)
from .mesh import AngleRange, BoundaryLabel, Mesh2D, generate_unit_disk, p2_enrich
from .solvers import (
    RegionTag,
    SignoriniProblem,
    SolveReport,
    TrescaProblem,
    _contact_dofs,
    _nodal_on,
    solve_dirichlet_neumann,
    solve_signorini_switching,
    solve_tresca_switching,
)

__all__ = [
    "BoundaryPartition",
    "DiskExample",
    "PerturbationFamily",
    "StudyOptions",
    "StudyResult",
    "averaged_contact_flux",
    "builtin_disk_example",
    "classify_partition",
    "convergence_study",
    "derivative_problem",
    "linear_response_ratio",
    "solve_family_member",
]

#: Below this parameter value the measured err(t) typically saturates at the
#: discretization-error floor; study rows are flagged, never failed.
FLOOR_THRESHOLD = 0.03


@dataclass(frozen=True)
class PerturbationFamily:
    """One-parameter data family with closed-form derivatives at ``t = 0``.

    Parameters
    ----------
    f, k, g : callable
        Maps ``t -> data``, where the data is anything the solvers accept
        (a callable of ``(x, y)``, a scalar, or a nodal array); ``f`` is the
        volume load, ``k`` the Neumann traction, ``g`` the friction
        threshold (must stay positive on the contact arcs for every ``t``
        used).
    f0p, k0p, g0p : FieldFn or scalar
        Derivatives of the three maps at ``t = 0``.
    f_x_breaks : tuple of float
        Vertical lines where ``f_t`` (and ``f0p``) are only piecewise
        smooth; forwarded to the load assembly.
    """

    f: object
    k: object
    g: object
    f0p: object
    k0p: object
    g0p: object
    f_x_breaks: tuple = ()


@dataclass(frozen=True)
class BoundaryPartition:
    """Per-dof contact-region tags plus the inputs that produced them.

    The classification inputs (trace of the unperturbed solution, its
    contact flux, the threshold) are retained so downstream consumers and
    audits can recompute or scale-check the decision.
    """

    mesh: Mesh2D
    contact_dofs: np.ndarray
    tags: np.ndarray
    u0_values: np.ndarray
    flux0: np.ndarray
    g0: np.ndarray
    eps_u: float
    eps_g: float

    def counts(self) -> dict:
        """Number of dofs per region, keyed by tag value (``"SN"``, ...)."""
        out = {tag.value: 0 for tag in RegionTag}
        for tag in self.tags:
            out[tag.value] += 1
        return out

    def mask(self, tag: RegionTag) -> np.ndarray:
        """Boolean mask over the contact dofs for one region."""
        return np.array([t is tag for t in self.tags])


def classify_partition(
    u0: DiscreteField,
    flux0: np.ndarray,
    g0,
    eps_u: float | None = None,
    eps_g: float | None = None,
) -> BoundaryPartition:
    """Split the contact dofs into sliding / pinned / one-sided regions.

    A dof with ``|u0| > eps_u`` slides (``S_N``); otherwise its flux decides:
    at or above ``g0 - eps_g`` it grazes the upper threshold (``S-``), at or
    below ``-(g0 - eps_g)`` the lower one (``S+``), and strictly inside the
    threshold band it is pinned (``S_D``).  A flux slightly beyond the
    threshold (discretization error) therefore still lands in the grazing
    region its sign selects.

    Parameters
    ----------
    u0 : DiscreteField
        Unperturbed solution (or its boundary trace interpolated onto the
        mesh dofs); only the contact-dof values are read.
    flux0 : ndarray
        Contact flux of the converged unperturbed solve, aligned with the
        contact dofs (see :func:`averaged_contact_flux` for smoothing).
    g0 : callable, scalar or ndarray
        Friction threshold at ``t = 0`` on the contact dofs.
    eps_u, eps_g : float, optional
        Classification bands.  Defaults: ``1e-6 * max|u0|`` on the contact
        dofs with an absolute floor of ``1e-12``, and ``1e-3 * max g0``.
        Both must absorb the discretization error of their input, which is
        mesh-dependent; the defaults suit fluxes from fine converged solves.

    Raises
    ------
    ValueError
        If ``|flux0| > g0 + 10 * eps_g`` anywhere: such a flux cannot come
        from a converged solve with threshold ``g0``.  Values between
        ``eps_g`` and ``10 * eps_g`` beyond the bound only warn.
    """
    mesh = u0.mesh
    contact = _contact_dofs(mesh)
    u0_c = u0.values[contact]
    flux0 = np.asarray(flux0, dtype=float)
    if flux0.shape != contact.shape:
        raise ValueError(
            f"flux0 must align with the {len(contact)} contact dofs, got shape {flux0.shape}"
        )
    g0_c = _nodal_on(mesh, contact, g0)
    if np.any(g0_c <= 0.0):
        raise ValueError("threshold g0 must be positive at every contact dof")
    if eps_u is None:
        eps_u = max(1e-6 * float(np.abs(u0_c).max(initial=0.0)), 1e-12)
    if eps_g is None:
        eps_g = 1e-3 * float(g0_c.max())
    if eps_u <= 0.0 or eps_g <= 0.0:
        raise ValueError("eps_u and eps_g must be positive")

    excess = np.abs(flux0) - g0_c
    worst = int(np.argmax(excess))
    if excess[worst] > 10.0 * eps_g:
        raise ValueError(
            f"inconsistent inputs: |flux0| exceeds g0 by {excess[worst]:.3e} "
            f"(> 10 * eps_g = {10 * eps_g:.3e}) at contact dof {contact[worst]}; "
            "flux0 must come from a converged solve with this threshold"
        )
    if excess[worst] > eps_g:
        warnings.warn(
            f"contact flux exceeds g0 by {excess[worst]:.3e} at dof "
            f"{contact[worst]} (band eps_g = {eps_g:.3e}); classification "
            "may be unreliable there",
            RuntimeWarning,
            stacklevel=2,
        )

    tags = np.empty(len(contact), dtype=object)
    for i in range(len(contact)):
        if abs(u0_c[i]) > eps_u:
            tags[i] = RegionTag.S_N
        elif flux0[i] >= g0_c[i] - eps_g:
            tags[i] = RegionTag.S_MINUS
        elif flux0[i] <= -(g0_c[i] - eps_g):
            tags[i] = RegionTag.S_PLUS
        else:
            tags[i] = RegionTag.S_D
    return BoundaryPartition(
        mesh=mesh,
        contact_dofs=contact,
        tags=tags,
        u0_values=u0_c.copy(),
        flux0=flux0.copy(),
        g0=g0_c,
        eps_u=float(eps_u),
        eps_g=float(eps_g),
    )


def averaged_contact_flux(
    mesh: Mesh2D,
    contact_dofs: np.ndarray,
    flux: np.ndarray,
    weights: np.ndarray | None = None,
    passes: int = 1,
) -> np.ndarray:
    """Weighted one-ring average of a nodal flux along the contact arcs.

    The lumped flux oscillates between adjacent vertex and midpoint dofs
    (the lumping splits an edge's weak traction unevenly); averaging each
    dof with its neighbours along the boundary chain, weighted by the
    lumped boundary measure, cancels the oscillation without moving the
    smooth part.  ``passes`` applications widen the stencil.
    """
    flux = np.asarray(flux, dtype=float)
    if flux.shape != contact_dofs.shape:
        raise ValueError("flux must align with contact_dofs")
    if weights is None:
        weights = assemble_boundary_mass_lumped(mesh, BoundaryLabel.TRESCA)[contact_dofs]
    pos = {int(d): i for i, d in enumerate(contact_dofs)}
    neighbors: list[list[int]] = [[] for _ in contact_dofs]
    for (a, b), lab in zip(mesh.boundary_edges, mesh.boundary_labels):
        if lab is not BoundaryLabel.TRESCA:
            continue
        if mesh.fe_order == 2:
            key = (int(a), int(b)) if a < b else (int(b), int(a))
            m = mesh.edge_midpoint_dofs[key]
            chain = ((int(a), m), (m, int(b)))
        else:
            chain = ((int(a), int(b)),)
        for p, q in chain:
            if p in pos and q in pos:
                neighbors[pos[p]].append(pos[q])
                neighbors[pos[q]].append(pos[p])
    out = flux.copy()
    for _ in range(max(0, passes)):
        prev = out
        out = np.empty_like(prev)
        for i in range(len(contact_dofs)):
            ring = [i, *neighbors[i]]
            out[i] = float(np.sum(weights[ring] * prev[ring]) / np.sum(weights[ring]))
    return out


def derivative_problem(
    partition: BoundaryPartition,
    family: PerturbationFamily,
    flux0: np.ndarray | None = None,
    g0: np.ndarray | None = None,
) -> SignoriniProblem:
    """One-sided problem solved by the derivative of ``t -> u_t`` at 0.

    The volume load is ``f0'``, the Neumann traction ``k0'``, and on the
    contact dofs the datum ``h_i = g0'(s_i) * flux0_i / g0_i``, clamped to
    ``|h_i| <= |g0'(s_i)|`` (the exact ratio ``flux0 / g0`` lies in
    ``[-1, 1]``; discretization error may push it slightly out).  Region
    tags come from the partition: ``S_D`` dofs end up pinned alongside the
    Dirichlet arcs, the others keep their one-sided or Neumann role.

    ``flux0`` and ``g0`` default to the values recorded in the partition.
    """
    mesh = partition.mesh
    contact = partition.contact_dofs
    flux0 = partition.flux0 if flux0 is None else np.asarray(flux0, dtype=float)
    g0 = partition.g0 if g0 is None else _nodal_on(mesh, contact, g0)
    if flux0.shape != contact.shape or g0.shape != contact.shape:
        raise ValueError("flux0 and g0 must align with the partition's contact dofs")
    if np.any(g0 <= 0.0):
        raise ValueError("threshold g0 must be positive at every contact dof")
    g0p = _nodal_on(mesh, contact, family.g0p)
    h = g0p * flux0 / g0
    h = np.clip(h, -np.abs(g0p), np.abs(g0p))
    return SignoriniProblem.build(
        mesh,
        family.f0p,
        family.k0p,
        partition.tags,
        h,
        f_x_breaks=family.f_x_breaks,
    )


def solve_family_member(
    family: PerturbationFamily,
    t: float,
    mesh: Mesh2D,
    max_iters: int = 200,
    tol: float = 1e-10,
    lin_tol: float = 1e-12,
) -> SolveReport:
    """Friction solve with the family's data at parameter ``t >= 0``."""
    if t < 0.0:
        raise ValueError(f"family parameter must be nonnegative, got {t}")
    problem = TrescaProblem.build(
        mesh, family.f(t), family.k(t), family.g(t), f_x_breaks=family.f_x_breaks
    )
    return solve_tresca_switching(problem, max_iters=max_iters, tol=tol, lin_tol=lin_tol)


def linear_response_ratio(
    family: PerturbationFamily, mesh: Mesh2D, t: float, tol: float = 1e-12
) -> float:
    """Relative linearization error of the constraint-free response.

    With ``F_s`` the plain mixed solve (load ``f_s``, traction ``k_s``,
    zero flux on the contact arcs), returns
    ``||(F_t - F_0)/t - F_0'||_{H^1} / ||F_0'||_{H^1}``, where ``F_0'``
    solves the same problem with the derivative data.  Decays linearly in
    ``t`` for smooth families.
    """
    if t <= 0.0:
        raise ValueError(f"t must be positive, got {t}")
    breaks = family.f_x_breaks
    rep_t = solve_dirichlet_neumann(mesh, family.f(t), family.k(t), 0.0, tol, breaks)
    rep_0 = solve_dirichlet_neumann(mesh, family.f(0.0), family.k(0.0), 0.0, tol, breaks)
    rep_p = solve_dirichlet_neumann(mesh, family.f0p, family.k0p, 0.0, tol, breaks)
    K = assemble_stiffness(mesh)
    M = assemble_mass(mesh)
    diff = (rep_t.solution.values - rep_0.solution.values) / t - rep_p.solution.values
    num = h1_norm(DiscreteField(mesh, diff), stiffness=K, mass=M)
    den = h1_norm(rep_p.solution, stiffness=K, mass=M)
    return num / max(den, 1e-300)


# ---------------------------------------------------------------------------
# convergence study
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StudyOptions:
    """Knobs for :func:`convergence_study`.

    Parameters
    ----------
    u0 : callable, optional
        Closed-form unperturbed solution.  When given, the error reference
        is its nodal interpolant and the partition classifies its exact
        boundary trace (evaluated at dofs radially projected onto the unit
        circle); otherwise both come from the discrete ``t = 0`` solve, and
        ``eps_u`` should then be set above the boundary discretization
        error (the relative default collapses when the true trace
        vanishes identically).
    eps_u, eps_g : float, optional
        Classification bands.  ``eps_g`` defaults to ``2e-3 * max g0``
        (twice the classifier's own default): the one-ring-averaged flux
        still carries up to ~1e-3 error next to the region interfaces.
    flux_smoothing_passes : int
        One-ring averaging passes applied to the recovered flux before
        classification; two passes cancel the vertex/midpoint lumping
        oscillation.
    floor_threshold : float
        Rows with ``t`` below this are flagged as floor-dominated and
        excluded from the default slope fit.
    """

    u0: object = None
    eps_u: float | None = None
    eps_g: float | None = None
    flux_smoothing_passes: int = 2
    floor_threshold: float = FLOOR_THRESHOLD
    max_iters: int = 200
    tol: float = 1e-10
    lin_tol: float = 1e-12


@dataclass
class StudyResult:
    """Per-parameter errors of the first-order expansion, plus the fit.

    ``err_h1[i]`` is ``||u_{t_i} - u_0 - t_i u_0'||_{H^1}`` with every field
    on the study's single mesh; ``err_h1_semi`` is the gradient-seminorm
    variant.  ``slope`` is the least-squares slope of ``log err`` against
    ``log t`` over the converged rows above the floor threshold.
    """

    mesh: Mesh2D
    t_values: np.ndarray
    err_h1: np.ndarray
    err_h1_semi: np.ndarray
    converged: np.ndarray
    floor_flag: np.ndarray
    iterations: np.ndarray
    slope: float
    partition: BoundaryPartition
    base_solution: DiscreteField
    derivative: DiscreteField
    derivative_report: SolveReport
    params: dict = field(default_factory=dict)

    def fit_slope(self, t_min: float | None = None, t_max: float | None = None) -> float:
        """Least-squares slope of ``log err_h1`` vs ``log t`` on a sub-range."""
        sel = self.converged & (self.err_h1 > 0.0)
        if t_min is not None:
            sel &= self.t_values >= t_min
        if t_max is not None:
            sel &= self.t_values <= t_max
        if sel.sum() < 2:
            return math.nan
        return float(
            np.polyfit(np.log(self.t_values[sel]), np.log(self.err_h1[sel]), 1)[0]
        )

    def to_csv(self) -> str:
        """CSV table, one row per parameter value (15 significant digits)."""
        lines = ["t,err_h1,err_h1_semi,converged"]
        for i in range(len(self.t_values)):
            lines.append(
                f"{self.t_values[i]:.15g},{self.err_h1[i]:.15g},"
                f"{self.err_h1_semi[i]:.15g},{str(bool(self.converged[i])).lower()}"
            )
        return "\n".join(lines) + "\n"

    def write_csv(self, path: str) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.to_csv())

    def to_text(self) -> str:
        """Structured text report: fit, metadata, and per-row detail."""
        lines = [
            "convergence study",
            f"slope: {self.slope:.6f}",
            f"n_rows: {len(self.t_values)}",
        ]
        for key in sorted(self.params):
            lines.append(f"{key}: {self.params[key]}")
        counts = self.partition.counts()
        lines.append(
            "partition: "
            + " ".join(f"{name}={counts[name]}" for name in ("SN", "SD", "SM", "SP"))
        )
        lines.append("# t err_h1 err_h1_semi converged floor iterations")
        for i in range(len(self.t_values)):
            lines.append(
                f"{self.t_values[i]:.6g} {self.err_h1[i]:.9e} "
                f"{self.err_h1_semi[i]:.9e} {str(bool(self.converged[i])).lower()} "
                f"{str(bool(self.floor_flag[i])).lower()} {self.iterations[i]}"
            )
        return "\n".join(lines) + "\n"

    def write_text(self, path: str) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.to_text())

    def write_gnuplot(self, path: str) -> None:
        """Two-column ``t err_h1`` file (converged rows) for log-log plots."""
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write("# t err_h1\n")
            for i in range(len(self.t_values)):
                if self.converged[i]:
                    fh.write(f"{self.t_values[i]:.15g} {self.err_h1[i]:.15g}\n")


def _trace_values(mesh: Mesh2D, dofs: np.ndarray, fn) -> np.ndarray:
    """Evaluate ``fn`` at boundary dofs radially projected onto the circle.

    Midpoint dofs of a polygonal boundary sit strictly inside the disk;
    evaluating a function that vanishes on the circle at those chord points
    picks up an O(h^2) offset that would poison trace-based classification.
    """
    coords = mesh.dof_coords()[dofs]
    r = np.hypot(coords[:, 0], coords[:, 1])
    r = np.where(r == 0.0, 1.0, r)
    return np.asarray(fn(coords[:, 0] / r, coords[:, 1] / r), dtype=float)


def convergence_study(
    family: PerturbationFamily,
    t_list,
    mesh: Mesh2D,
    opts: StudyOptions = StudyOptions(),
) -> StudyResult:
    """Measure the first-order expansion error over a parameter sweep.

    Solves the unperturbed problem once, classifies the contact partition
    from its (smoothed) flux, solves the derivative problem, then for each
    ``t`` solves the perturbed problem and records
    ``||u_t - u_0 - t u_0'||`` in the full H1 norm and the gradient
    seminorm — everything on the one supplied mesh.

    Parameters
    ----------
    family : PerturbationFamily
    t_list : sequence of float
        Strictly positive, strictly decreasing.
    mesh : Mesh2D
    opts : StudyOptions

    Returns
    -------
    StudyResult
        Rows for nonconverged member solves carry ``converged=False`` and
        stay in the table (partial results are not an error).
    """
    t_values = np.asarray(list(t_list), dtype=float)
    if t_values.size == 0:
        raise ValueError("t_list must not be empty")
    if np.any(t_values <= 0.0):
        raise ValueError("all parameter values must be positive")
    if np.any(np.diff(t_values) >= 0.0):
        raise ValueError("parameter values must be strictly decreasing")

    rep0 = solve_family_member(
        family, 0.0, mesh, max_iters=opts.max_iters, tol=opts.tol, lin_tol=opts.lin_tol
    )
    contact = rep0.contact_dofs
    g0 = _nodal_on(mesh, contact, family.g(0.0))

    flux0 = averaged_contact_flux(
        mesh, contact, rep0.contact_flux, passes=opts.flux_smoothing_passes
    )
    if opts.u0 is not None:
        u0_classify_values = rep0.solution.values.copy()
        u0_classify_values[contact] = _trace_values(mesh, contact, opts.u0)
        u0_for_classify = DiscreteField(mesh, u0_classify_values)
        u0_ref = interpolate(mesh, opts.u0)
    else:
        u0_for_classify = rep0.solution
        u0_ref = rep0.solution

    eps_g = opts.eps_g if opts.eps_g is not None else 2e-3 * float(g0.max())
    partition = classify_partition(
        u0_for_classify, flux0, g0, eps_u=opts.eps_u, eps_g=eps_g
    )
    sprob = derivative_problem(partition, family)
    srep = solve_signorini_switching(
        sprob, max_iters=opts.max_iters, tol=opts.tol, lin_tol=opts.lin_tol
    )

    K = assemble_stiffness(mesh)
    M = assemble_mass(mesh)
    u0_vals = u0_ref.values
    up_vals = srep.solution.values

    err_h1 = np.zeros(len(t_values))
    err_semi = np.zeros(len(t_values))
    converged = np.zeros(len(t_values), dtype=bool)
    iterations = np.zeros(len(t_values), dtype=int)
    for i, t in enumerate(t_values):
        rep_t = solve_family_member(
            family, float(t), mesh, max_iters=opts.max_iters, tol=opts.tol, lin_tol=opts.lin_tol
        )
        diff = DiscreteField(mesh, rep_t.solution.values - u0_vals - t * up_vals)
        err_h1[i] = h1_norm(diff, stiffness=K, mass=M)
        err_semi[i] = h1d_seminorm(diff, stiffness=K)
        converged[i] = rep_t.converged and rep0.converged and srep.converged
        iterations[i] = rep_t.iterations

    floor_flag = t_values < opts.floor_threshold
    result = StudyResult(
        mesh=mesh,
        t_values=t_values,
        err_h1=err_h1,
        err_h1_semi=err_semi,
        converged=converged,
        floor_flag=floor_flag,
        iterations=iterations,
        slope=math.nan,
        partition=partition,
        base_solution=u0_ref,
        derivative=srep.solution,
        derivative_report=srep,
        params={
            "fe_order": mesh.fe_order,
            "n_dofs": mesh.n_dofs,
            "eps_u": partition.eps_u,
            "eps_g": partition.eps_g,
            "flux_smoothing_passes": opts.flux_smoothing_passes,
            "floor_threshold": opts.floor_threshold,
            **mesh.generator_params,
        },
    )
    result.slope = result.fit_slope(t_min=opts.floor_threshold)
    return result


# ---------------------------------------------------------------------------
# built-in example on the unit disk
# ---------------------------------------------------------------------------


def _saturating_profile(x):
    """Odd profile: -1 below -1/2, ``sin(pi x)`` in between, +1 above 1/2."""
    x = np.asarray(x, dtype=float)
    return np.where(x <= -0.5, -1.0, np.where(x >= 0.5, 1.0, np.sin(np.pi * x)))


def _saturating_profile_d1(x):
    x = np.asarray(x, dtype=float)
    return np.where(np.abs(x) < 0.5, np.pi * np.cos(np.pi * x), 0.0)


def _saturating_profile_d2(x):
    x = np.asarray(x, dtype=float)
    return np.where(np.abs(x) < 0.5, -np.pi**2 * np.sin(np.pi * x), 0.0)


def _example_load(x, y):
    p = _saturating_profile(x)
    p1 = _saturating_profile_d1(x)
    p2 = _saturating_profile_d2(x)
    return -2.0 * p - 2.0 * x * p1 - 0.5 * (x**2 + y**2 - 1.0) * p2


def _example_solution(x, y):
    return 0.5 * (x**2 + y**2 - 1.0) * _saturating_profile(x)


@dataclass(frozen=True)
class DiskExample:
    """Reference configuration on the unit disk with a known solution.

    The Dirichlet arc sits on ``(pi/4, pi/2]``, the Neumann arc on
    ``(pi/2, 3pi/4)``, and the rest of the circle is the contact arc.  At
    ``t = 0`` the solution is ``u_0 = (x^2 + y^2 - 1)/2 * profile(x)`` with
    contact flux ``profile(x)`` and threshold 1, so the flux grazes the
    threshold wherever ``|x| >= 1/2`` on the contact arc and the derivative
    partition has no sliding region.
    """

    n_boundary: int
    label_ranges: tuple
    family: PerturbationFamily
    u0: object
    contact_flux: object
    interface_angles: tuple

    def make_mesh(self, n_boundary: int | None = None, fe_order: int = 2) -> Mesh2D:
        mesh = generate_unit_disk(n_boundary or self.n_boundary, list(self.label_ranges))
        return p2_enrich(mesh) if fe_order == 2 else mesh

    def expected_region(self, theta: float) -> RegionTag:
        """Analytic derivative-partition region at boundary angle ``theta``.

        The angle is taken in ``(-pi, pi]``; only contact angles are
        meaningful.  The pinned region spans ``(-2pi/3, -pi/3]``, the
        lower one-sided region ``(-pi/3, pi/4]``, and the upper one-sided
        region the remaining contact angles; the sliding region is empty.
        """
        if -2.0 * math.pi / 3.0 < theta <= -math.pi / 3.0:
            return RegionTag.S_D
        if -math.pi / 3.0 < theta <= math.pi / 4.0:
            return RegionTag.S_MINUS
        return RegionTag.S_PLUS


def builtin_disk_example() -> DiskExample:
    """The package's reference perturbation study on the unit disk.

    The family scales the volume load exponentially, and the traction and
    threshold linearly: ``f_t = exp(t) f``, ``k_t = (1 + t) profile``,
    ``g_t = 1 + t``; hence ``f0' = f``, ``k0' = profile``, ``g0' = 1``,
    and the derivative-problem datum is ``h = profile`` on the contact arc.
    """
    label_ranges = (
        (AngleRange(0.25 * math.pi, 0.5 * math.pi), BoundaryLabel.DIRICHLET),
        (AngleRange(0.5 * math.pi, 0.75 * math.pi), BoundaryLabel.NEUMANN),
        (AngleRange(-1.25 * math.pi, 0.25 * math.pi), BoundaryLabel.TRESCA),
    )
    family = PerturbationFamily(
        f=lambda t: (lambda x, y: math.exp(t) * _example_load(x, y)),
        k=lambda t: (lambda x, y: (1.0 + t) * _saturating_profile(x)),
        g=lambda t: 1.0 + t,
        f0p=_example_load,
        k0p=lambda x, y: _saturating_profile(x),
        g0p=1.0,
        f_x_breaks=(-0.5, 0.5),
    )
    return DiskExample(
        n_boundary=190,
        label_ranges=label_ranges,
        family=family,
        u0=_example_solution,
        contact_flux=lambda x, y: _saturating_profile(x),
        interface_angles=(
            -2.0 * math.pi / 3.0,
            -math.pi / 3.0,
            math.pi / 4.0,
            3.0 * math.pi / 4.0,
        ),
    )
