"""Boundary-value solvers: linear Dirichlet–Neumann, Tresca friction, and
Signorini contact, plus a projected-gradient oracle for cross-checking.

The nonsmooth problems minimize

    J(v) = 1/2 v'Kv - L'v + sum_i w_i g_i |v_i|        (Tresca)
    J(v) = 1/2 v'Kv - L'v  over a sign-constraint cone  (Signorini)

with the friction/contact functional lumped at the boundary dofs, which
makes both problems separable there.  The switching solvers iterate between
linear solves with an active constraint set and per-dof mode updates driven
by the variational flux ``lambda = (K u - L) / w``; sign convention:
``u_i > 0`` slides against the traction, so ``lambda_i = -g_i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import kernels
from .fem import (
    DiscreteField,
    assemble_boundary_load,
    assemble_boundary_mass_lumped,
    assemble_load,
    assemble_stiffness,
)
from .mesh import BoundaryLabel, Mesh2D
from .sparse import SolverError, SparseSymMatrix, pcg

__all__ = [
    "CycleError",
    "RegionTag",
    "SignoriniProblem",
    "SolveReport",
    "TrescaProblem",
    "complementarity_residuals",
    "energy",
    "minimize_prox_gradient",
    "projected_gradient",
    "solve_dirichlet_neumann",
    "solve_signorini_switching",
    "solve_tresca_switching",
]

#: Relative band on flux-threshold comparisons; a dof switches out of its
#: mode only on a strict violation beyond this band (exact ties stay put).
SWITCH_BAND = 1e-10

STICK = 0
SLIP_PLUS = 1
SLIP_MINUS = -1
BOUND = 0
FREE = 1


class CycleError(SolverError):
    """The switching iteration revisited a previous active set."""


class RegionTag(Enum):
    """Contact-region tag for Signorini problems."""

    S_N = "SN"
    S_D = "SD"
    S_MINUS = "SM"
    S_PLUS = "SP"


def _nodal_on(mesh: Mesh2D, dofs: np.ndarray, data) -> np.ndarray:
    if callable(data):
        coords = mesh.dof_coords()[dofs]
        return np.asarray(data(coords[:, 0], coords[:, 1]), dtype=float) * np.ones(len(dofs))
    arr = np.asarray(data, dtype=float)
    if arr.ndim == 0:
        return np.full(len(dofs), float(arr))
    if arr.shape != (len(dofs),):
        raise ValueError(f"expected {len(dofs)} nodal values, got shape {arr.shape}")
    return arr.copy()


def _contact_dofs(mesh: Mesh2D) -> np.ndarray:
    """Tresca-boundary dofs, with Dirichlet taking precedence at junctions."""
    tresca = mesh.boundary_dofs(BoundaryLabel.TRESCA)
    dirichlet = mesh.boundary_dofs(BoundaryLabel.DIRICHLET)
    return np.setdiff1d(tresca, dirichlet)


@dataclass
class TrescaProblem:
    """Friction problem data: ``-Delta u = f``, ``u = 0`` on the Dirichlet
    arcs, ``du/dn = k`` on the Neumann arcs, and on the contact arcs
    ``|du/dn| <= g`` with ``u du/dn + g|u| = 0``."""

    mesh: Mesh2D
    f: object
    k: object
    g: np.ndarray
    contact_dofs: np.ndarray
    weights: np.ndarray
    f_x_breaks: tuple = ()

    @classmethod
    def build(cls, mesh: Mesh2D, f, k, g, f_x_breaks: tuple = ()) -> "TrescaProblem":
        contact = _contact_dofs(mesh)
        _require_arcs(mesh, contact)
        g_nodal = _nodal_on(mesh, contact, g)
        if np.any(g_nodal <= 0.0):
            raise ValueError("friction threshold g must be positive at every contact dof")
        w = assemble_boundary_mass_lumped(mesh, BoundaryLabel.TRESCA)[contact]
        return cls(mesh, f, k, g_nodal, contact, w, tuple(f_x_breaks))


@dataclass
class SignoriniProblem:
    """One-sided contact problem on the tagged contact dofs.

    Tags partition the contact dofs: S_N dofs carry a plain Neumann datum
    ``h``, S_D dofs are pinned to zero, S- dofs obey ``u <= 0``,
    ``du/dn <= h``, ``u (du/dn - h) = 0`` and S+ dofs the mirrored signs.
    """

    mesh: Mesh2D
    f: object
    k: object
    tags: np.ndarray
    h: np.ndarray
    contact_dofs: np.ndarray
    weights: np.ndarray
    f_x_breaks: tuple = ()

    @classmethod
    def build(
        cls, mesh: Mesh2D, f, k, tags, h, f_x_breaks: tuple = ()
    ) -> "SignoriniProblem":
        contact = _contact_dofs(mesh)
        _require_arcs(mesh, contact)
        tags = np.asarray(tags, dtype=object)
        if tags.shape != contact.shape:
            raise ValueError("one RegionTag required per contact dof")
        if not all(isinstance(tag, RegionTag) for tag in tags):
            raise ValueError("tags must be RegionTag values")
        h_nodal = _nodal_on(mesh, contact, h)
        w = assemble_boundary_mass_lumped(mesh, BoundaryLabel.TRESCA)[contact]
        return cls(mesh, f, k, tags, h_nodal, contact, w, tuple(f_x_breaks))


def _require_arcs(mesh: Mesh2D, contact: np.ndarray) -> None:
    if len(mesh.boundary_dofs(BoundaryLabel.DIRICHLET)) == 0:
        raise ValueError("problem requires a nonempty Dirichlet boundary")
    if len(contact) == 0:
        raise ValueError("problem requires a nonempty contact (Tresca) boundary")


@dataclass
class SolveReport:
    """Solution plus convergence diagnostics and a per-dof contact table."""

    solution: DiscreteField
    kind: str
    converged: bool
    iterations: int
    linear_iterations: int
    linear_residual: float
    contact_dofs: np.ndarray
    contact_u: np.ndarray
    contact_flux: np.ndarray
    contact_bound: np.ndarray
    modes: np.ndarray
    history: list
    params: dict = field(default_factory=dict)
    tags: np.ndarray | None = None

    @property
    def complementarity_residual(self) -> float:
        return complementarity_residuals(self).max_violation

    def to_text(self) -> str:
        lines = [
            "solve report",
            f"kind: {self.kind}",
            f"converged: {str(self.converged).lower()}",
            f"iterations: {self.iterations}",
            f"linear_iterations: {self.linear_iterations}",
            f"linear_residual: {self.linear_residual:.3e}",
            f"complementarity_residual: {self.complementarity_residual:.3e}",
        ]
        for key in sorted(self.params):
            lines.append(f"{key}: {self.params[key]}")
        if len(self.contact_dofs):
            lines.append("# contact table")
            lines.append("# dof x y mode u flux bound")
            coords = self.solution.mesh.dof_coords()
            mode_names = self._mode_names()
            for idx, dof in enumerate(self.contact_dofs):
                x, y = coords[dof]
                lines.append(
                    f"{dof} {x:+.6f} {y:+.6f} {mode_names[idx]:>5s} "
                    f"{self.contact_u[idx]:+.9e} {self.contact_flux[idx]:+.9e} "
                    f"{self.contact_bound[idx]:+.9e}"
                )
        return "\n".join(lines) + "\n"

    def _mode_names(self) -> list[str]:
        if self.kind == "signorini":
            out = []
            for tag, mode in zip(self.tags, self.modes):
                if tag is RegionTag.S_N:
                    out.append("SN")
                elif tag is RegionTag.S_D:
                    out.append("SD")
                else:
                    side = "-" if tag is RegionTag.S_MINUS else "+"
                    out.append(("free" if mode == FREE else "bound") + side)
            return out
        names = {STICK: "stick", SLIP_PLUS: "slip+", SLIP_MINUS: "slip-"}
        return [names[int(m)] for m in self.modes]


@dataclass
class ComplementarityResiduals:
    """Per-dof violations of the discrete contact laws (zero when exact)."""

    flux_bound: np.ndarray
    law: np.ndarray
    feasibility: np.ndarray

    @property
    def max_violation(self) -> float:
        parts = [self.flux_bound, self.law, self.feasibility]
        return float(max((p.max() if len(p) else 0.0) for p in parts))


def _mesh_params(mesh: Mesh2D, tol: float) -> dict:
    params = {
        "fe_order": mesh.fe_order,
        "n_dofs": mesh.n_dofs,
        "n_triangles": mesh.n_triangles,
        "backend": kernels.BACKEND,
        "tol": tol,
    }
    params.update(mesh.generator_params)
    return params


def _base_load(mesh: Mesh2D, f, k, f_x_breaks=()) -> np.ndarray:
    L = assemble_load(mesh, f, x_breaks=f_x_breaks or None)
    L += assemble_boundary_load(mesh, BoundaryLabel.NEUMANN, k)
    return L


# ---------------------------------------------------------------------------
# linear Dirichlet–Neumann problem
# ---------------------------------------------------------------------------


def solve_dirichlet_neumann(
    mesh: Mesh2D, f, k, h, tol: float = 1e-12, f_x_breaks: tuple = ()
) -> SolveReport:
    """Solve ``-Delta u = f`` with ``u = 0`` on the Dirichlet arcs,
    ``du/dn = k`` on the Neumann arcs and ``du/dn = h`` on the contact arcs.
    """
    dirichlet = mesh.boundary_dofs(BoundaryLabel.DIRICHLET)
    if len(dirichlet) == 0:
        raise ValueError("Dirichlet boundary is empty; the problem is singular")
    K = assemble_stiffness(mesh)
    L0 = _base_load(mesh, f, k, f_x_breaks)
    L = L0 + assemble_boundary_load(mesh, BoundaryLabel.TRESCA, h)
    K2, b = K.eliminate(dirichlet, np.zeros(len(dirichlet)), L)
    x0 = np.zeros(mesh.n_dofs)
    u, its, relres = pcg(K2, b, tol=tol, x0=x0)
    contact = _contact_dofs(mesh)
    w = assemble_boundary_mass_lumped(mesh, BoundaryLabel.TRESCA)[contact]
    flux = (K @ u - L0)[contact] / w if len(contact) else np.zeros(0)
    return SolveReport(
        solution=DiscreteField(mesh, u),
        kind="dirichlet_neumann",
        converged=True,
        iterations=1,
        linear_iterations=its,
        linear_residual=relres,
        contact_dofs=contact,
        contact_u=u[contact],
        contact_flux=flux,
        contact_bound=np.full(len(contact), np.inf),
        modes=np.full(len(contact), FREE, dtype=np.int8),
        history=[],
        params=_mesh_params(mesh, tol),
    )


# ---------------------------------------------------------------------------
# switching solvers
# ---------------------------------------------------------------------------


def _switching_loop(problem, kind, init_modes, max_iters, tol, lin_tol):
    mesh = problem.mesh
    contact = problem.contact_dofs
    w = problem.weights
    dirichlet = mesh.boundary_dofs(BoundaryLabel.DIRICHLET)
    K = assemble_stiffness(mesh)
    L0 = _base_load(mesh, problem.f, problem.k, problem.f_x_breaks)

    if kind == "tresca":
        g = problem.g
    else:
        h = problem.h
        tags = problem.tags
        is_sn = np.array([t is RegionTag.S_N for t in tags])
        is_sd = np.array([t is RegionTag.S_D for t in tags])
        is_sm = np.array([t is RegionTag.S_MINUS for t in tags])
        is_sp = np.array([t is RegionTag.S_PLUS for t in tags])

    modes = init_modes.astype(np.int8)
    history = [modes.copy()]
    seen = {modes.tobytes(): 0}
    u = np.zeros(mesh.n_dofs)
    total_lin_iters = 0
    relres = 0.0
    converged = False
    iterations = 0

    for iterations in range(1, max_iters + 1):
        if kind == "tresca":
            pinned = contact[modes == STICK]
            L = L0.copy()
            slip = modes != STICK
            L[contact[slip]] -= modes[slip] * w[slip] * g[slip]
        else:
            pinned = contact[(modes == BOUND) | is_sd]
            L = L0.copy()
            loaded = (modes == FREE) & ~is_sd
            L[contact[loaded]] += w[loaded] * h[loaded]
        constrained = np.union1d(dirichlet, pinned)
        K2, b = K.eliminate(constrained, np.zeros(len(constrained)), L)
        x0 = u.copy()
        x0[constrained] = 0.0
        u, its, relres = pcg(K2, b, tol=lin_tol, x0=x0)
        total_lin_iters += its

        lam = (K @ u - L0)[contact] / w
        uc = u[contact]
        new_modes = modes.copy()
        if kind == "tresca":
            release = (modes == STICK) & (np.abs(lam) > g * (1.0 + SWITCH_BAND))
            new_modes[release] = np.where(lam[release] > 0.0, SLIP_MINUS, SLIP_PLUS)
            new_modes[(modes == SLIP_PLUS) & (uc < 0.0)] = STICK
            new_modes[(modes == SLIP_MINUS) & (uc > 0.0)] = STICK
        else:
            band = tol * (1.0 + np.abs(h))
            new_modes[is_sm & (modes == BOUND) & (lam > h + band)] = FREE
            new_modes[is_sp & (modes == BOUND) & (lam < h - band)] = FREE
            new_modes[is_sm & (modes == FREE) & (uc > 0.0)] = BOUND
            new_modes[is_sp & (modes == FREE) & (uc < 0.0)] = BOUND
            new_modes[is_sd] = BOUND
            new_modes[is_sn] = FREE

        if np.array_equal(new_modes, modes):
            converged = True
            break
        modes = new_modes
        history.append(modes.copy())
        key = modes.tobytes()
        if key in seen:
            raise CycleError(
                f"switching cycle: the active set of iteration {seen[key]} "
                f"reappeared at iteration {iterations} "
                f"(modes {np.array2string(modes, threshold=16)})"
            )
        seen[key] = iterations

    bound = g if kind == "tresca" else h
    return SolveReport(
        solution=DiscreteField(mesh, u),
        kind=kind,
        converged=converged,
        iterations=iterations,
        linear_iterations=total_lin_iters,
        linear_residual=relres,
        contact_dofs=contact,
        contact_u=u[contact],
        contact_flux=lam,
        contact_bound=bound.copy(),
        modes=modes,
        history=history,
        params=_mesh_params(mesh, tol),
        tags=problem.tags if kind == "signorini" else None,
    )


def solve_tresca_switching(
    problem: TrescaProblem,
    max_iters: int = 200,
    tol: float = 1e-10,
    lin_tol: float = 1e-12,
    init: str = "stick",
) -> SolveReport:
    """Active-set switching for the Tresca friction problem.

    All contact dofs start in ``stick`` (``u_i = 0``); each pass solves the
    linear problem for the current modes and then switches: a stick dof
    whose flux exceeds its threshold (``|lambda_i| > g_i``, beyond a tiny
    relative band) becomes slip with the sign of ``-lambda_i``; a slip dof
    whose displacement takes the wrong sign returns to stick.  Exact ties
    keep their mode.  Stops when no dof switches.

    A revisited active set raises :class:`CycleError`; exceeding
    ``max_iters`` returns a report with ``converged=False``.
    ``init="slip+"`` starts from the all-slip+ state instead (used by the
    uniqueness cross-check).
    """
    n = len(problem.contact_dofs)
    if init == "stick":
        init_modes = np.full(n, STICK, dtype=np.int8)
    elif init == "slip+":
        init_modes = np.full(n, SLIP_PLUS, dtype=np.int8)
    else:
        raise ValueError(f"unknown init {init!r}; expected 'stick' or 'slip+'")
    return _switching_loop(problem, "tresca", init_modes, max_iters, tol, lin_tol)


def solve_signorini_switching(
    problem: SignoriniProblem,
    max_iters: int = 200,
    tol: float = 1e-10,
    lin_tol: float = 1e-12,
) -> SolveReport:
    """Active-set switching for the Signorini problem.

    S- and S+ dofs start bound (``u_i = 0``); a bound dof is released when
    its flux strictly violates its one-sided bound (``lambda_i > h_i`` on
    S-, ``< h_i`` on S+, beyond a small band), and a released dof is
    re-bound when its displacement leaves the cone.  S_N dofs always carry
    the Neumann datum ``h_i``; S_D dofs stay pinned.  At convergence the
    solution satisfies the cone constraints exactly at every dof.
    """
    init_modes = np.array(
        [FREE if t is RegionTag.S_N else BOUND for t in problem.tags], dtype=np.int8
    )
    return _switching_loop(problem, "signorini", init_modes, max_iters, tol, lin_tol)


def complementarity_residuals(report: SolveReport) -> ComplementarityResiduals:
    """Violations of the discrete contact laws for a solve report.

    For Tresca: the flux bound ``max(|lambda_i| - g_i, 0)`` and the law
    ``|u_i lambda_i + g_i |u_i|| / (1 + |u_i|)``.  For Signorini: the
    one-sided flux bound, the complementarity ``|u_i (lambda_i - h_i)|``,
    and the cone feasibility violation.  All zero (to solver tolerance) for
    a converged report.
    """
    u = report.contact_u
    lam = report.contact_flux
    if report.kind == "tresca":
        g = report.contact_bound
        flux_bound = np.maximum(np.abs(lam) - g, 0.0)
        law = np.abs(u * lam + g * np.abs(u)) / (1.0 + np.abs(u))
        feas = np.zeros(len(u))
    elif report.kind == "signorini":
        h = report.contact_bound
        flux_bound = np.zeros(len(u))
        law = np.zeros(len(u))
        feas = np.zeros(len(u))
        for i, tag in enumerate(report.tags):
            if tag is RegionTag.S_N:
                law[i] = abs(lam[i] - h[i])
            elif tag is RegionTag.S_D:
                feas[i] = abs(u[i])
            elif tag is RegionTag.S_MINUS:
                flux_bound[i] = max(lam[i] - h[i], 0.0)
                feas[i] = max(u[i], 0.0)
                law[i] = abs(u[i] * (lam[i] - h[i])) / (1.0 + abs(u[i]))
            else:
                flux_bound[i] = max(h[i] - lam[i], 0.0)
                feas[i] = max(-u[i], 0.0)
                law[i] = abs(u[i] * (lam[i] - h[i])) / (1.0 + abs(u[i]))
    else:
        flux_bound = np.zeros(len(u))
        law = np.zeros(len(u))
        feas = np.zeros(len(u))
    return ComplementarityResiduals(flux_bound=flux_bound, law=law, feasibility=feas)


# ---------------------------------------------------------------------------
# projected-gradient oracle
# ---------------------------------------------------------------------------


def energy(problem, values: np.ndarray) -> float:
    """Discrete objective ``J(v)`` of a Tresca or Signorini problem.

    The quadratic part uses the eliminated-form load (Neumann data of free
    regions included); the Tresca friction term adds
    ``sum w_i g_i |v_i|``.  Values are taken as given (feasibility with
    respect to Dirichlet pins or the Signorini cone is not checked here).
    """
    mesh = problem.mesh
    K = assemble_stiffness(mesh)
    L = _base_load(mesh, problem.f, problem.k, problem.f_x_breaks)
    quad = 0.5 * values @ (K @ values) - L @ values
    if isinstance(problem, TrescaProblem):
        vc = values[problem.contact_dofs]
        return float(quad + np.sum(problem.weights * problem.g * np.abs(vc)))
    loaded = np.array([t is not RegionTag.S_D for t in problem.tags])
    vc = values[problem.contact_dofs[loaded]]
    return float(quad - np.sum(problem.weights[loaded] * problem.h[loaded] * vc))


def _power_iteration_lmax(K: SparseSymMatrix, iters: int = 200) -> float:
    # A fixed vector can be an exact non-dominant eigenvector; a seeded
    # random start almost surely is not (and stays deterministic).
    rng = np.random.default_rng(20240718)
    v = rng.standard_normal(K.n)
    v /= np.linalg.norm(v)
    lam = 1.0
    for _ in range(iters):
        w = K @ v
        lam = float(np.linalg.norm(w))
        if lam == 0.0:
            return 1.0
        v = w / lam
    return lam


def minimize_prox_gradient(
    matrix: SparseSymMatrix,
    load: np.ndarray,
    soft_dofs: np.ndarray | None = None,
    soft_thresh: np.ndarray | None = None,
    neg_dofs: np.ndarray | None = None,
    pos_dofs: np.ndarray | None = None,
    step: float | None = None,
    iters: int = 20000,
    rtol: float = 1e-12,
) -> np.ndarray:
    """Forward–backward minimization of ``1/2 v'Av - b'v + sum c_i |v_i|``
    with optional one-sided sign constraints.

    One gradient step on the smooth part followed by the exact per-dof
    prox: a scaled soft-threshold with parameter ``step * c_i`` at
    ``soft_dofs`` and a cone projection at ``neg_dofs`` / ``pos_dofs``.
    The default ``step = 1 / lambda_max(A)`` (power iteration) guarantees
    a monotone energy decrease; an increase raises :class:`SolverError`,
    as does an explicit step of ``2 / lambda_max`` or more.

    Stops once the iterate stalls (relative step below ``rtol``).
    """
    lam_max = _power_iteration_lmax(matrix)
    if step is None:
        # small margin: the power-iteration estimate approaches from below
        step = 0.95 / lam_max
    elif step >= 2.0 / lam_max:
        raise SolverError("projected-gradient step exceeds 2 / lambda_max")

    soft_dofs = np.asarray(soft_dofs if soft_dofs is not None else [], dtype=int)
    coef = np.asarray(soft_thresh if soft_thresh is not None else [], dtype=float)
    if soft_dofs.shape != coef.shape:
        raise ValueError("soft_dofs and soft_thresh must align")
    neg_dofs = np.asarray(neg_dofs if neg_dofs is not None else [], dtype=int)
    pos_dofs = np.asarray(pos_dofs if pos_dofs is not None else [], dtype=int)
    thresh = step * coef

    v = np.zeros(matrix.n)
    prev = None
    for _ in range(iters):
        grad = matrix @ v - load
        # J(v) = 1/2 v'Av - b'v + c'|v|;  v'Av = v'grad + b'v.
        cur = 0.5 * float(v @ grad) - 0.5 * float(load @ v)
        if len(soft_dofs):
            cur += float(np.sum(coef * np.abs(v[soft_dofs])))
        if prev is not None and cur > prev + 1e-12 * (1.0 + abs(prev)):
            raise SolverError(
                f"projected gradient diverged: energy rose from {prev:.6e} to {cur:.6e}"
            )
        prev = cur
        nxt = v - step * grad
        if len(soft_dofs):
            nxt[soft_dofs] = _soft_threshold(thresh, nxt[soft_dofs])
        if len(neg_dofs):
            nxt[neg_dofs] = np.minimum(nxt[neg_dofs], 0.0)
        if len(pos_dofs):
            nxt[pos_dofs] = np.maximum(nxt[pos_dofs], 0.0)
        delta = float(np.linalg.norm(nxt - v))
        v = nxt
        if delta <= rtol * (1.0 + float(np.linalg.norm(v))):
            break
    return v


def projected_gradient(
    problem,
    step: float | None = None,
    iters: int = 20000,
    rtol: float = 1e-12,
) -> DiscreteField:
    """Reference solver for a Tresca or Signorini problem, independent of
    the switching machinery: assembles the constrained quadratic and runs
    :func:`minimize_prox_gradient` on it (threshold ``step * w_i * g_i`` at
    friction dofs, cone projection at the one-sided dofs)."""
    mesh = problem.mesh
    contact = problem.contact_dofs
    dirichlet = mesh.boundary_dofs(BoundaryLabel.DIRICHLET)
    K = assemble_stiffness(mesh)
    L = _base_load(mesh, problem.f, problem.k, problem.f_x_breaks)

    if isinstance(problem, TrescaProblem):
        soft_dofs, soft_coef = contact, problem.weights * problem.g
        neg = pos = None
        pinned = dirichlet
    else:
        soft_dofs = soft_coef = None
        sd = contact[[t is RegionTag.S_D for t in problem.tags]]
        pinned = np.union1d(dirichlet, sd)
        loaded = np.array([t is not RegionTag.S_D for t in problem.tags])
        L[contact[loaded]] += problem.weights[loaded] * problem.h[loaded]
        neg = contact[[t is RegionTag.S_MINUS for t in problem.tags]]
        pos = contact[[t is RegionTag.S_PLUS for t in problem.tags]]
    K2, b = K.eliminate(pinned, np.zeros(len(pinned)), L)
    v = minimize_prox_gradient(
        K2,
        b,
        soft_dofs=soft_dofs,
        soft_thresh=soft_coef,
        neg_dofs=neg,
        pos_dofs=pos,
        step=step,
        iters=iters,
        rtol=rtol,
    )
    return DiscreteField(mesh, v)


def _soft_threshold(thresh: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Vectorized form of :func:`tresca2d.epi.prox_abs_scaled`."""
    return np.sign(x) * np.maximum(np.abs(x) - thresh, 0.0)
