"""Finite-element assembly, norms, SPD solves, and boundary flux recovery.

Supports P1 and P2 triangles on :class:`~tresca2d.mesh.Mesh2D`.  Stiffness
and mass use a degree-4 triangle rule (exact for all P2 x P2 products);
domain loads use degree 6, optionally with exact subdivision of elements cut
by vertical lines where the integrand's second derivative jumps.  Boundary
terms use 3-point Gauss on edges.

Field callbacks (``f``, ``k``, ``h``) are vectorized callables ``fn(x, y)``
over equal-shape coordinate arrays; plain numbers are accepted and treated
as constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .mesh import BoundaryLabel, Mesh2D
from .quadrature import edge_rule, triangle_rule
from .sparse import SolverError, SparseSymMatrix, pcg

__all__ = [
    "AssemblyError",
    "DiscreteField",
    "apply_dirichlet",
    "assemble_boundary_load",
    "assemble_boundary_mass_lumped",
    "assemble_load",
    "assemble_mass",
    "assemble_stiffness",
    "flux_recovery",
    "h1_norm",
    "h1d_seminorm",
    "interpolate",
    "l2_norm",
    "solve_spd",
]

FieldFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


class AssemblyError(ValueError):
    """The mesh or data cannot be assembled (e.g. a degenerate triangle)."""


@dataclass
class DiscreteField:
    """Finite-element function: one value per dof of its mesh."""

    mesh: Mesh2D
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (self.mesh.n_dofs,):
            raise ValueError(
                f"field has {self.values.shape} values, mesh has {self.mesh.n_dofs} dofs"
            )


def _evaluate(fn, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if callable(fn):
        return np.broadcast_to(np.asarray(fn(x, y), dtype=float), x.shape)
    return np.full(x.shape, float(fn))


# ---------------------------------------------------------------------------
# reference bases
# ---------------------------------------------------------------------------


def _tri_basis(order: int, pts: np.ndarray) -> np.ndarray:
    """Basis values at reference points; shape (npts, ndof_local)."""
    xi, eta = pts[:, 0], pts[:, 1]
    lam = np.stack([1.0 - xi - eta, xi, eta], axis=1)
    if order == 1:
        return lam
    l0, l1, l2 = lam[:, 0], lam[:, 1], lam[:, 2]
    return np.stack(
        [
            l0 * (2 * l0 - 1),
            l1 * (2 * l1 - 1),
            l2 * (2 * l2 - 1),
            4 * l1 * l2,
            4 * l2 * l0,
            4 * l0 * l1,
        ],
        axis=1,
    )


def _tri_basis_grad(order: int, pts: np.ndarray) -> np.ndarray:
    """Reference gradients at reference points; shape (npts, ndof_local, 2)."""
    npts = len(pts)
    dlam = np.array([[-1.0, -1.0], [1.0, 0.0], [0.0, 1.0]])
    if order == 1:
        return np.broadcast_to(dlam, (npts, 3, 2)).copy()
    xi, eta = pts[:, 0], pts[:, 1]
    lam = np.stack([1.0 - xi - eta, xi, eta], axis=1)
    grad = np.empty((npts, 6, 2))
    for i in range(3):
        grad[:, i] = (4 * lam[:, i, None] - 1) * dlam[i]
    pairs = [(1, 2), (2, 0), (0, 1)]
    for a, (i, j) in enumerate(pairs):
        grad[:, 3 + a] = 4 * (lam[:, i, None] * dlam[j] + lam[:, j, None] * dlam[i])
    return grad


def _edge_basis(order: int, s: np.ndarray) -> np.ndarray:
    """Edge trace basis at parameters ``s`` in [0, 1]; order [end0, end1(, mid)]."""
    if order == 1:
        return np.stack([1.0 - s, s], axis=1)
    return np.stack([(1.0 - s) * (1.0 - 2.0 * s), s * (2.0 * s - 1.0), 4.0 * s * (1.0 - s)], axis=1)


def element_dofs(mesh: Mesh2D) -> np.ndarray:
    """Global dof indices per element; columns [v0, v1, v2(, m12, m20, m01)]."""
    tris = mesh.triangles
    if mesh.fe_order == 1:
        return tris
    mid = mesh.edge_midpoint_dofs
    out = np.empty((len(tris), 6), dtype=np.int64)
    out[:, :3] = tris
    for e, (i, j, k) in enumerate(tris):
        i, j, k = int(i), int(j), int(k)
        out[e, 3] = mid[(j, k) if j < k else (k, j)]
        out[e, 4] = mid[(k, i) if k < i else (i, k)]
        out[e, 5] = mid[(i, j) if i < j else (j, i)]
    return out


def boundary_edge_dofs(mesh: Mesh2D, label: BoundaryLabel) -> np.ndarray:
    """Global dof indices per labeled boundary edge ([end0, end1(, mid)])."""
    edges = mesh.edges_with_label(label)
    if mesh.fe_order == 1:
        return edges
    out = np.empty((len(edges), 3), dtype=np.int64)
    out[:, :2] = edges
    for e, (i, j) in enumerate(edges):
        i, j = int(i), int(j)
        out[e, 2] = mesh.edge_midpoint_dofs[(i, j) if i < j else (j, i)]
    return out


def _element_geometry(mesh: Mesh2D):
    """Edge vectors, determinants and inverse-transpose Jacobians per element."""
    pts = mesh.vertices[mesh.triangles]
    a = pts[:, 1] - pts[:, 0]
    b = pts[:, 2] - pts[:, 0]
    det = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
    if np.any(det <= 0.0):
        raise AssemblyError("degenerate or inverted triangle encountered during assembly")
    inv_jt = np.empty((len(det), 2, 2))
    inv_jt[:, 0, 0] = b[:, 1]
    inv_jt[:, 0, 1] = -a[:, 1]
    inv_jt[:, 1, 0] = -b[:, 0]
    inv_jt[:, 1, 1] = a[:, 0]
    inv_jt /= det[:, None, None]
    return pts, det, inv_jt


# ---------------------------------------------------------------------------
# domain assembly
# ---------------------------------------------------------------------------


def _assemble_bilinear(mesh: Mesh2D, kind: str) -> SparseSymMatrix:
    rule = triangle_rule(4)
    pts, det, inv_jt = _element_geometry(mesh)
    dofs = element_dofs(mesh)
    nloc = dofs.shape[1]
    if kind == "stiffness":
        dphi = _tri_basis_grad(mesh.fe_order, rule.points)  # (nq, nloc, 2)
        # physical gradients: (ne, nq, nloc, 2)
        grad = np.einsum("eij,qaj->eqai", inv_jt, dphi)
        ke = np.einsum("q,eqai,eqbi->eab", rule.weights, grad, grad) * det[:, None, None]
    else:
        phi = _tri_basis(mesh.fe_order, rule.points)  # (nq, nloc)
        ke = np.einsum("q,qa,qb->ab", rule.weights, phi, phi)[None, :, :] * det[:, None, None]
    # Force bitwise symmetry of each element block; the summation order in
    # the contraction above is not guaranteed identical for (a, b) and (b, a).
    ke = 0.5 * (ke + np.swapaxes(ke, 1, 2))
    rows = np.repeat(dofs, nloc, axis=1).ravel()
    cols = np.tile(dofs, (1, nloc)).ravel()
    return SparseSymMatrix.from_coo(mesh.n_dofs, rows, cols, ke.ravel())


def assemble_stiffness(mesh: Mesh2D) -> SparseSymMatrix:
    """Stiffness matrix ``K`` with ``v^T K w = integral of grad v . grad w``."""
    return _assemble_bilinear(mesh, "stiffness")


def assemble_mass(mesh: Mesh2D) -> SparseSymMatrix:
    """Mass matrix ``M`` with ``v^T M w = integral of v w``."""
    return _assemble_bilinear(mesh, "mass")


def _clip_halfplane(poly: list[tuple[float, float]], c: float, keep_left: bool):
    out: list[tuple[float, float]] = []
    m = len(poly)
    for idx in range(m):
        p, q = poly[idx], poly[(idx + 1) % m]
        pin = p[0] <= c if keep_left else p[0] >= c
        qin = q[0] <= c if keep_left else q[0] >= c
        if pin:
            out.append(p)
        if pin != qin:
            s = (c - p[0]) / (q[0] - p[0])
            out.append((c, p[1] + s * (q[1] - p[1])))
    return out


def _split_by_vertical_lines(tri: np.ndarray, breaks: Sequence[float]):
    """Split a triangle into convex polygons by the lines ``x = c``."""
    pieces = [[tuple(p) for p in tri]]
    for c in breaks:
        nxt = []
        for poly in pieces:
            xs = [p[0] for p in poly]
            if max(xs) <= c:
                nxt.append(poly)
            elif min(xs) >= c:
                nxt.append(poly)
            else:
                for keep_left in (True, False):
                    part = _clip_halfplane(poly, c, keep_left)
                    if len(part) >= 3:
                        nxt.append(part)
        pieces = nxt
    return pieces


def assemble_load(mesh: Mesh2D, f, x_breaks: Sequence[float] | None = None) -> np.ndarray:
    """Load vector ``L_i = integral of f * phi_i`` (degree-6 quadrature).

    Parameters
    ----------
    mesh : Mesh2D
    f : callable or number
        Vectorized integrand ``f(x, y)``.
    x_breaks : sequence of float, optional
        Vertical lines across which ``f`` is only piecewise smooth.
        Elements cut by a line are subdivided exactly along it and the rule
        is applied piecewise, so the quadrature never straddles a kink.
    """
    rule = triangle_rule(6)
    pts, det, inv_jt = _element_geometry(mesh)
    dofs = element_dofs(mesh)
    phi = _tri_basis(mesh.fe_order, rule.points)  # (nq, nloc)

    load = np.zeros(mesh.n_dofs)
    xq = np.einsum("qa,eai->eqi", np.column_stack(
        [1.0 - rule.points[:, 0] - rule.points[:, 1], rule.points[:, 0], rule.points[:, 1]]
    ), pts)
    fvals = _evaluate(f, xq[:, :, 0], xq[:, :, 1])  # (ne, nq)
    le = np.einsum("q,eq,qa->ea", rule.weights, fvals, phi) * det[:, None]

    if x_breaks:
        breaks = sorted(float(c) for c in x_breaks)
        tri_x = pts[:, :, 0]
        cut = np.zeros(len(det), dtype=bool)
        for c in breaks:
            cut |= (tri_x.min(axis=1) < c) & (tri_x.max(axis=1) > c)
        for e in np.flatnonzero(cut):
            le[e] = _load_on_cut_element(
                pts[e], inv_jt[e], mesh.fe_order, f, breaks, rule
            )

    np.add.at(load, dofs.ravel(), le.ravel())
    return load


def _load_on_cut_element(tri, inv_jt, order, f, breaks, rule) -> np.ndarray:
    """Element load recomputed by exact subdivision along the break lines."""
    le = np.zeros(6 if order == 2 else 3)
    v0 = tri[0]
    for poly in _split_by_vertical_lines(tri, breaks):
        anchor = np.asarray(poly[0])
        for i in range(1, len(poly) - 1):
            p1 = np.asarray(poly[i])
            p2 = np.asarray(poly[i + 1])
            a, b = p1 - anchor, p2 - anchor
            det_sub = a[0] * b[1] - a[1] * b[0]
            if abs(det_sub) < 1e-30:
                continue
            xq = anchor + np.outer(rule.points[:, 0], a) + np.outer(rule.points[:, 1], b)
            # reference coordinates of the sub-points in the parent element:
            # (x - v0) @ J^{-T} applies J^{-1} to row vectors
            ref = (xq - v0) @ inv_jt
            phi = _tri_basis(order, ref)
            fvals = _evaluate(f, xq[:, 0], xq[:, 1])
            le += abs(det_sub) * np.einsum("q,q,qa->a", rule.weights, fvals, phi)
    return le


# ---------------------------------------------------------------------------
# boundary assembly
# ---------------------------------------------------------------------------


def assemble_boundary_load(mesh: Mesh2D, label: BoundaryLabel, k) -> np.ndarray:
    """Boundary load ``L_i = integral of k * phi_i`` over the labeled arcs."""
    if not isinstance(label, BoundaryLabel):
        raise AssemblyError(f"unknown boundary label {label!r}")
    rule = edge_rule(3)
    s = rule.points[:, 0]
    edges = mesh.edges_with_label(label)
    load = np.zeros(mesh.n_dofs)
    if len(edges) == 0:
        return load
    dofs = boundary_edge_dofs(mesh, label)
    p = mesh.vertices[edges[:, 0]]
    q = mesh.vertices[edges[:, 1]]
    lengths = np.hypot(*(q - p).T)
    xq = p[:, None, :] + s[None, :, None] * (q - p)[:, None, :]  # (ne, nq, 2)
    kvals = _evaluate(k, xq[:, :, 0], xq[:, :, 1])
    phi = _edge_basis(mesh.fe_order, s)  # (nq, nloc)
    le = np.einsum("q,eq,qa->ea", rule.weights, kvals, phi) * lengths[:, None]
    np.add.at(load, dofs.ravel(), le.ravel())
    return load


def assemble_boundary_mass_lumped(mesh: Mesh2D, label: BoundaryLabel) -> np.ndarray:
    """Lumped boundary mass: per-dof weights ``w_i`` on the labeled arcs.

    Row sums of the edge mass matrix: an edge of length ``l`` contributes
    ``(l/2, l/2)`` to its endpoints for P1 and ``(l/6, l/6, 2l/3)`` to
    endpoints and midpoint for P2.  Entries off the labeled arcs are zero;
    the nonzero weights sum to the total arc length exactly.
    """
    if not isinstance(label, BoundaryLabel):
        raise AssemblyError(f"unknown boundary label {label!r}")
    edges = mesh.edges_with_label(label)
    w = np.zeros(mesh.n_dofs)
    if len(edges) == 0:
        return w
    dofs = boundary_edge_dofs(mesh, label)
    p = mesh.vertices[edges[:, 0]]
    q = mesh.vertices[edges[:, 1]]
    lengths = np.hypot(*(q - p).T)
    if mesh.fe_order == 1:
        shares = np.array([0.5, 0.5])
    else:
        shares = np.array([1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0])
    np.add.at(w, dofs.ravel(), np.outer(lengths, shares).ravel())
    return w


# ---------------------------------------------------------------------------
# solving and post-processing
# ---------------------------------------------------------------------------


def apply_dirichlet(
    K: SparseSymMatrix, L: np.ndarray, dofs: np.ndarray, values: np.ndarray
):
    """Symmetric elimination of prescribed dofs; returns the reduced ``(K, L)``."""
    return K.eliminate(np.asarray(dofs), np.asarray(values, dtype=float), L)


def solve_spd(
    K: SparseSymMatrix,
    L: np.ndarray,
    tol: float = 1e-12,
    x0: np.ndarray | None = None,
    max_iter: int | None = None,
) -> np.ndarray:
    """Solve ``K x = L`` by Jacobi-preconditioned CG to relative residual ``tol``.

    Identity rows (as produced by Dirichlet elimination) are seeded with
    their right-hand side before iterating; their residual is then exactly
    zero and CG never touches them, so prescribed values are carried
    bitwise exactly.

    Raises
    ------
    SolverError
        If the tolerance is not met within the iteration budget
        (default ``10 * n``); the error message reports the residual.
    """
    if x0 is None:
        x0 = np.zeros(K.n)
        starts = K.indptr[:-1]
        single = np.diff(K.indptr) == 1
        rows = np.flatnonzero(single)
        identity = rows[
            (K.indices[starts[rows]] == rows) & (K.data[starts[rows]] == 1.0)
        ]
        x0[identity] = np.asarray(L, dtype=float)[identity]
    x, _, _ = pcg(K, L, tol=tol, x0=x0, max_iter=max_iter)
    return x


def interpolate(mesh: Mesh2D, fn) -> DiscreteField:
    """Nodal interpolation of a callable (or constant) onto the mesh dofs."""
    coords = mesh.dof_coords()
    return DiscreteField(mesh, _evaluate(fn, coords[:, 0], coords[:, 1]))


def h1d_seminorm(field: DiscreteField, stiffness: SparseSymMatrix | None = None) -> float:
    """Dirichlet seminorm ``sqrt(v^T K v)``."""
    K = assemble_stiffness(field.mesh) if stiffness is None else stiffness
    return float(np.sqrt(max(0.0, field.values @ (K @ field.values))))


def l2_norm(field: DiscreteField, mass: SparseSymMatrix | None = None) -> float:
    """L2 norm ``sqrt(v^T M v)``."""
    M = assemble_mass(field.mesh) if mass is None else mass
    return float(np.sqrt(max(0.0, field.values @ (M @ field.values))))


def h1_norm(
    field: DiscreteField,
    stiffness: SparseSymMatrix | None = None,
    mass: SparseSymMatrix | None = None,
) -> float:
    """Full H1 norm ``sqrt(v^T (K + M) v)``."""
    K = assemble_stiffness(field.mesh) if stiffness is None else stiffness
    M = assemble_mass(field.mesh) if mass is None else mass
    v = field.values
    return float(np.sqrt(max(0.0, v @ (K @ v) + v @ (M @ v))))


def flux_recovery(
    K: SparseSymMatrix,
    L: np.ndarray,
    field: DiscreteField,
    label: BoundaryLabel,
    interior_tol: float = 1e-8,
) -> tuple[np.ndarray, np.ndarray]:
    """Variational flux (discrete normal derivative) on a labeled boundary.

    Solves ``W lambda = K u - L`` with ``W`` the lumped boundary mass, i.e.
    reads the boundary residual as the weak normal trace.  ``L`` must be the
    load vector *without* any traction on the labeled arcs.

    Returns
    -------
    (dofs, lam)
        Labeled boundary dof indices and the flux values at them.

    Raises
    ------
    SolverError
        If the field does not satisfy the interior equations: the residual
        at dofs away from the boundary exceeds ``interior_tol`` (the flux
        would be meaningless).
    """
    mesh = field.mesh
    residual = K @ field.values - np.asarray(L, dtype=float)
    boundary = np.zeros(mesh.n_dofs, dtype=bool)
    for lab in BoundaryLabel:
        boundary[mesh.boundary_dofs(lab)] = True
    interior_res = np.abs(residual[~boundary]).max() if np.any(~boundary) else 0.0
    scale = max(1.0, float(np.abs(L).max()))
    if interior_res > interior_tol * scale:
        raise SolverError(
            f"interior residual {interior_res:.3e} exceeds {interior_tol:.1e} * {scale:.3g}; "
            "field does not solve the interior equations, flux recovery refused"
        )
    dofs = mesh.boundary_dofs(label)
    w = assemble_boundary_mass_lumped(mesh, label)
    return dofs, residual[dofs] / w[dofs]
