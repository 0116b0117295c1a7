"""Triangulations of the unit disk with labeled boundary arcs.

The mesher is polar-structured: concentric rings of vertices whose counts
grow linearly with radius, so radial and tangential spacing match.  The
boundary ring carries exactly ``n_boundary`` vertices placed arc-by-arc so
that every label-range endpoint lands on a vertex; boundary conditions on
angular arcs therefore align exactly with mesh edges.

Meshes are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "AngleRange",
    "BoundaryLabel",
    "LabelError",
    "Mesh2D",
    "MeshError",
    "generate_unit_disk",
    "p2_enrich",
    "read_mesh",
    "write_mesh",
]

_TWO_PI = 2.0 * math.pi
#: Angular tolerance used when chaining label ranges around the circle.
_ANGLE_TOL = 1e-12
#: Quality gate for the structured generator, in degrees.
_MIN_ANGLE_DEG = 20.0


class MeshError(ValueError):
    """A mesh is structurally invalid or cannot be generated as requested."""


class LabelError(MeshError):
    """Boundary label ranges overlap, leave gaps, or do not cover the circle."""


class BoundaryLabel(Enum):
    """Kind of boundary condition attached to a boundary edge."""

    DIRICHLET = "D"
    NEUMANN = "N"
    TRESCA = "T"

    @classmethod
    def from_tag(cls, tag: str) -> "BoundaryLabel":
        try:
            return cls(tag)
        except ValueError:
            raise LabelError(f"unknown boundary label {tag!r}; expected one of D, N, T") from None


def _normalize_angle(theta: float) -> float:
    """Map an angle to the canonical chart ``(-pi, pi]``."""
    return math.pi - (math.pi - theta) % _TWO_PI


@dataclass(frozen=True)
class AngleRange:
    """Half-open angular interval ``(theta_min, theta_max]`` on the circle.

    Bounds must lie in ``(-2*pi, 2*pi]`` with ``theta_min < theta_max`` and a
    span of at most ``2*pi``.  Ranges are compared, intersected, and stored
    after normalization to the chart ``(-pi, pi]``; a range may wrap through
    the seam at ``theta = pi`` (for example ``(-5*pi/4, pi/4]``).

    Parameters
    ----------
    theta_min, theta_max : float
        Interval bounds, radians.
    """

    theta_min: float
    theta_max: float

    def __post_init__(self) -> None:
        if not (-_TWO_PI < self.theta_min <= _TWO_PI):
            raise ValueError(f"theta_min={self.theta_min} outside (-2*pi, 2*pi]")
        if not (-_TWO_PI < self.theta_max <= _TWO_PI):
            raise ValueError(f"theta_max={self.theta_max} outside (-2*pi, 2*pi]")
        if not self.theta_min < self.theta_max:
            raise ValueError(
                f"empty angle range: theta_min={self.theta_min} >= theta_max={self.theta_max}"
            )
        if self.theta_max - self.theta_min > _TWO_PI + _ANGLE_TOL:
            raise ValueError("angle range spans more than the full circle")

    @property
    def span(self) -> float:
        return self.theta_max - self.theta_min

    def intervals(self) -> list[tuple[float, float]]:
        """Normalized sub-intervals ``(lo, hi]`` of ``(-pi, pi]`` covered by the range.

        A full-circle range yields the single interval ``(-pi, pi]``; a range
        wrapping the seam yields two pieces.
        """
        if self.span >= _TWO_PI - _ANGLE_TOL:
            return [(-math.pi, math.pi)]
        lo = _normalize_angle(self.theta_min)
        hi = _normalize_angle(self.theta_max)
        if lo < hi:
            return [(lo, hi)]
        return [(lo, math.pi), (-math.pi, hi)]

    def contains_angle(self, theta: float, tol: float = _ANGLE_TOL) -> bool:
        """Whether the normalized angle ``theta`` lies in the range."""
        t = _normalize_angle(theta)
        for lo, hi in self.intervals():
            if lo - tol < t <= hi + tol:
                return True
            if lo - tol < t + _TWO_PI <= hi + tol or lo - tol < t - _TWO_PI <= hi + tol:
                return True
        return False


@dataclass(frozen=True)
class Mesh2D:
    """Conforming triangulation of a disk-like domain.

    Parameters
    ----------
    vertices : ndarray, shape (nv, 2)
        Vertex coordinates.
    triangles : ndarray, shape (nt, 3)
        Vertex indices per triangle, counter-clockwise.
    boundary_edges : ndarray, shape (nb, 2)
        Vertex indices of boundary edges, oriented along the boundary loop.
    boundary_labels : tuple of BoundaryLabel
        One label per boundary edge.
    fe_order : int
        1 for vertex dofs only, 2 after midpoint enrichment.
    edge_midpoint_dofs : dict, optional
        Maps each geometric edge (sorted vertex pair) to its midpoint dof
        index.  Present exactly when ``fe_order == 2``.

    Notes
    -----
    Instances are immutable: coordinate and index arrays are marked
    read-only, so a constructed mesh can be shared freely between threads.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    boundary_edges: np.ndarray
    boundary_labels: tuple[BoundaryLabel, ...]
    fe_order: int = 1
    edge_midpoint_dofs: dict[tuple[int, int], int] | None = None
    generator_params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        verts = np.ascontiguousarray(np.asarray(self.vertices, dtype=float))
        tris = np.ascontiguousarray(np.asarray(self.triangles, dtype=np.int64))
        edges = np.ascontiguousarray(np.asarray(self.boundary_edges, dtype=np.int64))
        if verts.ndim != 2 or verts.shape[1] != 2:
            raise MeshError(f"vertices must have shape (nv, 2), got {verts.shape}")
        if tris.ndim != 2 or tris.shape[1] != 3:
            raise MeshError(f"triangles must have shape (nt, 3), got {tris.shape}")
        if edges.ndim != 2 or edges.shape[1] != 2:
            raise MeshError(f"boundary_edges must have shape (nb, 2), got {edges.shape}")
        if len(self.boundary_labels) != len(edges):
            raise MeshError("one boundary label required per boundary edge")
        if self.fe_order not in (1, 2):
            raise MeshError(f"fe_order must be 1 or 2, got {self.fe_order}")
        if (self.fe_order == 2) != (self.edge_midpoint_dofs is not None):
            raise MeshError("edge_midpoint_dofs must be present exactly when fe_order == 2")
        for arr in (verts, tris, edges):
            arr.flags.writeable = False
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "triangles", tris)
        object.__setattr__(self, "boundary_edges", edges)
        object.__setattr__(self, "boundary_labels", tuple(self.boundary_labels))

    # -- sizes ---------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def n_triangles(self) -> int:
        return self.triangles.shape[0]

    @property
    def n_dofs(self) -> int:
        if self.fe_order == 1:
            return self.n_vertices
        return self.n_vertices + len(self.edge_midpoint_dofs)

    # -- derived geometry ----------------------------------------------

    def dof_coords(self) -> np.ndarray:
        """Coordinates of every dof; midpoint dofs sit at edge midpoints."""
        if self.fe_order == 1:
            return self.vertices
        coords = np.empty((self.n_dofs, 2))
        coords[: self.n_vertices] = self.vertices
        for (i, j), dof in self.edge_midpoint_dofs.items():
            coords[dof] = 0.5 * (self.vertices[i] + self.vertices[j])
        return coords

    def edges_with_label(self, label: BoundaryLabel) -> np.ndarray:
        """Boundary edges carrying ``label``, shape ``(m, 2)``."""
        mask = [lab is label for lab in self.boundary_labels]
        return self.boundary_edges[np.asarray(mask, dtype=bool)]

    def boundary_dofs(self, label: BoundaryLabel) -> np.ndarray:
        """Sorted dof indices lying on edges with ``label`` (midpoints included)."""
        edges = self.edges_with_label(label)
        dofs = set(int(v) for v in edges.ravel())
        if self.fe_order == 2:
            for i, j in edges:
                key = (int(i), int(j)) if i < j else (int(j), int(i))
                dofs.add(self.edge_midpoint_dofs[key])
        return np.array(sorted(dofs), dtype=np.int64)

    def boundary_edge_lengths(self) -> np.ndarray:
        p = self.vertices[self.boundary_edges[:, 0]]
        q = self.vertices[self.boundary_edges[:, 1]]
        return np.hypot(*(q - p).T)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _all_edges(triangles: np.ndarray) -> dict[tuple[int, int], int]:
    """Count how many triangles share each (sorted) geometric edge."""
    counts: dict[tuple[int, int], int] = {}
    for i, j, k in triangles:
        for a, b in ((i, j), (j, k), (k, i)):
            key = (int(a), int(b)) if a < b else (int(b), int(a))
            counts[key] = counts.get(key, 0) + 1
    return counts


def signed_areas(mesh: Mesh2D) -> np.ndarray:
    """Signed area of every triangle (positive for counter-clockwise)."""
    p = mesh.vertices[mesh.triangles]
    return 0.5 * (
        (p[:, 1, 0] - p[:, 0, 0]) * (p[:, 2, 1] - p[:, 0, 1])
        - (p[:, 2, 0] - p[:, 0, 0]) * (p[:, 1, 1] - p[:, 0, 1])
    )


def min_triangle_angle(mesh: Mesh2D) -> float:
    """Smallest interior angle over all triangles, in degrees."""
    p = mesh.vertices[mesh.triangles]
    angles = np.empty((mesh.n_triangles, 3))
    for v in range(3):
        a = p[:, (v + 1) % 3] - p[:, v]
        b = p[:, (v + 2) % 3] - p[:, v]
        cosang = np.sum(a * b, axis=1) / (np.linalg.norm(a, axis=1) * np.linalg.norm(b, axis=1))
        angles[:, v] = np.degrees(np.arccos(np.clip(cosang, -1.0, 1.0)))
    return float(angles.min())


def validate_mesh(mesh: Mesh2D) -> None:
    """Check structural invariants; raise :class:`MeshError` on violation.

    Verifies positive triangle orientation, the disk Euler relation
    ``V - E + F = 1``, that every boundary edge borders exactly one triangle,
    and that the labeled boundary edges form a single closed loop.
    """
    if mesh.triangles.size and mesh.triangles.max() >= mesh.n_vertices:
        raise MeshError("triangle references a vertex index out of range")
    if mesh.triangles.min(initial=0) < 0 or mesh.boundary_edges.min(initial=0) < 0:
        raise MeshError("negative vertex index")
    if mesh.boundary_edges.size and mesh.boundary_edges.max() >= mesh.n_vertices:
        raise MeshError("boundary edge references a vertex index out of range")

    areas = signed_areas(mesh)
    if np.any(areas <= 0.0):
        raise MeshError("triangle with non-positive signed area (orientation or degeneracy)")

    counts = _all_edges(mesh.triangles)
    n_edges = len(counts)
    euler = mesh.n_vertices - n_edges + mesh.n_triangles
    if euler != 1:
        raise MeshError(f"Euler relation V - E + F = 1 violated: got {euler}")

    hull = {key for key, c in counts.items() if c == 1}
    declared = set()
    for i, j in mesh.boundary_edges:
        key = (int(i), int(j)) if i < j else (int(j), int(i))
        if key in declared:
            raise MeshError(f"boundary edge {key} listed twice")
        declared.add(key)
    if declared != hull:
        missing = hull - declared
        if missing:
            raise MeshError(f"boundary edge {sorted(missing)[0]} has no label record")
        raise MeshError("labeled edge is not a boundary edge of the triangulation")

    # The boundary must be one closed loop: every boundary vertex has
    # exactly two incident boundary edges, and the edges are connected.
    adj: dict[int, list[int]] = {}
    for i, j in mesh.boundary_edges:
        adj.setdefault(int(i), []).append(int(j))
        adj.setdefault(int(j), []).append(int(i))
    if any(len(nb) != 2 for nb in adj.values()):
        raise MeshError("boundary is not a simple closed loop")
    start = next(iter(adj))
    prev, cur = None, start
    visited = 1
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        prev, cur = cur, nxt
        visited += 1
        if visited > len(adj):
            raise MeshError("boundary loop does not close")
    if visited != len(adj):
        raise MeshError("boundary has more than one connected loop")


# ---------------------------------------------------------------------------
# labeled arcs
# ---------------------------------------------------------------------------


def _chain_label_intervals(
    label_ranges: Sequence[tuple[AngleRange, BoundaryLabel]],
) -> list[tuple[float, float, BoundaryLabel]]:
    """Normalize ranges into a gap-free chain of arcs ``(lo, hi, label)``.

    The returned arcs are sorted by ``lo``, chain exactly around the circle
    (``hi`` of one arc equals ``lo`` of the next within tolerance), and the
    last arc's ``hi`` wraps to the first arc's ``lo`` plus ``2*pi``.
    """
    if not label_ranges:
        raise LabelError("at least one labeled angle range is required")
    pieces: list[tuple[float, float, BoundaryLabel]] = []
    for rng, label in label_ranges:
        if not isinstance(label, BoundaryLabel):
            raise LabelError(f"expected a BoundaryLabel, got {label!r}")
        for lo, hi in rng.intervals():
            pieces.append((lo, hi, label))
    pieces.sort(key=lambda p: (p[0], p[1]))

    total = sum(hi - lo for lo, hi, _ in pieces)
    if total > _TWO_PI + len(pieces) * _ANGLE_TOL:
        raise LabelError("label ranges overlap: total angular span exceeds 2*pi")
    if total < _TWO_PI - len(pieces) * _ANGLE_TOL:
        raise LabelError("label ranges do not cover the circle: total span below 2*pi")
    for (lo1, hi1, _), (lo2, hi2, _) in zip(pieces, pieces[1:]):
        if lo2 < hi1 - _ANGLE_TOL:
            raise LabelError(
                f"label ranges overlap near theta = {lo2:.6f} (arcs ({lo1:.6f}, {hi1:.6f}] "
                f"and ({lo2:.6f}, {hi2:.6f}])"
            )
        if lo2 > hi1 + _ANGLE_TOL:
            raise LabelError(f"label ranges leave a gap between theta = {hi1:.6f} and {lo2:.6f}")
    wrap_gap = (pieces[0][0] + _TWO_PI) - pieces[-1][1]
    if abs(wrap_gap) > _ANGLE_TOL:
        raise LabelError("label ranges leave a gap (or overlap) at the chart seam theta = pi")

    # Merge the seam so arcs are a clean cyclic chain starting at pieces[0].
    return pieces


def _boundary_angles(
    n_boundary: int, arcs: list[tuple[float, float, BoundaryLabel]]
) -> tuple[np.ndarray, list[tuple[int, int, BoundaryLabel]]]:
    """Place ``n_boundary`` angles so every arc endpoint is a vertex.

    Edges are apportioned to arcs proportionally to arc length (largest
    remainder, every arc keeps at least one edge).  Returns the sorted
    angles and, per arc, the (start, stop) indices into the angle array
    together with the arc's label; stop is exclusive and wraps.

    Within each arc the vertices are equally spaced, so commensurate
    arc lengths reproduce the equally-spaced boundary ring exactly.
    """
    lengths = [hi - lo for lo, hi, _ in arcs]
    quotas = [n_boundary * ln / _TWO_PI for ln in lengths]
    counts = [max(1, math.floor(q)) for q in quotas]
    deficit = n_boundary - sum(counts)
    if deficit < 0:
        raise MeshError(
            f"n_boundary={n_boundary} is too small to give each of the "
            f"{len(arcs)} labeled arcs at least one edge"
        )
    order = sorted(range(len(arcs)), key=lambda a: (counts[a] - quotas[a], a))
    for a in order[:deficit]:
        counts[a] += 1

    angles: list[float] = []
    spans: list[tuple[int, int, BoundaryLabel]] = []
    for (lo, hi, label), m in zip(arcs, counts):
        start = len(angles)
        step = (hi - lo) / m
        angles.extend(lo + step * s for s in range(m))
        spans.append((start, start + m, label))
    return np.array(angles), spans


# ---------------------------------------------------------------------------
# structured disk generator
# ---------------------------------------------------------------------------


def _merge_ring_pair(
    inner_idx: np.ndarray,
    inner_ang: np.ndarray,
    outer_idx: np.ndarray,
    outer_ang: np.ndarray,
) -> list[tuple[int, int, int]]:
    """Triangulate the annulus between two vertex rings sorted by angle.

    Walks both rings simultaneously, always advancing the ring whose next
    vertex comes first in angle; produces ``len(inner) + len(outer)``
    counter-clockwise triangles.
    """
    p, q = len(inner_idx), len(outer_idx)
    base = inner_ang[0]
    rel_in = np.concatenate([(inner_ang - base) % _TWO_PI, [_TWO_PI]])
    rel_in[0] = 0.0

    signed = (outer_ang - base + math.pi) % _TWO_PI - math.pi
    j0 = int(np.argmin(np.abs(signed)))
    gaps = (np.roll(outer_ang, -j0 - 1) - np.roll(outer_ang, -j0)) % _TWO_PI
    rel_out = np.empty(q + 1)
    rel_out[0] = signed[j0]
    rel_out[1:] = signed[j0] + np.cumsum(gaps)

    tris: list[tuple[int, int, int]] = []
    s_in = s_out = 0
    while s_in < p or s_out < q:
        take_inner = s_in < p and (s_out == q or rel_in[s_in + 1] <= rel_out[s_out + 1])
        if take_inner:
            tris.append(
                (
                    int(inner_idx[s_in % p]),
                    int(outer_idx[(j0 + s_out) % q]),
                    int(inner_idx[(s_in + 1) % p]),
                )
            )
            s_in += 1
        else:
            tris.append(
                (
                    int(outer_idx[(j0 + s_out) % q]),
                    int(outer_idx[(j0 + s_out + 1) % q]),
                    int(inner_idx[s_in % p]),
                )
            )
            s_out += 1
    return tris


def generate_unit_disk(
    n_boundary: int,
    label_ranges: Sequence[tuple[AngleRange, BoundaryLabel]],
) -> Mesh2D:
    """Generate a structured triangulation of the unit disk.

    Parameters
    ----------
    n_boundary : int
        Number of boundary vertices (hence boundary edges); at least 8.
    label_ranges : sequence of (AngleRange, BoundaryLabel)
        Disjoint angular ranges covering the full circle.  Every range
        endpoint is snapped into the boundary vertex set, so label
        transitions always happen at vertices.

    Returns
    -------
    Mesh2D
        Linear (P1) mesh with positively oriented triangles, boundary
        vertices exactly on the unit circle, and minimum triangle angle
        of at least 20 degrees.

    Raises
    ------
    MeshError
        If ``n_boundary`` is too small or the generated mesh fails the
        quality gate.
    LabelError
        If the ranges overlap or fail to cover the circle.
    """
    if n_boundary < 8:
        raise MeshError(f"n_boundary must be at least 8, got {n_boundary}")
    arcs = _chain_label_intervals(label_ranges)
    bd_angles, spans = _boundary_angles(n_boundary, arcs)

    n_rings = max(1, int(math.floor(n_boundary / _TWO_PI + 0.5)))
    ring_counts = [
        max(3, int(math.floor(n_boundary * k / n_rings + 0.5))) for k in range(1, n_rings)
    ]
    ring_counts.append(n_boundary)

    coords: list[np.ndarray] = [np.zeros((1, 2))]
    ring_indices: list[np.ndarray] = []
    ring_angles: list[np.ndarray] = []
    next_index = 1
    for k, count in enumerate(ring_counts, start=1):
        r = k / n_rings
        if k < n_rings:
            theta = -math.pi + _TWO_PI * np.arange(count) / count
        else:
            theta = bd_angles
        coords.append(np.column_stack([r * np.cos(theta), r * np.sin(theta)]))
        ring_indices.append(np.arange(next_index, next_index + count))
        ring_angles.append(theta)
        next_index += count
    vertices = np.vstack(coords)

    triangles: list[tuple[int, int, int]] = []
    first = ring_indices[0]
    m = len(first)
    for s in range(m):
        triangles.append((0, int(first[s]), int(first[(s + 1) % m])))
    for k in range(len(ring_counts) - 1):
        triangles.extend(
            _merge_ring_pair(ring_indices[k], ring_angles[k], ring_indices[k + 1], ring_angles[k + 1])
        )

    bd_idx = ring_indices[-1]
    boundary_edges = []
    boundary_labels = []
    for start, stop, label in spans:
        for s in range(start, stop):
            boundary_edges.append((int(bd_idx[s]), int(bd_idx[(s + 1) % n_boundary])))
            boundary_labels.append(label)

    mesh = Mesh2D(
        vertices=vertices,
        triangles=np.array(triangles),
        boundary_edges=np.array(boundary_edges),
        boundary_labels=tuple(boundary_labels),
        generator_params={"n_boundary": n_boundary, "n_rings": n_rings},
    )
    validate_mesh(mesh)
    min_angle = min_triangle_angle(mesh)
    if min_angle < _MIN_ANGLE_DEG:
        raise MeshError(
            f"generated mesh fails the quality gate: min triangle angle "
            f"{min_angle:.2f} deg < {_MIN_ANGLE_DEG} deg"
        )
    return mesh


# ---------------------------------------------------------------------------
# P2 enrichment
# ---------------------------------------------------------------------------


def p2_enrich(mesh: Mesh2D) -> Mesh2D:
    """Add one midpoint dof per geometric edge, turning a P1 mesh quadratic.

    Midpoint dofs are numbered after the vertex dofs, in lexicographic order
    of the (sorted) edge vertex pairs, so enrichment is deterministic.

    Raises
    ------
    MeshError
        If the mesh is already quadratic.
    """
    if mesh.fe_order != 1:
        raise MeshError("mesh is already quadratic (fe_order == 2)")
    edges = sorted(_all_edges(mesh.triangles))
    midpoint_dofs = {edge: mesh.n_vertices + rank for rank, edge in enumerate(edges)}
    return Mesh2D(
        vertices=mesh.vertices,
        triangles=mesh.triangles,
        boundary_edges=mesh.boundary_edges,
        boundary_labels=mesh.boundary_labels,
        fe_order=2,
        edge_midpoint_dofs=midpoint_dofs,
        generator_params=dict(mesh.generator_params),
    )


# ---------------------------------------------------------------------------
# text serialization
# ---------------------------------------------------------------------------


def write_mesh(mesh: Mesh2D, path: str) -> None:
    """Write a P1 mesh in the plain-text format (``v``/``t``/``e`` records).

    Coordinates are written with 17 significant digits, enough to
    round-trip IEEE doubles exactly.  Quadratic meshes are rejected: the
    format stores geometry only, and midpoint enrichment is deterministic,
    so callers re-enrich after reading.
    """
    if mesh.fe_order != 1:
        raise MeshError("only P1 meshes are serializable; enrich after reading instead")
    lines = [f"# unit disk mesh: {mesh.n_vertices} vertices, {mesh.n_triangles} triangles"]
    for x, y in mesh.vertices:
        lines.append(f"v {x:.17g} {y:.17g}")
    for i, j, k in mesh.triangles:
        lines.append(f"t {i} {j} {k}")
    for (i, j), label in zip(mesh.boundary_edges, mesh.boundary_labels):
        lines.append(f"e {i} {j} {label.value}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_mesh(path: str) -> Mesh2D:
    """Read a mesh written by :func:`write_mesh`; validates all invariants.

    Raises
    ------
    MeshError
        On malformed records, out-of-range indices, or a structurally
        invalid triangulation (including boundary edges missing a label).
    """
    verts: list[tuple[float, float]] = []
    tris: list[tuple[int, int, int]] = []
    edges: list[tuple[int, int]] = []
    labels: list[BoundaryLabel] = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if parts[0] == "v" and len(parts) == 3:
                    verts.append((float(parts[1]), float(parts[2])))
                elif parts[0] == "t" and len(parts) == 4:
                    tris.append((int(parts[1]), int(parts[2]), int(parts[3])))
                elif parts[0] == "e" and len(parts) == 4:
                    edges.append((int(parts[1]), int(parts[2])))
                    labels.append(BoundaryLabel.from_tag(parts[3]))
                else:
                    raise MeshError(f"{path}:{lineno}: malformed record {line!r}")
            except ValueError as exc:
                if isinstance(exc, MeshError):
                    raise
                raise MeshError(f"{path}:{lineno}: malformed record {line!r}") from exc
    mesh = Mesh2D(
        vertices=np.array(verts, dtype=float).reshape(-1, 2),
        triangles=np.array(tris, dtype=np.int64).reshape(-1, 3),
        boundary_edges=np.array(edges, dtype=np.int64).reshape(-1, 2),
        boundary_labels=tuple(labels),
    )
    validate_mesh(mesh)
    return mesh
