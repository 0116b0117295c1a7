"""Symmetric sparse matrices in CSR form and a deterministic PCG solver.

The full symmetric pattern is stored (both triangles), which keeps the
matrix-vector product a single CSR pass.  Assembly goes through
:meth:`SparseSymMatrix.from_coo`, which accumulates duplicate entries in
insertion order so repeated assemblies are bitwise reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels

__all__ = ["SolverError", "SparseSymMatrix", "pcg"]


class SolverError(RuntimeError):
    """The iterative solver failed to reach the requested tolerance."""


@dataclass(frozen=True)
class SparseSymMatrix:
    """Square symmetric matrix in compressed sparse row layout.

    Parameters
    ----------
    n : int
        Matrix dimension.
    indptr : ndarray, shape (n + 1,)
        Row pointers.
    indices : ndarray
        Column indices, sorted within each row, no duplicates.
    data : ndarray
        Entry values aligned with ``indices``.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    data: np.ndarray

    @classmethod
    def from_coo(
        cls, n: int, rows: np.ndarray, cols: np.ndarray, vals: np.ndarray
    ) -> "SparseSymMatrix":
        """Build from coordinate triplets, summing duplicates.

        Duplicate entries are summed in their original insertion order
        (stable sort), so symmetric pairs assembled from symmetric element
        matrices stay exactly equal.
        """
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        vals = np.asarray(vals, dtype=np.float64)
        if not (len(rows) == len(cols) == len(vals)):
            raise ValueError("rows, cols, vals must have equal length")
        if len(rows) and (rows.min() < 0 or rows.max() >= n or cols.min() < 0 or cols.max() >= n):
            raise ValueError("coordinate index out of range")
        order = np.lexsort((cols, rows))
        r, c, v = rows[order], cols[order], vals[order]
        if len(r):
            starts = np.flatnonzero(
                np.concatenate(([True], (np.diff(r) != 0) | (np.diff(c) != 0)))
            )
            data = np.add.reduceat(v, starts)
            r, c = r[starts], c[starts]
        else:
            data = v
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(r, minlength=n), out=indptr[1:])
        return cls(n=n, indptr=indptr, indices=c, data=data)

    def matvec(self, x: np.ndarray) -> np.ndarray:
        """Product ``A @ x``."""
        return kernels.csr_matvec(self.indptr, self.indices, self.data, x)

    __matmul__ = matvec

    def diagonal(self) -> np.ndarray:
        """The matrix diagonal, zeros where no entry is stored."""
        diag = np.zeros(self.n)
        row_of = np.repeat(np.arange(self.n), np.diff(self.indptr))
        on_diag = self.indices == row_of
        diag[row_of[on_diag]] = self.data[on_diag]
        return diag

    def toarray(self) -> np.ndarray:
        """Dense copy (tests and small systems only)."""
        dense = np.zeros((self.n, self.n))
        row_of = np.repeat(np.arange(self.n), np.diff(self.indptr))
        dense[row_of, self.indices] = self.data
        return dense

    def eliminate(self, dofs: np.ndarray, values: np.ndarray, rhs: np.ndarray):
        """Impose ``x[dofs] = values`` by symmetric row/column elimination.

        Returns a same-size system ``(A, b)`` whose constrained rows are
        identity rows: off-diagonal entries in constrained rows and columns
        are dropped, constrained diagonals become 1, and the right-hand side
        is corrected by the constrained columns so free dofs solve the
        reduced problem exactly.
        """
        dofs = np.asarray(dofs, dtype=np.int64)
        values = np.asarray(values, dtype=np.float64)
        constrained = np.zeros(self.n, dtype=bool)
        constrained[dofs] = True

        lift = np.zeros(self.n)
        lift[dofs] = values
        b = np.asarray(rhs, dtype=np.float64) - self.matvec(lift)
        b[dofs] = values

        row_of = np.repeat(np.arange(self.n), np.diff(self.indptr))
        keep = ~(constrained[row_of] | constrained[self.indices])
        rows = np.concatenate([row_of[keep], dofs])
        cols = np.concatenate([self.indices[keep], dofs])
        vals = np.concatenate([self.data[keep], np.ones(len(dofs))])
        return SparseSymMatrix.from_coo(self.n, rows, cols, vals), b

    def write_coordinate_text(self, path: str) -> None:
        """Export as ``i j value`` lines (debugging aid)."""
        row_of = np.repeat(np.arange(self.n), np.diff(self.indptr))
        with open(path, "w", encoding="ascii") as fh:
            for i, j, v in zip(row_of, self.indices, self.data):
                fh.write(f"{i} {j} {v:.17g}\n")


def pcg(
    matrix: SparseSymMatrix,
    b: np.ndarray,
    tol: float = 1e-12,
    x0: np.ndarray | None = None,
    max_iter: int | None = None,
) -> tuple[np.ndarray, int, float]:
    """Conjugate gradient with Jacobi preconditioning.

    Deterministic (no randomness, fixed reduction order) and warm-startable
    through ``x0``.  Convergence is declared on the recursive residual
    ``||r_k|| <= tol * ||b||``; the returned residual is the *true* one,
    ``||b - A x|| / ||b||``, recomputed once at exit.  On large
    ill-conditioned systems the true residual can sit slightly above ``tol``
    (the double-precision floor scales with the condition number); callers
    that care should inspect the returned value.

    Returns
    -------
    (x, iterations, relative_residual)

    Raises
    ------
    SolverError
        If the recursive residual does not pass the test within ``max_iter``
        iterations (default ``10 * n``), or the matrix is detected indefinite.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    n = matrix.n
    if max_iter is None:
        max_iter = 10 * n
    b = np.asarray(b, dtype=np.float64)
    norm_b = float(np.linalg.norm(b))
    if norm_b == 0.0:
        return np.zeros(n), 0, 0.0

    diag = matrix.diagonal()
    if np.any(diag <= 0.0):
        raise SolverError("matrix has a non-positive diagonal entry; not SPD")

    x = np.zeros(n) if x0 is None else np.array(x0, dtype=np.float64)
    r = b - matrix.matvec(x)
    relres = float(np.linalg.norm(r)) / norm_b
    if relres <= tol:
        return x, 0, relres

    z = r / diag
    p = z.copy()
    rz = float(r @ z)
    for iteration in range(1, max_iter + 1):
        ap = matrix.matvec(p)
        pap = float(p @ ap)
        if pap <= 0.0:
            raise SolverError(f"matrix is not positive definite (p^T A p = {pap:g})")
        alpha = rz / pap
        x += alpha * p
        r -= alpha * ap
        if float(np.linalg.norm(r)) <= tol * norm_b:
            relres = float(np.linalg.norm(b - matrix.matvec(x))) / norm_b
            return x, iteration, relres
        z = r / diag
        rz_next = float(r @ z)
        p = z + (rz_next / rz) * p
        rz = rz_next
    relres = float(np.linalg.norm(b - matrix.matvec(x))) / norm_b
    raise SolverError(
        f"PCG did not converge in {max_iter} iterations (relative residual {relres:.3e}, "
        f"tol {tol:.3e})"
    )
