"""Pure-NumPy implementations of the hot numerical kernels.

This module mirrors the interface of the compiled extension ``_core_c``;
:mod:`tresca2d.kernels` picks whichever is available at import time.
"""

from __future__ import annotations

import numpy as np

__all__ = ["csr_matvec"]


def csr_matvec(
    indptr: np.ndarray, indices: np.ndarray, data: np.ndarray, x: np.ndarray
) -> np.ndarray:
    """Multiply a CSR matrix by a dense vector.

    Parameters
    ----------
    indptr, indices, data : ndarray
        CSR structure arrays (``indptr`` has length ``nrows + 1``).
    x : ndarray
        Dense vector of length matching the column count.

    Returns
    -------
    ndarray
        The product, length ``nrows``.
    """
    contrib = data * x[indices]
    out = np.zeros(len(indptr) - 1, dtype=np.float64)
    rows = np.flatnonzero(np.diff(indptr))
    if rows.size:
        out[rows] = np.add.reduceat(contrib, indptr[rows])
    return out
