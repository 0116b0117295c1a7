# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot numerical kernels.

Mirrors the interface of ``tresca2d._core_np``; see that module for the
reference semantics.  :mod:`tresca2d.kernels` picks this extension when it
was built.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

__all__ = ["csr_matvec"]


def csr_matvec(indptr, indices, data, x):
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
    cdef const cnp.int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const cnp.int64_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const cnp.float64_t[::1] dv = np.ascontiguousarray(data, dtype=np.float64)
    cdef const cnp.float64_t[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    out = np.zeros(ip.shape[0] - 1, dtype=np.float64)
    cdef cnp.float64_t[::1] ov = out
    cdef Py_ssize_t row, k, nrows = ip.shape[0] - 1
    cdef cnp.float64_t acc
    with nogil:
        for row in range(nrows):
            acc = 0.0
            for k in range(ip[row], ip[row + 1]):
                acc += dv[k] * xv[ix[k]]
            ov[row] = acc
    return out
