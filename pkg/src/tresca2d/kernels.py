"""Backend selection for the numerical kernels.

The compiled Cython extension ``tresca2d._core_c`` is preferred when it was
built; otherwise the pure-NumPy fallback ``tresca2d._core_np`` is used.  Set
the environment variable ``TRESCA2D_FORCE_FALLBACK=1`` to force the fallback
(useful for benchmarking and debugging).  The backends agree to floating-point
round-off (summation order differs), and each one is deterministic run to run.
"""

from __future__ import annotations

import os

from . import _core_np

__all__ = ["BACKEND", "csr_matvec"]

if os.environ.get("TRESCA2D_FORCE_FALLBACK") == "1":
    _impl = _core_np
    BACKEND = "numpy"
else:
    try:
        from . import _core_c as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _core_np
        BACKEND = "numpy"

csr_matvec = _impl.csr_matvec
