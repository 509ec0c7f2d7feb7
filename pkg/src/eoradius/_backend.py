"""Kernel backend selection.

The hot inner loops (sphere ascent, eigenvector alternation, angle sweeps,
dense grid scans) exist twice: JIT-compiled with numba and as plain numpy.
The numba path is used when available; set ``EORADIUS_NO_NUMBA=1`` in the
environment to force the numpy path.  The two backends implement identical
math and are cross-checked in the test suite.
"""

import os

_flag = os.environ.get("EORADIUS_NO_NUMBA", "").strip().lower()
NUMBA_DISABLED = _flag in {"1", "true", "yes", "on"}

if NUMBA_DISABLED:
    from . import _kernels_numpy as kernels

    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba as kernels

        BACKEND = "numba"
    except ImportError:
        from . import _kernels_numpy as kernels

        BACKEND = "numpy"

__all__ = ["kernels", "BACKEND", "NUMBA_DISABLED"]
