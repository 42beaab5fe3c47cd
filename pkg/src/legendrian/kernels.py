"""Backend selection for the hot kernels.

The compiled extension is used when it imports; setting
``LEGENDRIAN_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("LEGENDRIAN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None
    if _compiled is not None:
        BACKEND = "cython"
        _impl = _compiled


def grid_dijkstra(X, mask, si, sj, arc=False, backend=None):
    import numpy as np

    X = np.ascontiguousarray(X, dtype=np.float64)
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    impl = _impl
    if backend == "python":
        impl = _kernels_py
    elif backend == "cython":
        if BACKEND != "cython":
            raise ImportError("compiled kernel is not available")
        impl = _compiled
    return impl.grid_dijkstra(X, mask, int(si), int(sj), bool(arc))
