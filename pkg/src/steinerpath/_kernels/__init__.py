"""Hot loops of the packing solver, with two interchangeable backends.

``STEINERPATH_NUMBA`` selects the backend at import time: ``1`` forces the
numba kernels, ``0`` forces the pure numpy/int-bitset kernels, and anything
else (or unset) uses numba when it imports cleanly. Both backends produce
identical output for identical input, so results never depend on the flag.
"""
from __future__ import annotations

import os

from . import _numpy as numpy_backend

numba_backend = None
_flag = os.environ.get("STEINERPATH_NUMBA", "auto").strip().lower()

if _flag not in ("0", "false", "no", "off"):
    try:
        from . import _numba as numba_backend
    except ImportError:
        if _flag in ("1", "true", "yes", "on"):
            raise
        numba_backend = None

backend = numba_backend if numba_backend is not None else numpy_backend
BACKEND_NAME = "numba" if backend is numba_backend else "numpy"

enumerate_paths = backend.enumerate_paths
max_compatible_set = backend.max_compatible_set

__all__ = [
    "BACKEND_NAME",
    "enumerate_paths",
    "max_compatible_set",
    "numba_backend",
    "numpy_backend",
]
