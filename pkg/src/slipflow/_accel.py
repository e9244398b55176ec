"""Numba switch.

Kernels in :mod:`slipflow.kernels` come in two flavours: a loop version
compiled with numba and a vectorized numpy version. ``SLIPFLOW_NO_NUMBA=1``
(or numba being absent) selects the numpy path for the whole process.
"""
from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("SLIPFLOW_NO_NUMBA", "") not in ("1", "true", "yes")


def njit(fn):
    """Compile with numba when available, otherwise return the function untouched."""
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True)(fn)
