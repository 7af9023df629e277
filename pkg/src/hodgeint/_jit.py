"""Numba switch.

Kernels in :mod:`hodgeint.kernels` are written in the numba-compatible subset
of numpy. When numba is missing, or ``HODGE_DISABLE_NUMBA=1`` is set before
import, :func:`njit` is the identity and the same code runs as plain Python.
``HODGE_THREADS`` caps the numba thread pool.
"""

import os
import warnings

_FALSY = {"", "0", "false", "no", "off"}

DISABLED_BY_ENV = os.environ.get("HODGE_DISABLE_NUMBA", "").strip().lower() not in _FALSY

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and not DISABLED_BY_ENV

# old system TBB: numba falls back to OpenMP/workqueue on its own
warnings.filterwarnings("ignore", message="The TBB threading layer")


def njit(*args, **kwargs):
    if USE_NUMBA:
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda fn: fn


prange = numba.prange if USE_NUMBA else range


def thread_cap() -> int | None:
    raw = os.environ.get("HODGE_THREADS", "").strip()
    if not raw:
        return None
    n = int(raw)
    if n < 1:
        raise ValueError("HODGE_THREADS must be a positive integer")
    return n


def apply_thread_cap() -> None:
    cap = thread_cap()
    if USE_NUMBA and cap is not None:
        numba.set_num_threads(min(cap, numba.config.NUMBA_NUM_THREADS))


def backend_name() -> str:
    return "numba" if USE_NUMBA else "python"
