"""Backend selection for the hot kernels.

Set ``INTERVALMINORS_DISABLE_NUMBA=1`` to force the pure-numpy path.
"""

import os

_FALSY = {"", "0", "false", "no", "off"}

NUMBA_DISABLED_BY_ENV = os.environ.get("INTERVALMINORS_DISABLE_NUMBA", "").strip().lower() not in _FALSY

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not NUMBA_DISABLED_BY_ENV

NUMBA_OPTS = {"cache": True, "nogil": True}


def njit(func):
    if not HAVE_NUMBA:
        return func
    return numba.njit(func, **NUMBA_OPTS)


def default_backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
