"""Backend-dispatching entry points for the hot loops.

``backend`` is ``"numba"`` or ``"numpy"``; ``None`` picks the default, which
honours ``INTERVALMINORS_DISABLE_NUMBA``.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from . import _np
from ._accel import HAVE_NUMBA, default_backend

MAXPART = 62


def _resolve(backend: Optional[str]) -> str:
    backend = backend or default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    return backend


def contains_kl_masks(rows, cols, p: int, q: int, k: int, l: int,
                      backend: Optional[str] = None):
    """Greedy K_{k,l} interval-minor test on bitmask rows/cols.

    Returns None, or ``(orientation, acuts, bcuts)`` where orientation 1 means
    k blocks on A (cut by ``acuts``) and l on B (``bcuts``), and orientation 2
    means k blocks on B (``acuts``) and l on A (``bcuts``).
    """
    if max(p, q) > MAXPART:
        raise ValueError(f"bitmask kernels support parts of size <= {MAXPART}")
    rows = np.asarray(rows, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    if _resolve(backend) == "numpy":
        return _np.contains_kl(rows, cols, p, q, k, l)
    from . import _jit

    acuts = np.zeros(MAXPART, dtype=np.int64)
    bcuts = np.zeros(MAXPART, dtype=np.int64)
    scratch = np.zeros(MAXPART, dtype=np.int64)
    o = int(_jit.contains_kl(rows, cols, p, q, k, l, acuts, bcuts, scratch))
    if o == 0:
        return None
    return o, [int(x) for x in acuts[:k - 1]], [int(x) for x in bcuts[:l - 1]]


def branch_and_bound(p: int, q: int, k: int, l: int, best: int, prefix=(),
                     backend: Optional[str] = None):
    """Run the edge B&B; returns ``(best, found, witness_rows, nodes)``."""
    prefix = np.asarray(prefix, dtype=np.int64).reshape(-1)
    if _resolve(backend) == "numpy":
        best, found, w, nodes = _np.branch_and_bound(p, q, k, l, best, prefix)
    else:
        from . import _jit

        best, found, w, nodes = _jit.branch_and_bound(p, q, k, l, best, prefix)
    return int(best), bool(found), [int(x) for x in w], int(nodes)
