"""Pure-numpy fallback for the kernels in ``_jit``.

Containment is vectorised across every composition of the row part at once;
the branch-and-bound is an ordinary recursive search on top of it.
"""

from functools import lru_cache
from itertools import combinations

import numpy as np


@lru_cache(maxsize=None)
def _compositions(n: int, m: int):
    """(starts, ends) arrays, one row per composition of n into m blocks, lex order."""
    combos = list(combinations(range(1, n), m - 1))
    cuts = np.array(combos, dtype=np.int64).reshape(len(combos), m - 1)
    ncomp = cuts.shape[0]
    starts = np.hstack([np.zeros((ncomp, 1), dtype=np.int64), cuts])
    ends = np.hstack([cuts, np.full((ncomp, 1), n, dtype=np.int64)])
    return cuts, starts, ends


def _interval_or(rows: np.ndarray) -> np.ndarray:
    """table[s, e] = OR of rows[s:e] (e > s)."""
    n = rows.shape[0]
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    for s in range(n):
        table[s, s + 1:] = np.bitwise_or.accumulate(rows[s:])
    return table


def contains_oriented(rows, n_rows, n_cols, k, l):
    """Return (acuts, bcuts) for the first witness, or None."""
    if k > n_rows or l > n_cols:
        return None
    cuts, starts, ends = _compositions(n_rows, k)
    blocks = _interval_or(np.asarray(rows, dtype=np.int64))[starts, ends]  # (ncomp, k)
    shifts = np.arange(n_cols, dtype=np.int64)
    hits = (blocks[:, :, None] >> shifts[None, None, :]) & 1  # (ncomp, k, n_cols)
    colbits = (hits << np.arange(k, dtype=np.int64)[None, :, None]).sum(axis=1)
    full = (1 << k) - 1
    sat = np.zeros(blocks.shape[0], dtype=np.int64)
    nblocks = np.zeros(blocks.shape[0], dtype=np.int64)
    for j in range(n_cols):
        sat |= colbits[:, j]
        done = sat == full
        nblocks += done
        sat[done] = 0
    ok = np.flatnonzero(nblocks >= l)
    if ok.size == 0:
        return None
    c = int(ok[0])
    bcuts, sat = [], 0
    for j in range(n_cols):
        sat |= int(colbits[c, j])
        if sat == full:
            if len(bcuts) == l - 1:
                break
            bcuts.append(j + 1)
            sat = 0
    return [int(x) for x in cuts[c]], bcuts


def contains_kl(rows, cols, p, q, k, l):
    """(orientation, acuts, bcuts) or None; orientation as in ``_jit.contains_kl``."""
    hit = contains_oriented(rows, p, q, k, l)
    if hit is not None:
        return (1,) + hit
    if k != l:
        hit = contains_oriented(cols, q, p, k, l)
        if hit is not None:
            return (2,) + hit
    return None


def branch_and_bound(p, q, k, l, best, prefix):
    """Same contract as ``_jit.branch_and_bound``."""
    ne = p * q
    rows = np.zeros(p, dtype=np.int64)
    cols = np.zeros(q, dtype=np.int64)
    state = {"best": best, "found": False, "witness": np.zeros(p, dtype=np.int64), "nodes": 0}
    count = 0
    for e, bit in enumerate(prefix):
        if bit:
            i, j = divmod(e, q)
            rows[i] |= 1 << j
            cols[j] |= 1 << i
            count += 1
    if contains_kl(rows, cols, p, q, k, l) is not None:
        return best, False, state["witness"], 0

    def visit(d, count):
        state["nodes"] += 1
        if d == ne:
            if count > state["best"]:
                state["best"] = count
                state["found"] = True
                state["witness"] = rows.copy()
            return
        if count + (ne - d) <= state["best"]:
            return
        i, j = divmod(d, q)
        rows[i] |= 1 << j
        cols[j] |= 1 << i
        if contains_kl(rows, cols, p, q, k, l) is None:
            visit(d + 1, count + 1)
        rows[i] &= ~(1 << j)
        cols[j] &= ~(1 << i)
        if count + (ne - d - 1) > state["best"]:
            visit(d + 1, count)

    visit(len(prefix), count)
    return state["best"], state["found"], state["witness"], state["nodes"]
