"""numba kernels: K_{k,l} containment on bitmask rows and the edge B&B.

Rows are int64 bitmasks (part sizes <= 62). Cut arrays hold the start index
of every block after the first, so a composition of n into m blocks is
``m - 1`` strictly increasing values in [1, n - 1].
"""

import numpy as np

from ._accel import njit

MAXPART = 62


@njit
def next_cuts(cuts, r, n):
    """Advance ``cuts[:r]`` to the lexicographically next composition of n."""
    i = r - 1
    while i >= 0 and cuts[i] == n - r + i:
        i -= 1
    if i < 0:
        return False
    cuts[i] += 1
    for j in range(i + 1, r):
        cuts[j] = cuts[j - 1] + 1
    return True


@njit
def contains_oriented(rows, n_rows, n_cols, k, l, acuts, bcuts, blockmask):
    """k interval blocks on the row part, l greedy blocks on the column part.

    On success ``acuts[:k-1]`` and ``bcuts[:l-1]`` hold the witness cuts.
    """
    if k > n_rows or l > n_cols:
        return False
    for h in range(k - 1):
        acuts[h] = h + 1
    full = (1 << k) - 1
    while True:
        start = 0
        for h in range(k):
            end = acuts[h] if h < k - 1 else n_rows
            m = 0
            for i in range(start, end):
                m |= rows[i]
            blockmask[h] = m
            start = end
        sat = 0
        nb = 0
        for j in range(n_cols):
            for h in range(k):
                if (blockmask[h] >> j) & 1:
                    sat |= 1 << h
            if sat == full:
                nb += 1
                if nb == l:
                    return True
                bcuts[nb - 1] = j + 1
                sat = 0
        if not next_cuts(acuts, k - 1, n_rows):
            return False


@njit
def contains_kl(rows, cols, p, q, k, l, acuts, bcuts, blockmask):
    """0 if K_{k,l} is avoided, 1 if found with k blocks on A, 2 with k on B."""
    if contains_oriented(rows, p, q, k, l, acuts, bcuts, blockmask):
        return 1
    if k != l and contains_oriented(cols, q, p, k, l, acuts, bcuts, blockmask):
        return 2
    return 0


@njit
def branch_and_bound(p, q, k, l, best, prefix):
    """Maximum edge count of a K_{k,l}-avoiding p x q graph beyond ``best``.

    Edges are decided in lexicographic order, include before exclude. The
    first ``len(prefix)`` decisions are fixed by ``prefix`` (1 = include).
    Returns (best, found, witness_rows, nodes); ``found`` is False when no
    graph with more than the initial ``best`` edges exists under the prefix.
    """
    ne = p * q
    rows = np.zeros(p, dtype=np.int64)
    cols = np.zeros(q, dtype=np.int64)
    acuts = np.zeros(MAXPART, dtype=np.int64)
    bcuts = np.zeros(MAXPART, dtype=np.int64)
    blockmask = np.zeros(MAXPART, dtype=np.int64)
    witness = np.zeros(p, dtype=np.int64)
    found = False
    nodes = 0

    start = prefix.shape[0]
    count = 0
    for e in range(start):
        if prefix[e]:
            i = e // q
            j = e - i * q
            rows[i] |= 1 << j
            cols[j] |= 1 << i
            count += 1
    if contains_kl(rows, cols, p, q, k, l, acuts, bcuts, blockmask):
        return best, found, witness, nodes

    choice = np.full(ne + 1, -1, dtype=np.int64)
    d = start
    while d >= start:
        if d == ne:
            nodes += 1
            if count > best:
                best = count
                found = True
                for i in range(p):
                    witness[i] = rows[i]
            d -= 1
            continue
        i = d // q
        j = d - i * q
        c = choice[d]
        if c == -1:
            nodes += 1
            if count + (ne - d) <= best:
                d -= 1
                continue
            choice[d] = 1
            rows[i] |= 1 << j
            cols[j] |= 1 << i
            count += 1
            if contains_kl(rows, cols, p, q, k, l, acuts, bcuts, blockmask) == 0:
                d += 1
                continue
            # including this edge creates the pattern; fall through to exclude
        if choice[d] == 1:
            if (rows[i] >> j) & 1:
                rows[i] &= ~(1 << j)
                cols[j] &= ~(1 << i)
                count -= 1
            choice[d] = 0
            if count + (ne - d - 1) > best:
                d += 1
                continue
        choice[d] = -1
        d -= 1
    return best, found, witness, nodes
