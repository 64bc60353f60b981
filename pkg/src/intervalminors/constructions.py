"""Extremal K_{k,l}- and K_{l_1,...,l_t}-avoiding constructions.

Every public constructor runs the result through the containment checker
unless ``verify=False`` and raises :class:`ConstructionError` if the graph
contains the pattern it is meant to avoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .checker import contains_kl, contains_multipartite
from .formulas import periodic_height, periodic_split
from .graphs import OrderedBipartiteGraph, OrderedMultipartiteGraph


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ExamplePQParams:
    """Parameters of the two-layer family: rows 0..l-2 of B are complete,
    the remaining B vertices see only the A vertices listed in ``i_h``."""

    p: int
    q: int
    k: int
    l: int
    i_h: tuple = None

    def __post_init__(self):
        p, q, k, l = self.p, self.q, self.k, self.l
        if min(p, q, k, l) < 1:
            raise ConstructionError("p, q, k, l must be positive")
        if not (k <= p and l <= q and k <= l):
            raise ConstructionError(f"need k <= p, l <= q, k <= l (got p={p}, q={q}, k={k}, l={l})")
        i_h = tuple(range(k - 1)) if self.i_h is None else tuple(sorted(int(i) for i in self.i_h))
        if len(i_h) != k - 1 or len(set(i_h)) != k - 1:
            raise ConstructionError(f"i_h must list k-1={k - 1} distinct A indices, got {i_h}")
        if any(not 0 <= i < p for i in i_h):
            raise ConstructionError(f"i_h indices must lie in [0, {p}), got {i_h}")
        object.__setattr__(self, "i_h", i_h)

    def edges(self) -> frozenset:
        low = {(i, j) for i in range(self.p) for j in range(self.l - 1)}
        high = {(i, j) for i in self.i_h for j in range(self.l - 1, self.q)}
        return frozenset(low | high)


def example_pq(p: int, q: int, k: int, l: int, i_h: Optional[Sequence[int]] = None,
               verify: bool = True) -> OrderedBipartiteGraph:
    """Two-layer K_{k,l}-avoiding graph with (l-1)(p-k+1) + q(k-1) edges.

    Avoidance is guaranteed for k <= p <= l-1; ``i_h`` is 0-based and
    defaults to the k-1 bottom A vertices.
    """
    params = ExamplePQParams(p, q, k, l, None if i_h is None else tuple(i_h))
    g = OrderedBipartiteGraph(p, q, params.edges())
    if verify and contains_kl(g, k, l) is not None:
        raise ConstructionError(f"example_pq({p}, {q}, {k}, {l}, i_h={params.i_h}) contains K_{{{k},{l}}}")
    return g


# Raw graphs (p, q, edges) may have empty parts; only used while gluing.

def _complete_raw(p: int, q: int):
    return p, q, frozenset((i, j) for i in range(p) for j in range(q))


def _glue(lower, upper, c: int):
    """Identify the top c vertices of each part of ``lower`` with the bottom c of ``upper``."""
    p1, q1, e1 = lower
    p2, q2, e2 = upper
    da, db = p1 - c, q1 - c
    shifted = frozenset((i + da, j + db) for i, j in e2)
    return p1 + p2 - c, q1 + q2 - c, e1 | shifted


def _corner_complete(edges, rows, cols) -> bool:
    return all((i, j) in edges for i in rows for j in cols)


def concatenate(g: OrderedBipartiteGraph, g2: OrderedBipartiteGraph, k: int) -> OrderedBipartiteGraph:
    """Glue ``g2`` on top of ``g`` along a shared complete (k-1) x (k-1) corner.

    The top k-1 vertices of each part of ``g`` are identified with the bottom
    k-1 vertices of the matching part of ``g2``; ``g`` comes first in both
    linear orders. For k = 1 this is the disjoint ordered sum.
    """
    c = k - 1
    if c < 0:
        raise ConstructionError("k must be positive")
    if min(g.p, g.q, g2.p, g2.q) < c:
        raise ConstructionError(f"every part needs at least k-1={c} vertices")
    if not _corner_complete(g.edges, range(g.p - c, g.p), range(g.q - c, g.q)):
        raise ConstructionError("the top (k-1)x(k-1) corner of the first graph is not complete")
    if not _corner_complete(g2.edges, range(c), range(c)):
        raise ConstructionError("the bottom (k-1)x(k-1) corner of the second graph is not complete")
    p, q, edges = _glue((g.p, g.q, g.edges), (g2.p, g2.q, g2.edges), c)
    return OrderedBipartiteGraph(p, q, edges)


def extremal_bipartite(p: int, q: int, k: int, l: int, verify: bool = True,
                       transpose_fallback: bool = False) -> OrderedBipartiteGraph:
    """Staircase of complete blocks reaching (l-1)(p-k+1) + q(k-1) edges.

    Needs 2 <= k < l, p >= k - 1 and q >= q' = (l-k)(r+1) + (k-1) where
    r = floor((p-k+1)/(l-k)). For k = 1 the chain degenerates into a
    matching, which contains K_{1,l} once it has l edges.

    With ``transpose_fallback`` a too-short B side is handled by building
    the (q, p) graph and swapping parts; its edge count is then the
    transposed value.
    """
    if not 2 <= k < l:
        raise ConstructionError(f"need 2 <= k < l (got k={k}, l={l})")
    if p < max(k - 1, 1) or q < 1:
        raise ConstructionError(f"need p >= max(k-1, 1) and q >= 1 (got p={p}, q={q})")
    r, e = periodic_split(p, k, l)
    qq = periodic_height(r, k, l)
    if q < qq:
        if transpose_fallback and q >= k - 1:
            rt, _ = periodic_split(q, k, l)
            if p >= periodic_height(rt, k, l):
                return extremal_bipartite(q, p, k, l, verify=verify).swap_parts()
        raise ConstructionError(f"need q >= q'={qq} for p={p} (r={r}, e={e}); got q={q}")

    c = k - 1
    chain = _complete_raw(e, l - 1)
    for _ in range(r):
        chain = _glue(chain, _complete_raw(l - 1, l - 1), c)
    assert chain[:2] == (p, qq)
    head = _complete_raw(c, q - qq + c)
    pp, qq2, edges = _glue(head, chain, c)
    assert (pp, qq2) == (p, q)
    g = OrderedBipartiteGraph(p, q, edges)
    if verify and contains_kl(g, k, l) is not None:
        raise ConstructionError(f"extremal_bipartite({p}, {q}, {k}, {l}) contains K_{{{k},{l}}}")
    return g


def _check_multipartite_params(n: Sequence[int], ells: Sequence[int]):
    t = len(n)
    if t < 2 or len(ells) != t:
        raise ConstructionError("need t >= 2 part sizes and t pattern sizes")
    if any(a >= b for a, b in zip(n, n[1:])):
        raise ConstructionError(f"part sizes must be strictly increasing, got {tuple(n)}")
    if any(a >= b for a, b in zip(ells, ells[1:])):
        raise ConstructionError(f"pattern sizes must be strictly increasing, got {tuple(ells)}")
    bad = [i for i in range(t - 1) if n[i] >= ells[i + 1]]
    if bad:
        i = bad[0]
        raise ConstructionError(f"need n_{i + 1} < l_{i + 2} (got {n[i]} >= {ells[i + 1]})")


def multipartite_construction(n: Sequence[int], ells: Sequence[int],
                              i_h: Optional[Sequence[int]] = None,
                              verify: bool = True) -> OrderedMultipartiteGraph:
    """Complete t-partite graph whose A_1-A_2 layer is ``example_pq(n_1, n_2, l_1, l_2)``."""
    n, ells = tuple(n), tuple(ells)
    _check_multipartite_params(n, ells)
    if ells[0] > n[0] or ells[1] > n[1]:
        raise ConstructionError("the A_1-A_2 layer needs l_1 <= n_1 and l_2 <= n_2")
    layer = ExamplePQParams(n[0], n[1], ells[0], ells[1], None if i_h is None else tuple(i_h))
    edges = {((0, i), (1, j)) for i, j in layer.edges()}
    t = len(n)
    for u in range(t):
        for v in range(max(u + 1, 2), t):
            edges.update(((u, r), (v, s)) for r in range(n[u]) for s in range(n[v]))
    g = OrderedMultipartiteGraph(n, frozenset(edges))
    if verify and contains_multipartite(g, ells) is not None:
        raise ConstructionError(f"multipartite_construction({n}, {ells}) contains the pattern")
    return g
