"""Ordered bipartite and multipartite graphs.

Parts are linearly ordered by vertex index. Indices are 0-based in memory and
1-based in every serialized form (JSON, DOT, CLI output).

Graphs are immutable; each operation returns a new graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Union

import numpy as np

PartId = Union[int, str]

_SIDE_NAMES = {"A": 0, "B": 1, "a": 0, "b": 1}


class GraphError(ValueError):
    """Invalid graph, vertex reference or operation argument."""


class VertexRef(NamedTuple):
    part: int
    index: int


def _part_index(part: PartId, nparts: int) -> int:
    if isinstance(part, str):
        if part not in _SIDE_NAMES or nparts != 2:
            raise GraphError(f"unknown part id {part!r}")
        return _SIDE_NAMES[part]
    if not 0 <= part < nparts:
        raise GraphError(f"unknown part id {part!r} (graph has {nparts} parts)")
    return int(part)


@dataclass(frozen=True)
class OrderedBipartiteGraph:
    """Parts A (size p) and B (size q); edge (i, j) joins a_i and b_j."""

    p: int
    q: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise GraphError(f"part sizes must be >= 1, got p={self.p}, q={self.q}")
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (0 <= i < self.p and 0 <= j < self.q):
                raise GraphError(f"edge ({i}, {j}) outside {self.p}x{self.q}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def complete(cls, p: int, q: int) -> "OrderedBipartiteGraph":
        return cls(p, q, frozenset((i, j) for i in range(p) for j in range(q)))

    @classmethod
    def from_rows(cls, rows: Iterable[int], q: int) -> "OrderedBipartiteGraph":
        """Build from per-A-vertex bitmasks over B."""
        rows = [int(r) for r in rows]
        return cls(len(rows), q, frozenset(
            (i, j) for i, r in enumerate(rows) for j in range(q) if (r >> j) & 1))

    @property
    def part_sizes(self) -> tuple[int, int]:
        return (self.p, self.q)

    @property
    def nparts(self) -> int:
        return 2

    @cached_property
    def rows(self) -> np.ndarray:
        """int64 bitmask of B-neighbours for each a_i (needs q <= 62)."""
        if self.q > 62:
            raise GraphError("bitmask rows need q <= 62")
        out = np.zeros(self.p, dtype=np.int64)
        for i, j in self.edges:
            out[i] |= np.int64(1) << np.int64(j)
        return out

    @cached_property
    def cols(self) -> np.ndarray:
        """int64 bitmask of A-neighbours for each b_j (needs p <= 62)."""
        if self.p > 62:
            raise GraphError("bitmask columns need p <= 62")
        out = np.zeros(self.q, dtype=np.int64)
        for i, j in self.edges:
            out[j] |= np.int64(1) << np.int64(i)
        return out

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, e) -> bool:
        return tuple(e) in self.edges

    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: VertexRef) -> frozenset:
        part, idx = self._check_vertex(v)
        if part == 0:
            return frozenset(j for i, j in self.edges if i == idx)
        return frozenset(i for i, j in self.edges if j == idx)

    def degree(self, v: VertexRef) -> int:
        return len(self.neighbors(v))

    def _check_vertex(self, v) -> tuple[int, int]:
        part, idx = v
        part = _part_index(part, 2)
        if not 0 <= idx < self.part_sizes[part]:
            raise GraphError(f"vertex {idx} out of range for part {part}")
        return part, idx

    def delete_edge(self, e) -> "OrderedBipartiteGraph":
        e = (int(e[0]), int(e[1]))
        if e not in self.edges:
            raise GraphError(f"edge {e} is not in the graph")
        return OrderedBipartiteGraph(self.p, self.q, self.edges - {e})

    def add_edge(self, e) -> "OrderedBipartiteGraph":
        e = (int(e[0]), int(e[1]))
        return OrderedBipartiteGraph(self.p, self.q, self.edges | {e})

    def identify_consecutive(self, part: PartId, i: int) -> "OrderedBipartiteGraph":
        part = _part_index(part, 2)
        n = self.part_sizes[part]
        if n < 2:
            raise GraphError(f"part {part} has fewer than 2 vertices")
        if not 0 <= i < n - 1:
            raise GraphError(f"position {i} has no successor in part {part} (size {n})")

        def shift(x):
            return x if x <= i else x - 1

        if part == 0:
            return OrderedBipartiteGraph(self.p - 1, self.q,
                                         frozenset((shift(a), b) for a, b in self.edges))
        return OrderedBipartiteGraph(self.p, self.q - 1,
                                     frozenset((a, shift(b)) for a, b in self.edges))

    def reverse_order(self, part: PartId) -> "OrderedBipartiteGraph":
        part = _part_index(part, 2)
        if part == 0:
            return OrderedBipartiteGraph(self.p, self.q,
                                         frozenset((self.p - 1 - i, j) for i, j in self.edges))
        return OrderedBipartiteGraph(self.p, self.q,
                                     frozenset((i, self.q - 1 - j) for i, j in self.edges))

    def swap_parts(self) -> "OrderedBipartiteGraph":
        return OrderedBipartiteGraph(self.q, self.p, frozenset((j, i) for i, j in self.edges))

    def complement_edges(self) -> list[tuple[int, int]]:
        """Non-edges in lexicographic order."""
        return [(i, j) for i in range(self.p) for j in range(self.q) if (i, j) not in self.edges]

    def to_multipartite(self) -> "OrderedMultipartiteGraph":
        return OrderedMultipartiteGraph(
            (self.p, self.q), frozenset(((0, i), (1, j)) for i, j in self.edges))

    def __repr__(self):
        return f"OrderedBipartiteGraph(p={self.p}, q={self.q}, edges={self.sorted_edges()})"


def _canonical_edge(e) -> tuple[tuple[int, int], tuple[int, int]]:
    (u, r), (v, s) = e
    u, r, v, s = int(u), int(r), int(v), int(s)
    if u == v:
        raise GraphError(f"intra-part edge in part {u}")
    return ((u, r), (v, s)) if u < v else ((v, s), (u, r))


@dataclass(frozen=True)
class OrderedMultipartiteGraph:
    """t >= 2 linearly ordered parts; edges ((u, r), (v, s)) with u < v."""

    part_sizes: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.part_sizes)
        if len(sizes) < 2:
            raise GraphError("a multipartite graph needs at least 2 parts")
        if min(sizes) < 1:
            raise GraphError(f"part sizes must be >= 1, got {sizes}")
        edges = frozenset(_canonical_edge(e) for e in self.edges)
        for (u, r), (v, s) in edges:
            if not (0 <= u < len(sizes) and 0 <= v < len(sizes)):
                raise GraphError(f"edge part id out of range: {(u, v)}")
            if not (0 <= r < sizes[u] and 0 <= s < sizes[v]):
                raise GraphError(f"edge index out of range: {((u, r), (v, s))}")
        object.__setattr__(self, "part_sizes", sizes)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def complete(cls, part_sizes) -> "OrderedMultipartiteGraph":
        sizes = tuple(part_sizes)
        return cls(sizes, frozenset(
            ((u, r), (v, s))
            for u in range(len(sizes)) for v in range(u + 1, len(sizes))
            for r in range(sizes[u]) for s in range(sizes[v])))

    @property
    def nparts(self) -> int:
        return len(self.part_sizes)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for n in self.part_sizes:
            out.append(acc)
            acc += n
        return tuple(out)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Python-int bitmask neighbourhoods over global vertex numbering."""
        off = self.offsets
        adj = [0] * sum(self.part_sizes)
        for (u, r), (v, s) in self.edges:
            x, y = off[u] + r, off[v] + s
            adj[x] |= 1 << y
            adj[y] |= 1 << x
        return tuple(adj)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def has_edge(self, e) -> bool:
        return _canonical_edge(e) in self.edges

    def edge_count(self) -> int:
        return len(self.edges)

    def _check_vertex(self, v) -> tuple[int, int]:
        part, idx = v
        part = _part_index(part, self.nparts)
        if not 0 <= idx < self.part_sizes[part]:
            raise GraphError(f"vertex {idx} out of range for part {part}")
        return part, idx

    def neighbors(self, v: VertexRef) -> frozenset:
        v = self._check_vertex(v)
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return frozenset(out)

    def degree(self, v: VertexRef) -> int:
        return len(self.neighbors(v))

    def delete_edge(self, e) -> "OrderedMultipartiteGraph":
        e = _canonical_edge(e)
        if e not in self.edges:
            raise GraphError(f"edge {e} is not in the graph")
        return OrderedMultipartiteGraph(self.part_sizes, self.edges - {e})

    def add_edge(self, e) -> "OrderedMultipartiteGraph":
        return OrderedMultipartiteGraph(self.part_sizes, self.edges | {_canonical_edge(e)})

    def _relabel(self, part: int, fn, new_size: int) -> "OrderedMultipartiteGraph":
        def f(x):
            u, r = x
            return (u, fn(r)) if u == part else (u, r)

        sizes = list(self.part_sizes)
        sizes[part] = new_size
        return OrderedMultipartiteGraph(tuple(sizes), frozenset((f(a), f(b)) for a, b in self.edges))

    def identify_consecutive(self, part: PartId, i: int) -> "OrderedMultipartiteGraph":
        part = _part_index(part, self.nparts)
        n = self.part_sizes[part]
        if n < 2:
            raise GraphError(f"part {part} has fewer than 2 vertices")
        if not 0 <= i < n - 1:
            raise GraphError(f"position {i} has no successor in part {part} (size {n})")
        return self._relabel(part, lambda r: r if r <= i else r - 1, n - 1)

    def reverse_order(self, part: PartId) -> "OrderedMultipartiteGraph":
        part = _part_index(part, self.nparts)
        n = self.part_sizes[part]
        return self._relabel(part, lambda r: n - 1 - r, n)

    def complement_edges(self) -> list:
        return [e for e in OrderedMultipartiteGraph.complete(self.part_sizes).sorted_edges()
                if e not in self.edges]

    def __repr__(self):
        return f"OrderedMultipartiteGraph(parts={self.part_sizes}, edges={self.sorted_edges()})"


AnyGraph = Union[OrderedBipartiteGraph, OrderedMultipartiteGraph]


def delete_edge(g: AnyGraph, e) -> AnyGraph:
    return g.delete_edge(e)


def identify_consecutive(g: AnyGraph, part: PartId, i: int) -> AnyGraph:
    return g.identify_consecutive(part, i)


def reverse_order(g: AnyGraph, part: PartId) -> AnyGraph:
    return g.reverse_order(part)


def swap_parts(g: OrderedBipartiteGraph) -> OrderedBipartiteGraph:
    if not isinstance(g, OrderedBipartiteGraph):
        raise GraphError("swap_parts needs a bipartite graph")
    return g.swap_parts()


def edge_count(g: AnyGraph) -> int:
    return g.edge_count()


def degree(g: AnyGraph, v) -> int:
    return g.degree(v)


# -- JSON ------------------------------------------------------------------

def graph_to_dict(g: AnyGraph) -> dict:
    if isinstance(g, OrderedBipartiteGraph):
        return {"kind": "bipartite", "p": g.p, "q": g.q,
                "edges": [[i + 1, j + 1] for i, j in g.sorted_edges()]}
    return {"kind": "multipartite", "parts": list(g.part_sizes),
            "edges": [[[u + 1, r + 1], [v + 1, s + 1]] for (u, r), (v, s) in g.sorted_edges()]}


def graph_from_dict(d: dict) -> AnyGraph:
    try:
        kind = d["kind"]
        if kind == "bipartite":
            edges = [(int(i) - 1, int(j) - 1) for i, j in d["edges"]]
            return OrderedBipartiteGraph(int(d["p"]), int(d["q"]), frozenset(edges))
        if kind == "multipartite":
            edges = [((int(a[0]) - 1, int(a[1]) - 1), (int(b[0]) - 1, int(b[1]) - 1))
                     for a, b in d["edges"]]
            return OrderedMultipartiteGraph(tuple(int(n) for n in d["parts"]), frozenset(edges))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    raise GraphError(f"unknown graph kind {kind!r}")


def dumps(g: AnyGraph) -> str:
    return json.dumps(graph_to_dict(g), separators=(",", ":"))


def loads(s: str) -> AnyGraph:
    try:
        d = json.loads(s)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    return graph_from_dict(d)


def to_dot(g: AnyGraph, name: str = "G") -> str:
    """DOT with one rank row per part; vertices chained in linear order."""
    if isinstance(g, OrderedBipartiteGraph):
        labels = ["a", "b"]
        sizes = [g.p, g.q]
        edges = [((0, i), (1, j)) for i, j in g.sorted_edges()]
    else:
        labels = [f"v{u + 1}_" for u in range(g.nparts)]
        sizes = list(g.part_sizes)
        edges = g.sorted_edges()

    def vid(u, r):
        return f"{labels[u]}{r + 1}"

    lines = [f"graph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for u, n in enumerate(sizes):
        names = [vid(u, r) for r in range(n)]
        lines.append(f"  subgraph part{u + 1} {{ rank=same; {'; '.join(names)}; }}")
        if n > 1:
            lines.append(f"  {' -- '.join(names)} [style=invis];")
    for (u, r), (v, s) in edges:
        lines.append(f"  {vid(u, r)} -- {vid(v, s)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
