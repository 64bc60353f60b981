"""Interval-minor containment of complete bipartite and multipartite patterns.

A complete pattern with parts of sizes l_1 <= ... <= l_t is an interval minor
of an ordered graph iff each pattern part can be sent to a distinct host part
which is then cut into l_i consecutive non-empty blocks such that every pair
of blocks from different parts is joined by at least one edge. Everything
here decides containment through that block-partition form; the operational
definition (edge deletions and identifications of consecutive vertices) is
kept as a slow reference in :func:`complete_minor_shapes`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence, Union

from .graphs import AnyGraph, OrderedBipartiteGraph, OrderedMultipartiteGraph
from . import kernels


class WitnessError(ValueError):
    """A witness whose shape does not fit the graph or the pattern."""


@dataclass(frozen=True)
class IntervalPartition:
    """Composition of a linearly ordered part into consecutive blocks."""

    block_sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(b) for b in self.block_sizes)
        if not sizes or min(sizes) < 1:
            raise WitnessError(f"blocks must be non-empty, got {sizes}")
        object.__setattr__(self, "block_sizes", sizes)

    @classmethod
    def from_cuts(cls, cuts: Sequence[int], n: int) -> "IntervalPartition":
        bounds = [0, *cuts, n]
        return cls(tuple(b - a for a, b in zip(bounds, bounds[1:])))

    @property
    def size(self) -> int:
        return sum(self.block_sizes)

    @property
    def nblocks(self) -> int:
        return len(self.block_sizes)

    @property
    def cuts(self) -> tuple:
        out, acc = [], 0
        for b in self.block_sizes[:-1]:
            acc += b
            out.append(acc)
        return tuple(out)

    def block_of(self) -> list[int]:
        """Block index of every position."""
        return [h for h, b in enumerate(self.block_sizes) for _ in range(b)]


@dataclass(frozen=True)
class CompletePatternSpec:
    """Part sizes of K_{l_1,...,l_t}; stored sorted, every size >= 1."""

    part_sizes: tuple

    def __post_init__(self):
        sizes = tuple(sorted(int(x) for x in self.part_sizes))
        if len(sizes) < 2:
            raise ValueError("a complete pattern needs at least two parts")
        if sizes[0] < 1:
            raise ValueError(f"pattern part sizes must be >= 1, got {sizes}")
        object.__setattr__(self, "part_sizes", sizes)

    @classmethod
    def of(cls, *sizes: int) -> "CompletePatternSpec":
        return cls(tuple(sizes))

    @property
    def nparts(self) -> int:
        return len(self.part_sizes)

    def __str__(self):
        return "K_{" + ",".join(map(str, self.part_sizes)) + "}"


@dataclass(frozen=True)
class ContainmentWitness:
    """``assignment[i]`` is the host part receiving pattern part i;
    ``partitions[u]`` cuts host part u."""

    assignment: tuple
    partitions: tuple

    def to_dict(self) -> dict:
        return {"assignment": [u + 1 for u in self.assignment],
                "blocks": [list(pt.block_sizes) for pt in self.partitions]}

    @classmethod
    def from_dict(cls, d: dict) -> "ContainmentWitness":
        try:
            return cls(tuple(int(u) - 1 for u in d["assignment"]),
                       tuple(IntervalPartition(tuple(b)) for b in d["blocks"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise WitnessError(f"malformed witness JSON: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


PatternLike = Union[CompletePatternSpec, Sequence[int]]


def _as_spec(spec: PatternLike) -> CompletePatternSpec:
    return spec if isinstance(spec, CompletePatternSpec) else CompletePatternSpec(tuple(spec))


def _as_multipartite(g: AnyGraph) -> OrderedMultipartiteGraph:
    return g.to_multipartite() if isinstance(g, OrderedBipartiteGraph) else g


def verify_witness(g: AnyGraph, spec: PatternLike, w: ContainmentWitness) -> bool:
    """Check a certificate edge by edge; raises WitnessError on a shape mismatch."""
    spec = _as_spec(spec)
    mg = _as_multipartite(g)
    t = spec.nparts
    if mg.nparts != t or len(w.assignment) != t or len(w.partitions) != t:
        raise WitnessError("witness, pattern and graph disagree on the number of parts")
    if sorted(w.assignment) != list(range(t)):
        raise WitnessError(f"assignment {w.assignment} is not a permutation")
    for u, pt in enumerate(w.partitions):
        if pt.size != mg.part_sizes[u]:
            raise WitnessError(
                f"blocks {pt.block_sizes} of part {u} do not sum to {mg.part_sizes[u]}")
    for i, u in enumerate(w.assignment):
        if w.partitions[u].nblocks != spec.part_sizes[i]:
            raise WitnessError(
                f"host part {u} has {w.partitions[u].nblocks} blocks, pattern part needs "
                f"{spec.part_sizes[i]}")
    block = [pt.block_of() for pt in w.partitions]
    hit = set()
    for (u, r), (v, s) in mg.edges:
        hit.add((u, block[u][r], v, block[v][s]))
    for u, v in combinations(range(t), 2):
        for x in range(w.partitions[u].nblocks):
            for y in range(w.partitions[v].nblocks):
                if (u, x, v, y) not in hit:
                    return False
    return True


# -- bipartite -------------------------------------------------------------

def _cut_tuples(n: int, m: int) -> Iterator[tuple]:
    return combinations(range(1, n), m - 1)


def _bipartite_witness(g: OrderedBipartiteGraph, k: int, l: int, orientation: int,
                       acuts, bcuts) -> ContainmentWitness:
    """Orientation 1: k blocks on A; orientation 2: k blocks on B."""
    if orientation == 1:
        pa, pb = IntervalPartition.from_cuts(acuts, g.p), IntervalPartition.from_cuts(bcuts, g.q)
        return ContainmentWitness((0, 1), (pa, pb))
    pa, pb = IntervalPartition.from_cuts(bcuts, g.p), IntervalPartition.from_cuts(acuts, g.q)
    return ContainmentWitness((1, 0), (pa, pb))


def contains_kl_exhaustive(g: OrderedBipartiteGraph, k: int, l: int) -> Optional[ContainmentWitness]:
    """Enumerate every pair of compositions; first witness in lexicographic order."""
    k, l = sorted((k, l))
    if k < 1:
        raise ValueError("pattern part sizes must be >= 1")
    orientations = [(1, k, l)] + ([(2, l, k)] if k != l else [])
    for orientation, na, nb in orientations:
        if na > g.p or nb > g.q:
            continue
        for acuts in _cut_tuples(g.p, na):
            ablock = IntervalPartition.from_cuts(acuts, g.p).block_of()
            for bcuts in _cut_tuples(g.q, nb):
                bblock = IntervalPartition.from_cuts(bcuts, g.q).block_of()
                if len({(ablock[i], bblock[j]) for i, j in g.edges}) == na * nb:
                    pa = IntervalPartition.from_cuts(acuts, g.p)
                    pb = IntervalPartition.from_cuts(bcuts, g.q)
                    return ContainmentWitness((0, 1) if orientation == 1 else (1, 0), (pa, pb))
    return None


def contains_kl_greedy(g: OrderedBipartiteGraph, k: int, l: int,
                       backend: Optional[str] = None) -> Optional[ContainmentWitness]:
    """Compositions of the k-block part plus earliest-cut greedy on the other."""
    k, l = sorted((k, l))
    if k < 1:
        raise ValueError("pattern part sizes must be >= 1")
    hit = kernels.contains_kl_masks(g.rows, g.cols, g.p, g.q, k, l, backend=backend)
    if hit is None:
        return None
    return _bipartite_witness(g, k, l, *hit)


def contains_kl(g: OrderedBipartiteGraph, k: int, l: int) -> Optional[ContainmentWitness]:
    """Default bipartite decision procedure; the witness is re-verified."""
    if max(g.p, g.q) > kernels.MAXPART:
        w = contains_kl_exhaustive(g, k, l)
    else:
        w = contains_kl_greedy(g, k, l)
    if w is not None and not verify_witness(g, (k, l), w):
        raise AssertionError(f"checker produced an invalid witness {w}")
    return w


# -- multipartite ----------------------------------------------------------

def _search_multipartite(sizes, off, adj, ells, allow_permutation=True):
    """Return (tau, cuts per pattern part) for the first witness, or None.

    ``adj`` holds bitmask neighbourhoods over the global vertex numbering
    given by ``off``.
    """
    t = len(ells)
    taus = permutations(range(t)) if allow_permutation else [tuple(range(t))]
    for tau in taus:
        if any(sizes[tau[i]] < ells[i] for i in range(t)):
            continue
        chosen: list = [None] * t  # per pattern part: (cuts, [(vmask, nbrmask)])

        def search(i: int) -> bool:
            if i == t:
                return True
            u = tau[i]
            earlier = [vmask for prev in chosen[:i] for vmask, _ in prev[1]]
            for cuts in _cut_tuples(sizes[u], ells[i]):
                bounds = [0, *cuts, sizes[u]]
                blocks = []
                for a, b in zip(bounds, bounds[1:]):
                    vmask = ((1 << (b - a)) - 1) << (off[u] + a)
                    nbr = 0
                    for x in range(off[u] + a, off[u] + b):
                        nbr |= adj[x]
                    blocks.append((vmask, nbr))
                if all(nbr & vmask for _, nbr in blocks for vmask in earlier):
                    chosen[i] = (cuts, blocks)
                    if search(i + 1):
                        return True
            chosen[i] = None
            return False

        if search(0):
            return tuple(tau), [chosen[i][0] for i in range(t)]
    return None


def contains_multipartite(g: AnyGraph, spec: PatternLike,
                          allow_permutation: bool = True) -> Optional[ContainmentWitness]:
    """Search part assignments, then compositions part by part with early pair checks.

    With ``allow_permutation=False`` pattern part i (in sorted order) must
    land on host part i.
    """
    spec = _as_spec(spec)
    mg = _as_multipartite(g)
    t = spec.nparts
    if mg.nparts != t:
        raise ValueError(f"graph has {mg.nparts} parts, pattern has {t}")
    hit = _search_multipartite(mg.part_sizes, mg.offsets, mg.adjacency, spec.part_sizes,
                               allow_permutation)
    if hit is None:
        return None
    tau, cuts = hit
    parts = [None] * t
    for i in range(t):
        parts[tau[i]] = IntervalPartition.from_cuts(cuts[i], mg.part_sizes[tau[i]])
    w = ContainmentWitness(tau, tuple(parts))
    if not verify_witness(mg, spec, w):
        raise AssertionError(f"checker produced an invalid witness {w}")
    return w


def contains(g: AnyGraph, spec: PatternLike) -> Optional[ContainmentWitness]:
    """Dispatch on graph type and pattern arity."""
    spec = _as_spec(spec)
    if isinstance(g, OrderedBipartiteGraph) and spec.nparts == 2:
        return contains_kl(g, *spec.part_sizes)
    return contains_multipartite(g, spec)


# -- operational reference -------------------------------------------------

@lru_cache(maxsize=1 << 17)
def complete_minor_shapes(g: OrderedBipartiteGraph) -> frozenset:
    """All (a, b) such that K_{a,b} with |A|=a, |B|=b is reachable from g by
    edge deletions and identifications of consecutive vertices.

    Exponential; memoised across calls so sweeps over all small graphs share work.
    """
    out = set()
    if g.edge_count() == g.p * g.q:
        out.add((g.p, g.q))
    for e in g.edges:
        out |= complete_minor_shapes(g.delete_edge(e))
    for part, n in ((0, g.p), (1, g.q)):
        for i in range(n - 1):
            out |= complete_minor_shapes(g.identify_consecutive(part, i))
    return frozenset(out)


def contains_kl_operational(g: OrderedBipartiteGraph, k: int, l: int) -> bool:
    shapes = complete_minor_shapes(g)
    return (k, l) in shapes or (l, k) in shapes
