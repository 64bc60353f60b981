"""Exact extremal numbers on small instances by branch and bound.

Edges are decided in lexicographic order, include before exclude, with two
prunings: a branch whose partial graph already contains the pattern is cut
(containment is monotone under adding edges), and a branch that cannot beat
the incumbent even by taking every undecided edge is cut. The incumbent is
seeded with a verified construction when one is known; seeding never changes
the answer or the returned witness, which is the first maximiser in search
order.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from . import kernels
from .checker import (
    CompletePatternSpec,
    _search_multipartite,
    contains,
    contains_kl_exhaustive,
    contains_multipartite,
)
from .constructions import ConstructionError, example_pq, extremal_bipartite, multipartite_construction
from .formulas import (
    CaseKind,
    Exactness,
    classify,
    complete_multipartite_edges,
    m_formula,
    multipartite_m_formula,
)
from .graphs import AnyGraph, OrderedBipartiteGraph, OrderedMultipartiteGraph

DEFAULT_BUDGET = 26


def default_budget() -> int:
    return int(os.environ.get("INTERVALMINORS_BUDGET", DEFAULT_BUDGET))


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"instance has {required} potential edges, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass
class ExtremalResult:
    value: int
    witness: AnyGraph
    explored: int
    params: dict
    seed: int = 0
    seconds: float = 0.0


# -- bipartite -------------------------------------------------------------

def _seed_graph(p: int, q: int, k: int, l: int) -> OrderedBipartiteGraph:
    """Best verified avoiding graph from the constructions (empty graph as fallback)."""
    candidates = [OrderedBipartiteGraph(p, q)]
    if classify(p, q, k, l).kind is CaseKind.TRIVIAL:
        candidates.append(OrderedBipartiteGraph.complete(p, q))
    builders = []
    for a, b in [(p, q)] + ([(q, p)] if p != q else []):
        if k <= a <= l - 1 and l <= b:
            builders.append(lambda a=a, b=b: example_pq(a, b, k, l))
        if 2 <= k < l and a >= k:
            builders.append(lambda a=a, b=b: extremal_bipartite(a, b, k, l))
    for build in builders:
        try:
            g = build()
        except ConstructionError:
            continue
        candidates.append(g if (g.p, g.q) == (p, q) else g.swap_parts())
    return max(candidates, key=lambda g: g.edge_count())


def _split_prefixes(ne: int, jobs: int) -> list[tuple]:
    depth = 0
    while (1 << depth) < 4 * jobs and depth < ne:
        depth += 1
    return list(product((1, 0), repeat=depth))


def _bnb_task(args):
    return kernels.branch_and_bound(*args)


def exact_m_bipartite(p: int, q: int, k: int, l: int, budget: Optional[int] = None,
                      jobs: int = 1, backend: Optional[str] = None,
                      seed: bool = True) -> ExtremalResult:
    budget = default_budget() if budget is None else budget
    if p * q > budget:
        raise BudgetExceeded(p * q, budget)
    if min(p, q, k, l) < 1:
        raise ValueError("p, q, k, l must be positive")
    k, l = sorted((k, l))
    if max(p, q) > kernels.MAXPART:
        raise ValueError("parts too large for the bitmask search")
    t0 = time.perf_counter()
    seed_graph = _seed_graph(p, q, k, l) if seed else OrderedBipartiteGraph(p, q)
    lower = seed_graph.edge_count()
    # search for anything with >= lower edges; the first one found in order wins
    start = lower - 1
    if jobs <= 1:
        best, found, rows, nodes = kernels.branch_and_bound(p, q, k, l, start, (), backend)
    else:
        prefixes = _split_prefixes(p * q, jobs)
        tasks = [(p, q, k, l, start, pre, backend) for pre in prefixes]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_bnb_task, tasks))
        nodes = sum(r[3] for r in results)
        found_results = [r for r in results if r[1]]
        best, found, rows = start, False, None
        if found_results:
            best = max(r[0] for r in found_results)
            # earliest prefix holding the maximum = first maximiser in sequential order
            rows = next(r[2] for r in found_results if r[0] == best)
            found = True
    if not found:
        raise AssertionError(f"search found nothing with >= {lower} edges despite a seed graph")
    witness = OrderedBipartiteGraph.from_rows(rows, q)
    if witness.edge_count() != best:
        raise AssertionError("witness edge count disagrees with the search value")
    if contains_kl_exhaustive(witness, k, l) is not None:
        raise AssertionError("oracle witness contains the pattern")
    return ExtremalResult(best, witness, nodes, {"p": p, "q": q, "k": k, "l": l},
                          seed=lower, seconds=time.perf_counter() - t0)


# -- multipartite ----------------------------------------------------------

def exact_m_multipartite(n: Sequence[int], ells: Sequence[int], budget: Optional[int] = None,
                         seed: bool = True) -> ExtremalResult:
    n, ells = tuple(int(x) for x in n), tuple(int(x) for x in ells)
    if len(n) != len(ells) or len(n) < 2:
        raise ValueError("need t >= 2 part sizes and t pattern sizes")
    budget = default_budget() if budget is None else budget
    total = complete_multipartite_edges(n)
    if total > budget:
        raise BudgetExceeded(total, budget)
    t0 = time.perf_counter()
    spec = CompletePatternSpec(ells)
    ells = spec.part_sizes

    seed_graph = OrderedMultipartiteGraph(n)
    if seed:
        try:
            seed_graph = multipartite_construction(n, ells)
        except ConstructionError:
            pass
        full = OrderedMultipartiteGraph.complete(n)
        if contains_multipartite(full, spec) is None:
            seed_graph = full

    edges = OrderedMultipartiteGraph.complete(n).sorted_edges()
    off = seed_graph.offsets
    adj = [0] * sum(n)
    gid = [(off[u] + r, off[v] + s) for (u, r), (v, s) in edges]
    ne = len(edges)
    state = {"best": seed_graph.edge_count() - 1, "chosen": None, "nodes": 0}
    current: list = []

    def visit(d: int):
        state["nodes"] += 1
        if d == ne:
            if len(current) > state["best"]:
                state["best"] = len(current)
                state["chosen"] = list(current)
            return
        if len(current) + (ne - d) <= state["best"]:
            return
        x, y = gid[d]
        adj[x] |= 1 << y
        adj[y] |= 1 << x
        if _search_multipartite(n, off, adj, ells) is None:
            current.append(edges[d])
            visit(d + 1)
            current.pop()
        adj[x] &= ~(1 << y)
        adj[y] &= ~(1 << x)
        if len(current) + (ne - d - 1) > state["best"]:
            visit(d + 1)

    visit(0)
    if state["chosen"] is None:
        raise AssertionError("search found nothing despite a seed graph")
    witness = OrderedMultipartiteGraph(n, frozenset(state["chosen"]))
    if contains_multipartite(witness, spec) is not None:
        raise AssertionError("oracle witness contains the pattern")
    return ExtremalResult(state["best"], witness, state["nodes"], {"n": n, "l": ells},
                          seed=seed_graph.edge_count(), seconds=time.perf_counter() - t0)


def is_maximal_avoiding(g: AnyGraph, spec) -> bool:
    """g avoids the pattern and adding any single non-edge creates it."""
    if contains(g, spec) is not None:
        return False
    return all(contains(g.add_edge(e), spec) is not None for e in g.complement_edges())


# -- sweeps ----------------------------------------------------------------

MATCH, BOUND_ONLY, MISMATCH = "MATCH", "BOUND-ONLY", "MISMATCH"

SWEEP_COLUMNS = ["params", "case", "formula", "exactness", "oracle", "status", "seconds"]


def _status(exactness: Exactness, formula: int, oracle: int) -> str:
    if exactness is Exactness.EXACT:
        return MATCH if oracle == formula else MISMATCH
    if exactness is Exactness.UPPER:
        return BOUND_ONLY if oracle <= formula else MISMATCH
    if exactness is Exactness.LOWER:
        return BOUND_ONLY if oracle >= formula else MISMATCH
    return BOUND_ONLY


def verify_theorem1(pmax: int, qmax: int, kmax: int, lmax: int, budget: Optional[int] = None,
                    jobs: int = 1, backend: Optional[str] = None, pmin: int = 1, qmin: int = 1,
                    check_witnesses: bool = True) -> list[dict]:
    """Oracle vs closed form on every (p, q, k, l) with k <= l in the box."""
    rows = []
    for k in range(1, kmax + 1):
        for l in range(k, lmax + 1):
            for p in range(pmin, pmax + 1):
                for q in range(qmin, qmax + 1):
                    f = m_formula(p, q, k, l)
                    res = exact_m_bipartite(p, q, k, l, budget=budget, jobs=jobs, backend=backend)
                    status = _status(f.exactness, f.value, res.value)
                    if check_witnesses and not is_maximal_avoiding(res.witness, (k, l)):
                        status = MISMATCH
                    rows.append({
                        "params": f"p={p} q={q} k={k} l={l}",
                        "p": p, "q": q, "k": k, "l": l,
                        "case": f.case.citation if f.case.kind is not CaseKind.OUT_OF_SCOPE
                        else f"out-of-scope ({f.case.citation})",
                        "formula": f.value,
                        "exactness": f.exactness.value,
                        "oracle": res.value,
                        "status": status,
                        "seconds": round(res.seconds, 4),
                        "witness": res.witness,
                    })
    return rows


DEFAULT_THEOREM2_CASES = [
    ((2, 3, 4), (2, 3, 4)),
    ((1, 2, 3), (2, 3, 4)),
    ((1, 3, 4), (1, 2, 4)),
]


def verify_theorem2(cases=None, budget: Optional[int] = None,
                    check_witnesses: bool = True) -> list[dict]:
    rows = []
    for n, ells in cases or DEFAULT_THEOREM2_CASES:
        f = multipartite_m_formula(n, ells)
        res = exact_m_multipartite(n, ells, budget=budget)
        status = _status(f.exactness, f.value, res.value)
        if check_witnesses and not is_maximal_avoiding(res.witness, ells):
            status = MISMATCH
        rows.append({
            "params": f"n={','.join(map(str, n))} l={','.join(map(str, ells))}",
            "n": tuple(n), "l": tuple(ells),
            "case": f.regime,
            "formula": f.value,
            "exactness": f.exactness.value,
            "oracle": res.value,
            "status": status,
            "seconds": round(res.seconds, 4),
            "witness": res.witness,
        })
    return rows
