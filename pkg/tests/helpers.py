"""Shared generators for the test modules."""

import numpy as np
from hypothesis import strategies as st

from intervalminors import OrderedBipartiteGraph
from intervalminors._accel import HAVE_NUMBA

BACKENDS = ["numpy"] + (["numba"] if HAVE_NUMBA else [])


def random_bipartite(rng: np.random.Generator, p: int, q: int, density: float) -> OrderedBipartiteGraph:
    mask = rng.random((p, q)) < density
    return OrderedBipartiteGraph(p, q, frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(mask))))


@st.composite
def bipartite_graphs(draw, max_p=6, max_q=6, min_size=1):
    p = draw(st.integers(min_size, max_p))
    q = draw(st.integers(min_size, max_q))
    cells = [(i, j) for i in range(p) for j in range(q)]
    edges = draw(st.sets(st.sampled_from(cells)))
    return OrderedBipartiteGraph(p, q, frozenset(edges))
