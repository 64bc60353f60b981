"""Interval minors of ordered bipartite and multipartite graphs."""

from .checker import (
    CompletePatternSpec,
    ContainmentWitness,
    IntervalPartition,
    WitnessError,
    contains,
    contains_kl,
    contains_kl_exhaustive,
    contains_kl_greedy,
    contains_kl_operational,
    contains_multipartite,
    verify_witness,
)
from .constructions import (
    ConstructionError,
    ExamplePQParams,
    concatenate,
    example_pq,
    extremal_bipartite,
    multipartite_construction,
)
from .formulas import (
    CaseKind,
    Exactness,
    ExtremalFormulaResult,
    MultipartiteFormulaResult,
    TheoremCase,
    classify,
    m_formula,
    multipartite_m_formula,
    upper_bound_lemma1,
)
from .graphs import (
    GraphError,
    OrderedBipartiteGraph,
    OrderedMultipartiteGraph,
    VertexRef,
    degree,
    delete_edge,
    edge_count,
    identify_consecutive,
    reverse_order,
    swap_parts,
)

__version__ = "0.1.0"
