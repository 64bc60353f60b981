import numpy as np
import pytest
from hypothesis import given, strategies as st

from intervalminors import (
    ConstructionError,
    ExamplePQParams,
    OrderedBipartiteGraph,
    concatenate,
    contains_kl,
    contains_kl_exhaustive,
    contains_multipartite,
    example_pq,
    extremal_bipartite,
    multipartite_construction,
)
from intervalminors.constructions import _complete_raw, _glue
from intervalminors.formulas import correction_forms, closed_form_value


def complete(p, q):
    return OrderedBipartiteGraph.complete(p, q)


class TestExamplePQ:
    def test_small_example(self):
        g = example_pq(3, 4, 2, 4, i_h=[0])
        assert g.edge_count() == 10
        assert contains_kl_exhaustive(g, 2, 4) is None

    def test_default_selection_is_bottom(self):
        assert ExamplePQParams(5, 6, 3, 6).i_h == (0, 1)

    @pytest.mark.parametrize("kw", [
        dict(p=3, q=4, k=2, l=4, i_h=(0, 1)),   # wrong size
        dict(p=3, q=4, k=2, l=4, i_h=(3,)),     # out of range
        dict(p=3, q=4, k=3, l=2),               # k > l
        dict(p=1, q=4, k=2, l=4),               # k > p
    ])
    def test_rejects(self, kw):
        with pytest.raises(ConstructionError):
            ExamplePQParams(**kw)

    def test_verification_catches_wide_case(self):
        # p > l-1 is outside the guaranteed range; here the graph does contain K_{2,3}
        with pytest.raises(ConstructionError):
            example_pq(4, 3, 2, 3)
        assert example_pq(4, 3, 2, 3, verify=False).edge_count() == closed_form_value(4, 3, 2, 3)

    @given(st.data())
    def test_any_selection_avoids(self, data):
        l = data.draw(st.integers(2, 7))
        k = data.draw(st.integers(1, l - 1))
        p = data.draw(st.integers(k, l - 1))
        q = data.draw(st.integers(l, 12))
        ih = data.draw(st.lists(st.integers(0, p - 1), min_size=k - 1, max_size=k - 1, unique=True))
        g = example_pq(p, q, k, l, i_h=ih)
        assert g.edge_count() == (l - 1) * (p - k + 1) + q * (k - 1)


class TestConcatenate:
    @pytest.mark.parametrize("k,l", [(1, 3), (2, 3), (2, 4), (3, 4), (3, 5)])
    def test_square_blocks(self, k, l):
        g = concatenate(complete(l - 1, l - 1), complete(l - 1, l - 1), k)
        n = 2 * (l - 1) - (k - 1)
        assert g.part_sizes == (n, n)
        assert g.edge_count() == 2 * (l - 1) ** 2 - (k - 1) ** 2

    def test_disjoint_sum(self):
        g1 = OrderedBipartiteGraph(2, 1, frozenset({(0, 0)}))
        g2 = OrderedBipartiteGraph(1, 2, frozenset({(0, 1)}))
        g = concatenate(g1, g2, 1)
        assert g.part_sizes == (3, 3)
        assert g.edges == {(0, 0), (2, 2)}

    def test_first_graph_comes_first(self):
        g1 = complete(2, 2)
        g2 = OrderedBipartiteGraph(3, 2, frozenset({(0, 0), (1, 1), (2, 1)}))
        g = concatenate(g1, g2, 2)
        assert g.edges == {(0, 0), (0, 1), (1, 1), (1, 0), (2, 2), (3, 2)}

    def test_corner_checked(self):
        g1 = OrderedBipartiteGraph(2, 2, frozenset({(0, 0)}))
        with pytest.raises(ConstructionError, match="first"):
            concatenate(g1, complete(2, 2), 2)
        with pytest.raises(ConstructionError, match="second"):
            concatenate(complete(2, 2), g1.reverse_order(0).reverse_order(1), 2)

    def test_small_parts(self):
        with pytest.raises(ConstructionError):
            concatenate(complete(1, 3), complete(3, 3), 3)

    @given(st.integers(1, 3), st.lists(st.tuples(st.integers(3, 4), st.integers(3, 4)), min_size=3, max_size=3))
    def test_associative(self, k, shapes):
        a, b, c = (complete(p, q) for p, q in shapes)
        assert concatenate(concatenate(a, b, k), c, k) == concatenate(a, concatenate(b, c, k), k)

    def test_closure_examples(self):
        k, l = 2, 3
        a = example_pq(2, 3, k, l).reverse_order(0).reverse_order(1)  # top corner complete
        b = example_pq(2, 4, k, l)
        g = concatenate(a, b, k)
        assert contains_kl(a, k, l) is None and contains_kl(b, k, l) is None
        assert contains_kl(g, k, l) is None


class TestExtremal:
    def test_worked_example(self):
        g = extremal_bipartite(4, 7, 2, 3)
        assert g.part_sizes == (4, 7) and g.edge_count() == 13

    def test_r_zero(self):
        # p <= l-2 gives an empty chain: the head glued below K_{e,l-1}
        k, l, p, q = 3, 6, 3, 7
        g = extremal_bipartite(p, q, k, l)
        head = _complete_raw(k - 1, q - (l - 1) + k - 1)
        expect = _glue(head, _complete_raw(p, l - 1), k - 1)
        assert (g.p, g.q, g.edges) == expect

    def test_rejects_short_b(self):
        with pytest.raises(ConstructionError, match="q'"):
            extremal_bipartite(6, 5, 2, 3)

    def test_transpose_fallback(self):
        g = extremal_bipartite(7, 4, 2, 3, transpose_fallback=True)
        assert g.part_sizes == (7, 4)
        assert g.edge_count() == closed_form_value(4, 7, 2, 3)
        assert contains_kl(g, 2, 3) is None

    @pytest.mark.parametrize("k,l", [(2, 2), (3, 2), (1, 3)])
    def test_rejects_k(self, k, l):
        with pytest.raises(ConstructionError):
            extremal_bipartite(5, 12, k, l)

    def test_k1_chain_would_contain_pattern(self):
        # why k = 1 is excluded: the degenerate chain is a matching
        p, q, l = 3, 4, 2
        chain = _complete_raw(0, 1)
        for _ in range(3):
            chain = _glue(chain, _complete_raw(1, 1), 0)
        g = OrderedBipartiteGraph(p, q, chain[2])
        assert g.edge_count() == closed_form_value(p, q, 1, l)
        assert contains_kl(g, 1, l) is not None

    @given(st.data())
    def test_counts_and_avoidance(self, data):
        l = data.draw(st.integers(3, 6))
        k = data.draw(st.integers(2, l - 1))
        p = data.draw(st.integers(k, 14))
        r = (p - k + 1) // (l - k)
        q = data.draw(st.integers((l - k) * (r + 1) + k - 1, 20))
        g = extremal_bipartite(p, q, k, l)
        assert g.part_sizes == (p, q)
        assert g.edge_count() == (l - 1) * (p - k + 1) + q * (k - 1)


class TestMultipartite:
    def test_desk_example(self):
        g = multipartite_construction((2, 3, 4), (2, 3, 4))
        assert g.edge_count() == 25

    def test_two_parts_is_two_layer(self):
        g = multipartite_construction((3, 5), (2, 4), i_h=[1])
        assert g == example_pq(3, 5, 2, 4, i_h=[1]).to_multipartite()

    def test_other_pairs_complete(self):
        g = multipartite_construction((2, 3, 4, 5), (2, 3, 4, 6))
        for u in range(4):
            for v in range(max(u + 1, 2), 4):
                assert all(g.has_edge(((u, r), (v, s))) for r in range(g.part_sizes[u])
                           for s in range(g.part_sizes[v]))
        assert contains_multipartite(g, (2, 3, 4, 6)) is None

    @pytest.mark.parametrize("n,ells", [((3, 2), (2, 3)), ((2, 3), (3, 2)), ((2, 4, 5), (2, 3, 4)), ((2,), (2,))])
    def test_rejects(self, n, ells):
        with pytest.raises(ConstructionError):
            multipartite_construction(n, ells)

    def test_edge_count_formula(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            t = int(rng.integers(2, 5))
            ells = sorted(rng.choice(np.arange(2, 9), size=t, replace=False).tolist())
            n = [int(rng.integers(ells[0], ells[1]))]
            for i in range(1, t):
                lo = n[-1] + 1
                hi = ells[i + 1] - 1 if i + 1 < t else lo + 3
                if lo > hi:
                    break
                n.append(int(rng.integers(lo, hi + 1)))
            if len(n) < t or n[1] < ells[1]:
                continue
            g = multipartite_construction(n, ells, verify=False)
            total = sum(n[i] * n[j] for i in range(t) for j in range(i + 1, t))
            assert g.edge_count() == total - n[0] * n[1] + (ells[1] - 1) * n[0] + (n[1] - ells[1] + 1) * (ells[0] - 1)


@given(st.lists(st.integers(1, 30), min_size=4, max_size=4))
def test_correction_forms_agree(v):
    n1, n2, l1, l2 = v
    a, b = correction_forms((n1, n2), (l1, l2))
    assert a == b
