import json

import pytest
from hypothesis import given, strategies as st

from intervalminors import (
    GraphError,
    OrderedBipartiteGraph,
    OrderedMultipartiteGraph,
    VertexRef,
    degree,
    delete_edge,
    edge_count,
    example_pq,
    identify_consecutive,
    reverse_order,
    swap_parts,
)
from intervalminors.graphs import dumps, graph_from_dict, graph_to_dict, loads, to_dot

from helpers import bipartite_graphs

K22 = OrderedBipartiteGraph.complete(2, 2)


def G(p, q, *edges):
    return OrderedBipartiteGraph(p, q, frozenset(edges))


class TestOperations:
    def test_delete_from_complete(self):
        h = delete_edge(K22, (0, 0))
        assert h.part_sizes == (2, 2)
        assert h.edges == {(0, 1), (1, 0), (1, 1)}

    def test_delete_from_path(self):
        assert delete_edge(G(2, 1, (0, 0), (1, 0)), (1, 0)) == G(2, 1, (0, 0))

    def test_delete_missing_edge_names_it(self):
        with pytest.raises(GraphError, match=r"\(1, 0\)"):
            delete_edge(G(2, 2, (0, 0)), (1, 0))

    def test_identify_unions_neighbourhoods(self):
        h = identify_consecutive(G(2, 2, (0, 0), (1, 1)), "A", 0)
        assert h == G(1, 2, (0, 0), (0, 1))

    def test_identify_collapses_parallel_edges(self):
        h = identify_consecutive(K22, "B", 0)
        assert h.part_sizes == (2, 1) and edge_count(h) == 2

    def test_identify_single_vertex_part(self):
        with pytest.raises(GraphError):
            identify_consecutive(G(1, 3, (0, 0)), 0, 0)

    def test_identify_out_of_range(self):
        with pytest.raises(GraphError):
            identify_consecutive(K22, 1, 1)

    def test_reverse(self):
        assert reverse_order(G(2, 2, (0, 0)), "A") == G(2, 2, (1, 0))
        assert reverse_order(G(2, 2, (0, 0)), "B") == G(2, 2, (0, 1))

    def test_reverse_both_parts_of_two_layer_graph(self):
        g = example_pq(3, 4, 2, 4)
        h = reverse_order(reverse_order(g, 0), 1)
        assert h.edges == {(2 - i, 3 - j) for i, j in g.edges}

    def test_swap(self):
        g = G(2, 3, (0, 2), (1, 0))
        h = swap_parts(g)
        assert h.part_sizes == (3, 2) and h.edges == {(2, 0), (0, 1)}

    def test_counts(self):
        assert edge_count(K22) == 4
        assert degree(G(2, 2, (0, 0)), VertexRef(1, 1)) == 0
        assert degree(K22, ("A", 1)) == 2
        assert edge_count(example_pq(3, 4, 2, 4)) == 10

    def test_example_pq_edges_counted_directly(self):
        # rows j < l-1 complete, row j >= l-1 only from i_h
        g = example_pq(3, 4, 2, 4, i_h=[0])
        assert sum(1 for i in range(3) for j in range(4) if g.has_edge((i, j))) == 3 * 3 + 1 * 1

    def test_add_edge(self):
        assert G(1, 1).add_edge((0, 0)) == G(1, 1, (0, 0))
        assert G(1, 1, (0, 0)).add_edge((0, 0)) == G(1, 1, (0, 0))
        with pytest.raises(GraphError):
            G(1, 1).add_edge((1, 0))


class TestValidation:
    @pytest.mark.parametrize("p,q,edges", [(0, 1, ()), (2, 2, ((2, 0),)), (2, 2, ((0, -1),))])
    def test_rejects(self, p, q, edges):
        with pytest.raises(GraphError):
            OrderedBipartiteGraph(p, q, frozenset(edges))

    def test_multipartite_rejects_intra_part(self):
        with pytest.raises(GraphError):
            OrderedMultipartiteGraph((2, 3), frozenset({((0, 0), (0, 1))}))

    def test_multipartite_canonical_orientation(self):
        g = OrderedMultipartiteGraph((2, 3), frozenset({((1, 2), (0, 1))}))
        assert g.edges == {((0, 1), (1, 2))}

    def test_bad_vertex(self):
        with pytest.raises(GraphError):
            degree(K22, VertexRef(0, 5))


class TestMultipartiteOps:
    def test_identify(self):
        g = OrderedMultipartiteGraph((2, 2, 1), frozenset({((0, 0), (1, 0)), ((0, 1), (2, 0))}))
        h = identify_consecutive(g, 0, 0)
        assert h.part_sizes == (1, 2, 1)
        assert h.edges == {((0, 0), (1, 0)), ((0, 0), (2, 0))}

    def test_reverse_and_delete(self):
        g = OrderedMultipartiteGraph.complete((1, 2, 3))
        assert edge_count(g) == 2 + 3 + 6
        h = reverse_order(delete_edge(g, ((1, 0), (2, 0))), 2)
        assert not h.has_edge(((1, 0), (2, 2)))
        assert edge_count(h) == 10

    def test_bipartite_embedding(self):
        g = example_pq(3, 4, 2, 4)
        mg = g.to_multipartite()
        assert mg.part_sizes == (3, 4) and edge_count(mg) == edge_count(g)


class TestProperties:
    @given(bipartite_graphs(), st.data())
    def test_identify_is_neighbourhood_union(self, g, data):
        part = data.draw(st.sampled_from([p for p, n in ((0, g.p), (1, g.q)) if n > 1] or [None]))
        if part is None:
            return
        n = g.p if part == 0 else g.q
        i = data.draw(st.integers(0, n - 2))
        h = g.identify_consecutive(part, i)
        assert h.edge_count() <= g.edge_count()
        w = h.neighbors(VertexRef(part, i))
        assert w == g.neighbors(VertexRef(part, i)) | g.neighbors(VertexRef(part, i + 1))

    @given(bipartite_graphs(), st.data())
    def test_delete_and_identify_commute(self, g, data):
        if g.p < 2 or not g.edges:
            return
        i = data.draw(st.integers(0, g.p - 2))
        far = [e for e in g.sorted_edges() if e[0] not in (i, i + 1)]
        if not far:
            return
        e = data.draw(st.sampled_from(far))
        image = (e[0] - 1 if e[0] > i else e[0], e[1])
        assert g.delete_edge(e).identify_consecutive(0, i) == \
            g.identify_consecutive(0, i).delete_edge(image)

    @given(bipartite_graphs())
    def test_involutions(self, g):
        assert g.reverse_order(0).reverse_order(0) == g
        assert g.reverse_order(1).reverse_order(1) == g
        assert g.swap_parts().swap_parts() == g
        assert g.reverse_order(0).edge_count() == g.swap_parts().edge_count() == g.edge_count()

    @given(bipartite_graphs(max_p=5, max_q=5), st.lists(st.tuples(st.booleans(), st.integers(0, 99)), max_size=8))
    def test_part_sizes_exact(self, g, plan):
        p0, q0 = g.p, g.q
        merges = [0, 0]
        for is_id, c in plan:
            if is_id:
                parts = [u for u, n in ((0, g.p), (1, g.q)) if n > 1]
                if not parts:
                    continue
                u = parts[c % len(parts)]
                n = g.p if u == 0 else g.q
                g = g.identify_consecutive(u, c % (n - 1))
                merges[u] += 1
            elif g.edges:
                g = g.delete_edge(g.sorted_edges()[c % g.edge_count()])
        assert (g.p, g.q) == (p0 - merges[0], q0 - merges[1])


class TestSerialisation:
    def test_bipartite_format(self):
        g = G(3, 4, (0, 1), (0, 0))
        assert dumps(g) == '{"kind":"bipartite","p":3,"q":4,"edges":[[1,1],[1,2]]}'

    def test_multipartite_format(self):
        g = OrderedMultipartiteGraph((2, 3, 4), frozenset({((0, 0), (1, 0))}))
        assert dumps(g) == '{"kind":"multipartite","parts":[2,3,4],"edges":[[[1,1],[2,1]]]}'

    def test_reader_accepts_any_order_and_duplicates(self):
        g = loads('{"kind":"bipartite","p":2,"q":2,"edges":[[2,2],[1,1],[2,2]]}')
        assert g == G(2, 2, (0, 0), (1, 1))

    def test_reader_rejects_intra_part(self):
        with pytest.raises(GraphError):
            loads('{"kind":"multipartite","parts":[2,3],"edges":[[[1,1],[1,2]]]}')

    @pytest.mark.parametrize("text", ["not json", '{"kind":"tripartite"}', '{"kind":"bipartite","p":2}'])
    def test_reader_rejects_garbage(self, text):
        with pytest.raises(GraphError):
            loads(text)

    @given(bipartite_graphs())
    def test_round_trip(self, g):
        assert loads(dumps(g)) == g
        assert graph_from_dict(json.loads(json.dumps(graph_to_dict(g)))) == g

    def test_multipartite_round_trip(self):
        g = OrderedMultipartiteGraph.complete((1, 2, 3)).delete_edge(((0, 0), (2, 1)))
        assert loads(dumps(g)) == g

    def test_dot(self):
        text = to_dot(G(2, 2, (0, 1)))
        assert text.startswith("graph G {") and text.rstrip().endswith("}")
        assert "a1 -- b2;" in text
        assert "rank=same; a1; a2;" in text
        assert text.count(" -- ") == 3  # one edge plus one order chain per part
