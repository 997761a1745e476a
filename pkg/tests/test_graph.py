import pytest
from hypothesis import given, settings

from bctk import (
    GraphError,
    LoopContractionError,
    NonTransitiveRelationError,
    are_parallel,
    build_graph,
    contract,
    delete,
    edge_classes_under,
    is_loop,
    is_simple,
    min_edge,
    relabel_edges,
    vertex_classes_under,
)
from bctk.corpus import exhaustive_corpus
from bctk.graph import Graph, graph_from_dict, graph_to_dict, reindex_edges

from .strategies import multigraphs, simple_graphs


def edge_list(G):
    return [(eid, set(ends)) for eid, ends in G.edges]


class TestBuild:
    def test_triangle(self, triangle):
        assert triangle.n == 3
        assert edge_list(triangle) == [(0, {0, 1}), (1, {0, 2}), (2, {1, 2})]

    def test_loop(self, loop_graph):
        assert edge_list(loop_graph) == [(0, {0})]

    def test_parallel_pair(self, parallel_pair):
        assert parallel_pair.edge_ids == (0, 1)

    def test_loop_from_repeated_vertex(self):
        assert edge_list(build_graph(2, [(1, 1)])) == [(0, {1})]

    @pytest.mark.parametrize("ends", [[{0, 3}], [set()], [{0, 1, 2}], [(0, 1, 1)]])
    def test_rejects_bad_endpoint_sets(self, ends):
        with pytest.raises(GraphError):
            build_graph(3, ends)

    def test_rejects_unsorted_ids(self):
        with pytest.raises(GraphError):
            Graph(2, ((1, frozenset({0, 1})), (0, frozenset({0, 1}))))

    def test_value_semantics(self, triangle):
        other = build_graph(3, [{1, 0}, {2, 0}, {2, 1}], provenance="elsewhere")
        assert other == triangle and hash(other) == hash(triangle)

    def test_dict_round_trip(self, k4):
        assert graph_from_dict(graph_to_dict(k4)) == k4


class TestPredicates:
    def test_is_loop(self, loop_graph, triangle, parallel_pair):
        assert is_loop(loop_graph, 0)
        assert not is_loop(triangle, 0)
        assert not is_loop(parallel_pair, 1)

    def test_are_parallel(self, parallel_pair, triangle):
        assert are_parallel(parallel_pair, 0, 1)
        assert not are_parallel(triangle, 0, 1)
        assert not are_parallel(triangle, 2, 2)
        assert not are_parallel(parallel_pair, 1, 1)

    def test_is_simple(self, triangle, loop_graph, parallel_pair):
        assert is_simple(triangle)
        assert not is_simple(loop_graph)
        assert not is_simple(parallel_pair)

    def test_unknown_edge(self, triangle):
        with pytest.raises(GraphError):
            is_loop(triangle, 7)
        with pytest.raises(GraphError):
            are_parallel(triangle, 0, 9)

    def test_min_edge(self, triangle, loop_graph):
        assert min_edge(triangle) == 0
        assert min_edge(delete(triangle, 0)) == 1
        assert min_edge(loop_graph) == 0
        with pytest.raises(GraphError):
            min_edge(build_graph(2, []))


class TestEquivalenceClasses:
    def test_vertex_classes_triangle(self, triangle):
        part = vertex_classes_under(triangle, 0)
        assert part.classes == (frozenset({0, 1}), frozenset({2}))
        assert part.class_of == {0: 0, 1: 0, 2: 1}

    def test_vertex_classes_loop(self, loop_graph):
        assert vertex_classes_under(loop_graph, 0).classes == (frozenset({0}),)

    def test_vertex_classes_single_edge(self, single_edge):
        assert vertex_classes_under(single_edge, 0).classes == (frozenset({0, 1}),)

    def test_edge_classes_triangle(self, triangle):
        part = edge_classes_under(triangle, 0)
        assert part.classes == (frozenset({1, 2}),)
        assert part.representative == {1: 2, 2: 2}

    def test_edge_classes_parallel(self, parallel_pair):
        part = edge_classes_under(parallel_pair, 0)
        assert part.classes == (frozenset({1}),)
        assert part.representative == {1: 1}

    def test_edge_classes_path(self, path3):
        assert edge_classes_under(path3, 0).classes == (frozenset({1}),)

    def test_non_transitive_relation_is_reported(self):
        # 1 ~ 3 and 3 ~ 2 under edge 0, but the parallel edges 1, 2 are unrelated
        G = build_graph(3, [{0, 1}, {0, 2}, {0, 2}, {1, 2}])
        with pytest.raises(NonTransitiveRelationError) as info:
            edge_classes_under(G, 0)
        x, y, z = info.value.witness
        assert {x, z} == {1, 2} and y == 3
        assert edge_classes_under(G, 0, strict=False).classes == (frozenset({1, 2, 3}),)


class TestDeleteContract:
    def test_delete_triangle(self, triangle):
        assert edge_list(delete(triangle, 2)) == [(0, {0, 1}), (1, {0, 2})]

    def test_delete_single_edge(self, single_edge):
        H = delete(single_edge, 0)
        assert H.n == 2 and H.m == 0

    def test_delete_parallel(self, parallel_pair):
        assert edge_list(delete(parallel_pair, 0)) == [(1, {0, 1})]

    def test_contract_triangle(self, triangle):
        C = contract(triangle, 0)
        assert C.n == 2
        assert edge_list(C) == [(2, {0, 1})]

    def test_contract_single_edge(self, single_edge):
        C = contract(single_edge, 0)
        assert C.n == 1 and C.m == 0

    def test_contract_parallel_makes_loop(self, parallel_pair):
        C = contract(parallel_pair, 0)
        assert C.n == 1
        assert edge_list(C) == [(1, {0})]

    def test_contract_loop_rejected(self, loop_graph):
        with pytest.raises(LoopContractionError):
            contract(loop_graph, 0)

    def test_contract_renumbers_by_smallest_member(self):
        # merging 1 and 3 leaves classes {0}, {1,3}, {2}
        G = build_graph(4, [{1, 3}, {0, 3}, {2, 3}])
        C = contract(G, 0)
        assert edge_list(C) == [(1, {0, 1}), (2, {1, 2})]

    def test_immutable(self, triangle):
        before = edge_list(triangle)
        delete(triangle, 0)
        contract(triangle, 0)
        assert edge_list(triangle) == before


@settings(max_examples=300, deadline=None)
@given(multigraphs())
def test_delete_and_contract_invariants(G):
    for e, ends in G.edges:
        D = delete(G, e)
        assert D.m == G.m - 1 and D.n == G.n
        if len(ends) == 1:
            continue
        C = contract(G, e, strict=False)
        assert C.n == G.n - 1
        assert set(C.edge_ids) <= set(G.edge_ids) - {e}
        # ids stay sorted, so the inherited order is the ancestor's order
        assert list(C.edge_ids) == sorted(C.edge_ids)
        assert len(vertex_classes_under(G, e).classes) == G.n - 1


@settings(max_examples=300, deadline=None)
@given(simple_graphs())
def test_simple_graphs_closed_under_delete_and_contract(G):
    for e in G.edge_ids:
        assert is_simple(delete(G, e))
        assert is_simple(contract(G, e))


def test_edge_class_representatives_are_maxima_exhaustively():
    # every graph with <= 4 vertices and <= 5 edges, loops and parallels included
    seen = 0
    for G in exhaustive_corpus(4, 5):
        for e, ends in G.edges:
            part = edge_classes_under(G, e, strict=False)
            covered = set().union(*part.classes) if part.classes else set()
            assert covered == set(G.edge_ids) - {e}
            assert sum(len(c) for c in part.classes) == G.m - 1
            for cls in part.classes:
                assert all(part.representative[x] == max(cls) for x in cls)
            merged = [c for c in vertex_classes_under(G, e).classes if len(c) > 1]
            assert len(merged) <= 1
            seen += 1
    assert seen > 10_000


def test_strict_classes_agree_with_closure_on_simple_graphs():
    for G in exhaustive_corpus(5, 5, loops=False, parallel=False):
        for e in G.edge_ids:
            assert edge_classes_under(G, e) == edge_classes_under(G, e, strict=False)


def test_relabel_edges(triangle):
    R = relabel_edges(triangle, [2, 0, 1])
    assert edge_list(R) == [(0, {0, 2}), (1, {1, 2}), (2, {0, 1})]
    assert reindex_edges(delete(triangle, 0)).edge_ids == (0, 1)
    with pytest.raises(GraphError):
        relabel_edges(triangle, [0, 0, 1])
