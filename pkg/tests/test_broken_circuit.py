import random
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bctk import (
    GraphError,
    GuardExceededError,
    broken_circuits,
    build_graph,
    chromatic_polynomial,
    enumerate_cycles,
    includes_broken_circuit,
    nbc_count,
    nbc_counts,
    nbc_subsets,
    relabel_edges,
    whitney_check,
)
from bctk.broken_circuit import edge_set

from .strategies import multigraphs


def nx_cycles(G):
    """Cycle edge sets via networkx on the underlying simple graph, expanded
    over every choice of parallel edge; loops and parallel pairs added by hand."""
    by_ends = {}
    for eid, ends in G.edges:
        by_ends.setdefault(ends, []).append(eid)
    out = set()
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    for ends, ids in by_ends.items():
        if len(ends) == 1:
            out.update((x,) for x in ids)
            continue
        out.update(tuple(sorted(p)) for p in combinations(ids, 2))
        H.add_edge(*ends)
    for cyc in nx.simple_cycles(H):
        if len(cyc) < 3:
            continue
        steps = [by_ends[frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))] for i in range(len(cyc))]
        out.update(tuple(sorted(choice)) for choice in product(*steps))
    return out


def literal_includes(bcs, X):
    return any(set(b) <= set(X) for b in bcs)


class TestSpecExamples:
    def test_cycles(self, triangle, loop_graph, parallel_pair, path3):
        assert enumerate_cycles(triangle) == {(0, 1, 2)}
        assert enumerate_cycles(loop_graph) == {(0,)}
        assert enumerate_cycles(parallel_pair) == {(0, 1)}
        assert enumerate_cycles(path3) == set()
        star = build_graph(5, [{0, 1}, {0, 2}, {0, 3}, {3, 4}])
        assert enumerate_cycles(star) == set()

    def test_broken_circuits(self, triangle, loop_graph, parallel_pair):
        assert broken_circuits(triangle).broken_circuits == ((0, 1),)
        assert broken_circuits(triangle).provenance == {(0, 1): ((0, 1, 2),)}
        assert broken_circuits(loop_graph).broken_circuits == ((),)
        assert () in broken_circuits(loop_graph)
        assert broken_circuits(parallel_pair).broken_circuits == ((0,),)

    def test_includes(self, triangle, loop_graph):
        assert includes_broken_circuit(triangle, {0, 1})
        assert not includes_broken_circuit(triangle, {0, 2})
        assert includes_broken_circuit(loop_graph, set())
        with pytest.raises(GraphError):
            includes_broken_circuit(triangle, {5})

    def test_nbc_subsets(self, triangle, loop_graph):
        assert nbc_subsets(triangle, 2) == {(0, 2), (1, 2)}
        assert nbc_subsets(triangle, 0) == {()}
        assert nbc_subsets(loop_graph, 0) == set()

    def test_nbc_count(self, triangle):
        assert nbc_count(triangle, 2) == 2
        assert nbc_count(triangle, 1) == 3
        assert nbc_count(build_graph(3, []), 0) == 1
        assert nbc_count(triangle, 5) == 0

    def test_whitney(self, triangle, loop_graph):
        report = whitney_check(triangle)
        assert report.passed and report.ak == (1, 3, 2, 0) and report.nbc == (1, 3, 2, 0)
        loop = whitney_check(loop_graph)
        assert loop.passed and loop.ak == loop.nbc == (0, 0)

    def test_whitney_on_forest(self):
        # a forest has no broken circuits: a_k = C(m, k)
        forest = build_graph(6, [{0, 1}, {1, 2}, {1, 3}, {4, 5}])
        report = whitney_check(forest)
        assert report.passed
        assert report.nbc == (1, 4, 6, 4, 1, 0, 0)

    def test_shared_broken_circuit_is_deduplicated(self):
        # two triangles on a common pair of edges 0, 1 closed by the parallel edges 2, 3
        G = build_graph(3, [{0, 1}, {0, 2}, {1, 2}, {1, 2}])
        report = broken_circuits(G)
        assert report.provenance[(0, 1)] == ((0, 1, 2), (0, 1, 3))
        assert report.broken_circuits == ((2,), (0, 1))


def test_edge_set_rejects_duplicates():
    assert edge_set([3, 1]) == (1, 3)
    with pytest.raises(ValueError):
        edge_set([1, 1])


def test_guards(triangle):
    with pytest.raises(GuardExceededError):
        enumerate_cycles(triangle, max_edges=2)
    big = build_graph(30, [{i, i + 1} for i in range(25)])
    with pytest.raises(GuardExceededError):
        nbc_subsets(big, 12)
    with pytest.raises(ValueError):
        enumerate_cycles(triangle, max_edges=25)


@settings(max_examples=300, deadline=None)
@given(multigraphs(n_max=6, m_max=10))
def test_cycles_match_networkx(G):
    assert enumerate_cycles(G) == nx_cycles(G)


@settings(max_examples=200, deadline=None)
@given(multigraphs(n_max=6, m_max=9))
def test_broken_circuit_structure(G):
    report = broken_circuits(G)
    for bc in report.broken_circuits:
        for cyc in report.provenance[bc]:
            assert len(bc) == len(cyc) - 1
            assert set(bc) == set(cyc) - {max(cyc)}
    assert (() in report) == G.has_loop()


@settings(max_examples=200, deadline=None)
@given(multigraphs(n_max=6, m_max=9))
def test_nbc_paths_agree_with_literal_filter(G):
    bcs = broken_circuits(G).broken_circuits
    table = nbc_counts(G)
    for k in range(G.n + 1):
        literal = {X for X in combinations(G.edge_ids, k) if not literal_includes(bcs, X)}
        assert nbc_subsets(G, k) == literal
        assert nbc_count(G, k) == table[k] == len(literal)


@settings(max_examples=200, deadline=None)
@given(multigraphs(n_max=6, m_max=9), st.data())
def test_monotone(G, data):
    X = data.draw(st.sets(st.sampled_from(G.edge_ids)) if G.m else st.just(set()))
    extra = data.draw(st.sets(st.sampled_from(G.edge_ids)) if G.m else st.just(set()))
    if includes_broken_circuit(G, X):
        assert includes_broken_circuit(G, X | extra)


@settings(max_examples=200, deadline=None)
@given(multigraphs(n_max=6, m_max=9))
def test_whitney_property(G):
    report = whitney_check(G)
    assert report.passed
    assert report.ak == chromatic_polynomial(G).ak


@settings(max_examples=200, deadline=None)
@given(multigraphs(n_max=6, m_max=9), st.randoms(use_true_random=False))
def test_counts_are_order_independent(G, rnd):
    perm = list(range(G.m))
    rnd.shuffle(perm)
    R = relabel_edges(G, perm)
    assert nbc_counts(R) == nbc_counts(G)


def test_reordering_changes_broken_circuits(triangle):
    R = relabel_edges(triangle, [2, 0, 1])
    assert broken_circuits(R).broken_circuits == ((0, 1),)
    # the same triangle now breaks at what used to be edge 0
    assert broken_circuits(R).broken_circuits != tuple(
        tuple(sorted([2, 0, 1][x] for x in bc)) for bc in broken_circuits(triangle).broken_circuits
    )
    assert nbc_counts(R) == nbc_counts(triangle)
