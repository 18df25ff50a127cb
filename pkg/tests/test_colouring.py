import io
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromagraph.colouring import (
    AbstractGraph,
    Budget,
    build_colouring_graph,
    chromatic_number,
    count_rainbow,
    enumerate_colourings,
    falling,
    read_edge_list,
    strip_labels,
    write_edge_list,
)
from chromagraph.errors import BudgetExceededError, ParseError
from chromagraph.gcp import chromatic_polynomial
from chromagraph.graph import complete, cycle, empty, path

from conftest import graphs
from oracles import colouring_graph, differ_once, proper_colourings


@given(graphs(max_n=5), st.integers(0, 4))
def test_enumeration_matches_product_oracle(g, k):
    assert enumerate_colourings(g, k) == proper_colourings(g, k)


@given(graphs(max_n=5), st.integers(0, 4))
def test_colouring_graph_matches_pairwise_oracle(g, k):
    cg = build_colouring_graph(g, k)
    ref = colouring_graph(g, k)
    ours = {frozenset((cg.colouring(a), cg.colouring(b))) for a, b in cg.graph.edge_array()}
    assert ours == {frozenset(e) for e in ref.edges}
    assert cg.n == ref.number_of_nodes()


def test_c3_of_p3():
    cg = build_colouring_graph(path(3), 3)
    assert (cg.n, cg.num_edges) == (12, 15)


def test_c3_of_k2_is_hexagon():
    cg = build_colouring_graph(complete(2), 3)
    assert cg.n == 6 and cg.num_edges == 6
    assert set(cg.graph.degrees().tolist()) == {2}


@given(graphs(max_n=6), st.integers(0, 5))
def test_vertex_count_is_chromatic_polynomial(g, k):
    assert build_colouring_graph(g, k).n == chromatic_polynomial(g)(k)


def test_edges_are_single_recolourings():
    cg = build_colouring_graph(cycle(4), 4)
    for a, b in cg.graph.edge_array():
        assert differ_once(cg.colouring(a), cg.colouring(b))


def test_index_of_round_trip():
    cg = build_colouring_graph(path(3), 4)
    for i in range(cg.n):
        assert cg.index_of(cg.colouring(i)) == i
    with pytest.raises(KeyError):
        cg.index_of((1, 1, 2))


def test_rainbow_count():
    for g, k in [(path(3), 5), (complete(3), 4), (empty(2), 3)]:
        cg = build_colouring_graph(g, k)
        assert int(cg.rainbow_mask().sum()) == count_rainbow(g, k) == falling(k, g.n)


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        build_colouring_graph(empty(8), 5, Budget(max_colourings=1000))


def test_strip_labels_is_isomorphic_relabelling():
    cg = build_colouring_graph(path(3), 4)
    a = strip_labels(cg, 7)
    b = strip_labels(cg, 7)
    assert np.array_equal(a.indices, b.indices) and np.array_equal(a.indptr, b.indptr)
    assert a.num_edges == cg.num_edges
    assert sorted(a.degrees().tolist()) == sorted(cg.graph.degrees().tolist())


def test_edge_list_io_round_trip():
    cg = build_colouring_graph(cycle(4), 4)
    buf = io.StringIO()
    write_edge_list(cg.graph, buf)
    back = read_edge_list(buf.getvalue())
    assert back.n == cg.n
    assert np.array_equal(back.edge_array(), cg.graph.edge_array())


def test_read_edge_list_errors():
    with pytest.raises(ParseError):
        read_edge_list("3 1\n0 3\n")


def test_abstract_graph_from_edges():
    ag = AbstractGraph.from_edges(4, [(0, 1), (1, 2)])
    assert ag.num_edges == 2
    assert sorted(ag.neighbours(1).tolist()) == [0, 2]
    assert ag.degree(3) == 0


@pytest.mark.parametrize("g, chi", [(empty(3), 1), (path(4), 2), (cycle(5), 3), (complete(4), 4)])
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi


def test_triangles_are_generated_by_one_vertex():
    # in C_k(G) any three mutually adjacent colourings recolour the same vertex
    for g, k in [(path(3), 5), (cycle(4), 4), (complete(3), 5)]:
        cg = build_colouring_graph(g, k)
        adj = cg.graph.adj_sets
        for a in range(cg.n):
            for b, c in combinations(sorted(x for x in adj[a] if x > a), 2):
                if c in adj[b]:
                    ca, cb, cc = cg.colouring(a), cg.colouring(b), cg.colouring(c)
                    where = {i for i in range(g.n) if len({ca[i], cb[i], cc[i]}) > 1}
                    assert len(where) == 1
