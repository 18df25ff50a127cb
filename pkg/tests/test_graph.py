import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromagraph.errors import ParseError, UnsupportedSizeError
from chromagraph.graph import (
    Graph,
    automorphism_count,
    canonical_form,
    complete,
    cycle,
    enumerate_connected_graphs,
    enumerate_graphs,
    graph_label,
    is_isomorphic,
    named_graph,
    parse_graph,
    path,
    serialize_graph,
    star,
    to_graph6,
)

from conftest import graphs
from oracles import to_nx


def test_graph6_known_strings():
    assert to_graph6(complete(3)) == "Bw"
    assert to_graph6(complete(1)) == "@"
    assert parse_graph("Bw", "graph6") == complete(3)


@given(graphs(max_n=9))
def test_graph6_matches_networkx(g):
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert parse_graph(ours, "graph6") == g


@given(graphs(max_n=8))
def test_edge_list_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


@pytest.mark.parametrize("text, line", [
    ("3 1\n0 5\n", 2),
    ("3 2\n0 1\n", None),
    ("x y\n", 1),
    ("2 1\n0 0\n", 2),
])
def test_edge_list_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    if line is not None:
        assert f"line {line}" in str(exc.value)


def test_graph6_rejects_garbage():
    with pytest.raises(ParseError):
        parse_graph("B~~~", "graph6")


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_networkx(a, b):
    assert is_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


@pytest.mark.parametrize("g, count", [
    (complete(4), 24), (cycle(5), 10), (path(4), 2), (star(3), 6), (Graph.from_edges(3, []), 6),
])
def test_automorphism_count(g, count):
    assert automorphism_count(g) == count


def test_canonical_size_cap():
    with pytest.raises(UnsupportedSizeError):
        canonical_form(path(17))


def test_connected_catalog_counts():
    # connected graphs by number of edges: 1 (no edges), 1, 1, 3, 5, 12, 30
    cat = enumerate_connected_graphs(6)
    by_m = [sum(1 for h in cat if h.m == m) for m in range(7)]
    assert by_m == [1, 1, 1, 3, 5, 12, 30]
    assert all(h.is_connected() for h in cat)


def test_connected_catalog_matches_bruteforce():
    cat = {canonical_form(h) for h in enumerate_connected_graphs(5)}
    brute = {
        canonical_form(g)
        for n in range(1, 7) for g in enumerate_graphs(n)
        if g.is_connected() and g.m <= 5
    }
    assert cat == brute


def test_enumerate_graphs_counts():
    assert [len(enumerate_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_catalog_order_and_labels():
    cat = enumerate_connected_graphs(3)
    assert [graph_label(h) for h in cat] == ["K1", "K2", "P3", "K3", "P4", "K1,3"]


@pytest.mark.parametrize("spec, n, m", [
    ("K1", 1, 0), ("2K1", 2, 0), ("K1+K2", 3, 1), ("P3", 3, 2), ("C4", 4, 4), ("K1,3", 4, 3),
])
def test_named_graphs(spec, n, m):
    g = named_graph(spec)
    assert (g.n, g.m) == (n, m)


def test_named_graph_unknown():
    with pytest.raises(ParseError):
        named_graph("Q7")


def test_disjoint_union_and_components():
    g = complete(2) + path(3)
    assert g.n == 5 and g.m == 3
    assert sorted(map(len, g.components())) == [2, 3]
    assert not g.is_connected()


def test_induced_subgraph():
    g = cycle(5)
    sub = g.induced([0, 1, 2])
    assert is_isomorphic(sub, path(3))
    for verts in itertools.combinations(range(5), 4):
        assert is_isomorphic(g.induced(list(verts)), path(4))


@given(graphs(max_n=6))
def test_automorphism_count_matches_networkx(g):
    gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(g))
    assert automorphism_count(g) == sum(1 for _ in gm.isomorphisms_iter())


def test_automorphism_count_large_symmetric():
    assert automorphism_count(complete(12)) == 479001600
    assert automorphism_count(star(11)) == 39916800
