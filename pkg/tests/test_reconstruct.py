import warnings

import numpy as np
import pytest

from chromagraph.colouring import AbstractGraph, build_colouring_graph, strip_labels
from chromagraph.errors import NotAColouringGraphError, PreconditionError
from chromagraph.graph import complete, cycle, empty, is_isomorphic, path
from chromagraph.reconstruct import (
    SampleSpec,
    candidate_graph,
    clique_fan,
    count_t_uv,
    degree_sequence,
    edge_threshold,
    reconstruct,
    sample_vertices,
    t_matrix,
)

from oracles import colouring_graph, four_cycles_through


def _rainbow(cg):
    return int(np.flatnonzero(cg.rainbow_mask())[0])


def _clique_owner(cg, fan, c):
    """Base vertex recoloured inside each clique of the fan."""
    base = cg.colouring(c)
    out = []
    for clique in fan.cliques:
        other = cg.colouring(int(clique[1]))
        out.append([i for i in range(len(base)) if base[i] != other[i]][0])
    return out


@pytest.mark.parametrize("k", [5, 8])
def test_t_uv_nonadjacent_exact(k):
    g = empty(2)
    cg = build_colouring_graph(g, k)
    c = _rainbow(cg)
    fan = clique_fan(cg, c)
    assert fan.sizes == [k, k]
    assert count_t_uv(cg, fan, 0, 1) == (k - 1) ** 2
    ref = colouring_graph(g, k)
    owner = _clique_owner(cg, fan, c)
    assert four_cycles_through(ref, cg.colouring(c), owner[0], owner[1]) == (k - 1) ** 2


def test_t_uv_adjacent_bound_k2():
    k, n = 6, 2
    cg = build_colouring_graph(complete(2), k)
    c = _rainbow(cg)
    fan = clique_fan(cg, c)
    t = count_t_uv(cg, fan, 0, 1)
    assert t <= k * k - k * (1 + 1 + 2) - k + 2 * n * n + 3 * n
    assert t == (k - 2) * (k - 3)


def test_t_matrix_matches_cycle_oracle():
    g, k = path(3), 6
    cg = build_colouring_graph(g, k)
    ref = colouring_graph(g, k)
    for c in np.flatnonzero(cg.rainbow_mask())[:5]:
        fan = clique_fan(cg, int(c))
        t = t_matrix(cg, fan)
        owner = _clique_owner(cg, fan, int(c))
        for a in range(3):
            for b in range(3):
                if a != b:
                    assert t[a, b] == four_cycles_through(ref, cg.colouring(int(c)), owner[a], owner[b])


def test_fan_sizes_at_rainbow():
    g, k = path(3), 7
    cg = build_colouring_graph(g, k)
    for c in np.flatnonzero(cg.rainbow_mask())[:20]:
        fan = clique_fan(cg, int(c))
        owner = _clique_owner(cg, fan, int(c))
        assert [k - s for s in fan.sizes] == [g.degree(v) for v in owner]


def test_non_colouring_graph_detected():
    # the neighbourhood of 0 is the path 1-2-3, which is not a union of cliques
    ag = AbstractGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    with pytest.raises(NotAColouringGraphError) as exc:
        clique_fan(ag, 0)
    assert exc.value.witness == (1, 2, 3)


def test_threshold_formula():
    assert edge_threshold(10, 10, 10) == 100 - 10 * 2


def test_candidate_at_rainbow():
    g, k = path(3), 46
    cg = build_colouring_graph(g, k)
    c = _rainbow(cg)
    assert is_isomorphic(candidate_graph(cg, k, c), g)


@pytest.mark.parametrize("g, k", [(complete(1), 6), (complete(2), 21), (empty(2), 21)])
def test_reconstruct_small_full_sweep(g, k):
    ag = strip_labels(build_colouring_graph(g, k), seed=5)
    rep = reconstruct(ag, k, SampleSpec.full())
    assert is_isomorphic(rep.majority_graph, g)
    assert rep.majority_fraction > 0.5
    assert rep.candidates_sampled == ag.n
    assert sorted(rep.degree_sequence) == sorted(g.degrees())


def test_reconstruct_precondition():
    ag = strip_labels(build_colouring_graph(path(3), 4), seed=1)
    with pytest.raises(PreconditionError):
        reconstruct(ag, 4)


def test_reconstruct_warns_below_bound():
    ag = strip_labels(build_colouring_graph(cycle(4), 9), seed=1)
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        rep = reconstruct(ag, 9, SampleSpec(50), seed=2)
    assert any("5n^2" in str(x.message) for x in w)
    assert rep.warnings


def test_sampling_is_seeded():
    a = sample_vertices(1000, SampleSpec(50), 3)
    b = sample_vertices(1000, SampleSpec(50), 3)
    assert np.array_equal(a, b) and len(set(a.tolist())) == 50


def test_degree_sequence():
    cg = build_colouring_graph(path(3), 28)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert degree_sequence(strip_labels(cg, 2), 28) == (1, 1, 2)


def test_report_dict_shape():
    ag = strip_labels(build_colouring_graph(complete(2), 21), seed=4)
    d = reconstruct(ag, 21, SampleSpec(30), seed=9).to_dict()
    assert d["majority_graph"] == "2 1\n0 1\n"
    assert d["sample"] == {"size": 30, "seed": 9}
    assert d["majority_fraction"] == "1"
