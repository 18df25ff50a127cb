import numpy as np
import pytest

from chromagraph.colouring import build_colouring_graph
from chromagraph.counterexample import (
    build_pair,
    check_inverse,
    f_map,
    g_map,
    induced_on,
    sample_copies,
    t_of_copy,
    verify_pair,
)
from chromagraph.errors import InvalidCopyError, PreconditionError
from chromagraph.graph import is_isomorphic


def test_pair_shape():
    pair = build_pair(2)
    assert pair.n == 4
    assert pair.G.n == pair.Gprime.n == 13
    assert pair.G.m == pair.Gprime.m == 13
    assert not is_isomorphic(pair.G, pair.Gprime)
    assert pair.G.has_edge(2, 12) and pair.G.has_edge(3, 12)
    assert pair.Gprime.has_edge(3, 12) and pair.Gprime.has_edge(4, 12)


def test_pair_range():
    with pytest.raises(PreconditionError):
        build_pair(0)


def _worked_example():
    pair = build_pair(2)
    c = (1, 3, 1, 4, 3, 4, 2, 1, 2, 3, 1, 3, 2)
    d = list(c)
    d[4] = 1  # recolour v5
    return pair, [c, tuple(d)]


def test_worked_example_reflection():
    pair, X = _worked_example()
    assert t_of_copy(pair, X) == 2
    Y = f_map(pair, 4, X)
    image = [y for y in Y if y[4] == 2][0]
    assert image == (1, 3, 4, 3, 2, 4, 2, 1, 2, 3, 1, 3, 1)
    assert g_map(pair, 4, Y) == set(X)
    assert is_isomorphic(induced_on(X), induced_on(Y))


def test_t_rejects_bad_edges():
    pair, X = _worked_example()
    with pytest.raises(InvalidCopyError):
        t_of_copy(pair, X, edges=[(X[0], X[0])])
    with pytest.raises(InvalidCopyError):
        t_of_copy(pair, [(1,) * 13])


@pytest.mark.parametrize("m, k", [(1, 3), (1, 4), (2, 3)])
def test_inverse_on_samples(m, k):
    pair = build_pair(m)
    cg = build_colouring_graph(pair.G, k)
    cgp = build_colouring_graph(pair.Gprime, k)
    res = check_inverse(pair, k, cg, cgp, 100, np.random.default_rng(0))
    assert res["ok"], res["failures"][:3]


def test_sampled_copies_are_small_and_connected():
    pair = build_pair(1)
    cg = build_colouring_graph(pair.G, 3)
    for X in sample_copies(cg, 1, 50, np.random.default_rng(1)):
        h = induced_on(X)
        assert h.m <= 1 and h.is_connected()


def test_verify_pair_m1():
    rep = verify_pair(1, 3, seed=0, samples=50)
    assert rep.passed and not rep.isomorphic
    assert [r["pattern"] for r in rep.counts] == ["K1", "K2"]
    assert rep.to_json() == verify_pair(1, 3, seed=0, samples=50).to_json()
