"""Independent reference implementations used as test oracles.

These work straight from the definitions with itertools and networkx and share no
code with the package beyond the Graph container.
"""
from itertools import combinations, product
from math import comb

import networkx as nx

from chromagraph.graph import Graph


def proper_colourings(g: Graph, k: int):
    return [c for c in product(range(1, k + 1), repeat=g.n)
            if all(c[u] != c[v] for u, v in g.edges())]


def differ_once(a, b) -> bool:
    return sum(x != y for x, y in zip(a, b)) == 1


def colouring_graph(g: Graph, k: int) -> nx.Graph:
    cols = proper_colourings(g, k)
    out = nx.Graph()
    out.add_nodes_from(cols)
    out.add_edges_from((a, b) for a, b in combinations(cols, 2) if differ_once(a, b))
    return out


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def induced_copies(x: nx.Graph, h: Graph) -> int:
    """Vertex subsets of x inducing a graph isomorphic to h."""
    hn = to_nx(h)
    nodes = list(x.nodes)
    total = 0
    for s in combinations(nodes, h.n):
        sub = x.subgraph(s)
        if sub.number_of_edges() == h.m and nx.is_isomorphic(sub, hn):
            total += 1
    return total


def subset_budget(x: nx.Graph, h: Graph) -> int:
    return comb(x.number_of_nodes(), h.n)


def four_cycles_through(x: nx.Graph, c0, u: int, v: int) -> int:
    """4-cycles c0-a-w-b-c0 with a recolouring base vertex u and b recolouring v."""
    def recoloured(y):
        return [i for i in range(len(c0)) if y[i] != c0[i]][0]

    total = 0
    for a in x[c0]:
        for b in x[c0]:
            if recoloured(a) != u or recoloured(b) != v:
                continue
            for w in set(x[a]) & set(x[b]):
                if w != c0:
                    total += 1
    return total
