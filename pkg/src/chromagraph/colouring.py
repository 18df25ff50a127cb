"""Proper k-colourings and the k-colouring graph.

Colourings are rows of an ``int16`` array with colours 1..k. Rows come out in
lexicographic order, so the base-k code of each row is strictly increasing and
doubles as a sorted index (``np.searchsorted``) for neighbour lookup.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import BudgetExceededError, ParseError, UnsupportedSizeError
from .graph import Graph


@dataclass(frozen=True)
class Budget:
    max_colourings: int = 10**8
    max_partitions: int = 10**7
    max_subsets: int = 5 * 10**6


DEFAULT_BUDGET = Budget()


def falling(k: int, t: int) -> int:
    """(k)_t = k(k-1)...(k-t+1); zero when t > k >= 0."""
    out = 1
    for i in range(t):
        out *= k - i
    return out


def colouring_array(g: Graph, k: int, budget: Budget = DEFAULT_BUDGET) -> np.ndarray:
    """All proper k-colourings of ``g`` as an (N, n) array, lexicographic order."""
    if k < 0:
        raise ValueError("k must be non-negative")
    rows = np.zeros((1, 0), dtype=np.int16)
    palette = np.arange(1, k + 1, dtype=np.int16)
    for v in range(g.n):
        if rows.shape[0] * k > 4 * budget.max_colourings:
            raise BudgetExceededError(
                f"partial colourings of {g.n}-vertex graph at k={k} exceed the budget "
                f"({budget.max_colourings})"
            )
        ext = np.repeat(rows, k, axis=0)
        col = np.tile(palette, rows.shape[0])
        ok = np.ones(col.shape[0], dtype=bool)
        for u in g.adj[v]:
            if u < v:
                ok &= ext[:, u] != col
        rows = np.concatenate([ext[ok], col[ok, None]], axis=1)
        if rows.shape[0] > budget.max_colourings:
            raise BudgetExceededError(
                f"more than {budget.max_colourings} colourings of {g.n}-vertex graph at k={k}"
            )
    return rows


def enumerate_colourings(g: Graph, k: int, budget: Budget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in row) for row in colouring_array(g, k, budget)]


def is_proper(g: Graph, colouring) -> bool:
    return all(colouring[u] != colouring[v] for u, v in g.edges())


def count_rainbow(g: Graph, k: int) -> int:
    """Proper k-colourings using n distinct colours. Every injective assignment is proper."""
    return falling(k, g.n)


# ---------------------------------------------------------------------------
# adjacency containers

def _csr_from_pairs(n: int, src: np.ndarray, dst: np.ndarray):
    """Symmetric CSR (indptr, indices) from one copy of each undirected edge."""
    a = np.concatenate([src, dst]).astype(np.int64)
    b = np.concatenate([dst, src]).astype(np.int64)
    order = np.argsort(a * n + b, kind="stable")
    a, b = a[order], b[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(a, minlength=n), out=indptr[1:])
    return indptr, b.astype(np.int32)


@dataclass(eq=False)
class AbstractGraph:
    """Unlabelled graph in CSR form, sized for colouring graphs with ~10^6 vertices."""

    n: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges) -> "AbstractGraph":
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if e.size:
            e = np.sort(e, axis=1)
            e = np.unique(e, axis=0)
        return cls(n, *_csr_from_pairs(n, e[:, 0], e[:, 1]))

    @classmethod
    def from_graph(cls, g: Graph) -> "AbstractGraph":
        return cls.from_edges(g.n, g.edges())

    @property
    def num_edges(self) -> int:
        return int(self.indices.shape[0] // 2)

    def neighbours(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def edge_array(self) -> np.ndarray:
        """(m, 2) array of edges with u < v, sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        dst = self.indices.astype(np.int64)
        keep = src < dst
        return np.stack([src[keep], dst[keep]], axis=1)

    @cached_property
    def adj_sets(self) -> list[frozenset[int]]:
        ip, ix = self.indptr, self.indices.tolist()
        return [frozenset(ix[ip[v]:ip[v + 1]]) for v in range(self.n)]

    @cached_property
    def sparse(self):
        import scipy.sparse as sp

        data = np.ones(self.indices.shape[0], dtype=np.int64)
        return sp.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edge_array().tolist())


def write_edge_list(ag: AbstractGraph, fh) -> None:
    e = ag.edge_array()
    fh.write(f"{ag.n} {e.shape[0]}\n")
    chunk = 1 << 18
    for i in range(0, e.shape[0], chunk):
        part = e[i:i + chunk]
        fh.write("".join(f"{u} {v}\n" for u, v in part.tolist()))


def read_edge_list(text: str) -> AbstractGraph:
    """Fast reader for large edge lists; same format and errors as ``parse_graph``."""
    head, _, body = text.partition("\n")
    tok = head.split()
    if len(tok) != 2 or not all(t.isdigit() for t in tok):
        raise ParseError(f"line 1: malformed header {head!r}, expected 'n m'")
    n, m = int(tok[0]), int(tok[1])
    lines = body.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) != m:
        raise ParseError(f"line 1: header declares {m} edges but {len(lines)} edge lines follow")
    try:
        e = np.array(body.split(), dtype=np.int64)
    except ValueError:
        e = None
    if e is None or e.size != 2 * m or (e < 0).any():
        for i, ln in enumerate(lines, start=2):
            t = ln.split()
            if len(t) != 2 or not all(x.isdigit() for x in t):
                raise ParseError(f"line {i}: malformed edge {ln!r}")
        raise ParseError("malformed edge list")
    e = e.reshape(-1, 2)
    bad = np.flatnonzero((e >= n).any(axis=1))
    if bad.size:
        raise ParseError(f"line {bad[0] + 2}: vertex id out of range for n={n}: {lines[bad[0]]!r}")
    loops = np.flatnonzero(e[:, 0] == e[:, 1])
    if loops.size:
        raise ParseError(f"line {loops[0] + 2}: self-loop {lines[loops[0]]!r}")
    return AbstractGraph.from_edges(n, e)


@dataclass(eq=False)
class ColouringGraph:
    """Labelled k-colouring graph: vertex i is the colouring ``colourings[i]``."""

    base: Graph
    k: int
    colourings: np.ndarray
    codes: np.ndarray
    graph: AbstractGraph = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    @property
    def indptr(self):
        return self.graph.indptr

    @property
    def indices(self):
        return self.graph.indices

    def neighbours(self, v: int) -> np.ndarray:
        return self.graph.neighbours(v)

    def colouring(self, v: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.colourings[v])

    def index_of(self, colouring) -> int:
        """Vertex id of a colouring; KeyError if it is not a proper k-colouring."""
        c = np.asarray(colouring, dtype=np.int64)
        if c.shape != (self.base.n,) or (c < 1).any() or (c > self.k).any():
            raise KeyError(tuple(colouring))
        code = int(((c - 1) * _weights(self.base.n, self.k)).sum())
        i = int(np.searchsorted(self.codes, code))
        if i >= self.codes.shape[0] or self.codes[i] != code:
            raise KeyError(tuple(colouring))
        return i

    def rainbow_mask(self) -> np.ndarray:
        s = np.sort(self.colourings, axis=1)
        if s.shape[1] < 2:
            return np.ones(s.shape[0], dtype=bool)
        return (np.diff(s, axis=1) != 0).all(axis=1)

    def to_abstract(self) -> AbstractGraph:
        return self.graph

    def labels_json(self) -> dict:
        return {str(i): [int(x) for x in row] for i, row in enumerate(self.colourings)}


def _weights(n: int, k: int) -> np.ndarray:
    return np.array([k ** (n - 1 - v) for v in range(n)], dtype=np.int64)


def build_colouring_graph(g: Graph, k: int, budget: Budget = DEFAULT_BUDGET) -> ColouringGraph:
    """C_k(g) by recolour-and-lookup: each single-vertex proper recolouring is found by code."""
    if g.n and k > 1 and g.n * math.log2(k) >= 62:
        raise UnsupportedSizeError(f"k^n too large for 64-bit colouring codes (n={g.n}, k={k})")
    cols = colouring_array(g, k, budget)
    N = cols.shape[0]
    w = _weights(g.n, k)
    codes = ((cols.astype(np.int64) - 1) * w).sum(axis=1) if N else np.zeros(0, dtype=np.int64)
    ids = np.arange(N, dtype=np.int64)
    srcs, dsts = [], []
    for v in range(g.n):
        cv = cols[:, v]
        for a in range(1, k + 1):
            ok = cv < a  # each edge once: only recolour upwards
            for u in g.adj[v]:
                ok &= cols[:, u] != a
            if not ok.any():
                continue
            target = codes[ok] + (a - cv[ok].astype(np.int64)) * w[v]
            srcs.append(ids[ok])
            dsts.append(np.searchsorted(codes, target))
    if srcs:
        src, dst = np.concatenate(srcs), np.concatenate(dsts)
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    ag = AbstractGraph(N, *_csr_from_pairs(N, src, dst))
    return ColouringGraph(g, k, cols, codes, ag)


def strip_labels(cg: ColouringGraph | AbstractGraph, seed: int) -> AbstractGraph:
    """Relabel vertices by a seeded random permutation and drop colouring labels."""
    ag = cg.graph if isinstance(cg, ColouringGraph) else cg
    perm = np.random.default_rng(seed).permutation(ag.n)
    e = ag.edge_array()
    return AbstractGraph.from_edges(ag.n, perm[e]) if e.size else AbstractGraph.from_edges(ag.n, [])


def chromatic_number(g: Graph) -> int:
    from .gcp import chromatic_polynomial

    p = chromatic_polynomial(g)
    k = 0
    while p(k) == 0:
        k += 1
    return k
