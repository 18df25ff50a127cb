"""Non-isomorphic pairs G, G' whose colouring graphs contain equally many induced
copies of every connected pattern with at most m edges.

Both graphs extend the path v_1..v_{3n} (n = m + 2): G by a vertex v adjacent to
v_{n-1}, v_n, and G' by a vertex v' adjacent to v_n, v_{n+1}. Vertex ids: v_i is
i - 1, and the extra vertex (v or v') is 3n on its side.

An induced copy X in C_k(G) is moved to C_k(G') by reflecting the colours on the
segment strictly between v_{n-t} and v_{n+t}, where t = t_X is the least positive
integer such that no edge of X recolours v_{n-t} or v_{n+t}:

    f(c)(v_{n+i}) = c(v_{n-t}) + c(v_{n+t}) - c(v_{n-i})   for -t < i < t
    f(c)(v')      = c(v_{n-t}) + c(v_{n+t}) - c(v)
    f(c)(u)       = c(u) otherwise,

colours taken mod k with representatives 1..k.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from . import __version__
from .colouring import DEFAULT_BUDGET, Budget, ColouringGraph, build_colouring_graph
from .counting import count_induced_copies
from .errors import BudgetExceededError, InvalidCopyError, PreconditionError
from .graph import (
    Graph,
    enumerate_connected_graphs,
    graph_label,
    is_isomorphic,
    serialize_graph,
)


@dataclass(frozen=True)
class GraphPair:
    m: int
    n: int
    G: Graph
    Gprime: Graph
    vertex_roles: dict[str, int] = field(compare=False)

    def path_vertex(self, i: int) -> int:
        """Id of v_i (1-based path index)."""
        return i - 1

    @property
    def extra(self) -> int:
        return 3 * self.n

    def side(self, which: str) -> Graph:
        return self.G if which == "G" else self.Gprime


def build_pair(m: int) -> GraphPair:
    if not 1 <= m <= 3:
        raise PreconditionError("build_pair supports 1 <= m <= 3")
    n = m + 2
    path_edges = [(i, i + 1) for i in range(3 * n - 1)]
    x = 3 * n
    G = Graph.from_edges(3 * n + 1, path_edges + [(n - 2, x), (n - 1, x)], f"G(m={m})")
    Gp = Graph.from_edges(3 * n + 1, path_edges + [(n - 1, x), (n, x)], f"G'(m={m})")
    roles = {f"v{i}": i - 1 for i in range(1, 3 * n + 1)}
    roles["v"] = roles["v'"] = x
    if is_isomorphic(G, Gp):
        raise AssertionError("pair construction produced isomorphic graphs")
    return GraphPair(m, n, G, Gp, roles)


def _normalise(x: int, k: int) -> int:
    return (x - 1) % k + 1


def edge_vertex(c1, c2) -> int | None:
    """The unique base vertex where two colourings differ, or None."""
    diff = [i for i, (a, b) in enumerate(zip(c1, c2)) if a != b]
    return diff[0] if len(diff) == 1 else None


def t_of_copy(pair: GraphPair, X: Iterable, side: str = "G", edges=None) -> int:
    """t_X for an induced copy X (a set of colourings of the given side).

    ``edges`` optionally lists the pairs of X claimed to be edges; each must differ
    at exactly one vertex. Without it the edges are those pairs of X differing at one vertex.
    """
    g = pair.side(side)
    X = [tuple(c) for c in X]
    for c in X:
        if len(c) != g.n or any(c[u] == c[v] for u, v in g.edges()):
            raise InvalidCopyError(f"{c} is not a proper colouring of {side}")
    if edges is None:
        used = {edge_vertex(a, b) for a, b in combinations(X, 2)} - {None}
    else:
        used = set()
        for a, b in edges:
            w = edge_vertex(tuple(a), tuple(b))
            if w is None:
                raise InvalidCopyError(f"{a} and {b} do not differ at exactly one vertex")
            used.add(w)
    n = pair.n
    for t in range(1, n + 1):
        lo, hi = n - t, n + t
        lo_used = lo >= 1 and pair.path_vertex(lo) in used
        hi_used = hi <= 3 * n and pair.path_vertex(hi) in used
        if not lo_used and not hi_used:
            return t
    raise InvalidCopyError("copy uses too many vertices near v_n; no t_X exists")


def _reflect(pair: GraphPair, k: int, c, t: int):
    n = pair.n
    pv = pair.path_vertex
    s = c[pv(n - t)] + c[pv(n + t)]
    out = list(c)
    for i in range(-t + 1, t):
        out[pv(n + i)] = _normalise(s - c[pv(n - i)], k)
    out[pair.extra] = _normalise(s - c[pair.extra], k)
    return tuple(out)


def f_map(pair: GraphPair, k: int, X) -> set[tuple[int, ...]]:
    """Image in C_k(G') of an induced copy X in C_k(G)."""
    X = [tuple(c) for c in X]
    t = t_of_copy(pair, X, "G")
    return {_reflect(pair, k, c, t) for c in X}


def g_map(pair: GraphPair, k: int, Xp) -> set[tuple[int, ...]]:
    """Image in C_k(G) of an induced copy X' in C_k(G'); the formula is the same reflection."""
    Xp = [tuple(c) for c in Xp]
    t = t_of_copy(pair, Xp, "G'")
    return {_reflect(pair, k, c, t) for c in Xp}


def induced_on(X) -> Graph:
    X = sorted(tuple(c) for c in X)
    return Graph.from_edges(
        len(X), [(i, j) for i, j in combinations(range(len(X)), 2) if edge_vertex(X[i], X[j]) is not None]
    )


def sample_copies(cg: ColouringGraph, m: int, count: int, rng) -> list[list[tuple[int, ...]]]:
    """Random connected induced subgraphs with at most m edges (vertex sets of size 1..m+1)."""
    ag = cg.graph
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 100 * count:
            raise BudgetExceededError("could not sample enough copies")
        size = int(rng.integers(1, m + 2))
        start = int(rng.integers(ag.n))
        verts = [start]
        while len(verts) < size:
            frontier = sorted({int(w) for v in verts for w in ag.neighbours(v)} - set(verts))
            if not frontier:
                break
            verts.append(frontier[int(rng.integers(len(frontier)))])
        X = [cg.colouring(v) for v in verts]
        if induced_on(X).m <= m:
            out.append(X)
    return out


@dataclass
class PairReport:
    m: int
    k: int
    n: int
    G: Graph
    Gprime: Graph
    isomorphic: bool
    counts: list[dict]
    passed: bool
    inverse_checks: dict
    witness: dict | None
    seed: int
    patterns_tried_for_witness: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "version": __version__,
            "m": self.m,
            "k": self.k,
            "n": self.n,
            "seed": self.seed,
            "G": serialize_graph(self.G),
            "Gprime": serialize_graph(self.Gprime),
            "isomorphic": self.isomorphic,
            "counts": self.counts,
            "pass": self.passed,
            "inverse_checks": self.inverse_checks,
            "witness": self.witness,
            "patterns_tried_for_witness": self.patterns_tried_for_witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def check_inverse(pair: GraphPair, k: int, cg: ColouringGraph, cgp: ColouringGraph,
                  samples: int, rng) -> dict:
    """g(f(X)) = X on sampled copies of G, f(g(X')) = X' on copies of G', with the
    structural facts the bijection relies on."""
    failures = []
    for side, src, dst, fwd, back in (("G", cg, cgp, f_map, g_map), ("G'", cgp, cg, g_map, f_map)):
        other = "G'" if side == "G" else "G"
        for X in sample_copies(src, pair.m, samples, rng):
            Y = fwd(pair, k, X)
            problems = []
            for c in Y:
                try:
                    dst.index_of(c)
                except KeyError:
                    problems.append(f"{c} not a proper colouring of {other}")
            if not is_isomorphic(induced_on(X), induced_on(Y)):
                problems.append("image not isomorphic")
            if t_of_copy(pair, X, side) != t_of_copy(pair, Y, other):
                problems.append("t_X changed")
            if back(pair, k, Y) != set(X):
                problems.append("inverse failed")
            if problems:
                failures.append({"side": side, "copy": [list(c) for c in X], "problems": problems})
    return {"samples_per_side": samples, "failures": failures, "ok": not failures}


def verify_pair(m: int, k: int, seed: int = 0, samples: int = 100,
                budget: Budget = DEFAULT_BUDGET, witness_search: bool = True) -> PairReport:
    pair = build_pair(m)
    cg = build_colouring_graph(pair.G, k, budget)
    cgp = build_colouring_graph(pair.Gprime, k, budget)
    rows = []
    for h in enumerate_connected_graphs(m):
        a = count_induced_copies(cg, h, budget)
        b = count_induced_copies(cgp, h, budget)
        rows.append({"pattern": graph_label(h), "pattern_edge_list": serialize_graph(h),
                     "count_G": str(a), "count_Gprime": str(b), "equal": a == b})
    rng = np.random.default_rng(seed)
    inverse = check_inverse(pair, k, cg, cgp, samples, rng)
    witness, tried = (None, [])
    if witness_search:
        witness, tried = _find_witness(cg, cgp, m, budget)
    return PairReport(
        m=m, k=k, n=pair.n, G=pair.G, Gprime=pair.Gprime,
        isomorphic=is_isomorphic(pair.G, pair.Gprime),
        counts=rows, passed=all(r["equal"] for r in rows) and inverse["ok"],
        inverse_checks=inverse, witness=witness, seed=seed,
        patterns_tried_for_witness=tried,
    )


def _find_witness(cg, cgp, m, budget):
    """Best effort: the disconnected 2K_1, then connected patterns with m+1 edges."""
    from .graph import empty

    candidates = [empty(2)]
    if m + 1 <= 6:
        candidates += [h for h in enumerate_connected_graphs(m + 1) if h.m == m + 1]
    tried = []
    for h in candidates:
        try:
            a = count_induced_copies(cg, h, budget)
            b = count_induced_copies(cgp, h, budget)
        except BudgetExceededError:
            continue
        tried.append(graph_label(h))
        if a != b:
            return {"pattern": graph_label(h), "pattern_edge_list": serialize_graph(h),
                    "count_G": str(a), "count_Gprime": str(b)}, tried
    return None, tried


__all__ = ["GraphPair", "PairReport", "build_pair", "t_of_copy", "f_map", "g_map",
           "verify_pair", "check_inverse", "sample_copies", "induced_on"]
