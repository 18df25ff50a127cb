"""Induced-copy counting in (colouring) graphs.

Connected patterns are counted by ESU-style connected-subset extension, so every
connected vertex set is visited exactly once. Disconnected patterns are counted
either by direct subset enumeration or through the gluing table.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import comb

from .colouring import DEFAULT_BUDGET, AbstractGraph, Budget, ColouringGraph
from .decomposition import product_decomposition
from .errors import BudgetExceededError
from .graph import Graph, canonical_form


def _as_abstract(x) -> AbstractGraph:
    if isinstance(x, ColouringGraph):
        return x.graph
    if isinstance(x, Graph):
        return AbstractGraph.from_graph(x)
    return x


def connected_subsets(adj, size: int):
    """Yield each connected vertex set of the given size once, as a tuple."""
    n = len(adj)
    if size <= 0:
        return
    for v in range(n):
        if size == 1:
            yield (v,)
            continue
        yield from _extend([v], {u for u in adj[v] if u > v}, {v} | set(adj[v]), v, adj, size)


def _extend(sub, ext, closed, root, adj, size):
    # closed = sub plus its neighbourhood; a vertex outside it is exclusive to a new member
    ext = set(ext)
    while ext:
        w = ext.pop()
        new_sub = sub + [w]
        if len(new_sub) == size:
            yield tuple(new_sub)
            continue
        excl = {u for u in adj[w] if u > root and u not in closed}
        yield from _extend(new_sub, ext | excl, closed | set(adj[w]), root, adj, size)


def _local_mask(adj, verts):
    mask = 0
    bit = 0
    for j in range(1, len(verts)):
        nb = adj[verts[j]]
        for i in range(j):
            if verts[i] in nb:
                mask |= 1 << bit
            bit += 1
    return mask


def _mask_graph(size, mask):
    edges = []
    bit = 0
    for j in range(1, size):
        for i in range(j):
            if mask >> bit & 1:
                edges.append((i, j))
            bit += 1
    return Graph.from_edges(size, edges)


def induced_census(x, size: int) -> Counter:
    """Counts of connected induced subgraphs of the given size, keyed by canonical code."""
    adj = _as_abstract(x).adj_sets
    by_mask: Counter = Counter()
    for s in connected_subsets(adj, size):
        by_mask[_local_mask(adj, s)] += 1
    out: Counter = Counter()
    for mask, c in by_mask.items():
        out[canonical_form(_mask_graph(size, mask))] += c
    return out


def _fast_count(ag: AbstractGraph, h: Graph):
    if h.n == 0:
        return 1
    if h.n == 1:
        return ag.n
    if h.n == 2:
        return ag.num_edges if h.m == 1 else comb(ag.n, 2) - ag.num_edges
    if h.n == 3 and h.m >= 2:
        A = ag.sparse
        tri = int((A @ A).multiply(A).sum()) // 6
        if h.m == 3:
            return tri
        d = ag.degrees().astype(object)
        return int(sum(x * (x - 1) // 2 for x in d.tolist())) - 3 * tri
    return None


def count_induced_copies(x, h: Graph, budget: Budget = DEFAULT_BUDGET) -> int:
    """Number of vertex subsets of ``x`` inducing a copy of ``h``."""
    ag = _as_abstract(x)
    fast = _fast_count(ag, h)
    if fast is not None:
        return fast
    if h.is_connected():
        code = canonical_form(h)
        adj = ag.adj_sets
        hits: dict[int, bool] = {}
        total = 0
        for s in connected_subsets(adj, h.n):
            mask = _local_mask(adj, s)
            ok = hits.get(mask)
            if ok is None:
                g = _mask_graph(h.n, mask)
                ok = hits[mask] = g.m == h.m and canonical_form(g) == code
            total += ok
        return total
    if comb(ag.n, h.n) <= budget.max_subsets:
        return count_induced_bruteforce(ag, h, budget)
    return count_via_gluing(ag, h, budget)


def count_induced_bruteforce(x, h: Graph, budget: Budget = DEFAULT_BUDGET) -> int:
    """Oracle: test every vertex subset of size |V(h)|."""
    ag = _as_abstract(x)
    if comb(ag.n, h.n) > budget.max_subsets:
        raise BudgetExceededError(f"C({ag.n},{h.n}) subsets exceed {budget.max_subsets}")
    adj = ag.adj_sets
    code = canonical_form(h)
    cache: dict[int, bool] = {}
    total = 0
    for s in combinations(range(ag.n), h.n):
        mask = _local_mask(adj, s)
        ok = cache.get(mask)
        if ok is None:
            g = _mask_graph(h.n, mask)
            ok = cache[mask] = g.m == h.m and canonical_form(g) == code
        total += ok
    return total


def count_via_gluing(x, h: Graph, budget: Budget = DEFAULT_BUDGET) -> int:
    """Disconnected ``h``: solve the gluing identity for the count of ``h`` itself."""
    ag = _as_abstract(x)
    comps = [h.induced(c) for c in h.components()]
    if len(comps) == 1:
        return count_induced_copies(ag, h, budget)
    table = product_decomposition(comps)
    own = canonical_form(h)
    total = 1
    for r in comps:
        total *= count_induced_copies(ag, r, budget)
    for f, m in table.items():
        if canonical_form(f) != own:
            total -= m * count_via_gluing(ag, f, budget)
    mh = table.terms[own]
    assert total % mh == 0, "gluing identity left a non-integral count"
    return total // mh

