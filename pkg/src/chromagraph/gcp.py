"""Generalised chromatic polynomials pi_G^(H)(k) as falling-factorial polynomials.

A tuple of h colourings of G is the same thing as a valid partition of V(G) x [h]
(one block per colour used) together with an injective naming of its t blocks by
colours; there are (k)_t namings, and whether the tuple induces H depends only on
the partition. Counting partitions by their number of blocks therefore yields the
coefficients N_t directly, for every k.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt
from typing import Mapping

from .colouring import DEFAULT_BUDGET, Budget
from .decomposition import DecompositionTable, product_decomposition
from .errors import BudgetExceededError, SingularPointError, UnsupportedSizeError
from .ffpoly import FFPoly
from .graph import MAX_CANON_N, Graph, automorphism_count, canonical_form, complete

MAX_PARTITION_CELLS = 14


# ---------------------------------------------------------------------------
# chromatic polynomial (deletion-contraction, monomial basis)

def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _psub(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return out


def _chrom_mono(g: Graph, memo):
    if g.n == 0:
        return [1]
    comps = g.components()
    if len(comps) > 1:
        out = [1]
        for c in comps:
            out = _pmul(out, _chrom_mono(g.induced(c), memo))
        return out
    if g.m == g.n * (g.n - 1) // 2:
        out = [1]
        for i in range(g.n):
            out = _pmul(out, [-i, 1])
        return out
    key = canonical_form(g)
    if key in memo:
        return memo[key]
    # a simplicial vertex v (clique neighbourhood) contributes a factor (k - deg v)
    for v in range(g.n):
        nb = sorted(g.adj[v])
        if all(g.has_edge(a, b) for i, a in enumerate(nb) for b in nb[i + 1:]):
            rest = [u for u in range(g.n) if u != v]
            res = _pmul(_chrom_mono(g.induced(rest), memo), [-len(nb), 1])
            break
    else:
        u, v = g.edges()[0]
        deleted = Graph.from_edges(g.n, [e for e in g.edges() if e != (u, v)])
        relabel = [x if x < v else x - 1 for x in range(g.n)]
        relabel[v] = relabel[u]
        contracted = Graph.from_edges(
            g.n - 1,
            {tuple(sorted((relabel[a], relabel[b]))) for a, b in g.edges() if (a, b) != (u, v)},
        )
        res = _psub(_chrom_mono(deleted, memo), _chrom_mono(contracted, memo))
    memo[key] = res
    return res


def chromatic_polynomial(g: Graph) -> FFPoly:
    if g.n > MAX_CANON_N:
        raise UnsupportedSizeError(f"chromatic_polynomial supports n <= {MAX_CANON_N}")
    return FFPoly.from_monomial(_chrom_mono(g, {}))


# ---------------------------------------------------------------------------
# valid-partition enumeration

def _bfs_order(h: Graph):
    seen, order = set(), []
    for s in range(h.n):
        if s in seen:
            continue
        seen.add(s)
        q = deque([s])
        while q:
            x = q.popleft()
            order.append(x)
            for y in sorted(h.adj[x]):
                if y not in seen:
                    seen.add(y)
                    q.append(y)
    return order


def _check_size(g: Graph, h: Graph):
    if g.n * h.n > MAX_PARTITION_CELLS:
        raise UnsupportedSizeError(
            f"|V(G)|*|V(H)| = {g.n * h.n} exceeds the partition budget of {MAX_PARTITION_CELLS}"
        )


def gcp_partition(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET, method: str = "embedding") -> FFPoly:
    """pi_G^(H) by enumerating valid partitions of V(G) x [h].

    ``method="embedding"`` fixes a labelling of H and keeps only partitions whose
    layer i and layer j differ at exactly one vertex of G iff ij is an edge of H,
    pruning as layers fill up; the block-count tally is divided by |Aut(H)|.
    ``method="ordered"`` enumerates every valid partition, keeps those whose h
    columns are pairwise distinct and induce a copy of H, and divides by h!.
    """
    _check_size(g, h)
    if h.n == 0:
        return FFPoly.constant(1)
    if method == "embedding":
        tally = _tally_embeddings(g, h, budget.max_partitions)
        div = automorphism_count(h)
    elif method == "ordered":
        tally = _tally_ordered(g, h, budget.max_partitions)
        div = factorial(h.n)
    else:
        raise ValueError(f"unknown method {method!r}")
    p = FFPoly({t: Fraction(a, div) for t, a in tally.items()})
    if not p.is_integer_valued():
        raise AssertionError(f"partition tally {tally} / {div} is not integer-valued")
    return p


def _tally_embeddings(g: Graph, h: Graph, limit: int):
    n, hh = g.n, h.n
    order = _bfs_order(h)
    pos = {v: i for i, v in enumerate(order)}
    hadj = [[False] * hh for _ in range(hh)]
    for a, b in h.edges():
        hadj[pos[a]][pos[b]] = hadj[pos[b]][pos[a]] = True
    lower = [[u for u in g.adj[v] if u < v] for v in range(n)]
    labels = [0] * (n * hh)
    diff = [[0] * hh for _ in range(hh)]
    tally = defaultdict(int)
    visits = [0]

    def rec(e, t):
        visits[0] += 1
        if visits[0] > limit:
            raise BudgetExceededError(f"partition enumeration exceeded {limit} nodes")
        if e == n * hh:
            tally[t] += 1
            return
        i, v = divmod(e, n)
        row = i * n
        last = v == n - 1
        remaining = n - 1 - v
        di = diff[i]
        hi = hadj[i]
        for lab in range(t + 1):
            if any(labels[row + u] == lab for u in lower[v]):
                continue
            ok = True
            for j in range(i):
                d = di[j] + (labels[j * n + v] != lab)
                if hi[j]:
                    if d > 1 or (last and d != 1):
                        ok = False
                        break
                elif d + remaining < 2:
                    ok = False
                    break
            if not ok:
                continue
            saved = di[:i]
            for j in range(i):
                di[j] += labels[j * n + v] != lab
            labels[e] = lab
            rec(e + 1, t + 1 if lab == t else t)
            di[:i] = saved

    # diff[i][j] = vertices where layers i and j disagree so far; only layer i writes row i
    rec(0, 0)
    return dict(tally)


def _tally_ordered(g: Graph, h: Graph, limit: int):
    n, hh = g.n, h.n
    code = canonical_form(h)
    lower = [[u for u in g.adj[v] if u < v] for v in range(n)]
    labels = [0] * (n * hh)
    tally = defaultdict(int)
    visits = [0]
    cache: dict[tuple, bool] = {}

    def accept():
        cols = [tuple(labels[i * n:(i + 1) * n]) for i in range(hh)]
        if len(set(cols)) < hh:
            return False
        edges = tuple(
            (i, j) for i in range(hh) for j in range(i + 1, hh)
            if sum(a != b for a, b in zip(cols[i], cols[j])) == 1
        )
        hit = cache.get(edges)
        if hit is None:
            f = Graph.from_edges(hh, edges)
            hit = cache[edges] = f.m == h.m and canonical_form(f) == code
        return hit

    def rec(e, t):
        visits[0] += 1
        if visits[0] > limit:
            raise BudgetExceededError(f"partition enumeration exceeded {limit} nodes")
        if e == n * hh:
            if accept():
                tally[t] += 1
            return
        i, v = divmod(e, n)
        row = i * n
        for lab in range(t + 1):
            if any(labels[row + u] == lab for u in lower[v]):
                continue
            labels[e] = lab
            rec(e + 1, t + 1 if lab == t else t)

    rec(0, 0)
    return dict(tally)


# ---------------------------------------------------------------------------
# disconnected patterns

def _components(h: Graph):
    return [h.induced(c) for c in h.components()]


def gcp(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET, _memo=None) -> FFPoly:
    """pi_G^(H) for any pattern: partitions for connected H, gluing identity otherwise."""
    if h.n == 0 or h.is_connected():
        return gcp_partition(g, h, budget)
    return gcp_disconnected(g, h, budget, _memo)


def gcp_disconnected(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET, _memo=None) -> FFPoly:
    memo = {} if _memo is None else _memo
    key = canonical_form(h)
    if key in memo:
        return memo[key]
    comps = _components(h)
    if len(comps) == 1:
        return gcp_partition(g, h, budget)
    table = product_decomposition(comps)
    total = FFPoly.constant(1)
    for r in comps:
        total = total * _gcp_memo(g, r, budget, memo)
    for f, m in table.items():
        if canonical_form(f) != key:
            total = total - _gcp_memo(g, f, budget, memo) * m
    mh = table.terms.get(key, 0)
    if mh == 0:
        raise AssertionError("pattern missing from its own gluing table")
    res = total / mh
    if not res.is_integer_valued():
        raise AssertionError("gluing identity produced a non-integer-valued polynomial")
    memo[key] = res
    return res


def _gcp_memo(g, f, budget, memo):
    key = canonical_form(f)
    if key not in memo:
        memo[key] = gcp(g, f, budget, memo)
    return memo[key]


@dataclass(frozen=True)
class Isolation:
    """pi^(h) expressed pointwise through the other members of ``family``.

    The gluing identity for H+ = h + K_1 reads
        pi^(h) * pi^(K_1) = M(h) pi^(h) + sum_{F != h} M(F) pi^(F),
    so pi^(h) = sum_{F != h} M(F) pi^(F) / (pi^(K_1) - M(h)). For h = K_1 the
    unknown also sits in the factor and the identity is a quadratic.
    """

    h: Graph
    h_plus: Graph
    table: DecompositionTable
    family: tuple[Graph, ...]
    m_h: int

    def evaluate(self, values: Mapping[bytes, int]) -> int:
        """``values`` maps canonical codes of family members to their counts at one k."""
        own = canonical_form(self.h)
        rhs = sum(m * values[canonical_form(f)] for f, m in self.table.items()
                  if canonical_form(f) != own)
        if self.h.n == 1:
            # x^2 - m_h x - rhs = 0, non-negative root
            disc = self.m_h**2 + 4 * rhs
            r = isqrt(disc)
            if r * r != disc or (self.m_h + r) % 2:
                raise ArithmeticError("quadratic identity has no integral root")
            return (self.m_h + r) // 2
        denom = values[canonical_form(complete(1))] - self.m_h
        if denom == 0:
            raise SingularPointError(
                f"pi^(K1)(k) = M(h) = {self.m_h}: the isolating identity is singular here"
            )
        if rhs % denom:
            raise ArithmeticError("isolating identity gave a non-integral value")
        return rhs // denom


def isolate_connected(h: Graph) -> Isolation:
    if not h.is_connected():
        raise ValueError("isolate_connected expects a connected pattern")
    if h.n > 5:
        raise UnsupportedSizeError("isolate_connected supports |V(h)| <= 5")
    k1 = complete(1)
    h_plus = h + k1
    table = product_decomposition([h, k1])
    own = canonical_form(h)
    family = [f for f, _ in table.items() if canonical_form(f) != own]
    if h.n > 1:
        family.append(k1)
    return Isolation(h, h_plus, table, tuple(family), table.terms[own])
