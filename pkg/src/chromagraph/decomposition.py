"""Gluing tables for products of generalised chromatic polynomials.

For patterns R_1..R_t, every tuple (S_1..S_t) of vertex subsets of a colouring graph
with S_i inducing R_i has a union inducing some graph F. Grouping tuples by that union
gives  prod_i pi^(R_i) = sum_F M(F) pi^(F)  where M(F) counts the tuples of subsets of
V(F) that cover V(F).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .errors import BudgetExceededError, UnsupportedSizeError
from .graph import Graph, canonical_form

MAX_TOTAL_VERTICES = 10


@dataclass(frozen=True)
class DecompositionTable:
    components: tuple[Graph, ...]
    terms: dict[bytes, int]
    graphs: dict[bytes, Graph]

    def items(self):
        """(graph, M) pairs in (n, m, code) order."""
        keys = sorted(self.terms, key=lambda c: (self.graphs[c].n, self.graphs[c].m, c))
        return [(self.graphs[c], self.terms[c]) for c in keys]

    def coefficient(self, g: Graph) -> int:
        return self.terms.get(canonical_form(g), 0)


def _gluings(components, limit):
    """Yield every graph obtained by overlaying copies of the components (labelled, with repeats)."""
    visited = 0

    def place(i, nverts, images):
        if i == len(components):
            yield nverts, images
            return
        r = components[i]
        # each vertex of R_i goes to an existing F-vertex (injectively) or to a fresh one;
        # fresh vertices are numbered in order so each placement is produced once
        for hit in range(min(r.n, nverts) + 1):
            for who in combinations(range(r.n), hit):
                rest = [x for x in range(r.n) if x not in who]
                for targets in permutations(range(nverts), hit):
                    img = [0] * r.n
                    for x, y in zip(who, targets):
                        img[x] = y
                    for j, x in enumerate(rest):
                        img[x] = nverts + j
                    yield from place(i + 1, nverts + len(rest), images + [img])

    for nverts, images in place(0, 0, []):
        forced = {}
        ok = True
        for r, img in zip(components, images):
            for x, y in combinations(range(r.n), 2):
                a, b = sorted((img[x], img[y]))
                want = r.has_edge(x, y)
                if forced.setdefault((a, b), want) != want:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        free = [p for p in combinations(range(nverts), 2) if p not in forced]
        base = [p for p, e in forced.items() if e]
        for choice in product((False, True), repeat=len(free)):
            visited += 1
            if visited > limit:
                raise BudgetExceededError(f"gluing enumeration exceeded {limit} structures")
            yield Graph.from_edges(nverts, base + [p for p, e in zip(free, choice) if e])


def cover_count(f: Graph, components) -> int:
    """M(F): tuples (S_1..S_t), S_i inducing R_i in F, whose union is V(F)."""
    full = (1 << f.n) - 1
    choices = []
    for r in components:
        code = canonical_form(r)
        masks = []
        for s in combinations(range(f.n), r.n):
            sub = f.induced(s)
            if sub.m == r.m and canonical_form(sub) == code:
                masks.append(sum(1 << v for v in s))
        choices.append(masks)
    # fold the tuple choice as a distribution over union masks
    dist = {0: 1}
    for masks in choices:
        nxt: dict[int, int] = {}
        for u, c in dist.items():
            for m in masks:
                nxt[u | m] = nxt.get(u | m, 0) + c
        dist = nxt
    return dist.get(full, 0)


def product_decomposition(components, limit: int = 10**6) -> DecompositionTable:
    comps = tuple(components)
    total = sum(c.n for c in comps)
    if total > MAX_TOTAL_VERTICES:
        raise UnsupportedSizeError(f"product_decomposition supports total size <= {MAX_TOTAL_VERTICES}")
    graphs: dict[bytes, Graph] = {}
    for f in _gluings(comps, limit):
        graphs.setdefault(canonical_form(f), f)
    terms = {}
    for code, f in graphs.items():
        m = cover_count(f, comps)
        if m:
            terms[code] = m
    return DecompositionTable(comps, terms, {c: graphs[c] for c in terms})
