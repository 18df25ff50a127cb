"""Small simple graphs: construction, text formats, canonical codes, pattern catalogs."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParseError, UnsupportedSizeError

MAX_CANON_N = 16
MAX_CATALOG_EDGES = 6


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"self-loop at {v}")
            for u in nb:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str | None = None) -> "Graph":
        nb = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nb[u].add(v)
            nb[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nb), name)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(pos[u], pos[v]) for u in vertices for v in self.adj[u] if v in pos and pos[u] < pos[v]],
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()], self.name)

    def __add__(self, other: "Graph") -> "Graph":
        """Disjoint union."""
        off = self.n
        return Graph.from_edges(
            self.n + other.n, self.edges() + [(u + off, v + off) for u, v in other.edges()]
        )

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"Graph({label}n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# named graphs

def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2), f"K{n}")


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [], f"{n}K1" if n != 1 else "K1")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], f"K1,{leaves}")


def named_graph(spec: str) -> Graph:
    """Parse names like ``K3``, ``P4``, ``C4``, ``K1,3``, ``2K1`` and unions ``K1+K2``."""
    parts = [p.strip() for p in spec.split("+")]
    if len(parts) > 1:
        g = named_graph(parts[0])
        for p in parts[1:]:
            g = g + named_graph(p)
        return Graph(g.n, g.adj, spec)
    m = re.fullmatch(r"(\d*)([KPC])(\d+)(?:,(\d+))?", spec)
    if not m:
        raise ParseError(f"unknown graph name {spec!r}")
    mult, kind, a, b = m.groups()
    a = int(a)
    if b is not None:
        if kind != "K" or a != 1:
            raise ParseError(f"unknown graph name {spec!r}")
        base = star(int(b))
    else:
        base = {"K": complete, "P": path, "C": cycle}[kind](a)
    g = base
    for _ in range(int(mult or 1) - 1):
        g = g + base
    return Graph(g.n, g.adj, spec)


# ---------------------------------------------------------------------------
# text formats

def parse_graph(text: str, format: str = "edge-list") -> Graph:
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "graph6":
        return _parse_graph6(text)
    raise ParseError(f"unknown format {format!r}")


def serialize_graph(g: Graph, format: str = "edge-list") -> str:
    if format == "edge-list":
        lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    if format == "graph6":
        return to_graph6(g)
    raise ParseError(f"unknown format {format!r}")


def _parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("line 1: empty input, expected header 'n m'")
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise ParseError(f"line 1: malformed header {lines[0]!r}, expected 'n m'")
    n, m = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"line 1: header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for i, ln in enumerate(body, start=2):
        tok = ln.split()
        if len(tok) != 2 or not all(t.isdigit() for t in tok):
            raise ParseError(f"line {i}: malformed edge {ln!r}")
        u, v = int(tok[0]), int(tok[1])
        if u >= n or v >= n:
            raise ParseError(f"line {i}: vertex id out of range for n={n}: {ln!r}")
        if u == v:
            raise ParseError(f"line {i}: self-loop {ln!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise UnsupportedSizeError("graph6 writer supports n <= 62")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("line 1: empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise ParseError(f"line 1: invalid graph6 character in {s!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise UnsupportedSizeError("graph6 reader supports n <= 62")
    nbits = n * (n - 1) // 2
    data = s[1:]
    if len(data) != (nbits + 5) // 6:
        raise ParseError(f"line 1: graph6 length mismatch for n={n}")
    bits = []
    for ch in data:
        val = ord(ch) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# canonical form

def _refine(adj_sets, cells):
    """Split an ordered partition until every vertex in a cell sees each cell equally often."""
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        new = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {}
            for v in cell:
                cnt = [0] * len(cells)
                for u in adj_sets[v]:
                    cnt[where[u]] += 1
                sig[v] = tuple(cnt)
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                for key in keys:
                    new.append([v for v in cell if sig[v] == key])
            else:
                new.append(cell)
        cells = new
        if not changed:
            return cells


def _leaf_code(g: Graph, order):
    pos = {v: i for i, v in enumerate(order)}
    bits = 0
    for u, v in g.edges():
        a, b = sorted((pos[u], pos[v]))
        bits |= 1 << (b * (b - 1) // 2 + a)
    return bits


def canonical_form(g: Graph) -> bytes:
    """Isomorphism certificate: equal bytes iff the graphs are isomorphic."""
    if g.n > MAX_CANON_N:
        raise UnsupportedSizeError(f"canonical_form supports n <= {MAX_CANON_N}, got {g.n}")
    return _canon(g.n, tuple(tuple(sorted(s)) for s in g.adj))


@lru_cache(maxsize=1 << 16)
def _canon(n, adj_t):
    g = Graph(n, tuple(frozenset(s) for s in adj_t))
    best = _best_leaf(g, [list(range(n))] if n else [])
    nbytes = max(1, (n * (n - 1) // 2 + 7) // 8)
    return bytes([n]) + max(best, 0).to_bytes(nbytes, "big")


def _best_leaf(g: Graph, cells) -> int:
    """Largest leaf code below an ordered partition; invariant under isomorphisms
    that respect the cells in order."""
    adj = g.adj
    best = [-1]

    def search(cells):
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _leaf_code(g, [c[0] for c in cells])
            if code > best[0]:
                best[0] = code
            return
        cell = cells[target]
        tried = []
        for v in cell:
            # twins are exchanged by an automorphism fixing everything else
            if any(adj[v] - {u} == adj[u] - {v} for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(cells)
    return best[0]


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| as a product of orbit sizes along a stabiliser chain."""
    if g.n > MAX_CANON_N:
        raise UnsupportedSizeError(f"automorphism_count supports n <= {MAX_CANON_N}")

    def start(fixed):
        rest = [u for u in range(g.n) if u not in fixed]
        return [[f] for f in fixed] + ([rest] if rest else [])

    fixed: list[int] = []
    total = 1
    while True:
        cells = _refine(g.adj, start(fixed))
        cell = next((c for c in cells if len(c) > 1), None)
        if cell is None:
            return total
        ref = _best_leaf(g, start(fixed + [cell[0]]))
        total *= sum(1 for w in cell if _best_leaf(g, start(fixed + [w])) == ref)
        fixed.append(cell[0])


# ---------------------------------------------------------------------------
# catalogs

def _sort_key(g: Graph):
    return (g.n, g.m, canonical_form(g))


def enumerate_connected_graphs(max_edges: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs with <= max_edges edges.

    Grown edge by edge: a connected graph with e+1 edges comes from one with e edges
    either by attaching a pendant vertex (trees) or by adding a chord (graphs with a cycle).
    """
    if max_edges > MAX_CATALOG_EDGES:
        raise UnsupportedSizeError(f"catalog supports max_edges <= {MAX_CATALOG_EDGES}")
    if max_edges < 0:
        return []
    layer = {canonical_form(complete(1)): complete(1)}
    found = dict(layer)
    for _ in range(max_edges):
        nxt = {}
        for g in layer.values():
            for v in range(g.n):
                h = Graph.from_edges(g.n + 1, g.edges() + [(v, g.n)])
                nxt.setdefault(canonical_form(h), h)
            for u, v in combinations(range(g.n), 2):
                if not g.has_edge(u, v):
                    h = Graph.from_edges(g.n, g.edges() + [(u, v)])
                    nxt.setdefault(canonical_form(h), h)
        layer = nxt
        found.update(nxt)
    return sorted(found.values(), key=_sort_key)


def enumerate_graphs(n: int) -> list[Graph]:
    """All isomorphism classes on exactly ``n`` vertices (brute force, n <= 6)."""
    if n > 6:
        raise UnsupportedSizeError("enumerate_graphs supports n <= 6")
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        seen.setdefault(canonical_form(g), g)
    return sorted(seen.values(), key=_sort_key)


def graph_label(g: Graph) -> str:
    """A readable label for small catalog graphs; falls back to graph6."""
    if g.name:
        return g.name
    for cand in _label_candidates(g.n):
        if cand.m == g.m and is_isomorphic(cand, g):
            return cand.name
    return "g6:" + to_graph6(g)


def _label_candidates(n):
    out = [complete(n), path(n), empty(n)]
    if n >= 3:
        out.append(cycle(n))
    if n >= 4:
        out.append(star(n - 1))
    return [g for g in out if g.n == n]
