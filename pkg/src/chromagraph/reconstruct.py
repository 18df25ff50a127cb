"""Recover G up to isomorphism from an unlabelled colouring graph C_k(G).

Around each vertex c the neighbourhood splits into cliques, one per base vertex.
For a rainbow c the clique of base vertex v has k - deg(v) members (c included),
and the number of 4-cycles through c meeting two cliques J_u, J_v separates
edges from non-edges of G:

    non-edge uv:  t_uv = (k - d_u - 1)(k - d_v - 1)  >= k^2 - k(d_u + d_v + 2)
    edge uv:      t_uv <= k^2 - k(d_u + d_v + 2) - k + 2n^2 + 3n

Each sampled vertex proposes a candidate graph; a strict majority of candidates
(guaranteed for k > 5n^2, where most vertices are rainbow) decides.
"""
from __future__ import annotations

import logging
import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.sparse.csgraph import connected_components

from .colouring import AbstractGraph, ColouringGraph
from .errors import (
    AmbiguousMajorityError,
    InconsistentFanError,
    NotAColouringGraphError,
    PreconditionError,
)
from .graph import Graph, canonical_form, serialize_graph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleSpec:
    """``size=None`` sweeps every vertex; otherwise a seeded uniform sample."""

    size: int | None = 200

    @classmethod
    def full(cls) -> "SampleSpec":
        return cls(None)


@dataclass
class CliqueFan:
    center: int
    cliques: list[np.ndarray]

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.cliques]


def _abstract(x) -> AbstractGraph:
    return x.graph if isinstance(x, ColouringGraph) else x


def clique_fan(ag, c: int) -> CliqueFan:
    """Split N(c) into connected components and check each is a clique."""
    ag = _abstract(ag)
    nb = ag.neighbours(c)
    if nb.size == 0:
        return CliqueFan(c, [np.array([c])])
    sub = ag.sparse[nb][:, nb]
    ncomp, lab = connected_components(sub, directed=False)
    sizes = np.bincount(lab, minlength=ncomp)
    inner = np.bincount(lab[sub.nonzero()[0]], minlength=ncomp)  # 2 * edges per component
    bad = np.flatnonzero(inner != sizes * (sizes - 1))
    if bad.size:
        members = nb[lab == bad[0]]
        raise NotAColouringGraphError(
            f"neighbourhood of {c} has a non-clique component",
            witness=_p3_witness(ag, members),
        )
    first = np.full(ncomp, np.iinfo(np.int64).max)
    np.minimum.at(first, lab, nb)
    order = np.argsort(first, kind="stable")
    cliques = [np.concatenate([[c], np.sort(nb[lab == j])]) for j in order]
    return CliqueFan(c, cliques)


def _p3_witness(ag: AbstractGraph, members):
    mem = set(int(x) for x in members)
    for x in members:
        nx = [int(y) for y in ag.neighbours(x) if int(y) in mem]
        for i, a in enumerate(nx):
            na = set(ag.neighbours(a).tolist())
            for b in nx[i + 1:]:
                if b not in na:
                    return (a, int(x), b)
    return None


def t_matrix(ag, fan: CliqueFan) -> np.ndarray:
    """All t_ab at once: t_ab = sum_{w != c} |N(w) cap J_a'| * |N(w) cap J_b'|, J' = J minus c."""
    ag = _abstract(ag)
    s = len(fan.cliques)
    owner_parts, nbr_parts = [], []
    for a, clique in enumerate(fan.cliques):
        for x in clique[1:]:
            nbrs = ag.neighbours(int(x))
            nbr_parts.append(nbrs)
            owner_parts.append(np.full(nbrs.shape[0], a, dtype=np.int64))
    if not nbr_parts:
        return np.zeros((s, s), dtype=np.int64)
    w = np.concatenate(nbr_parts).astype(np.int64)
    owner = np.concatenate(owner_parts)
    keep = w != fan.center
    w, owner = w[keep], owner[keep]
    uniq, inv = np.unique(w, return_inverse=True)
    counts = np.bincount(inv * s + owner, minlength=uniq.shape[0] * s).reshape(-1, s)
    return counts.T @ counts


def count_t_uv(ag, fan: CliqueFan, a: int, b: int) -> int:
    if a == b:
        raise ValueError("t_uv needs two distinct cliques")
    return int(t_matrix(ag, fan)[a, b])


def edge_threshold(k: int, size_u: int, size_v: int) -> int:
    return k * k - k * ((k - size_u) + (k - size_v) + 2)


def candidate_graph(ag, k: int, c: int, fan: CliqueFan | None = None) -> Graph:
    """One base vertex per clique at c; uv is an edge iff t_uv falls below the threshold."""
    fan = fan or clique_fan(ag, c)
    sizes = fan.sizes
    t = t_matrix(ag, fan)
    s = len(sizes)
    edges = [
        (a, b) for a in range(s) for b in range(a + 1, s)
        if t[a, b] < edge_threshold(k, sizes[a], sizes[b])
    ]
    return Graph.from_edges(s, edges)


def degree_sequence(ag, k: int, sample: SampleSpec = SampleSpec(), seed: int = 0) -> tuple[int, ...]:
    ag = _abstract(ag)
    vertices = sample_vertices(ag.n, sample, seed)
    table = Counter(_fan_degrees(k, clique_fan(ag, int(c))) for c in vertices)
    best = _strict_majority(table, len(vertices))
    if k <= 3 * len(best) ** 2:
        warnings.warn(f"k={k} <= 3n^2: degree sequence not guaranteed", stacklevel=2)
    return best


def _fan_degrees(k, fan):
    return tuple(sorted(k - x for x in fan.sizes))


def _strict_majority(table: Counter, total: int):
    if not table:
        raise AmbiguousMajorityError("no vertices sampled")
    best, cnt = table.most_common(1)[0]
    if 2 * cnt <= total:
        raise AmbiguousMajorityError(
            f"no strict majority: top class has {cnt} of {total}",
            table={str(key): v for key, v in table.items()},
        )
    return best


def sample_vertices(n: int, sample: SampleSpec, seed: int) -> np.ndarray:
    if sample.size is None or sample.size >= n:
        return np.arange(n)
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(n, size=sample.size, replace=False))


@dataclass
class ReconstructionReport:
    k: int
    n_inferred: int
    degree_sequence: tuple[int, ...] | None
    candidates_sampled: int
    majority_graph: Graph
    majority_fraction: Fraction
    per_candidate: list[tuple[int, bytes]]
    histogram: dict[str, int] = field(default_factory=dict)
    seed: int = 0
    sample_size: int | None = None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n_inferred": self.n_inferred,
            "degree_sequence": list(self.degree_sequence) if self.degree_sequence else None,
            "candidates_sampled": self.candidates_sampled,
            "sample": {"size": self.sample_size, "seed": self.seed},
            "majority_fraction": str(self.majority_fraction),
            "majority_fraction_float": float(self.majority_fraction),
            "majority_graph": serialize_graph(self.majority_graph),
            "candidate_histogram": self.histogram,
            "per_candidate": [[v, code.hex()] for v, code in self.per_candidate],
            "warnings": self.warnings,
        }


def _candidate_for(ag, k, c):
    fan = clique_fan(ag, c)
    g = candidate_graph(ag, k, c, fan)
    return len(fan.cliques), _fan_degrees(k, fan), canonical_form(g), g


_POOL_GRAPH = None


def _pool_init(ag):
    global _POOL_GRAPH
    _POOL_GRAPH = ag


def _pool_task(args):
    k, c = args
    return _candidate_for(_POOL_GRAPH, k, c)


def reconstruct(ag, k: int, sample: SampleSpec = SampleSpec(), seed: int = 0,
                workers: int = 1) -> ReconstructionReport:
    """Majority vote over candidate graphs from sampled vertices."""
    ag = _abstract(ag)
    if ag.n == 0:
        raise PreconditionError("empty colouring graph: k < chi(G) carries no information")
    vertices = [int(c) for c in sample_vertices(ag.n, sample, seed)]
    jobs = [(k, c) for c in vertices]
    if workers > 1 and len(jobs) > 64:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(workers, _pool_init, (ag,)) as pool:
            results = pool.map(_pool_task, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
    else:
        results = [_candidate_for(ag, k, c) for c in vertices]

    fan_sizes = Counter(r[0] for r in results)
    if len(fan_sizes) > 1:
        raise InconsistentFanError(f"clique fans disagree on the number of base vertices: {dict(fan_sizes)}")
    n = results[0][0]
    notes = []
    if k < n + 3:
        raise PreconditionError(f"k={k} < n+3={n + 3}: neighbourhood cliques are not guaranteed")
    if k <= 5 * n * n:
        notes.append(f"k={k} <= 5n^2={5 * n * n}: outside the guaranteed regime")
        warnings.warn(notes[-1], stacklevel=2)

    votes = Counter(r[2] for r in results)
    graphs = {}
    for r in results:
        graphs.setdefault(r[2], r[3])
    best = _strict_majority(votes, len(results))
    try:
        degs = _strict_majority(Counter(r[1] for r in results), len(results))
    except AmbiguousMajorityError as e:
        degs = None
        notes.append(f"degree sequence: {e}")
    hist = {code.hex(): cnt for code, cnt in sorted(votes.items(), key=lambda kv: (-kv[1], kv[0]))}
    return ReconstructionReport(
        k=k,
        n_inferred=n,
        degree_sequence=degs,
        candidates_sampled=len(results),
        majority_graph=graphs[best],
        majority_fraction=Fraction(votes[best], len(results)),
        per_candidate=[(c, r[2]) for c, r in zip(vertices, results)],
        histogram=hist,
        seed=seed,
        sample_size=sample.size,
        warnings=notes,
    )


def k_lower_bound(ag) -> int:
    """Diagnostic only: every neighbourhood clique has at most k members, so the largest
    clique seen at the first few vertices bounds k from below. Never used to pick k."""
    ag = _abstract(ag)
    return max(max(clique_fan(ag, c).sizes) for c in range(min(ag.n, 16)))

