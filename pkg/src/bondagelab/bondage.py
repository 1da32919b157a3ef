"""Independent bondage number by exact bounded search, and the degree-sum
upper bound ``min over uv of d(u) + d(v) - |N(u) & N(v)| - 1``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .domination import (
    GraphLike,
    _dominates,
    _independent,
    find_independent_dominating,
    gamma_i,
    neighbor_masks,
)
from .graph import Edge, GraphError, PlaneGraph, edge_key


class EmptyGraph(GraphError):
    pass


@dataclass(frozen=True)
class BondageResult:
    value: int | None  # None: no edge set of size <= limit raises gamma_i
    witness_edges: tuple[Edge, ...]
    gamma_i_before: int
    gamma_i_after: int | None
    limit: int

    @property
    def exceeds_limit(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        if self.value is None:
            return f"bondage_i > {self.limit} (gamma_i = {self.gamma_i_before})"
        edges = " ".join(f"{u}-{v}" for u, v in self.witness_edges)
        return (f"bondage_i = {self.value} E=[{edges}] "
                f"gi={self.gamma_i_before}->{self.gamma_i_after}")


def _edge_list(g: GraphLike) -> list[Edge]:
    if isinstance(g, PlaneGraph):
        return list(g.edges)
    return sorted({edge_key(u, v) for u, nbrs in enumerate(g) for v in nbrs})


def _delete(adj: list[int], edges: Sequence[Edge], chosen: Iterable[int]) -> list[int]:
    out = list(adj)
    for i in chosen:
        u, v = edges[i]
        out[u] &= ~(1 << v)
        out[v] &= ~(1 << u)
    return out


class BreakingSearch:
    """Finds every minimum-size edge set whose removal raises gamma_i.

    If ``G - B`` still has an independent dominating set ``T`` of size at most
    gamma_i(G), any successful superset of ``B`` must make ``T`` non-dominating,
    i.e. delete every remaining edge from some vertex ``x`` outside ``T`` into
    ``T``. Branching over ``x`` therefore reaches every minimal successful set.
    """

    def __init__(self, adj: list[int], edges: list[Edge], base: int, allowed: frozenset[int]):
        self.adj = adj
        self.edges = edges
        self.index = {e: i for i, e in enumerate(edges)}
        self.base = base
        self.allowed = allowed
        self.n = len(adj)
        self.cache: list[int] = []

    def _witnesses(self, adj_b: list[int]) -> list[int]:
        valid = [t for t in self.cache if _independent(adj_b, t) and _dominates(adj_b, t)]
        if valid:
            return valid
        t = find_independent_dominating(adj_b, self.base)
        if t is None:
            return []
        self.cache.append(t)
        if len(self.cache) > 256:
            self.cache.pop(0)
        return [t]

    def _stars(self, adj_b: list[int], t: int) -> list[frozenset[int]]:
        stars = []
        for x in range(self.n):
            if t >> x & 1:
                continue
            hit = adj_b[x] & t
            star = []
            while hit:
                low = hit & -hit
                star.append(self.index[edge_key(x, low.bit_length() - 1)])
                hit ^= low
            if all(i in self.allowed for i in star):
                stars.append(frozenset(star))
        return stars

    def run(self, k: int) -> list[frozenset[int]]:
        """All successful sets reachable within ``k`` deletions, smallest and
        then lexicographically first."""
        self.k = k
        self.seen: set[frozenset[int]] = set()
        self.hits: set[frozenset[int]] = set()
        self._visit(frozenset())
        return sorted(self.hits, key=lambda b: (len(b), sorted(b)))

    def _visit(self, b: frozenset[int]) -> None:
        if b in self.seen:
            return
        self.seen.add(b)
        adj_b = _delete(self.adj, self.edges, b)
        witnesses = self._witnesses(adj_b)
        if not witnesses:
            self.hits.add(b)
            return
        room = self.k - len(b)
        best = None
        for t in witnesses:
            options = [s for s in self._stars(adj_b, t) if len(s) <= room]
            if best is None or len(options) < len(best):
                best = options
            if not options:
                return
        for star in sorted(best, key=sorted):
            self._visit(b | star)


def bondage_i(g: GraphLike, limit: int = 8, allowed: Iterable[Edge] | None = None,
              method: str = "branch") -> BondageResult:
    """Smallest edge set (size <= limit) whose deletion raises gamma_i.

    Among sets of minimum size the lexicographically smallest by sorted edge
    index is returned. ``allowed`` restricts which edges may be deleted.
    ``method="naive"`` enumerates all k-subsets instead (slow; for checking).
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    search = breaking_search(g, allowed)
    adj, edges, base, pool = search.adj, search.edges, search.base, search.allowed
    found: tuple[int, ...] | None = None
    if method == "naive":
        for k in range(1, min(limit, len(pool)) + 1):
            for combo in itertools.combinations(sorted(pool), k):
                if find_independent_dominating(_delete(adj, edges, combo), base) is None:
                    found = combo
                    break
            if found:
                break
    elif method == "branch":
        for k in range(1, limit + 1):
            hits = search.run(k)
            if hits:
                found = tuple(sorted(hits[0]))
                break
    else:
        raise ValueError(f"unknown method {method!r}")
    if found is None:
        return BondageResult(None, (), base, None, limit)
    after, _ = gamma_i(adj_list(_delete(adj, edges, found)))
    return BondageResult(len(found), tuple(edges[i] for i in found), base, after, limit)


def breaking_search(g: GraphLike, allowed: Iterable[Edge] | None = None) -> BreakingSearch:
    """Search object over ``g`` restricted to ``allowed`` edges; call ``run(k)``."""
    edges = _edge_list(g)
    adj = neighbor_masks(g)
    base, _ = gamma_i(adj_list(adj))
    keys = None if allowed is None else {edge_key(*a) for a in allowed}
    pool = frozenset(i for i, e in enumerate(edges) if keys is None or e in keys)
    return BreakingSearch(adj, edges, base, pool)


def adj_list(masks: list[int]) -> list[list[int]]:
    return [[u for u in range(len(masks)) if m >> u & 1] for m in masks]


def priddy_wei_value(g: GraphLike, u: int, v: int) -> int:
    adj = neighbor_masks(g)
    common = (adj[u] & adj[v]).bit_count()
    return adj[u].bit_count() + adj[v].bit_count() - common - 1


def priddy_wei_bound(g: GraphLike) -> tuple[int, Edge]:
    """Minimum of the degree-sum bound over all edges, with its first argmin edge."""
    edges = _edge_list(g)
    if not edges:
        raise EmptyGraph("graph has no edges")
    return min((priddy_wei_value(g, u, v), (u, v)) for u, v in edges)
