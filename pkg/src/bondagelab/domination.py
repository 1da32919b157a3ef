"""Exact domination and independent domination numbers.

Vertex sets are handled as integer bitmasks internally. Every solver takes
either a :class:`PlaneGraph` or a plain adjacency sequence, since edge
deletion drops the embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .graph import InvalidId, PlaneGraph

GraphLike = Union[PlaneGraph, Sequence[Iterable[int]]]


def neighbor_masks(g: GraphLike) -> list[int]:
    adj = g.adj if isinstance(g, PlaneGraph) else g
    masks = []
    for nbrs in adj:
        m = 0
        for u in nbrs:
            m |= 1 << u
        masks.append(m)
    return masks


def _to_mask(n: int, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not (isinstance(v, int) and 0 <= v < n):
            raise InvalidId(f"no vertex {v!r}", v if isinstance(v, int) else None)
        m |= 1 << v
    return m


def _members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _dominates(adj: list[int], mask: int) -> bool:
    covered = mask
    for v in _members(mask):
        covered |= adj[v]
    return covered == (1 << len(adj)) - 1


def _independent(adj: list[int], mask: int) -> bool:
    return all(not (adj[v] & mask) for v in _members(mask))


def is_dominating(g: GraphLike, s: Iterable[int]) -> bool:
    adj = neighbor_masks(g)
    return _dominates(adj, _to_mask(len(adj), s))


def is_independent(g: GraphLike, s: Iterable[int]) -> bool:
    adj = neighbor_masks(g)
    return _independent(adj, _to_mask(len(adj), s))


@dataclass(frozen=True)
class DominatingSetWitness:
    vertices: tuple[int, ...]
    independent: bool
    dominating: bool

    @property
    def cardinality(self) -> int:
        return len(self.vertices)

    @classmethod
    def of(cls, g: GraphLike, s: Iterable[int]) -> "DominatingSetWitness":
        """Flags are always recomputed from the graph."""
        adj = neighbor_masks(g)
        mask = _to_mask(len(adj), s)
        return cls(_members(mask), _independent(adj, mask), _dominates(adj, mask))


class _Search:
    """Branch and bound over an uncovered vertex's closed neighbourhood.

    Branch ``i`` adds the ``i``-th candidate and forbids the earlier ones, so
    every vertex set is reached along at most one path.
    """

    def __init__(self, adj: list[int], independent: bool):
        self.adj = adj
        self.n = len(adj)
        self.full = (1 << self.n) - 1
        self.closed = [adj[v] | (1 << v) for v in range(self.n)]
        self.independent = independent

    def run(self, limit: int, forced_in: int = 0, forced_out: int = 0,
            mode: str = "min") -> list[int]:
        """``mode`` is ``min`` (optimum of size <= limit), ``first`` (any set
        of size <= limit) or ``all`` (every set of size <= limit)."""
        self.mode = mode
        self.bound = limit + 1 if mode == "min" else limit
        self.found: list[int] = []
        if forced_in & forced_out:
            return []
        covered = 0
        blocked = forced_out
        for v in _members(forced_in):
            covered |= self.closed[v]
            if self.independent:
                if self.adj[v] & forced_in:
                    return []
                blocked |= self.adj[v]
        self._dfs(forced_in, forced_in.bit_count(), covered, blocked)
        return self.found

    def _dfs(self, chosen: int, size: int, covered: int, blocked: int) -> bool:
        if covered == self.full:
            if self.mode == "min":
                if size < self.bound:
                    self.bound = size
                    self.found = [chosen]
            else:
                self.found.append(chosen)
            return self.mode == "first"
        unc = self.full & ~covered
        n_unc = unc.bit_count()
        closed = self.closed
        pick = -1
        pick_key = None
        best_cover = 0
        rest = unc
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cands = closed[v] & ~blocked
            c = cands.bit_count()
            if c == 0:
                return False
            key = (c, closed[v].bit_count(), v)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        avail = self.full & ~blocked
        while avail:
            low = avail & -avail
            x = low.bit_length() - 1
            avail ^= low
            k = (closed[x] & unc).bit_count()
            if k > best_cover:
                best_cover = k
        need = -(-n_unc // best_cover)
        over = size + need >= self.bound if self.mode == "min" else size + need > self.bound
        if over:
            return False
        cands = closed[pick] & ~blocked
        excluded = 0
        while cands:
            low = cands & -cands
            x = low.bit_length() - 1
            cands ^= low
            nb = blocked | excluded | low
            if self.independent:
                nb |= self.adj[x]
            if self._dfs(chosen | low, size + 1, covered | closed[x], nb):
                return True
            excluded |= low
            if self.mode == "min" and size + 1 >= self.bound:
                return False
        return False


def _optimum(adj: list[int], independent: bool) -> int:
    n = len(adj)
    found = _Search(adj, independent).run(n)
    return found[0].bit_count()


def _lex_smallest(adj: list[int], k: int, independent: bool) -> int:
    """Lexicographically smallest optimal set, fixed one vertex at a time."""
    search = _Search(adj, independent)
    chosen = 0
    excluded = 0
    for v in range(len(adj)):
        if chosen.bit_count() == k:
            break
        if search.run(k, chosen | (1 << v), excluded, mode="first"):
            chosen |= 1 << v
        else:
            excluded |= 1 << v
    return chosen


def _solve(g: GraphLike, independent: bool) -> tuple[int, DominatingSetWitness]:
    adj = neighbor_masks(g)
    if not adj:
        return 0, DominatingSetWitness((), True, True)
    k = _optimum(adj, independent)
    best = _lex_smallest(adj, k, independent)
    assert best.bit_count() == k
    return k, DominatingSetWitness(_members(best), _independent(adj, best), _dominates(adj, best))


def gamma(g: GraphLike) -> tuple[int, DominatingSetWitness]:
    """Domination number with the lexicographically smallest minimum witness."""
    return _solve(g, independent=False)


def gamma_i(g: GraphLike) -> tuple[int, DominatingSetWitness]:
    """Independent domination number with the lexicographically smallest witness."""
    return _solve(g, independent=True)


def find_independent_dominating(adj: list[int], max_size: int) -> int | None:
    """Any independent dominating set of size <= max_size, as a bitmask."""
    found = _Search(adj, True).run(max_size, mode="first")
    return found[0] if found else None


def minimum_independent_dominating_sets(g: GraphLike) -> list[tuple[int, ...]]:
    """All minimum independent dominating sets, lexicographically sorted."""
    adj = neighbor_masks(g)
    if not adj:
        return [()]
    k = _optimum(adj, True)
    sets = _Search(adj, True).run(k, mode="all")
    return sorted(_members(m) for m in sets)
