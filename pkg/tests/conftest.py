"""Shared fixtures: hand-built configuration graphs and brute-force oracles."""

from __future__ import annotations

import itertools
import math

import pytest

from bondagelab.generators import _from_positions
from bondagelab.graph import PlaneGraph, from_faces


def h_graph() -> PlaneGraph:
    """Centre 0 of degree 10, rim 1..10, triangles in angles 1-9 and a 4-face
    0,10,11,1 in angle 10; vertex 12 closes the outside."""
    inner = [(0, i, i + 1) for i in range(1, 10)] + [(0, 10, 11, 1)]
    outer = [(12, 4, 3, 2), (12, 6, 5, 4), (12, 8, 7, 6), (12, 10, 9, 8), (12, 11, 10), (12, 2, 1, 11)]
    return from_faces(13, inner + outer)


def g_graph() -> PlaneGraph:
    """Centre 0 of degree 8, 4-faces through 9, 10, 11 in angles 1, 4, 7;
    vertex 12 closes the outside."""
    inner = [(0, 1, 9, 2), (0, 2, 3), (0, 3, 4), (0, 4, 10, 5),
             (0, 5, 6), (0, 6, 7), (0, 7, 11, 8), (0, 8, 1)]
    outer = [(12, 9, 1, 8, 11), (12, 10, 4, 3, 2, 9), (12, 11, 7, 6, 5, 10)]
    return from_faces(13, inner + outer)


def d10_graph() -> PlaneGraph:
    """W10 (hub 0, rim 1..10) plus 11, 12 outside the rim: 9 gains the two
    outside neighbours 11 and 12, so it has degree 5."""
    inner = [(0, i, i % 10 + 1) for i in range(1, 11)]
    outer = [(9, 8, 11), (9, 11, 12), (10, 9, 12), (1, 10, 12, 11, 8, 7, 6, 5, 4, 3, 2)]
    return from_faces(13, inner + outer)


def _fan_block(k: int) -> tuple[list[tuple[float, float]], list[tuple[int, int]]]:
    """Apex 0 over the path a=1, p1..pk, b=k+2 plus the chord ab: apex degree
    k + 2 and outer face the triangle (0, a, b). Apex at the local origin."""
    ps = [(-0.9 + 1.8 * i / max(k - 1, 1), 2.0) for i in range(k)]
    pos = [(0.0, 0.0), (-3.0, 2.2)] + ps + [(3.0, 2.2)]
    edges = [(0, i) for i in range(1, k + 3)] + [(i, i + 1) for i in range(1, k + 2)] + [(1, k + 2)]
    return pos, edges


def bridge_graph(ks: tuple[int, int, int] = (4, 4, 4)) -> tuple[PlaneGraph, int]:
    """A 3-vertex joined by three bridges to fan blocks whose apexes get
    degree ``k + 3``. Returns the graph and the 3-vertex (always 0).

    Every block contributes its outer triangle plus both sides of its bridge,
    so the face shared by the 3-vertex has degree exactly 15."""
    pos: list[tuple[float, float]] = [(0.0, 0.0)]
    edges: list[tuple[int, int]] = []
    for b, k in enumerate(ks):
        local, block_edges = _fan_block(k)
        base = len(pos)
        theta = 2 * math.pi * b / 3
        c, s = math.cos(theta), math.sin(theta)
        for x, y in local:
            y += 6.0
            pos.append((c * x - s * y, s * x + c * y))
        edges += [(base + u, base + v) for u, v in block_edges]
        edges.append((0, base))
    return _from_positions(pos, edges), 0


def naive_min(adj: list[frozenset[int]] | tuple[frozenset[int], ...], independent: bool) -> int:
    n = len(adj)
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            chosen = set(s)
            if independent and any(adj[u] & chosen for u in s):
                continue
            if all(v in chosen or adj[v] & chosen for v in range(n)):
                return k
    raise AssertionError("unreachable")


def naive_lex_witness(adj, independent: bool) -> tuple[int, ...]:
    k = naive_min(adj, independent)
    n = len(adj)
    for s in itertools.combinations(range(n), k):
        chosen = set(s)
        if independent and any(adj[u] & chosen for u in s):
            continue
        if all(v in chosen or adj[v] & chosen for v in range(n)):
            return s
    raise AssertionError("unreachable")


@pytest.fixture
def hgraph() -> PlaneGraph:
    return h_graph()


@pytest.fixture
def ggraph() -> PlaneGraph:
    return g_graph()
