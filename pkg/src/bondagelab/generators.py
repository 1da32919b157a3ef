"""Deterministic plane graph generators and the seeded test corpus."""

from __future__ import annotations

import math
import random
from typing import Callable

import numpy as np
from scipy.spatial import ConvexHull

from .graph import GraphError, PlaneGraph, build, from_faces


class BadParams(GraphError):
    pass


def _from_positions(pos: list[tuple[float, float]], edges: list[tuple[int, int]]) -> PlaneGraph:
    """Rotation system of a straight-line drawing (clockwise = decreasing angle)."""
    nbrs: list[list[int]] = [[] for _ in pos]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rotations = []
    for v, (x, y) in enumerate(pos):
        rotations.append(sorted(
            nbrs[v], key=lambda u: -math.atan2(pos[u][1] - y, pos[u][0] - x)
        ))
    return build(rotations)


def _ring(k: int, radius: float = 1.0, phase: float = 0.0) -> list[tuple[float, float]]:
    return [
        (radius * math.cos(2 * math.pi * i / k + phase), radius * math.sin(2 * math.pi * i / k + phase))
        for i in range(k)
    ]


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return _from_positions(_ring(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> PlaneGraph:
    if n < 2:
        raise BadParams("path needs n >= 2")
    return _from_positions([(float(i), 0.0) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> PlaneGraph:
    """K_{1,n}: centre 0 and leaves 1..n."""
    if n < 1:
        raise BadParams("star needs n >= 1")
    return _from_positions([(0.0, 0.0)] + _ring(n), [(0, i) for i in range(1, n + 1)])


def wheel(n: int) -> PlaneGraph:
    """Hub 0 joined to the cycle 1..n."""
    if n < 3:
        raise BadParams("wheel needs a rim of at least 3")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return _from_positions([(0.0, 0.0)] + _ring(n), edges)


def fan(n: int) -> PlaneGraph:
    """Hub 0 joined to the path 1..n."""
    if n < 2:
        raise BadParams("fan needs a rim of at least 2")
    pos = [(0.0, 0.0)] + [(math.cos(math.pi * i / (n + 1)), math.sin(math.pi * i / (n + 1))) for i in range(1, n + 1)]
    edges = [(0, i) for i in range(1, n + 1)] + [(i, i + 1) for i in range(1, n)]
    return _from_positions(pos, edges)


def k4() -> PlaneGraph:
    return from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])


def prism(n: int) -> PlaneGraph:
    """Two concentric n-cycles joined by a perfect matching (n=4 is the cube)."""
    if n < 3:
        raise BadParams("prism needs n >= 3")
    pos = _ring(n, 2.0) + _ring(n, math.cos(math.pi / n))
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return _from_positions(pos, edges)


def antiprism(n: int) -> PlaneGraph:
    if n < 3:
        raise BadParams("antiprism needs n >= 3")
    pos = _ring(n, 2.0) + _ring(n, math.cos(math.pi / n), math.pi / n)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)] + [((i + 1) % n, n + i) for i in range(n)]
    return _from_positions(pos, edges)


def _hull_graph(points: np.ndarray) -> PlaneGraph:
    hull = ConvexHull(points)
    centre = points.mean(axis=0)
    faces = []
    for a, b, c in hull.simplices:
        normal = np.cross(points[b] - points[a], points[c] - points[a])
        if np.dot(normal, points[a] - centre) < 0:
            b, c = c, b
        faces.append((int(a), int(b), int(c)))
    return from_faces(len(points), faces)


def octahedron() -> PlaneGraph:
    pts = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]], dtype=float)
    return _hull_graph(pts)


def icosahedron() -> PlaneGraph:
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)]
    return _hull_graph(np.array(pts, dtype=float))


def _stacked_faces(n: int, rng: random.Random) -> list[tuple[int, int, int]]:
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    for w in range(4, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces += [(a, b, w), (b, c, w), (c, a, w)]
    return faces


def stacked_triangulation(n: int, seed: int = 0) -> PlaneGraph:
    """Apollonian network: repeatedly split a random triangle of K4 into three."""
    if n < 4:
        raise BadParams("stacked triangulation needs n >= 4")
    return from_faces(n, _stacked_faces(n, random.Random(seed)))


def sparse_planar(n: int, seed: int = 0, drop: float = 0.35) -> PlaneGraph:
    """Stacked triangulation with random edges removed while keeping
    connectivity and minimum degree 3, so faces of several sizes appear."""
    if n < 4:
        raise BadParams("sparse_planar needs n >= 4")
    rng = random.Random(seed)
    g = from_faces(n, _stacked_faces(n, rng))
    rot = [list(r) for r in g.rotation]
    target = int(len(g.edges) * drop)
    candidates = list(g.edges)
    rng.shuffle(candidates)
    removed = 0
    for u, v in candidates:
        if removed >= target:
            break
        if len(rot[u]) <= 3 or len(rot[v]) <= 3:
            continue
        g_now = build(rot)
        f1, f2 = g_now.edge_faces(u, v)
        if f1 == f2:  # bridge
            continue
        rot[u].remove(v)
        rot[v].remove(u)
        removed += 1
    return build(rot)


GENERATORS: dict[str, Callable[..., PlaneGraph]] = {
    "cycle": cycle,
    "path": path,
    "star": star,
    "wheel": wheel,
    "fan": fan,
    "k4": k4,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "prism": prism,
    "cube": lambda: prism(4),
    "antiprism": antiprism,
    "stacked_triangulation": stacked_triangulation,
    "sparse_planar": sparse_planar,
}


def generate(kind: str, *params: int) -> PlaneGraph:
    try:
        fn = GENERATORS[kind]
    except KeyError:
        raise BadParams(f"unknown generator {kind!r}; choose from {', '.join(sorted(GENERATORS))}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {kind}: {exc}") from None


def corpus(seed: int, count: int, max_n: int = 20, min_n: int = 4) -> list[tuple[str, PlaneGraph]]:
    """Mixed-generator corpus of connected plane graphs with minimum degree >= 3.

    The sequence is a pure function of the arguments.
    """
    if max_n < min_n or max_n < 4:
        raise BadParams("max_n too small")
    rng = random.Random(seed)
    out: list[tuple[str, PlaneGraph]] = []
    fixed = [("k4", k4, 4), ("octahedron", octahedron, 6), ("icosahedron", icosahedron, 12)]
    kinds = ["stacked", "sparse", "sparse", "prism", "antiprism", "fixed", "stacked", "sparse"]
    i = 0
    while len(out) < count:
        kind = kinds[i % len(kinds)]
        i += 1
        lo = max(min_n, 4)
        if kind == "stacked":
            n, s = rng.randint(lo, max_n), rng.randrange(10 ** 6)
            out.append((f"stacked_triangulation-{n}-{s}", stacked_triangulation(n, s)))
        elif kind == "sparse":
            n, s = rng.randint(max(lo, 5), max(max_n, 5)), rng.randrange(10 ** 6)
            if n > max_n:
                continue
            out.append((f"sparse_planar-{n}-{s}", sparse_planar(n, s)))
        elif kind in ("prism", "antiprism"):
            k = rng.randint(3, max(3, max_n // 2))
            if 2 * k > max_n:
                continue
            fn = prism if kind == "prism" else antiprism
            out.append((f"{kind}-{k}", fn(k)))
        else:
            name, fn, size = fixed[rng.randrange(len(fixed))]
            if size > max_n:
                continue
            out.append((name, fn()))
    return out


__all__ = [
    "BadParams", "GENERATORS", "generate", "corpus", "cycle", "path", "star", "wheel", "fan",
    "k4", "octahedron", "icosahedron", "prism", "antiprism", "stacked_triangulation",
    "sparse_planar",
]
