"""Plane graphs given by rotation systems.

A plane graph is stored as, for every vertex, the clockwise cyclic list of its
neighbours. Faces are recovered by tracing darts: the dart following ``(u, v)``
on its face is ``(v, w)`` where ``w`` comes right after ``u`` in the rotation
at ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Dart = tuple[int, int]
Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for invalid graph input."""

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class InvalidId(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateNeighbor(GraphError):
    pass


class AsymmetricAdjacency(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotPlanarEmbedding(GraphError):
    pass


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Boundary vertices in walk order, repeated at cut vertices."""
        return tuple(u for u, _ in self.boundary)


@dataclass(frozen=True)
class FanWitness:
    hub: int
    rim: tuple[int, ...]
    is_wheel: bool


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """Immutable, validated plane graph. Build it with :func:`build`."""

    n: int
    rotation: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]
    adj: tuple[frozenset[int], ...] = field(repr=False)
    _dart_face: dict[Dart, int] = field(repr=False)
    _pos: tuple[dict[int, int], ...] = field(repr=False)
    _edge_index: dict[Edge, int] = field(repr=False)

    # -- basic queries -------------------------------------------------

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidId(f"no vertex {v!r}", v)

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.rotation[v])

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adj[u]

    @property
    def min_degree(self) -> int:
        return min(len(r) for r in self.rotation)

    @property
    def max_degree(self) -> int:
        return max(len(r) for r in self.rotation)

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._edge_index[edge_key(u, v)]
        except KeyError:
            raise InvalidId(f"no edge {u}-{v}") from None

    def face_degree(self, f: int) -> int:
        if not (isinstance(f, int) and 0 <= f < len(self.faces)):
            raise InvalidId(f"no face {f!r}")
        return self.faces[f].degree

    def dart_face(self, u: int, v: int) -> int:
        try:
            return self._dart_face[(u, v)]
        except KeyError:
            raise InvalidId(f"no dart {u}->{v}") from None

    def edge_faces(self, u: int, v: int) -> tuple[int, int]:
        """Faces on the two sides of edge uv (equal for a bridge)."""
        return self.dart_face(u, v), self.dart_face(v, u)

    def succ(self, v: int, u: int) -> int:
        """Neighbour following ``u`` clockwise around ``v``."""
        rot = self.rotation[v]
        return rot[(self._pos[v][u] + 1) % len(rot)]

    def pred(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(self._pos[v][u] - 1) % len(rot)]

    def corners(self, v: int) -> tuple[int, ...]:
        """Face ids at the angles of ``v``.

        Entry ``i`` is the face between ``rotation[v][i]`` and
        ``rotation[v][i + 1]``. A face meeting a cut vertex several times
        appears several times.
        """
        self._check(v)
        rot = self.rotation[v]
        d = len(rot)
        return tuple(self._dart_face[(v, rot[(i + 1) % d])] for i in range(d))

    def corner_degrees(self, v: int) -> tuple[int, ...]:
        return tuple(self.faces[f].degree for f in self.corners(v))

    def faces_at(self, v: int, lo: int = 0, hi: int | None = None) -> frozenset[int]:
        """Distinct faces at ``v`` whose degree lies in ``[lo, hi]``."""
        return frozenset(
            f for f in self.corners(v)
            if self.faces[f].degree >= lo and (hi is None or self.faces[f].degree <= hi)
        )

    def neighbors_with_degree(self, v: int, lo: int = 0, hi: int | None = None) -> frozenset[int]:
        return frozenset(
            u for u in self.neighbors(v)
            if len(self.rotation[u]) >= lo and (hi is None or len(self.rotation[u]) <= hi)
        )

    def degree_sum(self, u: int, v: int) -> int:
        return self.degree(u) + self.degree(v)

    def to_rotations(self) -> list[list[int]]:
        return [list(r) for r in self.rotation]

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={len(self.edges)}, faces={len(self.faces)})"


def build(rotations: Sequence[Iterable[int]]) -> PlaneGraph:
    """Validate a rotation system and trace its faces."""
    rot = tuple(tuple(r) for r in rotations)
    n = len(rot)
    if n == 0:
        raise NotConnected("graph has no vertices")
    for v, r in enumerate(rot):
        for u in r:
            if not isinstance(u, int) or not 0 <= u < n:
                raise InvalidId(f"vertex {v} lists unknown neighbour {u!r}", v)
            if u == v:
                raise SelfLoop(f"vertex {v} lists itself", v)
        if len(set(r)) != len(r):
            raise DuplicateNeighbor(f"vertex {v} lists a neighbour twice", v)
    adj = tuple(frozenset(r) for r in rot)
    for v in range(n):
        for u in rot[v]:
            if v not in adj[u]:
                raise AsymmetricAdjacency(f"{v} lists {u} but {u} does not list {v}", v)

    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in rot[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise NotConnected(f"vertex {missing} is unreachable from vertex 0", missing)

    pos = tuple({u: i for i, u in enumerate(r)} for r in rot)
    dart_face: dict[Dart, int] = {}
    faces: list[Face] = []
    for v in range(n):
        for u in rot[v]:
            if (v, u) in dart_face:
                continue
            fid = len(faces)
            walk = []
            dart = (v, u)
            while dart not in dart_face:
                dart_face[dart] = fid
                walk.append(dart)
                a, b = dart
                rb = rot[b]
                dart = (b, rb[(pos[b][a] + 1) % len(rb)])
            if dart != (v, u):
                # cannot happen for a permutation, kept as a guard
                raise NotPlanarEmbedding("face tracing did not close")
            faces.append(Face(fid, tuple(walk)))

    edges = tuple(sorted({edge_key(v, u) for v in range(n) for u in rot[v]}))
    if n - len(edges) + len(faces) != 2:
        raise NotPlanarEmbedding(
            f"Euler check failed: {n} - {len(edges)} + {len(faces)} != 2 (rotation is not planar)"
        )
    return PlaneGraph(
        n=n,
        rotation=rot,
        edges=edges,
        faces=tuple(faces),
        adj=adj,
        _dart_face=dart_face,
        _pos=pos,
        _edge_index={e: i for i, e in enumerate(edges)},
    )


def from_faces(n: int, faces: Iterable[Sequence[int]]) -> PlaneGraph:
    """Build from consistently oriented face boundary cycles.

    A face ``(x0, x1, ..., xk)`` means the darts ``(xi, xi+1)`` lie on it, so
    at ``x[i+1]`` the neighbour ``x[i+2]`` follows ``x[i]``.
    """
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for cyc in faces:
        k = len(cyc)
        for i in range(k):
            a, b, c = cyc[i], cyc[(i + 1) % k], cyc[(i + 2) % k]
            if a in succ[b]:
                raise NotPlanarEmbedding(f"faces inconsistent at vertex {b}", b)
            succ[b][a] = c
    rotations = []
    for v in range(n):
        if not succ[v]:
            rotations.append([])
            continue
        start = min(succ[v])
        order = [start]
        nxt = succ[v][start]
        while nxt != start:
            if nxt in order or nxt not in succ[v]:
                raise NotPlanarEmbedding(f"faces do not close around vertex {v}", v)
            order.append(nxt)
            nxt = succ[v][nxt]
        if len(order) != len(succ[v]):
            raise NotPlanarEmbedding(f"vertex {v} is not a disk neighbourhood", v)
        rotations.append(order)
    return build(rotations)


def find_fan(g: PlaneGraph, hub: int) -> list[FanWitness]:
    """Maximal fans at ``hub`` made of consecutive triangular corners.

    Every neighbour of the hub belongs to exactly one reported fan; a
    neighbour touching no triangular corner forms a fan of rim length one.
    """
    rot = g.rotation[hub]
    d = g.degree(hub)
    tri = [g.faces[f].degree == 3 for f in g.corners(hub)]
    if all(tri):
        rim = tuple(rot)
        return [FanWitness(hub, rim, len(rim) >= 3 and g.has_edge(rim[0], rim[-1]))]
    # start just after a non-triangular corner so no run wraps around
    start = (tri.index(False) + 1) % d
    fans = []
    rim = [rot[start]]
    for step in range(d):
        i = (start + step) % d
        if tri[i] and step < d - 1:
            rim.append(rot[(i + 1) % d])
        else:
            fans.append(rim)
            rim = [rot[(i + 1) % d]]
    return [
        FanWitness(hub, tuple(r), len(r) >= 3 and g.has_edge(r[0], r[-1]))
        for r in fans
    ]


def delete_edges(g: PlaneGraph, removed: Iterable[Edge]) -> list[frozenset[int]]:
    """Abstract adjacency of ``g`` minus ``removed``; the embedding is dropped."""
    adj = [set(a) for a in g.adj]
    for u, v in removed:
        if v not in adj[u]:
            raise InvalidId(f"no edge {u}-{v}")
        adj[u].discard(v)
        adj[v].discard(u)
    return [frozenset(a) for a in adj]
