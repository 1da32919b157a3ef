"""Detectors for the unavoidable configurations of plane graphs with
minimum degree three.

Edge kinds ``a``, ``b``, ``c`` bound the degree sum of an edge and the number
of triangles on it. Vertex kinds ``d`` to ``h`` look at a vertex of degree 8,
9 or 10, the sizes of the faces in its angles and an independent set ``I`` of
low-degree neighbours, all read in rotation order ``u1 .. ud``.

Angle ``i`` of the centre lies between ``u_i`` and ``u_(i+1)`` (angle ``d``
closes the cycle back to ``u1``). A template fixes which angles are 4+-faces,
which positions form ``I`` and the largest degree allowed at each of those
positions (3 means exactly 3). Templates are matched at every rotation offset
in both orientations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import Edge, PlaneGraph

EDGE_KINDS = ("a", "b", "c")
VERTEX_KINDS = ("d_i", "d_ii", "e_i_alpha", "e_i_beta", "e_i_delta", "e_ii", "f", "g", "h")
KIND_ORDER = EDGE_KINDS + VERTEX_KINDS


@dataclass(frozen=True)
class Template:
    id: str
    kind: str
    degree: int
    four_plus: frozenset[int]
    roles: tuple[tuple[int, int], ...]  # (position, max degree)
    canonical: bool


@dataclass(frozen=True)
class ConfigurationWitness:
    kind: str
    center: int | Edge
    rim: tuple[int, ...] = ()
    independent_set: tuple[int, ...] = ()
    face_pattern: tuple[int, ...] = ()
    template: str = ""
    reflected: bool = False
    applicable: tuple[str, ...] = field(default=(), compare=False)

    @property
    def is_edge_kind(self) -> bool:
        return self.kind in EDGE_KINDS

    def label(self, i: int) -> int:
        """Vertex ``u_i`` (1-based, cyclic)."""
        return self.rim[(i - 1) % len(self.rim)]

    def __str__(self) -> str:
        if self.is_edge_kind:
            centre = f"{self.center[0]}-{self.center[1]}"
        else:
            centre = str(self.center)
        ids = ",".join(map(str, self.independent_set))
        faces = ",".join(map(str, self.face_pattern))
        return f"config {self.kind} center={centre} I={ids} faces={faces}"


def _t(id_, kind, d, four_plus, roles, canonical=True):
    return Template(id_, kind, d, frozenset(four_plus), tuple(sorted(roles.items())), canonical)


def _d_family() -> list[Template]:
    out = [
        _t("d_i/10", "d_i", 10, (), {1: 3, 3: 3, 5: 3, 7: 3, 9: 5}),
        _t("d_ii/10", "d_ii", 10, (), {1: 3, 3: 3, 5: 3, 7: 4, 9: 4}),
        _t("d_i/9", "d_i", 9, (), {1: 3, 3: 3, 5: 3, 7: 5}),
        _t("d_ii/9", "d_ii", 9, (), {1: 3, 3: 3, 5: 4, 7: 4}),
    ]
    # other placements allowed by the clause wording; 1 in I fixes the offset
    for d in (9, 10):
        size = d // 2
        for rest in itertools.combinations(range(3, d + 1), size - 1):
            pos = (1,) + rest
            if any(b - a == 1 for a, b in zip(pos, pos[1:])) or (d in pos):
                continue
            for j in pos:
                roles = {p: 3 for p in pos}
                roles[j] = 5
                out.append(_t(f"d_i/{d}/{''.join(map(chr, [96 + p for p in pos]))}{j}",
                              "d_i", d, (), roles, False))
            for j, k in itertools.combinations(pos, 2):
                roles = {p: 3 for p in pos}
                roles[j] = roles[k] = 4
                out.append(_t(f"d_ii/{d}/{''.join(map(chr, [96 + p for p in pos]))}{j}{k}",
                              "d_ii", d, (), roles, False))
    return out


def _templates() -> list[Template]:
    out = _d_family()
    out.append(_t("e_i_alpha", "e_i_alpha", 9, (9,), {2: 3, 4: 3, 6: 3, 8: 5}))
    for j in (4, 6):
        roles = {2: 3, 4: 3, 6: 3, 8: 3}
        roles[j] = 5
        out.append(_t(f"e_i_alpha/{j}", "e_i_alpha", 9, (9,), roles, False))
    out.append(_t("e_i_beta", "e_i_beta", 9, (9,), {1: 3, 3: 3, 5: 3, 7: 3, 9: 7}))
    out.append(_t("e_i_delta", "e_i_delta", 9, (9,), {1: 3, 3: 3, 5: 3, 8: 3}))
    for a, b in ((3, 6), (4, 6)):
        out.append(_t(f"e_i_delta/{a}{b}", "e_i_delta", 9, (9,), {1: 3, a: 3, b: 3, 8: 3}, False))
    out.append(_t("e_ii", "e_ii", 9, (8, 9), {1: 3, 3: 3, 5: 3, 7: 3, 9: 6}))
    out.append(_t("f", "f", 8, (1, 4), {1: 3, 2: 3, 4: 3, 5: 3, 7: 5}))
    g_roles = {2: 3, 4: 3, 5: 3, 7: 3, 8: 3}
    out.append(_t("g", "g", 8, (1, 4, 7), g_roles))
    for c in (2, 3, 5, 6, 8):
        out.append(_t(f"g/{c}", "g", 8, (4, 7, c), g_roles, False))
    out.append(_t("h", "h", 10, (10,), {1: 3, 3: 3, 5: 3, 7: 3, 9: 3}))
    return out


TEMPLATES: dict[str, Template] = {t.id: t for t in _templates()}


def _labelled(g: PlaneGraph, v: int, offset: int, reflected: bool) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rim ``u1..ud`` and angle faces ``c1..cd`` for one reading of the rotation."""
    rot = g.rotation[v]
    corners = g.corners(v)
    d = len(rot)
    if reflected:
        rim = tuple(rot[(offset - i) % d] for i in range(d))
        faces = tuple(corners[(offset - i - 1) % d] for i in range(d))
    else:
        rim = tuple(rot[(offset + i) % d] for i in range(d))
        faces = tuple(corners[(offset + i) % d] for i in range(d))
    return rim, faces


def _role_ok(deg: int, bound: int) -> bool:
    return deg == 3 if bound == 3 else deg <= bound


def _match(g: PlaneGraph, v: int, t: Template, offset: int, reflected: bool) -> ConfigurationWitness | None:
    rim, faces = _labelled(g, v, offset, reflected)
    pattern = tuple(g.faces[f].degree for f in faces)
    for i, deg in enumerate(pattern, start=1):
        if (deg >= 4) != (i in t.four_plus) or (deg < 4 and deg != 3):
            return None
    members = []
    for pos, bound in t.roles:
        u = rim[pos - 1]
        if not _role_ok(g.degree(u), bound):
            return None
        members.append(u)
    if any(b in g.adj[a] for a, b in itertools.combinations(members, 2)):
        return None
    return ConfigurationWitness(
        kind=t.kind, center=v, rim=rim, independent_set=tuple(sorted(members)),
        face_pattern=pattern, template=t.id, reflected=reflected,
    )


def _edge_kinds(g: PlaneGraph, u: int, v: int) -> tuple[tuple[str, ...], tuple[int, int]]:
    s = g.degree(u) + g.degree(v)
    f1, f2 = g.edge_faces(u, v)
    degs = (g.faces[f1].degree, g.faces[f2].degree)
    tri = sum(1 for x in degs if x == 3) if f1 != f2 else int(degs[0] == 3)
    kinds = []
    if s <= 11 and tri == 2:
        kinds.append("a")
    if s <= 10 and tri >= 1:
        kinds.append("b")
    if s <= 9:
        kinds.append("c")
    return tuple(kinds), degs


def detect_edge_configs(g: PlaneGraph) -> list[ConfigurationWitness]:
    """One witness per qualifying edge, labelled by the first of a, b, c that holds."""
    out = []
    for u, v in g.edges:
        kinds, degs = _edge_kinds(g, u, v)
        if kinds:
            out.append(ConfigurationWitness(kinds[0], (u, v), face_pattern=degs, applicable=kinds))
    return out


def detect_vertex_configs(g: PlaneGraph) -> list[ConfigurationWitness]:
    """For each vertex of degree 8-10, the first matching labelling of every kind."""
    by_kind: dict[tuple[str, int], list[Template]] = {}
    for t in TEMPLATES.values():
        by_kind.setdefault((t.kind, t.degree), []).append(t)
    for ts in by_kind.values():
        ts.sort(key=lambda t: not t.canonical)
    out = []
    for v in range(g.n):
        d = g.degree(v)
        if d not in (8, 9, 10):
            continue
        for kind in VERTEX_KINDS:
            w = _first_match(g, v, by_kind.get((kind, d), []))
            if w is not None:
                out.append(w)
    return out


def _first_match(g: PlaneGraph, v: int, templates: list[Template]) -> ConfigurationWitness | None:
    d = g.degree(v)
    for t in templates:
        for reflected in (False, True):
            for offset in range(d):
                w = _match(g, v, t, offset, reflected)
                if w is not None:
                    return w
    return None


def detect_all(g: PlaneGraph) -> list[ConfigurationWitness]:
    return detect_edge_configs(g) + detect_vertex_configs(g)


def find_configuration(g: PlaneGraph) -> ConfigurationWitness | None:
    """First witness in kind order a, b, c, d .. h; edges by index, vertices by id."""
    found = detect_all(g)
    for kind in KIND_ORDER:
        for w in found:
            if w.kind == kind:
                return w
    return None


def validate(g: PlaneGraph, w: ConfigurationWitness) -> list[str]:
    """Recheck a witness from scratch; returns the list of violated conditions."""
    problems: list[str] = []
    if w.kind in EDGE_KINDS:
        u, v = w.center
        if not g.has_edge(u, v):
            return [f"{u}-{v} is not an edge"]
        kinds, degs = _edge_kinds(g, u, v)
        if w.kind not in kinds:
            problems.append(f"edge {u}-{v} does not satisfy ({w.kind})")
        if tuple(w.face_pattern) != degs:
            problems.append("face pattern differs")
        return problems
    t = TEMPLATES.get(w.template)
    if t is None or t.kind != w.kind:
        return [f"unknown template {w.template!r} for kind {w.kind}"]
    v = w.center
    if not (isinstance(v, int) and 0 <= v < g.n):
        return [f"no vertex {v!r}"]
    if g.degree(v) != t.degree:
        return [f"centre degree {g.degree(v)} != {t.degree}"]
    d = t.degree
    readings = [(o, r) for r in (False, True) for o in range(d)
                if _labelled(g, v, o, r)[0] == tuple(w.rim) and r == w.reflected]
    if not readings:
        return ["rim is not a reading of the rotation at the centre"]
    again = _match(g, v, t, *readings[0])
    if again is None:
        problems.append("template conditions fail")
    elif again.independent_set != tuple(w.independent_set) or again.face_pattern != tuple(w.face_pattern):
        problems.append("independent set or face pattern differs")
    members = w.independent_set
    if any(b in g.adj[a] for a, b in itertools.combinations(members, 2)):
        problems.append("I is not independent")
    return problems
