"""Exact discharging on plane graphs.

Initial charges follow one of three Euler-derived schemes. The seven
redistribution rules are written for the vertex scheme (``d(v) - 6`` on
vertices, ``2 l(f) - 6`` on faces) and are applied simultaneously: every
precondition reads the unchanged graph, and transfers add up. All arithmetic
uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .graph import PlaneGraph

SCHEMES = {
    # scheme: (vertex charge, face charge, Euler total)
    "vertex": (lambda d: d - 6, lambda l: 2 * l - 6, Fraction(-12)),
    "face": (lambda d: 2 * d - 6, lambda l: l - 6, Fraction(-12)),
    "balanced": (lambda d: d - 4, lambda l: l - 4, Fraction(-8)),
}

HALF = Fraction(1, 2)


class SchemeMismatch(ValueError):
    pass


class Element(NamedTuple):
    kind: str  # "v" or "f"
    id: int

    def __str__(self) -> str:
        return f"{self.kind}{self.id}"


class Transfer(NamedTuple):
    source: Element
    target: Element
    amount: Fraction
    rule: str

    def __str__(self) -> str:
        return f"{self.rule} {self.source} -> {self.target} {fmt(self.amount)}"


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class ChargeState:
    scheme: str
    vertex_charge: tuple[Fraction, ...]
    face_charge: tuple[Fraction, ...]
    ledger: tuple[Transfer, ...] = ()

    @property
    def total(self) -> Fraction:
        return sum(self.vertex_charge, Fraction(0)) + sum(self.face_charge, Fraction(0))

    @property
    def expected_total(self) -> Fraction:
        return SCHEMES[self.scheme][2]

    def charge(self, e: Element) -> Fraction:
        return (self.vertex_charge if e.kind == "v" else self.face_charge)[e.id]


def initial_charges(g: PlaneGraph, scheme: str = "vertex") -> ChargeState:
    try:
        fv, ff, _ = SCHEMES[scheme]
    except KeyError:
        raise SchemeMismatch(f"unknown scheme {scheme!r}") from None
    return ChargeState(
        scheme,
        tuple(Fraction(fv(g.degree(v))) for v in range(g.n)),
        tuple(Fraction(ff(f.degree)) for f in g.faces),
    )


def _face_sides(g: PlaneGraph, u: int, v: int) -> tuple[int, int]:
    a, b = g.edge_faces(u, v)
    return g.faces[a].degree, g.faces[b].degree


def _e33(g: PlaneGraph, u: int, v: int) -> bool:
    return _face_sides(g, u, v) == (3, 3)


def _e3_4plus(g: PlaneGraph, u: int, v: int) -> bool:
    x, y = sorted(_face_sides(g, u, v))
    return x == 3 and y >= 4


def _four_plus_face(g: PlaneGraph, u: int, v: int) -> int:
    a, b = g.edge_faces(u, v)
    return a if g.faces[a].degree >= 4 else b


def _triangle_spokes_to_3(g: PlaneGraph, u: int) -> int:
    return sum(1 for w in g.rotation[u] if g.degree(w) == 3 and _e33(g, u, w))


def r3_face_pays(g: PlaneGraph, v: int, u: int) -> bool:
    """For a 3-vertex ``v`` and 9-vertex ``u`` on a triangle and a 4+-face,
    whether ``u`` is in one of the two exceptional cases where the 4+-face pays."""
    if g.degree(u) != 9:
        return False
    rot = g.rotation[u]
    degs = g.corner_degrees(u)
    big = [i for i, x in enumerate(degs) if x >= 4]
    tris = sum(1 for x in degs if x == 3)
    if len(big) == 1 and tris == 8:
        i = big[0]
        ends = {rot[i], rot[(i + 1) % 9]}
        if v not in ends:
            return False
        (w,) = ends - {v}
        return g.degree(w) >= 8 and _triangle_spokes_to_3(g, u) >= 3
    if len(big) == 2 and tris == 7:
        i, j = big
        if (i + 1) % 9 == j:
            w = rot[j]
        elif (j + 1) % 9 == i:
            w = rot[i]
        else:
            return False
        return g.degree(w) >= 7 and _triangle_spokes_to_3(g, u) >= 3
    return False


def rule_transfers(g: PlaneGraph) -> list[Transfer]:
    """Every transfer made by the seven rules, in canonical order."""
    out: list[Transfer] = []

    def give(src: Element, v: int, amount: Fraction, rule: str) -> None:
        out.append(Transfer(src, Element("v", v), Fraction(amount), rule))

    for v in range(g.n):
        d = g.degree(v)
        corners = g.corners(v)
        cdeg = [g.faces[f].degree for f in corners]
        big = [f for f, x in zip(corners, cdeg) if x >= 4]
        if d == 3:
            for u in g.rotation[v]:
                if g.degree(u) >= 9 and _e33(g, v, u):
                    give(Element("v", u), v, Fraction(1), "R1")
            if len(set(corners)) == 1:
                give(Element("f", corners[0]), v, Fraction(3), "R2")
            else:
                for f, x in zip(corners, cdeg):
                    if x == 4:
                        give(Element("f", f), v, Fraction(1), "R2")
                    elif x >= 5:
                        give(Element("f", f), v, Fraction(2), "R2")
            for u in g.rotation[v]:
                if g.degree(u) >= 8 and _e3_4plus(g, v, u):
                    if r3_face_pays(g, v, u):
                        give(Element("f", _four_plus_face(g, v, u)), v, HALF, "R3")
                    else:
                        give(Element("v", u), v, HALF, "R3")
        elif d == 4:
            if len(big) <= 1:
                for f in big:
                    give(Element("f", f), v, Fraction(1 if g.faces[f].degree == 4 else 2), "R4")
                for u in g.rotation[v]:
                    if g.degree(u) >= 8 and _e33(g, v, u):
                        give(Element("v", u), v, HALF, "R4")
            else:
                for f in big:
                    give(Element("f", f), v, Fraction(2, len(big)), "R5")
        elif d == 5:
            if sum(1 for x in cdeg if x == 3) == 5:
                for u in g.rotation[v]:
                    if g.degree(u) >= 7:
                        give(Element("v", u), v, Fraction(1, 5), "R6")
            if big:
                for f in big:
                    give(Element("f", f), v, Fraction(1, len(big)), "R7")
    out.sort(key=lambda t: (t.rule, t.target, t.source))
    return out


def replay(st: ChargeState, ledger: list[Transfer] | tuple[Transfer, ...]) -> ChargeState:
    vc = list(st.vertex_charge)
    fc = list(st.face_charge)
    for t in ledger:
        for e, sign in ((t.source, -1), (t.target, 1)):
            arr = vc if e.kind == "v" else fc
            arr[e.id] += sign * t.amount
    return ChargeState(st.scheme, tuple(vc), tuple(fc), st.ledger + tuple(ledger))


def apply_rules(g: PlaneGraph, st: ChargeState) -> ChargeState:
    if st.scheme != "vertex":
        raise SchemeMismatch(f"rules are defined for the vertex scheme, got {st.scheme!r}")
    if len(st.vertex_charge) != g.n or len(st.face_charge) != len(g.faces):
        raise SchemeMismatch("charge state does not belong to this graph")
    return replay(st, rule_transfers(g))


@dataclass(frozen=True)
class AuditReport:
    scheme: str
    negatives: tuple[tuple[Element, Fraction], ...]
    total: Fraction
    expected_total: Fraction
    per_rule: dict[str, Fraction]
    ledger: tuple[Transfer, ...]

    @property
    def conserved(self) -> bool:
        return self.total == self.expected_total

    def to_text(self, ledger: bool = False) -> str:
        lines = [f"neg {e} {fmt(q)}" for e, q in self.negatives]
        lines.append(f"total {fmt(self.total)}")
        if not self.conserved:
            lines.append(f"violation expected {fmt(self.expected_total)}")
        for rule in sorted(self.per_rule):
            lines.append(f"rule {rule} {fmt(self.per_rule[rule])}")
        lines.append(f"ledger {len(self.ledger)} transfers")
        if ledger:
            lines.extend(f"transfer {t}" for t in self.ledger)
        return "\n".join(lines)


def audit(st: ChargeState) -> AuditReport:
    negatives = [(Element("v", i), q) for i, q in enumerate(st.vertex_charge) if q < 0]
    negatives += [(Element("f", i), q) for i, q in enumerate(st.face_charge) if q < 0]
    per_rule: dict[str, Fraction] = defaultdict(Fraction)
    for t in st.ledger:
        per_rule[t.rule] += t.amount
    return AuditReport(st.scheme, tuple(negatives), st.total, st.expected_total,
                       dict(per_rule), st.ledger)


def discharge(g: PlaneGraph) -> ChargeState:
    return apply_rules(g, initial_charges(g, "vertex"))


def single_face_violations(g: PlaneGraph) -> list[int]:
    """3-vertices on a single face with all neighbours of degree >= 7 whose
    face has degree below 15 (expected to be empty)."""
    bad = []
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        corners = set(g.corners(v))
        if len(corners) != 1:
            continue
        if all(g.degree(u) >= 7 for u in g.rotation[v]):
            (f,) = corners
            if g.faces[f].degree < 15:
                bad.append(v)
    return bad
