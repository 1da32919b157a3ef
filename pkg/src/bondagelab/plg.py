"""Reader and writer for the ``.plg`` rotation-system text format.

::

    planegraph 3
    v 0: 1 2
    v 1: 2 0
    v 2: 0 1

Neighbours are listed clockwise. ``#`` starts a comment.
"""

from __future__ import annotations

from pathlib import Path

from .graph import GraphError, PlaneGraph, build


class PlgSyntaxError(GraphError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_plg(text: str) -> PlaneGraph:
    n = None
    rotations: dict[int, list[int]] = {}
    line_of: dict[int, int] = {}
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "planegraph" or not parts[1].isdigit():
                raise PlgSyntaxError("expected 'planegraph <n>'", lineno)
            n = int(parts[1])
            header_line = lineno
            continue
        head, sep, rest = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] != "v" or not parts[1].isdigit():
            raise PlgSyntaxError("expected 'v <id>: <neighbours>'", lineno)
        v = int(parts[1])
        if v >= n:
            raise PlgSyntaxError(f"vertex id {v} out of range for n={n}", lineno)
        if v in rotations:
            raise PlgSyntaxError(f"vertex {v} listed twice", lineno)
        try:
            rotations[v] = [int(tok) for tok in rest.split()]
        except ValueError:
            raise PlgSyntaxError("neighbour ids must be decimal integers", lineno) from None
        line_of[v] = lineno
    if n is None:
        raise PlgSyntaxError("missing 'planegraph <n>' header", 1)
    missing = [v for v in range(n) if v not in rotations]
    if missing:
        raise PlgSyntaxError(f"no line for vertex {missing[0]}", header_line)
    try:
        return build([rotations[v] for v in range(n)])
    except GraphError as exc:
        line = line_of.get(exc.vertex, header_line) if exc.vertex is not None else header_line
        err = type(exc)(f"line {line}: {exc}", exc.vertex)
        err.line = line
        raise err from None


def read_plg(path: str | Path) -> PlaneGraph:
    return parse_plg(Path(path).read_text())


def format_plg(g: PlaneGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"planegraph {g.n}")
    for v, rot in enumerate(g.rotation):
        lines.append(f"v {v}: {' '.join(map(str, rot))}".rstrip())
    return "\n".join(lines) + "\n"


def write_plg(g: PlaneGraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_plg(g, comment))
