"""Command-line front end.

Exit codes: 0 success, 1 invalid input or usage, 2 a graph with minimum
degree at least 3 that has no configuration or no certificate of size <= 8.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .bondage import bondage_i
from .certifier import CertificationError, NoConfiguration, SearchExhausted, certify
from .configurations import detect_all, find_configuration
from .discharging import SCHEMES, apply_rules, audit, fmt, initial_charges
from .domination import gamma_i
from .generators import corpus, generate
from .graph import GraphError, PlaneGraph
from .plg import format_plg, read_plg, write_plg

GAMMA_CAP = 64
SEARCH_CAP = 20

EXIT_OK, EXIT_INVALID, EXIT_FALSIFIED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass(frozen=True)
class Record:
    graph: str
    n: int
    m: int
    delta: int
    gamma_i: int | None
    config: str | None
    certificate: str  # "|E|/path/verified", "skipped" or the failure class
    total: str
    negatives: int
    conserved: bool
    falsified: bool
    seconds: float = 0.0

    def line(self, timing: bool = False) -> str:
        gi = "-" if self.gamma_i is None else str(self.gamma_i)
        out = (f"graph={self.graph} n={self.n} m={self.m} delta={self.delta} gamma_i={gi} "
               f"config={self.config or 'none'} cert={self.certificate} total={self.total} "
               f"neg={self.negatives} conserved={str(self.conserved).lower()}")
        if timing:
            out += f" time={self.seconds:.3f}"
        return out


@dataclass
class RunReport:
    records: list[Record]

    def add(self, r: Record) -> None:
        self.records.append(r)

    @property
    def falsified(self) -> int:
        return sum(r.falsified for r in self.records)

    def to_text(self, timing: bool = False) -> str:
        lines = [r.line(timing) for r in self.records]
        rs = self.records
        kinds: dict[str, int] = {}
        for r in rs:
            kinds[r.config or "none"] = kinds.get(r.config or "none", 0) + 1
        certified = sum(r.certificate.endswith("/true") for r in rs)
        skipped = sum(r.certificate == "skipped" for r in rs)
        lines += [
            "summary",
            f"graphs {len(rs)}",
            f"configs {sum(r.config is not None for r in rs)}",
            f"certified {certified}",
            f"skipped {skipped}",
            f"conserved {sum(r.conserved for r in rs)}",
            f"falsified {self.falsified}",
            "kinds " + " ".join(f"{k}:{v}" for k, v in sorted(kinds.items())),
        ]
        return "\n".join(lines) + "\n"


def run_graph(name: str, g: PlaneGraph, force: bool = False) -> Record:
    """find-config, certify and discharge on one graph."""
    start = time.perf_counter()
    delta = g.min_degree
    gi = gamma_i(g)[0] if force or g.n <= GAMMA_CAP else None
    w = find_configuration(g)
    falsified = w is None and delta >= 3
    if w is None:
        cert = "noconfig"
    elif not force and g.n > SEARCH_CAP:
        cert = "skipped"
    else:
        try:
            c = certify(g)
            cert = f"{len(c.edges)}/{c.path}/{str(c.verified).lower()}"
            falsified |= not c.verified and delta >= 3
        except SearchExhausted:
            cert = "exhausted"
            falsified |= delta >= 3
    report = audit(apply_rules(g, initial_charges(g, "vertex")))
    return Record(name, g.n, len(g.edges), delta, gi, w.kind if w else None, cert,
                  fmt(report.total), len(report.negatives), report.conserved, falsified,
                  time.perf_counter() - start)


def _run_pair(args: tuple[str, PlaneGraph, bool]) -> Record:
    return run_graph(*args)


def _cap(g: PlaneGraph, cap: int, force: bool) -> None:
    if g.n > cap and not force:
        raise UsageError(f"graph has n={g.n} > {cap}; pass --force to run anyway")


def _jobs_default() -> int:
    raw = os.environ.get("BONDAGELAB_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"BONDAGELAB_JOBS must be an integer, got {raw!r}") from None


def _parser() -> _Parser:
    p = _Parser(prog="bondagelab", description="Independent bondage toolkit for plane graphs.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("gamma-i", help="independent domination number")
    s.add_argument("file")
    s.add_argument("--force", action="store_true")

    s = sub.add_parser("bondage-i", help="independent bondage number by bounded search")
    s.add_argument("file")
    s.add_argument("--limit", type=int, default=8)
    s.add_argument("--force", action="store_true")

    s = sub.add_parser("find-config", help="unavoidable configurations")
    s.add_argument("file")
    s.add_argument("--first", action="store_true")

    s = sub.add_parser("discharge", help="charge audit")
    s.add_argument("file")
    s.add_argument("--scheme", choices=sorted(SCHEMES), default="vertex")
    s.add_argument("--ledger", action="store_true")

    s = sub.add_parser("certify", help="bondage certificate of size <= 8")
    s.add_argument("file")
    s.add_argument("--force", action="store_true")

    s = sub.add_parser("gen", help="write a generated graph")
    s.add_argument("kind")
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("-o", "--output")

    s = sub.add_parser("corpus", help="run the pipeline over a generated corpus")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--max-n", type=int, default=20)
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--timing", action="store_true", help="append wall time to records")
    s.add_argument("--force", action="store_true")
    s.add_argument("-o", "--output")
    return p


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dispatch(a: argparse.Namespace) -> int:
    if a.cmd == "gen":
        g = generate(a.kind, *a.params)
        if a.output:
            write_plg(g, a.output, comment=" ".join([a.kind, *map(str, a.params)]))
        else:
            _out(format_plg(g))
        return EXIT_OK
    if a.cmd == "corpus":
        jobs = a.jobs if a.jobs is not None else _jobs_default()
        if jobs < 1 or a.count < 0:
            raise UsageError("--jobs must be >= 1 and --count >= 0")
        work = [(name, g, a.force) for name, g in corpus(a.seed, a.count, a.max_n)]
        report = RunReport([])
        if jobs == 1:
            results = map(_run_pair, work)
            for r in results:
                report.add(r)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                for r in ex.map(_run_pair, work):
                    report.add(r)
        text = report.to_text(a.timing)
        if a.output:
            with open(a.output, "w") as fh:
                fh.write(text)
        else:
            _out(text)
        return EXIT_FALSIFIED if report.falsified else EXIT_OK

    g = read_plg(a.file)
    if a.cmd == "gamma-i":
        _cap(g, GAMMA_CAP, a.force)
        k, w = gamma_i(g)
        _out(f"gamma_i = {k}\nwitness = {' '.join(map(str, w.vertices))}")
    elif a.cmd == "bondage-i":
        _cap(g, SEARCH_CAP, a.force)
        if a.limit < 1:
            raise UsageError("--limit must be >= 1")
        _out(str(bondage_i(g, a.limit)))
    elif a.cmd == "find-config":
        found = [find_configuration(g)] if a.first else detect_all(g)
        found = [w for w in found if w is not None]
        if not found:
            _out("no configuration")
            return EXIT_FALSIFIED if g.min_degree >= 3 else EXIT_OK
        _out("\n".join(map(str, found)))
    elif a.cmd == "discharge":
        st = initial_charges(g, a.scheme)
        if a.scheme == "vertex":
            st = apply_rules(g, st)
        _out(audit(st).to_text(ledger=a.ledger))
    elif a.cmd == "certify":
        _cap(g, SEARCH_CAP, a.force)
        try:
            cert = certify(g)
        except (NoConfiguration, SearchExhausted) as exc:
            print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_FALSIFIED if g.min_degree >= 3 else EXIT_INVALID
        _out(str(cert))
        if not cert.verified:
            return EXIT_FALSIFIED if g.min_degree >= 3 else EXIT_INVALID
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return _dispatch(_parser().parse_args(argv))
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except (GraphError, CertificationError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
