"""Plain-text graph files and sweep CSV.

Graph file::

    # comment
    n 3
    e 1 2        undirected edge   (or)   d 1 2   directed arc
    l 2          loop

'e' and 'd' lines never mix; a file with neither parses as a Graph.
"""

from __future__ import annotations

import csv
import io
from typing import Iterable, Optional, Union

from .graphs import Digraph, Graph, build_digraph, build_graph

CSV_HEADER = ["model", "n", "trials", "seed", "c", "p", "q", "N", "M", "mu",
              "p_stable", "p_L", "p_H", "ci_low", "ci_high", "asymptote"]


class GraphFileError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"{msg} at line {lineno}")
        self.lineno = lineno


def parse_graph_file(text: str) -> Union[Graph, Digraph]:
    n: Optional[int] = None
    kind: Optional[str] = None
    pairs: list[tuple[int, int]] = []
    loops: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        head = tok[0]
        try:
            args = [int(t) for t in tok[1:]]
        except ValueError:
            raise GraphFileError(lineno, f"malformed token in {line!r}") from None
        if head == "n":
            if n is not None:
                raise GraphFileError(lineno, "duplicate header")
            if len(args) != 1 or args[0] < 1:
                raise GraphFileError(lineno, "header must be 'n <positive int>'")
            n = args[0]
            continue
        if n is None:
            raise GraphFileError(lineno, "missing 'n' header before first entry")
        if head in ("e", "d"):
            if len(args) != 2:
                raise GraphFileError(lineno, f"'{head}' takes two node ids")
            if kind is not None and kind != head:
                raise GraphFileError(lineno, "mixed edge kinds")
            kind = head
            u, v = args
            if head == "e" and u == v:
                raise GraphFileError(lineno, "loop in edge list (use 'l')")
            pairs.append((u, v))
        elif head == "l":
            if len(args) != 1:
                raise GraphFileError(lineno, "'l' takes one node id")
            loops.append(args[0])
        else:
            raise GraphFileError(lineno, f"unknown line kind {head!r}")
        if any(not 1 <= a <= n for a in args):
            raise GraphFileError(lineno, f"node id out of range [1, {n}]")
    if n is None:
        raise GraphFileError(0, "missing 'n' header")
    if kind == "d":
        return build_digraph(n, pairs + [(v, v) for v in loops])
    return build_graph(n, pairs, loops)


def serialize_graph(g: Union[Graph, Digraph]) -> str:
    lines = [f"n {g.n}"]
    if isinstance(g, Graph):
        lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    else:
        lines += [f"d {u} {v}" for u, v in sorted(g.arcs) if u != v]
    lines += [f"l {v}" for v in sorted(g.loops)]
    return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return f"{x:.6g}"


def sweep_csv(rows: Iterable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.model, r.n, r.trials, r.seed, _fmt(r.c), _fmt(r.p), _fmt(r.q),
                    _fmt(r.N), _fmt(r.M), _fmt(r.mu), _fmt(r.stable.point), _fmt(r.p_L),
                    _fmt(r.p_H), _fmt(r.stable.ci_low), _fmt(r.stable.ci_high),
                    _fmt(r.asymptote)])
    return buf.getvalue()


def read_sweep_csv(text: str) -> list[dict[str, str]]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise ValueError("unexpected CSV header")
    return list(reader)
