"""Bit-exact line-oriented graph text format.

    graph <V> <E>
    v <id> <num>/<den>      (or `v <id> <int>`)
    e <u> <v>

`#` starts a comment line.  Ids must be 0..V-1.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import WeightedGraph


class ParseError(ValueError):
    pass


def parse_graph(text: str) -> WeightedGraph:
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens.append((lineno, line.split()))
    if not tokens:
        raise ParseError("empty graph file")
    lineno, header = tokens[0]
    if len(header) != 3 or header[0] != "graph":
        raise ParseError(f"line {lineno}: expected 'graph <V> <E>'")
    try:
        nv, ne = int(header[1]), int(header[2])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: bad counts in header") from exc
    if nv <= 0:
        raise ParseError(f"line {lineno}: vertex count must be positive")
    weights: list = [None] * nv
    edges = []
    for lineno, parts in tokens[1:]:
        if parts[0] == "v":
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'v <id> <weight>'")
            vid = _parse_id(parts[1], nv, lineno)
            if weights[vid] is not None:
                raise ParseError(f"line {lineno}: duplicate vertex {vid}")
            try:
                weights[vid] = Fraction(parts[2])
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"line {lineno}: bad weight {parts[2]!r}") from exc
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            edges.append((_parse_id(parts[1], nv, lineno), _parse_id(parts[2], nv, lineno)))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    missing = [i for i, w in enumerate(weights) if w is None]
    if missing:
        raise ParseError(f"missing weight for vertices {missing}")
    if len(edges) != ne:
        raise ParseError(f"header declares {ne} edges, found {len(edges)}")
    try:
        return WeightedGraph(weights, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _parse_id(token: str, nv: int, lineno: int) -> int:
    try:
        vid = int(token)
    except ValueError as exc:
        raise ParseError(f"line {lineno}: bad vertex id {token!r}") from exc
    if not 0 <= vid < nv:
        raise ParseError(f"line {lineno}: vertex id {vid} out of range 0..{nv - 1}")
    return vid


def format_graph(graph: WeightedGraph) -> str:
    lines = [f"graph {graph.n} {len(graph.edges)}"]
    for v in range(graph.n):
        w = graph.weights[v]
        lines.append(f"v {v} {w.numerator}" if w.denominator == 1 else f"v {v} {w.numerator}/{w.denominator}")
    for u, v in sorted(graph.edges):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(path, graph: WeightedGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(graph))
