"""Line-based text formats for digraphs, bipartite graphs, undirected graphs and costs.

Digraph::

    # comment
    n 3
    v 0 alpha        (optional name)
    a 0 1

Bipartite graph: ``nw <count>``, ``nb <count>``, ``e <white> <black>``.
Undirected graph: ``n <count>``, ``e <a> <b>``, optional ``color <v> <U|V|W>``.
Costs: CSV, one row per input vertex, one integer column per target vertex.

Writers emit a canonical form (sorted records), so ``write(read(text)) == text``
for canonical input.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from .digraph import BipartiteGraph, Digraph, GraphError


class FormatError(ValueError):
    """Malformed input file."""


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected integer, got {tok!r}") from None


def parse_digraph(text: str) -> Digraph:
    n = None
    names: dict[int, str] = {}
    arcs: list[tuple[int, int]] = []
    for lineno, toks in _records(text):
        tag = toks[0]
        if tag == "n" and len(toks) == 2:
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            n = _int(toks[1], lineno)
        elif tag == "a" and len(toks) == 3:
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            if u == v:
                raise FormatError(f"line {lineno}: loop at vertex {u}")
            arcs.append((u, v))
        elif tag == "v" and len(toks) == 3:
            names[_int(toks[1], lineno)] = toks[2]
        else:
            raise FormatError(f"line {lineno}: unrecognised record {' '.join(toks)!r}")
    if n is None:
        raise FormatError("missing 'n <count>' header")
    if len(set(arcs)) != len(arcs):
        raise FormatError("parallel arcs")
    name_tuple = None
    if names:
        if set(names) != set(range(n)):
            raise FormatError("name table must cover every vertex")
        name_tuple = tuple(names[i] for i in range(n))
    try:
        return Digraph(n, frozenset(arcs), name_tuple)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_digraph(d: Digraph) -> str:
    lines = [f"n {d.n}"]
    if d.names is not None:
        lines += [f"v {i} {name}" for i, name in enumerate(d.names)]
    lines += [f"a {u} {v}" for u, v in d.sorted_arcs()]
    return "\n".join(lines) + "\n"


def parse_bipartite(text: str) -> BipartiteGraph:
    nw = nb = None
    edges: list[tuple[int, int]] = []
    for lineno, toks in _records(text):
        tag = toks[0]
        if tag == "nw" and len(toks) == 2:
            nw = _int(toks[1], lineno)
        elif tag == "nb" and len(toks) == 2:
            nb = _int(toks[1], lineno)
        elif tag == "e" and len(toks) == 3:
            edges.append((_int(toks[1], lineno), _int(toks[2], lineno)))
        else:
            raise FormatError(f"line {lineno}: unrecognised record {' '.join(toks)!r}")
    if nw is None or nb is None:
        raise FormatError("missing 'nw'/'nb' header")
    if len(set(edges)) != len(edges):
        raise FormatError("parallel edges")
    try:
        return BipartiteGraph(nw, nb, frozenset(edges))
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_bipartite(b: BipartiteGraph) -> str:
    lines = [f"nw {b.nw}", f"nb {b.nb}"] + [f"e {w} {x}" for w, x in sorted(b.edges)]
    return "\n".join(lines) + "\n"


def parse_ugraph(text: str):
    from .reductions import UGraph

    n = None
    edges: list[tuple[int, int]] = []
    colors: dict[int, str] = {}
    for lineno, toks in _records(text):
        tag = toks[0]
        if tag == "n" and len(toks) == 2:
            n = _int(toks[1], lineno)
        elif tag == "e" and len(toks) == 3:
            a, b = _int(toks[1], lineno), _int(toks[2], lineno)
            if a == b:
                raise FormatError(f"line {lineno}: loop at vertex {a}")
            edges.append((min(a, b), max(a, b)))
        elif tag == "color" and len(toks) == 3:
            if toks[2] not in ("U", "V", "W"):
                raise FormatError(f"line {lineno}: colour must be U, V or W")
            colors[_int(toks[1], lineno)] = toks[2]
        else:
            raise FormatError(f"line {lineno}: unrecognised record {' '.join(toks)!r}")
    if n is None:
        raise FormatError("missing 'n <count>' header")
    if len(set(edges)) != len(edges):
        raise FormatError("parallel edges")
    if colors and set(colors) != set(range(n)):
        raise FormatError("colouring must cover every vertex")
    try:
        return UGraph(n, frozenset(edges), tuple(colors[i] for i in range(n)) if colors else None)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_ugraph(g) -> str:
    lines = [f"n {g.n}"] + [f"e {a} {b}" for a, b in sorted(g.edges)]
    if g.colors is not None:
        lines += [f"color {v} {c}" for v, c in enumerate(g.colors)]
    return "\n".join(lines) + "\n"


def parse_costs(text: str, rows: int | None = None, cols: int | None = None) -> list[list[int]]:
    matrix = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), 1):
        if not row or all(not cell.strip() for cell in row):
            continue
        matrix.append([_int(cell.strip(), lineno) for cell in row])
    if rows is not None and len(matrix) != rows:
        raise FormatError(f"expected {rows} cost rows, got {len(matrix)}")
    widths = {len(r) for r in matrix}
    if len(widths) > 1:
        raise FormatError("ragged cost matrix")
    if cols is not None and matrix and widths != {cols}:
        raise FormatError(f"expected {cols} cost columns, got {widths.pop()}")
    return matrix


def format_costs(matrix) -> str:
    return "".join(",".join(str(int(x)) for x in row) + "\n" for row in matrix)


def read_digraph(path: str | Path) -> Digraph:
    return parse_digraph(Path(path).read_text(encoding="utf-8"))


def read_bipartite(path: str | Path) -> BipartiteGraph:
    return parse_bipartite(Path(path).read_text(encoding="utf-8"))


def read_ugraph(path: str | Path):
    return parse_ugraph(Path(path).read_text(encoding="utf-8"))


def read_costs(path: str | Path, rows: int | None = None, cols: int | None = None) -> list[list[int]]:
    return parse_costs(Path(path).read_text(encoding="utf-8"), rows, cols)
