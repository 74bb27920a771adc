"""Reading and writing graphs in the two supported text formats.

* edgelist: first line "n m", then m lines "u v" with 0-based endpoints.
* dimacs: comment lines "c ...", one header "p edge n m", then "e u v"
  lines with 1-based endpoints.

Parsing rejects self-loops and out-of-range endpoints with the line number;
duplicate edges collapse silently in both formats.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from .errors import InputError, ParseError
from .graph import Graph

GraphFormat = Literal["edgelist", "dimacs"]


def parse_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    header = None
    header_no = 0
    body: list[tuple[int, str]] = []
    for no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line
            header_no = no
        else:
            body.append((no, line))
    if header is None:
        raise ParseError("empty edge list: missing 'n m' header")
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"expected 'n m', got {header!r}", header_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected integers 'n m', got {header!r}", header_no) from None
    if n < 0 or m < 0:
        raise ParseError(f"negative counts in header {header!r}", header_no)
    if len(body) != m:
        raise ParseError(
            f"header promises {m} edges, file has {len(body)} edge lines", header_no
        )
    edges = []
    for no, line in body:
        edges.append(_parse_endpoints(line, no, n, base=0))
    return _build(n, edges)


def parse_dimacs(text: str) -> Graph:
    n = m = None
    header_no = 0
    edges: list[tuple[int, int]] = []
    edge_lines = 0
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n is not None:
                raise ParseError("second 'p' header", no)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"expected 'p edge n m', got {line!r}", no)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"expected integers in {line!r}", no) from None
            if n < 0 or m < 0:
                raise ParseError(f"negative counts in {line!r}", no)
            header_no = no
        elif line.startswith("e"):
            if n is None:
                raise ParseError("edge line before 'p edge' header", no)
            payload = line[1:].strip()
            u, v = _parse_endpoints(payload, no, n, base=1)
            edges.append((u, v))
            edge_lines += 1
        else:
            raise ParseError(f"unrecognized line {line!r}", no)
    if n is None:
        raise ParseError("missing 'p edge' header")
    if edge_lines != m:
        raise ParseError(
            f"header promises {m} edges, file has {edge_lines} edge lines", header_no
        )
    return _build(n, edges)


def _parse_endpoints(payload: str, no: int, n: int, base: int) -> tuple[int, int]:
    parts = payload.split()
    if len(parts) != 2:
        raise ParseError(f"expected two endpoints, got {payload!r}", no)
    try:
        u, v = int(parts[0]) - base, int(parts[1]) - base
    except ValueError:
        raise ParseError(f"non-integer endpoint in {payload!r}", no) from None
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"endpoint outside vertex range in {payload!r}", no)
    if u == v:
        raise ParseError(f"self-loop at vertex {u + base}", no)
    return u, v


def _build(n: int, edges: list[tuple[int, int]]) -> Graph:
    try:
        return Graph.from_edges(n, edges)
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def serialize_graph(g: Graph, fmt: GraphFormat = "edgelist") -> str:
    edges = g.edges()
    if fmt == "edgelist":
        lines = [f"{g.n} {len(edges)}"]
        lines.extend(f"{u} {v}" for u, v in edges)
    elif fmt == "dimacs":
        lines = [f"p edge {g.n} {len(edges)}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    else:
        raise InputError(f"format must be edgelist|dimacs, got {fmt!r}")
    return "\n".join(lines) + "\n"


def parse_graph(path: str | Path, fmt: GraphFormat = "edgelist") -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise InputError(f"format must be edgelist|dimacs, got {fmt!r}")


def write_graph(g: Graph, path: str | Path, fmt: GraphFormat = "edgelist") -> None:
    Path(path).write_text(serialize_graph(g, fmt))
