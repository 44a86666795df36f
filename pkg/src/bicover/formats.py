"""Text formats for graphs and covers.

Edge list::

    # optional comments
    n m
    u v        (m lines, 0-based)

Cover::

    d k
    mult | x1 x2 ... | y1 y2 ...   (k lines)

Writers emit LF line endings and single spaces, so ``write(read(text))``
reproduces any text the writer produced.
"""

from __future__ import annotations

from pathlib import Path

from .bicliques import Biclique, CoverMultiset
from .graphs import Graph, GraphError, graph_from_edges


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge list")
    try:
        n, m = (int(t) for t in lines[0].split())
        edges = [tuple(int(t) for t in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    if any(len(e) != 2 for e in edges):
        raise FormatError("each edge line needs exactly two vertices")
    try:
        return graph_from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(G: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{G.n} {G.m}")
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def parse_cover(text: str) -> CoverMultiset:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty cover file")
    try:
        d, k = (int(t) for t in lines[0].split())
    except ValueError:
        raise FormatError("cover header must be 'd k'") from None
    if len(lines) - 1 != k:
        raise FormatError(f"header announces {k} entries, found {len(lines) - 1}")
    entries = []
    for line in lines[1:]:
        fields = line.split("|")
        if len(fields) != 3:
            raise FormatError(f"cover line needs 'mult | X | Y': {line!r}")
        try:
            mult = int(fields[0])
            xs = tuple(int(t) for t in fields[1].split())
            ys = tuple(int(t) for t in fields[2].split())
            entries.append((Biclique(xs, ys), mult))
        except (ValueError, GraphError) as exc:
            raise FormatError(f"bad cover line {line!r}: {exc}") from None
    try:
        return CoverMultiset(tuple(entries), d)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_cover(cover: CoverMultiset) -> str:
    lines = [f"{cover.d} {len(cover.entries)}"]
    for b, m in cover.entries:
        lines.append(f"{m} | {' '.join(map(str, b.x))} | {' '.join(map(str, b.y))}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_graph(path, G: Graph, comment: str | None = None):
    Path(path).write_text(format_edge_list(G, comment), newline="\n")


def read_cover(path) -> CoverMultiset:
    return parse_cover(Path(path).read_text())


def write_cover(path, cover: CoverMultiset):
    Path(path).write_text(format_cover(cover), newline="\n")
