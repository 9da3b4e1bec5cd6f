"""Plain-text graph documents.

One statement per line: ``node NAME`` declares a variable, ``A -> B`` a
directed edge and ``A <-> B`` a bidirected edge.  ``#`` starts a comment.
Nodes may be declared implicitly by first use; repeating an edge is
harmless.  ``parse_graph_text(render_graph_text(g))`` reproduces ``g``
exactly, node order included.
"""

from __future__ import annotations

import re

from .errors import ParseError, SelfLoopError
from .graph import ADMG, NAME_RE

_NODE_STMT = re.compile(r"\s*node\s+(\S+)\s*$")
_EDGE_STMT = re.compile(r"\s*(\S+?)\s*(<->|->)\s*(\S+?)\s*$")


def _check_name(name: str, line_no: int, column: int) -> str:
    if not NAME_RE.match(name):
        raise ParseError(line_no, column, f"invalid node name {name!r}")
    return name


def parse_graph_text(text: str) -> ADMG:
    names: list[str] = []
    seen: dict[str, int] = {}
    directed: set[tuple[int, int]] = set()
    bidirected: set[tuple[int, int]] = set()

    def declare(name: str) -> int:
        idx = seen.get(name)
        if idx is None:
            idx = len(names)
            seen[name] = idx
            names.append(name)
        return idx

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _NODE_STMT.match(line)
        if m:
            declare(_check_name(m.group(1), line_no, m.start(1) + 1))
            continue
        m = _EDGE_STMT.match(line)
        if m:
            left = _check_name(m.group(1), line_no, m.start(1) + 1)
            right = _check_name(m.group(3), line_no, m.start(3) + 1)
            if left == right:
                raise SelfLoopError(f"line {line_no}: self-loop on {left!r}")
            u, v = declare(left), declare(right)
            if m.group(2) == "->":
                directed.add((u, v))
            else:
                bidirected.add((min(u, v), max(u, v)))
            continue
        column = len(line) - len(line.lstrip()) + 1
        raise ParseError(
            line_no, column,
            "expected `node NAME`, `A -> B`, or `A <-> B`",
        )
    return ADMG(names, directed=sorted(directed), bidirected=sorted(bidirected))


def parse_graph_file(path) -> ADMG:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def render_graph_text(g: ADMG) -> str:
    """Canonical text form: explicit node declarations in index order,
    then directed edges, then bidirected edges."""
    if any(g.latent):
        raise ValueError("latent-expanded graphs have no text form")
    lines = [f"node {g.names[v]}" for v in sorted(g.nodes)]
    lines += [f"{g.names[u]} -> {g.names[v]}" for u, v in sorted(g.directed_edges)]
    lines += [f"{g.names[u]} <-> {g.names[v]}" for u, v in sorted(g.bidirected_edges)]
    return "\n".join(lines) + "\n"
