"""Line-oriented text format for labeled graphs.

    # trefoil
    vertex a
    edge e1 a 2 b 3

``vertex <id>`` declares an isolated vertex; ``edge <id> <v0> <label0>
<v1> <label1>`` declares an edge (a loop when the endpoints coincide)
and declares its endpoints implicitly.  Labels are arbitrary-precision
nonzero integers.  Errors carry 1-based line and column positions.
"""

from __future__ import annotations

import re

from .graph_model import Disconnected, Edge, GbsError, GraphError, LabeledGraph, validate

_TOKEN = re.compile(r"\S+")


class ParseError(GbsError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.text = message


def parse(text: str) -> LabeledGraph:
    """Parse graph text; raises :class:`ParseError` with a position."""
    edges: list[Edge] = []
    edge_ids: set[str] = set()
    explicit_vertices: list[str] = []
    vertex_position: dict[str, tuple[int, int]] = {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if not tokens or tokens[0][1].startswith("#"):
            continue
        col0, keyword = tokens[0]

        if keyword == "vertex":
            if len(tokens) != 2:
                raise ParseError(lineno, col0, "expected: vertex <id>")
            col, vid = tokens[1]
            if vid in vertex_position:
                raise ParseError(lineno, col, f"duplicate vertex id {vid!r}")
            vertex_position[vid] = (lineno, col)
            explicit_vertices.append(vid)

        elif keyword == "edge":
            if len(tokens) != 6:
                raise ParseError(
                    lineno, col0, "expected: edge <id> <v0> <label0> <v1> <label1>"
                )
            (_, eid), (cv0, v0), (cl0, t0), (cv1, v1), (cl1, t1) = tokens[1:]
            if eid in edge_ids:
                raise ParseError(lineno, tokens[1][0], f"duplicate edge id {eid!r}")
            edge_ids.add(eid)
            labels = []
            for col, tok in ((cl0, t0), (cl1, t1)):
                try:
                    value = int(tok)
                except ValueError:
                    raise ParseError(lineno, col, f"expected an integer, got {tok!r}") from None
                if value == 0:
                    raise ParseError(lineno, col, "label must be a nonzero integer")
                labels.append(value)
            for col, vid in ((cv0, v0), (cv1, v1)):
                vertex_position.setdefault(vid, (lineno, col))
            edges.append(Edge(eid, v0, labels[0], v1, labels[1]))

        else:
            raise ParseError(lineno, col0, f"unknown directive {keyword!r}")

    try:
        return validate(edges, explicit_vertices)
    except Disconnected as exc:
        line, col = vertex_position.get(exc.vertex, (1, 1))
        raise ParseError(line, col, str(exc)) from exc
    except GraphError as exc:
        raise ParseError(1, 1, str(exc)) from exc


def load(path: str) -> LabeledGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def serialize(g: LabeledGraph) -> str:
    """Graph text that parses back to an equal graph."""
    lines = [f"vertex {v}" for v in g.vertices]
    lines.extend(
        f"edge {e.id} {e.v0} {e.label0} {e.v1} {e.label1}" for e in g.edges
    )
    return "\n".join(lines) + "\n"


__all__ = ["ParseError", "parse", "load", "serialize"]
