"""Text document format shared by every CLI command, plus DOT export.

A document is one JSON object::

    {"vertices": 4, "edges": [[0, 1], [1, 2], [2, 3]],
     "labels": [1, 3, 2], "meta": {"family": "path", "params": ["4"]}}

``labels`` and ``meta`` are optional.  Emitting uses sorted keys and no
extra whitespace inside lists, so ``emit(parse(text))`` is stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import AntimagicError, ParseError
from .graph import Graph, LabeledGraph


@dataclass
class GraphDocument:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: Optional[tuple[int, ...]] = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def of(cls, g: Graph, labels=None, meta=None) -> "GraphDocument":
        return cls(g.vertex_count, g.edges, None if labels is None else tuple(labels), dict(meta or {}))

    @classmethod
    def of_labeled(cls, lg: LabeledGraph, meta=None) -> "GraphDocument":
        meta = dict(meta or {})
        meta["phi"] = list(lg.phi)
        return cls.of(lg.graph, lg.labels, meta)

    def graph(self) -> Graph:
        try:
            return Graph(self.vertex_count, self.edges)
        except AntimagicError as exc:
            raise ParseError(f"invalid graph: {exc}") from None

    def labeled(self) -> LabeledGraph:
        if self.labels is None:
            raise ParseError("document has no labels")
        try:
            return LabeledGraph(self.graph(), self.labels)
        except ParseError:
            raise
        except AntimagicError as exc:
            raise ParseError(f"invalid labels: {exc}") from None

    def to_dict(self) -> dict:
        out = {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        if self.meta:
            out["meta"] = self.meta
        return out

    def emit(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def parse(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON document: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    try:
        n = data["vertices"]
        edges = data["edges"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("'vertices' must be a nonnegative integer")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(w, int) and not isinstance(w, bool) for w in e)
        for e in edges
    ):
        raise ParseError("'edges' must be a list of integer pairs")
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in labels):
            raise ParseError("'labels' must be a list of integers")
        labels = tuple(labels)
    meta = data.get("meta", {})
    if not isinstance(meta, dict):
        raise ParseError("'meta' must be an object")
    unknown = set(data) - {"vertices", "edges", "labels", "meta"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    doc = GraphDocument(n, tuple((a, b) for a, b in edges), labels, meta)
    doc.graph()
    return doc


def to_dot(lg: LabeledGraph, name: str = "G") -> str:
    """DOT text with ``label`` on edges and ``phi`` on vertices."""
    lines = [f"graph {name} {{"]
    for v, p in enumerate(lg.phi):
        lines.append(f'  {v} [phi={p}, label="{v}\\nphi={p}"];')
    for (a, b), f in zip(lg.graph.edges, lg.labels):
        lines.append(f"  {a} -- {b} [label={f}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
