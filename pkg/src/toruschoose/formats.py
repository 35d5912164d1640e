"""JSON and DOT serialisation.

Graph JSON is ``{"n": int, "edges": [[u, v], ...], "labels": {"v": tag}}``;
torus JSON adds ``"params"`` and ``"coords"``; orientation JSON adds
``"directed"``.  Lists are ``{"lists": {"v": [c, ...]}}`` and colourings
``{"colors": {"v": c}}``.  :func:`dumps` is the canonical writer, so
``dumps(graph_to_dict(graph_from_dict(json.loads(s)))) == s`` for anything it wrote.
"""
from __future__ import annotations

import json

from .alontarsi import Orientation
from .errors import InvalidInput
from .graph import Multigraph
from .torus import TorusTriangulation


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)


def graph_to_dict(g: Multigraph) -> dict:
    return {"n": g.n,
            "edges": [[u, v] for u, v in g.edges],
            "labels": {str(v): g.labels[v] for v in sorted(g.labels)}}


def graph_from_dict(d) -> Multigraph:
    try:
        n = int(d["n"])
        edges = tuple((int(u), int(v)) for u, v in d.get("edges", []))
        labels = {int(k): str(v) for k, v in d.get("labels", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed graph JSON: {exc}") from exc
    return Multigraph(n, edges, labels)


def torus_to_dict(T: TorusTriangulation) -> dict:
    d = graph_to_dict(T.graph)
    d["params"] = list(T.params)
    d["coords"] = {str(v): list(T.coord(v)) for v in T.graph.vertices()}
    return d


def lists_to_dict(L) -> dict:
    return {"lists": {str(v): sorted(L[v]) for v in sorted(L)}}


def lists_from_dict(d) -> dict:
    try:
        return {int(v): frozenset(int(c) for c in cs) for v, cs in d["lists"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InvalidInput(f"malformed list assignment JSON: {exc}") from exc


def coloring_to_dict(coloring) -> dict:
    return {"colors": {str(v): coloring[v] for v in sorted(coloring)}}


def coloring_from_dict(d) -> dict:
    try:
        return {int(v): int(c) for v, c in d["colors"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InvalidInput(f"malformed colouring JSON: {exc}") from exc


def orientation_to_dict(o: Orientation) -> dict:
    d = graph_to_dict(o.base)
    d["directed"] = [[a, b] for a, b in o.arcs]
    return d


def orientation_from_dict(d) -> Orientation:
    g = graph_from_dict(d)
    try:
        arcs = tuple((int(a), int(b)) for a, b in d["directed"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed orientation JSON: {exc}") from exc
    return Orientation(g, arcs)


def to_dot(g: Multigraph, arcs=None, name: str = "G") -> str:
    directed = arcs is not None
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v in g.vertices():
        lines.append(f'  {v} [label="{g.label(v)}"];')
    op = "->" if directed else "--"
    for u, v in (arcs if directed else g.edges):
        lines.append(f"  {u} {op} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
