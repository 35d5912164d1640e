"""Constructive 5-list-colouring of simple 3-chromatic T(r, s, t).

The colour classes I1, I2, I3 come from the fixed pattern (j - i) mod 3.
First I1 is coloured along the cycles of H (horizontal and vertical edges on
I1 ∪ I2) so that every I2 vertex loses at most one colour of its list inside
H, hence at most two in T.  What is left on G1 = T - I1 has lists of size at
least 3 on I2 and 2 on I3, which the fixed orientation of G1 certifies as
colourable; backtracking then finds that colouring.

A vertex *loses* a colour when one of its neighbours is coloured with a colour
from its own list.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .alontarsi import Orientation, at_list_bound_check, count_eulerian_subgraphs, orient_G1
from .errors import InternalConsistencyError, InvalidInput
from .graph import Multigraph
from .listcolor import find_list_coloring, is_k_uniform, verify_coloring
from .torus import (ClassPartition, TorusTriangulation, build_G1, build_H, canonical_three_coloring,
                    expected_h_cycles, h_cycle_decomposition)


@dataclass(frozen=True)
class CyclePath:
    """A path or cycle of H: vertex order plus the class (1 or 2) of each vertex."""
    vertices: tuple
    side: Mapping[int, int]
    cyclic: bool = False

    def __post_init__(self):
        vs = self.vertices
        if any(self.side.get(v) not in (1, 2) for v in vs):
            raise InvalidInput("every vertex needs side 1 or 2")
        pairs = list(zip(vs, vs[1:])) + ([(vs[-1], vs[0])] if self.cyclic and len(vs) > 1 else [])
        if any(self.side[a] == self.side[b] for a, b in pairs):
            raise InvalidInput("sides must alternate along the path")
        if self.cyclic and len(vs) % 2:
            raise InvalidInput("cycles of H have even length")

    def __len__(self):
        return len(self.vertices)

    def sub(self, vertices) -> "CyclePath":
        return CyclePath(tuple(vertices), self.side, cyclic=False)

    def neighbours(self) -> dict:
        vs = self.vertices
        adj = {v: [] for v in vs}
        for a, b in zip(vs, vs[1:]):
            adj[a].append(b)
            adj[b].append(a)
        if self.cyclic and len(vs) > 2:
            adj[vs[0]].append(vs[-1])
            adj[vs[-1]].append(vs[0])
        return adj


def color_component(P: CyclePath, c: int, L, start: int) -> list:
    """Maximal run of consecutive vertices of P, all with ``c`` in their list,
    that contains ``start`` (in path order)."""
    if c not in L[start]:
        raise InvalidInput(f"colour {c} is not in the list of the start vertex")
    vs = P.vertices
    n = len(vs)
    pos = vs.index(start)
    if P.cyclic and all(c in L[v] for v in vs):
        return list(vs)
    lo = hi = pos
    if P.cyclic:
        while c in L[vs[(lo - 1) % n]]:
            lo -= 1
        while c in L[vs[(hi + 1) % n]]:
            hi += 1
        return [vs[i % n] for i in range(lo, hi + 1)]
    while lo > 0 and c in L[vs[lo - 1]]:
        lo -= 1
    while hi < n - 1 and c in L[vs[hi + 1]]:
        hi += 1
    return list(vs[lo:hi + 1])


def pick_escape_color(L, v: int, w: int) -> int:
    """Smallest colour of ``L[w]`` missing from ``L[v]``."""
    diff = set(L[w]) - set(L[v])
    if not diff:
        raise InvalidInput(f"list of {w} is contained in the list of {v}; no escape colour")
    return min(diff)


def loss_counts(adjacency: Mapping[int, Sequence[int]], coloring: Mapping[int, int], L,
                vertices) -> dict:
    """For each vertex, how many distinct colours of its list appear on its
    coloured neighbours."""
    out = {}
    for v in vertices:
        seen = {coloring[u] for u in adjacency[v] if u in coloring}
        out[v] = len(seen & set(L[v]))
    return out


def key_lemma_color_path(P: CyclePath, L, start: Optional[int] = None,
                         forced: Optional[int] = None, trace: Optional[list] = None) -> dict:
    """Colour the class-1 vertices of path P so that each class-2 vertex loses
    at most one colour.

    Starting from an end point, take the run of vertices sharing the current
    colour, colour its class-1 vertices, cut it off, and continue from the
    next vertex with a colour that the last vertex of the run does not have.
    """
    if P.cyclic:
        raise InvalidInput("key lemma applies to paths")
    vs = list(P.vertices)
    if len(vs) < 2:
        raise InvalidInput("path needs at least 2 vertices")
    sizes = {len(L[v]) for v in vs}
    if len(sizes) != 1 or 0 in sizes:
        raise InvalidInput("lists on the path must be k-uniform with k >= 1")
    if start is None:
        start = vs[0]
    if start == vs[-1]:
        vs.reverse()
    elif start != vs[0]:
        raise InvalidInput("start must be an end point of the path")
    c = min(L[start]) if forced is None else forced
    if c not in L[start]:
        raise InvalidInput(f"forced colour {c} is not in the list of the start vertex")
    coloring = {}
    pos = 0
    while True:
        end = pos
        while end + 1 < len(vs) and c in L[vs[end + 1]]:
            end += 1
        for v in vs[pos:end + 1]:
            if P.side[v] == 1:
                coloring[v] = c
        if trace is not None:
            trace.append({"color": c, "run": vs[pos:end + 1]})
        if end == len(vs) - 1:
            return coloring
        c = pick_escape_color(L, vs[end], vs[end + 1])
        pos = end + 1


def _cyclic_runs(C: CyclePath, c: int, L) -> list:
    """Runs of C(c) as vertex lists, ordered by their first position in C."""
    vs = C.vertices
    n = len(vs)
    member = [c in L[v] for v in vs]
    if all(member):
        return [list(vs)]
    runs = []
    for i in range(n):
        if member[i] and not member[i - 1]:
            j = i
            while member[(j + 1) % n]:
                j += 1
            runs.append((i, [vs[x % n] for x in range(i, j + 1)]))
    runs.sort(key=lambda item: item[0])
    return [run for _, run in runs]


def _remainder(C: CyclePath, run: list, from_end: int) -> list:
    """C minus ``run``, listed from the vertex next to ``from_end`` (an end of the run)."""
    vs = C.vertices
    n = len(vs)
    first, last = vs.index(run[0]), vs.index(run[-1])
    if from_end == run[-1]:
        return [vs[(last + 1 + x) % n] for x in range(n - len(run))]
    return [vs[(first - 1 - x) % n] for x in range(n - len(run))]


def color_cycle_I1(C: CyclePath, L, trace: Optional[dict] = None) -> dict:
    """Colour the class-1 vertices of an even cycle so that every class-2
    vertex loses at most one colour.

    (a) a colour common to every class-1 list colours them all;
    (b) otherwise an even run of some C(c) is coloured, and the rest of the
        cycle is handled as a path from beyond its class-2 end, starting with
        a colour that end does not have;
    (c) otherwise a run with both ends in class 1 is coloured and the rest of
        the cycle is handled as a path with a free start.
    """
    if not C.cyclic:
        raise InvalidInput("color_cycle_I1 expects a cycle")
    sizes = {len(L[v]) for v in C.vertices}
    if len(sizes) != 1 or min(sizes) < 2:
        raise InvalidInput("cycle lists must be k-uniform with k >= 2")
    info = trace if trace is not None else {}
    ones = [v for v in C.vertices if C.side[v] == 1]
    common = set.intersection(*(set(L[v]) for v in ones))
    if common:
        c = min(common)
        info.update(case="a", color=c)
        return {v: c for v in ones}

    palette = sorted(set().union(*(L[v] for v in C.vertices)))
    for c in palette:
        for run in _cyclic_runs(C, c, L):
            if len(run) % 2 == 0:
                v2 = run[0] if C.side[run[0]] == 2 else run[-1]
                rest = _remainder(C, run, v2)
                d = pick_escape_color(L, v2, rest[0])
                coloring = {v: c for v in run if C.side[v] == 1}
                steps = []
                coloring.update(key_lemma_color_path(C.sub(rest), L, rest[0], d, steps))
                info.update(case="b", color=c, component=run, escape=d, steps=steps)
                return coloring

    # every run of every C(c) has odd order, hence both ends in the same class
    c0, first = next((c, run) for c in palette for run in _cyclic_runs(C, c, L))
    if C.side[first[0]] == 1:
        c, run = c0, first
    else:
        v = first[-1]
        w = _remainder(C, first, v)[0]
        c = pick_escape_color(L, v, w)
        run = color_component(C, c, L, w)
        if run[0] != w:
            run = run[::-1]
        if C.side[run[0]] != 1 or C.side[run[-1]] != 1:
            raise InternalConsistencyError("case (c) run does not end in class 1 at both ends",
                                           {"cycle": list(C.vertices)})
    rest = _remainder(C, run, run[-1])
    coloring = {v: c for v in run if C.side[v] == 1}
    steps = []
    coloring.update(key_lemma_color_path(C.sub(rest), L, rest[0], None, steps))
    info.update(case="c", color=c, component=run, steps=steps)
    return coloring


def residual_lists(T: TorusTriangulation, L, partial: Mapping[int, int],
                   part: Optional[ClassPartition] = None) -> dict:
    """Lists on I2 ∪ I3 minus the colours already used on their neighbours."""
    part = part or canonical_three_coloring(T)
    if set(partial) != set(part.I1):
        raise InvalidInput("partial colouring must cover exactly I1")
    nbrs = T.graph.neighbors
    return {v: frozenset(L[v]) - {partial[u] for u in nbrs[v] if u in partial}
            for v in sorted(part.I2 | part.I3)}


@dataclass
class TorusContext:
    """Per-instance structure reused across list assignments."""
    T: TorusTriangulation
    part: ClassPartition
    H: Multigraph
    cycles: list
    G1: Multigraph
    orientation: Orientation
    eulerian: Optional[tuple] = None

    @classmethod
    def build(cls, T: TorusTriangulation, count_eulerian: bool = False, budget=None):
        if not T.graph.is_simple:
            raise InvalidInput(f"T{tuple(T.params)} is not simple")
        part = canonical_three_coloring(T)
        H = build_H(T, part)
        cycles = [[H.origin[x] for x in cyc] for cyc in h_cycle_decomposition(H)]
        cycles.sort(key=min)
        if len(cycles) != expected_h_cycles(T.params):
            raise InternalConsistencyError("unexpected number of H cycles", {"params": list(T.params)})
        G1 = build_G1(T, part)
        o = orient_G1(T, part, G1)
        ctx = cls(T, part, H, cycles, G1, o)
        if count_eulerian:
            ctx.eulerian = tuple(count_eulerian_subgraphs(o, budget))
        return ctx


@dataclass
class PipelineRun:
    coloring: dict
    trace: list = field(default_factory=list)


def run_five_list_coloring(T: TorusTriangulation, L, context: Optional[TorusContext] = None,
                           seed: Optional[int] = None) -> PipelineRun:
    """Full pipeline with a machine-readable trace of every stage."""
    bundle = {"params": list(T.params), "seed": seed,
              "lists": {str(v): sorted(L[v]) for v in L}}
    missing = [v for v in T.graph.vertices() if v not in L]
    if missing:
        raise InvalidInput(f"lists missing for vertices {missing[:5]}")
    if not is_k_uniform({v: L[v] for v in T.graph.vertices()}, 5):
        raise InvalidInput("the pipeline needs a 5-uniform list assignment")
    ctx = context or TorusContext.build(T)
    part = ctx.part
    trace = []
    hadj = {ctx.H.origin[v]: [ctx.H.origin[u] for u in ctx.H.neighbors[v]] for v in range(ctx.H.n)}
    color = {}
    for idx, cyc in enumerate(ctx.cycles):
        C = CyclePath(tuple(cyc), {v: 1 if v in part.I1 else 2 for v in cyc}, cyclic=True)
        info = {}
        color.update(color_cycle_I1(C, L, info))
        losses = loss_counts(hadj, color, L, [v for v in cyc if v in part.I2])
        worst = max(losses.values(), default=0)
        event = {"event": "cycle", "index": idx, "length": len(cyc), "case": info["case"],
                 "color": info["color"], "max_loss": worst}
        if "escape" in info:
            event["escape"] = info["escape"]
        if info["case"] != "a":
            event["path_colors"] = [step["color"] for step in info["steps"]]
        trace.append(event)
        if worst > 1:
            raise InternalConsistencyError(f"I2 vertex lost {worst} colours in H", bundle)
    if set(color) != set(part.I1):
        raise InternalConsistencyError("H cycles did not colour exactly I1", bundle)

    residual = residual_lists(T, L, color, part)
    min2 = min(len(residual[v]) for v in part.I2)
    min3 = min(len(residual[v]) for v in part.I3)
    trace.append({"event": "residual", "min_I2": min2, "min_I3": min3})
    if min2 < 3 or min3 < 2:
        raise InternalConsistencyError(
            f"residual lists too small (I2 >= {min2}, I3 >= {min3})", bundle)

    G1 = ctx.G1
    local = {G1.origin[k]: k for k in range(G1.n)}
    L1 = {local[v]: lst for v, lst in residual.items()}
    if not at_list_bound_check(ctx.orientation, L1):
        raise InternalConsistencyError("residual lists miss the outdegree + 1 bound", bundle)
    sub = find_list_coloring(G1, L1)
    if sub is None:
        raise InternalConsistencyError("G1 is not colourable from residual lists", bundle)
    for k, c in sub.items():
        color[G1.origin[k]] = c
    ok = verify_coloring(T.graph, color, L)
    trace.append({"event": "result", "verified": ok})
    if not ok:
        raise InternalConsistencyError("merged colouring failed verification", bundle)
    return PipelineRun(dict(sorted(color.items())), trace)


def five_list_color(T: TorusTriangulation, L, context: Optional[TorusContext] = None,
                    seed: Optional[int] = None) -> dict:
    return run_five_list_coloring(T, L, context, seed).coloring
