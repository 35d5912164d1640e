"""Altshuler's 6-regular toroidal triangulations T(r, s, t).

Vertex ``(i, j)`` with ``1 <= i <= r`` and ``1 <= j <= s`` gets id
``(i - 1) * s + (j - 1)``.  Second coordinates are always reduced to ``1..s``.
In the grid picture ``i`` runs east and ``j`` runs north; "horizontal" edges
join ``(i, j)`` to its east neighbour, "vertical" edges join ``(i, j)`` to
``(i, j + 1)`` and diagonal edges run south-east.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import ConditionNotApplicable, InternalConsistencyError, InvalidInput, InvalidParameter
from .graph import Multigraph, induced_subgraph, is_bipartite


class TorusParams(NamedTuple):
    r: int
    s: int
    t: int

    def validate(self) -> "TorusParams":
        r, s, t = self
        if r < 1:
            raise InvalidParameter("r must be ≥ 1")
        if s < 1:
            raise InvalidParameter("s must be ≥ 1")
        if not 0 <= t < s:
            raise InvalidParameter("t must satisfy 0 ≤ t < s")
        return self


@dataclass(frozen=True)
class TorusTriangulation:
    params: TorusParams
    graph: Multigraph

    @property
    def r(self):
        return self.params.r

    @property
    def s(self):
        return self.params.s

    @property
    def t(self):
        return self.params.t

    def vid(self, i: int, j: int) -> int:
        """Vertex id of ``(i, j)``; ``j`` is taken modulo s."""
        if not 1 <= i <= self.r:
            raise InvalidInput(f"row {i} outside 1..{self.r}")
        return (i - 1) * self.s + (j - 1) % self.s

    def coord(self, v: int) -> tuple:
        return v // self.s + 1, v % self.s + 1

    # Geometric neighbours used by the colouring argument.  Each one is an
    # edge of the triangulation; the row-r wrap applies the twist.
    def east(self, v: int) -> int:
        i, j = self.coord(v)
        return self.vid(i + 1, j) if i < self.r else self.vid(1, j - self.t)

    def north(self, v: int) -> int:
        i, j = self.coord(v)
        return self.vid(i, j + 1)

    def southeast(self, v: int) -> int:
        i, j = self.coord(v)
        return self.vid(i + 1, j - 1) if i < self.r else self.vid(1, j - self.t - 1)


def _neighbour_list(r, s, t, i, j):
    """Neighbours of (i, j) exactly as the four adjacency cases list them."""
    if r == 1:
        return [(1, j + 1), (1, j - 1), (1, j + t), (1, j - t),
                (1, j + t + 1), (1, j - t - 1)]
    if i == 1:
        return [(1, j + 1), (1, j - 1), (2, j), (2, j - 1), (r, j + t + 1), (r, j + t)]
    if i == r:
        return [(r, j + 1), (r, j - 1), (r - 1, j + 1), (r - 1, j), (1, j - t), (1, j - t - 1)]
    return [(i, j + 1), (i, j - 1), (i + 1, j), (i - 1, j), (i + 1, j - 1), (i - 1, j + 1)]


def build_torus_triangulation(p) -> TorusTriangulation:
    """Construct T(r, s, t) as a multigraph.

    Each vertex lists its six neighbours; every edge is therefore seen once
    from each endpoint (a loop twice from its only endpoint), so incidence
    counts are halved after asserting they are even.
    """
    p = TorusParams(*p).validate()
    r, s, t = p
    incid = Counter()
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            u = (i - 1) * s + (j - 1)
            for a, b in _neighbour_list(r, s, t, i, j):
                v = (a - 1) * s + (b - 1) % s
                incid[(u, v) if u <= v else (v, u)] += 1
    edges = []
    for pair in sorted(incid):
        count = incid[pair]
        if count % 2:
            raise InternalConsistencyError(
                f"odd incidence count {count} for {pair}", {"params": list(p)})
        edges.extend([pair] * (count // 2))
    labels = {(i - 1) * s + (j - 1): f"({i},{j})"
              for i in range(1, r + 1) for j in range(1, s + 1)}
    return TorusTriangulation(p, Multigraph(r * s, tuple(edges), labels))


class Classification(NamedTuple):
    has_loops: bool
    has_multi_edges: bool
    is_simple: bool
    # None when the 3-chromatic criterion does not apply (non-simple graph)
    is_three_chromatic: Optional[bool]


def three_chromatic_condition(p) -> bool:
    r, s, t = p
    return s % 3 == 0 and (r - t) % 3 == 0


def is_three_chromatic(p, T: Optional[TorusTriangulation] = None) -> bool:
    """Whether simple T(r, s, t) is 3-chromatic: s ≡ 0 ≡ r - t (mod 3)."""
    p = TorusParams(*p).validate()
    T = T or build_torus_triangulation(p)
    if not T.graph.is_simple:
        raise ConditionNotApplicable(f"T{tuple(p)} is not simple; the criterion does not apply")
    return three_chromatic_condition(p)


def classify(p, T: Optional[TorusTriangulation] = None) -> Classification:
    p = TorusParams(*p).validate()
    T = T or build_torus_triangulation(p)
    g = T.graph
    loops = g.has_loops
    multi = g.has_multi_edges
    simple = g.is_simple
    return Classification(loops, multi, simple, three_chromatic_condition(p) if simple else None)


@dataclass(frozen=True)
class ClassPartition:
    I1: frozenset
    I2: frozenset
    I3: frozenset

    def class_of(self, v: int) -> int:
        if v in self.I1:
            return 1
        if v in self.I2:
            return 2
        return 3

    def __iter__(self):
        return iter((self.I1, self.I2, self.I3))


def canonical_three_coloring(T: TorusTriangulation) -> ClassPartition:
    """Classes by (j - i) mod 3, so that (1, j) lands in class j."""
    if not T.graph.is_simple or not three_chromatic_condition(T.params):
        raise InvalidInput(f"T{tuple(T.params)} is not a simple 3-chromatic triangulation")
    classes = ([], [], [])
    for v in T.graph.vertices():
        i, j = T.coord(v)
        classes[(j - i) % 3].append(v)
    part = ClassPartition(*(frozenset(c) for c in classes))
    for cls in part:
        for v in cls:
            if T.graph.neighbors[v] & cls:
                raise InternalConsistencyError(
                    f"class of {T.graph.label(v)} is not independent", {"params": list(T.params)})
    return part


def build_G1(T: TorusTriangulation, part: ClassPartition) -> Multigraph:
    """Induced subgraph on I2 ∪ I3, certified 3-regular and bipartite."""
    G1 = induced_subgraph(T.graph, part.I2 | part.I3)
    if any(d != 3 for d in G1.degrees) or not is_bipartite(G1):
        raise InternalConsistencyError("G1 is not 3-regular bipartite", {"params": list(T.params)})
    for u, v in G1.edges:
        if (G1.origin[u] in part.I2) == (G1.origin[v] in part.I2):
            raise InternalConsistencyError("G1 edge inside one class", {"params": list(T.params)})
    return G1


def build_H(T: TorusTriangulation, part: ClassPartition) -> Multigraph:
    """Horizontal and vertical edges of T with both ends in I1 ∪ I2.

    The result keeps the induced-subgraph numbering of I1 ∪ I2 (``origin``
    maps back to T) and is certified 2-regular with every edge joining I1 to I2.
    """
    keep = sorted(part.I1 | part.I2)
    index = {v: k for k, v in enumerate(keep)}
    nbrs = T.graph.neighbors
    edges = []
    for v in keep:
        for w in (T.east(v), T.north(v)):
            if w not in nbrs[v]:
                raise InternalConsistencyError("geometric neighbour is not adjacent",
                                               {"params": list(T.params)})
            if w in index:
                edges.append((index[v], index[w]))
    labels = {index[v]: T.graph.labels[v] for v in keep if v in T.graph.labels}
    H = Multigraph(len(keep), tuple(edges), labels, origin=tuple(keep))
    if any(d != 2 for d in H.degrees) or not H.is_simple:
        raise InternalConsistencyError("H is not a simple 2-regular graph", {"params": list(T.params)})
    for u, v in H.edges:
        if (keep[u] in part.I1) == (keep[v] in part.I1):
            raise InternalConsistencyError("H edge inside one class", {"params": list(T.params)})
    return H


def h_cycle_decomposition(H: Multigraph) -> list:
    """Cycles of a 2-regular graph as vertex sequences.

    Cycles are ordered by their minimum vertex; each starts at that vertex and
    proceeds towards its smaller neighbour.
    """
    if any(d != 2 for d in H.degrees):
        raise InvalidInput("cycle decomposition needs a 2-regular graph")
    adj = [[] for _ in range(H.n)]
    for u, v in H.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * H.n
    cycles = []
    for s in range(H.n):
        if seen[s]:
            continue
        cycle = [s]
        seen[s] = True
        prev, cur = s, min(adj[s])
        while cur != s:
            seen[cur] = True
            cycle.append(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(cycle)
    return cycles


def expected_h_cycles(p) -> int:
    r, s, t = p
    return math.gcd(s, r - t) // 3
