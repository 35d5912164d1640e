"""Orientations, Eulerian subgraph parity counts and the orientation of G1.

An Eulerian subgraph of a digraph is a set of arcs with in-degree equal to
out-degree at every vertex; it need not be connected and the empty set counts
(as an even one).
"""
from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from .config import LIMITS
from .errors import InternalConsistencyError, InvalidInput, LimitExceeded
from .graph import Multigraph


@dataclass(frozen=True)
class Orientation:
    base: Multigraph
    arcs: tuple  # (tail, head) for each edge of ``base``, in edge order

    def __post_init__(self):
        if self.base.has_loops:
            raise InvalidInput("orientations are defined on loop-free graphs")
        if len(self.arcs) != self.base.edge_count:
            raise InvalidInput("one arc per edge required")
        for (u, v), (a, b) in zip(self.base.edges, self.arcs):
            if (min(a, b), max(a, b)) != (u, v):
                raise InvalidInput(f"arc {(a, b)} does not match edge {(u, v)}")

    @classmethod
    def from_arcs(cls, g: Multigraph, arcs) -> "Orientation":
        """Attach arcs to the edges of ``g``; every edge must be used once."""
        pool = defaultdict(deque)
        for a, b in arcs:
            pool[(min(a, b), max(a, b))].append((a, b))
        ordered = []
        for e in g.edges:
            if not pool[e]:
                raise InvalidInput(f"edge {e} has no arc")
            ordered.append(pool[e].popleft())
        if any(pool.values()):
            raise InvalidInput("arcs left over that match no edge")
        return cls(g, tuple(ordered))

    @cached_property
    def outdegrees(self) -> tuple:
        out = [0] * self.base.n
        for a, _ in self.arcs:
            out[a] += 1
        return tuple(out)

    @cached_property
    def indegrees(self) -> tuple:
        inn = [0] * self.base.n
        for _, b in self.arcs:
            inn[b] += 1
        return tuple(inn)

    def outdegree(self, v: int) -> int:
        return self.outdegrees[v]


class EulerianCount(NamedTuple):
    even: int
    odd: int


def _check_budget(o, budget):
    cap = LIMITS.max_eulerian_edges if budget is None else budget
    if len(o.arcs) > cap:
        raise LimitExceeded(f"{len(o.arcs)} edges exceed the Eulerian enumeration budget {cap}")


def _edge_order(o: Orientation) -> list:
    """Edge indices ordered along a BFS of the vertices, to keep the frontier small."""
    g = o.base
    order, seen = [], [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in sorted(g.neighbors[v]):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    rank = {v: i for i, v in enumerate(order)}
    return sorted(range(len(o.arcs)), key=lambda i: (max(rank[x] for x in o.arcs[i]),
                                                     min(rank[x] for x in o.arcs[i]), i))


def count_eulerian_subgraphs(o: Orientation, budget: Optional[int] = None) -> EulerianCount:
    """Count balanced arc subsets by parity of their size.

    Arcs are decided one at a time; the state is the running out-minus-in
    balance of every vertex that still has undecided arcs.  A vertex whose
    balance can no longer return to zero prunes the branch, and a vertex with
    no undecided arcs left must be balanced.  Identical states are merged.
    """
    _check_budget(o, budget)
    order = _edge_order(o)
    remaining = Counter()
    for a, b in o.arcs:
        remaining[a] += 1
        remaining[b] += 1
    open_vertices: list = []
    slot = {}
    states = {(): (1, 0)}
    for idx in order:
        a, b = o.arcs[idx]
        for v in (a, b):
            if v not in slot:
                slot[v] = len(open_vertices)
                open_vertices.append(v)
                states = {st + (0,): c for st, c in states.items()}
        remaining[a] -= 1
        remaining[b] -= 1
        ia, ib = slot[a], slot[b]
        nxt = defaultdict(lambda: [0, 0])
        for st, (ev, od) in states.items():
            cell = nxt[st]
            cell[0] += ev
            cell[1] += od
            taken = list(st)
            taken[ia] += 1
            taken[ib] -= 1
            cell = nxt[tuple(taken)]
            cell[0] += od
            cell[1] += ev
        closing = [v for v in (a, b) if remaining[v] == 0]
        states = {}
        for st, (ev, od) in nxt.items():
            if any(abs(st[slot[v]]) > remaining[v] for v in (a, b)):
                continue
            states[st] = (ev, od)
        for v in dict.fromkeys(closing):
            pos = slot.pop(v)
            open_vertices.pop(pos)
            for u in open_vertices[pos:]:
                slot[u] -= 1
            states = {st[:pos] + st[pos + 1:]: c for st, c in states.items()}
    even, odd = states.get((), (0, 0))
    return EulerianCount(even, odd)


def count_eulerian_by_cycle_unions(o: Orientation, budget: Optional[int] = None) -> EulerianCount:
    """Independent count: Eulerian arc sets are exactly the unions of
    arc-disjoint directed cycles, so enumerate cycles and collect the
    distinct unions."""
    _check_budget(o, budget)
    n = o.base.n
    out = [[] for _ in range(n)]
    for idx, (a, b) in enumerate(o.arcs):
        out[a].append((b, idx))
    cycles = []

    def walk(start, v, mask, visited):
        for w, idx in out[v]:
            if w == start:
                cycles.append(mask | 1 << idx)
            elif w > start and not visited >> w & 1:
                walk(start, w, mask | 1 << idx, visited | 1 << w)

    for s in range(n):
        walk(s, s, 0, 1 << s)

    unions = set()

    def combine(i, mask):
        unions.add(mask)
        for j in range(i, len(cycles)):
            if not cycles[j] & mask:
                combine(j + 1, mask | cycles[j])

    combine(0, 0)
    even = sum(1 for m in unions if bin(m).count("1") % 2 == 0)
    return EulerianCount(even, len(unions) - even)


def at_condition_holds(o: Orientation, budget: Optional[int] = None) -> bool:
    c = count_eulerian_subgraphs(o, budget)
    return c.even != c.odd


def verify_no_odd_eulerian_bipartite(o: Orientation, budget: Optional[int] = None) -> bool:
    return count_eulerian_subgraphs(o, budget).odd == 0


def at_list_bound_check(o: Orientation, L) -> bool:
    return all(len(L.get(v, ())) >= o.outdegree(v) + 1 for v in o.base.vertices())


def orient_G1(T, part, G1: Optional[Multigraph] = None) -> Orientation:
    """Horizontal arcs east, vertical arcs north, diagonal arcs south-east.

    Class-3 vertices ((j - i) ≡ 2) send their east arc; class-2 vertices
    ((j - i) ≡ 1) send their north and south-east arcs.  Out-degree is then 2
    on class 2 and 1 on class 3.
    """
    from .torus import build_G1

    G1 = G1 if G1 is not None else build_G1(T, part)
    local = {p: k for k, p in enumerate(G1.origin)}
    arcs = []
    for v in sorted(part.I2 | part.I3):
        i, j = T.coord(v)
        if (j - i) % 3 == 2:
            arcs.append((v, T.east(v)))
        else:
            arcs.append((v, T.north(v)))
            arcs.append((v, T.southeast(v)))
    bundle = {"params": list(T.params)}
    try:
        o = Orientation.from_arcs(G1, [(local[a], local[b]) for a, b in arcs])
    except (InvalidInput, KeyError) as exc:
        raise InternalConsistencyError(f"G1 orientation does not match G1: {exc}", bundle)
    for k, p in enumerate(G1.origin):
        want = 2 if p in part.I2 else 1
        if o.outdegree(k) != want:
            raise InternalConsistencyError(
                f"outdegree {o.outdegree(k)} at {T.graph.label(p)}, expected {want}", bundle)
    return o
