"""Undirected multigraphs with loops, standard constructions and exact
small-instance solvers (chromatic number, cliques, isomorphism).

Vertices are the integers ``0 .. n-1``.  Edges are kept as an explicit list so
that loops and parallel edges survive every construction; adjacency indices
are derived on demand.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional

import networkx as nx

from .config import LIMITS
from .errors import InvalidInput, InvalidParameter, LimitExceeded, Uncolorable


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple = ()
    labels: Mapping[int, str] = field(default_factory=dict)
    # parent vertex id of each vertex, for graphs cut out of a larger one
    origin: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter("vertex count must be non-negative")
        norm = []
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInput(f"edge {e!r} has an endpoint outside [0, {self.n})")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "labels", {int(k): str(v) for k, v in dict(self.labels).items()})

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    @cached_property
    def neighbors(self) -> tuple:
        """Simple neighbourhoods: loops dropped, parallel edges merged."""
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                nbrs[u].add(v)
                nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    @property
    def has_multi_edges(self) -> bool:
        return any(m > 1 for (u, v), m in self.multiplicity.items() if u != v)

    @property
    def is_simple(self) -> bool:
        return not self.has_loops and not any(m > 1 for m in self.multiplicity.values())

    def vertices(self) -> range:
        return range(self.n)

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G


# ---------------------------------------------------------------- builders

def _need(value, minimum, name):
    if value < minimum:
        raise InvalidParameter(f"{name} must be >= {minimum}, got {value}")


def build_cycle(n: int) -> Multigraph:
    _need(n, 3, "n")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def build_path(n: int) -> Multigraph:
    _need(n, 1, "n")
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def build_complete(n: int) -> Multigraph:
    _need(n, 1, "n")
    return Multigraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def build_complete_multipartite(m: int, r: int) -> Multigraph:
    """K_{m*r}: r parts of m vertices; vertex ``p*m + x`` lies in part p."""
    _need(m, 1, "m")
    _need(r, 1, "r")
    n = m * r
    edges = tuple((u, v) for u in range(n) for v in range(u + 1, n) if u // m != v // m)
    return Multigraph(n, edges)


def build_complete_bipartite(m: int, n: int) -> Multigraph:
    _need(m, 1, "m")
    _need(n, 1, "n")
    return Multigraph(m + n, tuple((u, m + v) for u in range(m) for v in range(n)))


def induced_subgraph(g: Multigraph, vertices: Iterable[int]) -> Multigraph:
    """Induced subgraph relabelled to ``0..k-1`` in increasing parent order.

    ``origin`` maps new ids back to ``g``; labels are inherited.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = tuple((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    labels = {index[v]: g.labels[v] for v in keep if v in g.labels}
    return Multigraph(len(keep), edges, labels, origin=tuple(keep))


def simplify(g: Multigraph) -> Multigraph:
    seen = set()
    edges = []
    for e in g.edges:
        if e[0] != e[1] and e not in seen:
            seen.add(e)
            edges.append(e)
    return Multigraph(g.n, tuple(edges), g.labels, origin=g.origin)


# ---------------------------------------------------------------- structure

def k_core_vertices(g: Multigraph, k: int) -> frozenset:
    deg = list(g.degrees)
    alive = [True] * g.n
    incident = [[] for _ in range(g.n)]
    for u, v in g.edges:
        incident[u].append(v)
        if u != v:
            incident[v].append(u)
    queue = deque(v for v in range(g.n) if deg[v] < k)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for u in incident[v]:
            if u == v or not alive[u]:
                continue
            deg[u] -= 1
            if deg[u] < k:
                queue.append(u)
    return frozenset(v for v in range(g.n) if alive[v])


def k_core(g: Multigraph, k: int) -> Multigraph:
    return induced_subgraph(g, k_core_vertices(g, k))


def degeneracy(g: Multigraph) -> int:
    """Largest minimum degree met while peeling minimum-degree vertices."""
    deg = list(g.degrees)
    alive = set(range(g.n))
    incident = [[] for _ in range(g.n)]
    for u, v in g.edges:
        incident[u].append(v)
        if u != v:
            incident[v].append(u)
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for u in incident[v]:
            if u in alive:
                deg[u] -= 1
    return best


def connected_components(g: Multigraph) -> list:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in sorted(g.neighbors[v]):
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Multigraph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


class Bipartition(NamedTuple):
    parts: Optional[tuple]
    odd_cycle: Optional[tuple]

    def __bool__(self):
        return self.parts is not None


def is_bipartite(g: Multigraph) -> Bipartition:
    """BFS 2-colouring; on failure returns an odd closed walk witness.

    A loop is reported as an odd cycle of length 1.
    """
    for u, v in g.edges:
        if u == v:
            return Bipartition(None, (u,))
    side = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in sorted(g.neighbors[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    return Bipartition(None, _odd_cycle(parent, u, v))
    part0 = tuple(v for v in range(g.n) if side[v] == 0)
    part1 = tuple(v for v in range(g.n) if side[v] == 1)
    return Bipartition((part0, part1), None)


def _odd_cycle(parent, u, v):
    def chain(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    pu, pv = chain(u), chain(v)
    common = set(pu) & set(pv)
    top = next(x for x in pu if x in common)
    left = pu[: pu.index(top) + 1]
    right = pv[: pv.index(top)]
    return tuple(left + right[::-1])


# ---------------------------------------------------------------- exact solvers

def _check_limit(g, limit, what):
    if g.n > limit:
        raise LimitExceeded(f"{what} refuses graphs with {g.n} > {limit} vertices")


def _reject_loops(g):
    if g.has_loops:
        raise Uncolorable("graph has a loop; no proper colouring exists")


def _max_clique_size(nbrs, lower=0, stop_at=None):
    """Bron-Kerbosch with pivoting; stops early once ``stop_at`` is reached."""
    best = [lower]

    def expand(size, cand, excl):
        if not cand and not excl:
            best[0] = max(best[0], size)
            return
        if size + len(cand) <= best[0]:
            return
        pivot = max(cand | excl, key=lambda x: len(nbrs[x] & cand))
        for v in sorted(cand - nbrs[pivot]):
            expand(size + 1, cand & nbrs[v], excl & nbrs[v])
            if stop_at is not None and best[0] >= stop_at:
                return
            cand = cand - {v}
            excl = excl | {v}

    expand(0, frozenset(range(len(nbrs))), frozenset())
    return best[0]


def contains_clique(g: Multigraph, k: int, limit: Optional[int] = None) -> bool:
    _check_limit(g, LIMITS.max_vertices_exact if limit is None else limit, "contains_clique")
    if k <= 0:
        return True
    if k > g.n:
        return False
    return _max_clique_size(g.neighbors, stop_at=k) >= k


def greedy_coloring(g: Multigraph) -> dict:
    """DSATUR greedy colouring (colours from 0); ties go to the lowest index."""
    nbrs = g.neighbors
    color = {}
    sat = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max((x for x in range(g.n) if x not in color),
                key=lambda x: (len(sat[x]), len(nbrs[x]), -x))
        c = 0
        while c in sat[v]:
            c += 1
        color[v] = c
        for u in nbrs[v]:
            sat[u].add(c)
    return color


def find_k_coloring(g: Multigraph, k: int) -> Optional[dict]:
    """Exact k-colouring by backtracking, or None.

    Vertex order: largest saturation, then lowest index; colours ascending,
    never opening more than one new colour at a time.
    """
    _reject_loops(g)
    n = g.n
    nbrs = [sorted(s) for s in g.neighbors]
    color = [-1] * n
    # count[v][c]: number of coloured neighbours of v that carry colour c
    count = [[0] * max(k, 1) for _ in range(n)]
    sat = [0] * n

    def assign(v, c, delta):
        color[v] = c if delta > 0 else -1
        for u in nbrs[v]:
            before = count[u][c]
            count[u][c] += delta
            if delta > 0 and before == 0:
                sat[u] += 1
            elif delta < 0 and before == 1:
                sat[u] -= 1

    def search(done, used):
        if done == n:
            return True
        v = -1
        best = -1
        for x in range(n):
            if color[x] < 0 and sat[x] > best:
                v, best = x, sat[x]
        if best >= k:
            return False
        for c in range(min(k, used + 1)):
            if count[v][c]:
                continue
            assign(v, c, +1)
            if search(done + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
        return False

    if n == 0:
        return {}
    if k <= 0:
        return None
    return {v: color[v] for v in range(n)} if search(0, 0) else None


def chromatic_number_exact(g: Multigraph, limit: Optional[int] = None) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then
    backtracking for each k in between.  Parallel edges count once."""
    _reject_loops(g)
    _check_limit(g, LIMITS.max_vertices_exact if limit is None else limit,
                 "chromatic_number_exact")
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    upper = max(greedy_coloring(g).values()) + 1
    lower = _max_clique_size(g.neighbors)
    for k in range(lower, upper):
        if find_k_coloring(g, k) is not None:
            return k
    return upper


def brooks_bound(g: Multigraph) -> int:
    if not g.is_simple:
        raise InvalidInput("brooks_bound needs a simple graph")
    if not is_connected(g):
        raise InvalidInput("brooks_bound needs a connected graph")
    delta = max(g.degrees)
    complete = g.edge_count == g.n * (g.n - 1) // 2
    odd_cycle = g.n % 2 == 1 and g.n >= 3 and all(d == 2 for d in g.degrees)
    return delta + 1 if complete or odd_cycle else delta


def is_isomorphic(g1: Multigraph, g2: Multigraph, limit: Optional[int] = None) -> bool:
    """Exact isomorphism test respecting loops and edge multiplicities."""
    cap = LIMITS.max_vertices_isomorphism if limit is None else limit
    _check_limit(g1, cap, "is_isomorphic")
    _check_limit(g2, cap, "is_isomorphic")
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees) != sorted(g2.degrees):
        return False
    if sorted(g1.multiplicity.values()) != sorted(g2.multiplicity.values()):
        return False
    return nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())
