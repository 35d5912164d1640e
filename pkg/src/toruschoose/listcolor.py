"""List colouring: exact L-colouring search, bounded k-choosability checks
and upper-bound certificates for the choice number.

A list assignment is a mapping ``vertex -> frozenset of colours`` and a
colouring is a mapping ``vertex -> colour``; colours are non-negative ints.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .errors import InvalidInput, InvalidParameter, Uncolorable
from .graph import Multigraph, brooks_bound, degeneracy, is_bipartite, is_connected

ListAssignment = Mapping[int, frozenset]
Coloring = Mapping[int, int]


def normalize_lists(g: Multigraph, L) -> dict:
    missing = [v for v in g.vertices() if v not in L]
    if missing:
        raise InvalidInput(f"list assignment misses vertices {missing[:5]}")
    return {v: frozenset(int(c) for c in L[v]) for v in g.vertices()}


def is_k_uniform(L: ListAssignment, k: int) -> bool:
    return all(len(lst) == k for lst in L.values())


def find_list_coloring(g: Multigraph, L: ListAssignment) -> Optional[dict]:
    """Proper colouring with ``colour(v) in L[v]``, or None if none exists.

    Backtracking with minimum-remaining-values ordering (ties: lowest vertex),
    colours tried in increasing order, and forward checking on neighbours.
    """
    if g.has_loops:
        raise Uncolorable("graph has a loop; no proper colouring exists")
    L = normalize_lists(g, L)
    n = g.n
    nbrs = [sorted(s) for s in g.neighbors]
    lists = [sorted(L[v]) for v in range(n)]
    if any(not lst for lst in lists):
        return None
    blocked = [dict.fromkeys(lst, 0) for lst in lists]
    free = [len(lst) for lst in lists]
    color = [None] * n

    def place(v, c):
        color[v] = c
        dead = False
        for u in nbrs[v]:
            b = blocked[u]
            if c in b:
                b[c] += 1
                if b[c] == 1:
                    free[u] -= 1
                    if free[u] == 0 and color[u] is None:
                        dead = True
        return dead

    def unplace(v, c):
        color[v] = None
        for u in nbrs[v]:
            b = blocked[u]
            if c in b:
                b[c] -= 1
                if b[c] == 0:
                    free[u] += 1

    def search(left):
        if left == 0:
            return True
        v = -1
        best = None
        for x in range(n):
            if color[x] is None and (best is None or free[x] < best):
                v, best = x, free[x]
                if best <= 1:
                    break
        for c in lists[v]:
            if blocked[v][c]:
                continue
            if not place(v, c) and search(left - 1):
                return True
            unplace(v, c)
        return False

    if not search(n):
        return None
    return {v: color[v] for v in range(n)}


def verify_coloring(g: Multigraph, coloring: Coloring, L: Optional[ListAssignment] = None) -> bool:
    missing = [v for v in g.vertices() if v not in coloring]
    if missing:
        raise InvalidInput(f"colouring is partial; missing {missing[:5]}")
    for u, v in g.edges:
        if u != v and coloring[u] == coloring[v]:
            return False
    if L is not None:
        return all(coloring[v] in L[v] for v in g.vertices())
    return True


def random_list_assignment(g: Multigraph, k: int, universe_size: int, seed: int = 0) -> dict:
    """k-uniform lists drawn uniformly without replacement from ``1..universe_size``."""
    if k < 0 or universe_size < k:
        raise InvalidParameter(f"need 0 <= k <= universe_size, got k={k}, universe={universe_size}")
    rng = random.Random(seed)
    colors = range(1, universe_size + 1)
    return {v: frozenset(rng.sample(colors, k)) for v in g.vertices()}


def degeneracy_choosability_bound(g: Multigraph) -> int:
    if not g.is_simple:
        raise InvalidInput("degeneracy bound expects a simple graph")
    return degeneracy(g) + 1


# ---------------------------------------------------------------- exhaustive search

@dataclass
class ChoosabilityVerdict:
    """Outcome of a bounded k-choosability search.

    ``status`` is ``"choosable"`` (no bad assignment with colours from
    ``1..universe_size``; not a proof for larger universes), ``"counterexample"``
    or ``"budget_exhausted"``.
    """
    status: str
    k: int
    universe_size: int
    examined: int
    counterexample: Optional[dict] = None
    relative_to_universe: bool = True

    @property
    def choosable(self) -> bool:
        return self.status == "choosable"


def _orbit_predecessor(n, orbits):
    prev = [-1] * n
    for orbit in orbits or ():
        members = sorted(orbit)
        for a, b in zip(members, members[1:]):
            prev[b] = a
    return prev


def is_k_choosable_exhaustive(g: Multigraph, k: int, universe_size: int,
                              orbits: Optional[Sequence[Sequence[int]]] = None,
                              max_assignments: int = 5_000_000,
                              time_limit: Optional[float] = None) -> ChoosabilityVerdict:
    """Search k-uniform list assignments over ``1..universe_size`` for one
    admitting no proper list colouring.

    Colour symmetry is quotiented by only generating assignments whose colours
    first appear in increasing order.  ``orbits`` lists vertex sets whose every
    permutation is an automorphism (e.g. the parts of K_{m,n}); lists within
    an orbit are then generated in non-decreasing order.  Both constraints
    hold for the lexicographically least member of every symmetry class, so
    the reduction never hides a counterexample.

    Assignments are visited by the exact number of colours they use, smallest
    first, and within a vertex lists that open new colours are tried first.
    """
    if g.has_loops:
        raise Uncolorable("graph has a loop; no proper colouring exists")
    n = g.n
    prev = _orbit_predecessor(n, orbits)
    deadline = None if time_limit is None else time.monotonic() + time_limit
    lists = [None] * n
    examined = 0
    exhausted = False

    def candidates(v, used, target):
        out = []
        room = k * (n - v - 1)
        for fresh in range(min(k, target - used), -1, -1):
            old = k - fresh
            if old > used or used + fresh + room < target:
                continue
            tail = tuple(range(used + 1, used + fresh + 1))
            for head in combinations(range(1, used + 1), old):
                lst = head + tail
                if prev[v] >= 0 and lst < lists[prev[v]]:
                    continue
                out.append((lst, used + fresh))
        return out

    def search(v, used, target):
        nonlocal examined, exhausted
        if v == n:
            examined += 1
            if examined > max_assignments or (deadline is not None and examined % 256 == 0
                                               and time.monotonic() > deadline):
                exhausted = True
                return None
            assignment = {x: frozenset(lists[x]) for x in range(n)}
            if find_list_coloring(g, assignment) is None:
                return assignment
            return None
        for lst, nused in candidates(v, used, target):
            lists[v] = lst
            found = search(v + 1, nused, target)
            if found is not None or exhausted:
                return found
        return None

    if k < 0:
        raise InvalidParameter("k must be non-negative")
    found = None
    if n and k:
        for target in range(k, min(universe_size, k * n) + 1):
            found = search(0, 0, target)
            if found is not None or exhausted:
                break
    elif n:
        found = {v: frozenset() for v in range(n)}
    if found is not None:
        return ChoosabilityVerdict("counterexample", k, universe_size, examined, found)
    status = "budget_exhausted" if exhausted else "choosable"
    return ChoosabilityVerdict(status, k, universe_size, examined)


@dataclass
class ChoiceNumber:
    """Bracket on ch(G).  ``exact`` only when an independent certificate
    meets the searched lower bound."""
    lower: int
    upper: Optional[int]
    certificate: Optional[str]
    verdicts: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.upper == self.lower

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None


def choosability_upper_bounds(g: Multigraph) -> dict:
    """Independent upper-bound certificates for ch(g), by name."""
    from .surface import bipartite_choosability_bound

    s = g if g.is_simple else None
    bounds = {}
    if s is None or g.n == 0:
        return bounds
    bounds["degeneracy"] = degeneracy_choosability_bound(g)
    if is_connected(g):
        bounds["brooks"] = brooks_bound(g)
    if is_bipartite(g):
        bounds["bipartite-density"] = bipartite_choosability_bound(g)
    return bounds


def choice_number_small(g: Multigraph, max_k: int, universe_size: int,
                        orbits=None, max_assignments: int = 5_000_000,
                        time_limit: Optional[float] = None) -> ChoiceNumber:
    if g.n == 0:
        return ChoiceNumber(0, 0, "empty")
    bounds = choosability_upper_bounds(g)
    cert = min(bounds.items(), key=lambda kv: (kv[1], kv[0])) if bounds else (None, None)
    lower = 1
    verdicts = []
    for k in range(1, max_k + 1):
        if cert[1] is not None and cert[1] <= k:
            break
        verdict = is_k_choosable_exhaustive(g, k, universe_size, orbits,
                                            max_assignments, time_limit)
        verdicts.append(verdict)
        if verdict.status != "counterexample":
            break
        lower = k + 1
    return ChoiceNumber(lower, cert[1], cert[0], verdicts)
