"""Closed-form surface and colouring formulas, plus the maximum subgraph
density L(G).

Everything is exact integer or rational arithmetic; square roots go through
:func:`math.isqrt`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

import networkx as nx

from .errors import InvalidInput, OutOfDomain
from .graph import Multigraph, is_bipartite


class Flagged(int):
    """An int that remembers why it departs from the bare formula."""

    note: Optional[str]

    def __new__(cls, value, note=None):
        obj = super().__new__(cls, value)
        obj.note = note
        return obj


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def heawood(g: int) -> int:
    """floor((7 + sqrt(1 + 48 g)) / 2) for genus g >= 1."""
    if g < 1:
        raise OutOfDomain(f"heawood(g) is defined for g >= 1, got {g}")
    # floor((7 + x) / 2) == (7 + floor(x)) // 2 for real x >= 0
    return (7 + math.isqrt(1 + 48 * g)) // 2


def heawood_nonorientable(k: int) -> int:
    if k < 1:
        raise OutOfDomain(f"nonorientable heawood(k) is defined for k >= 1, got {k}")
    return (7 + math.isqrt(1 + 24 * k)) // 2


def orientable_genus_complete(r: int) -> int:
    """ceil((r-3)(r-4)/12); r < 3 gives 0, flagged."""
    if r < 3:
        return Flagged(0, "r < 3: planar by convention")
    return Flagged(_ceil_div((r - 3) * (r - 4), 12))


def nonorientable_genus_complete(r: int) -> int:
    """ceil((r-3)(r-4)/6), except K7 which needs 3 crosscaps (it misses the Klein bottle)."""
    if r < 3:
        return Flagged(0, "r < 3: planar by convention")
    if r == 7:
        return Flagged(3, "K7 does not embed in the Klein bottle; formula value 2 overridden")
    return Flagged(_ceil_div((r - 3) * (r - 4), 6))


def genus_complete_bipartite(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise OutOfDomain("part sizes must be >= 1")
    return max(0, _ceil_div((m - 2) * (n - 2), 4))


def multipartite_genus_upper(m: int, r: int) -> int:
    """Genus that suffices for K_{m*r}: embed K_r, then one handle per extra edge."""
    if m < 1 or r < 3:
        raise OutOfDomain("need m >= 1 and r >= 3")
    value = int(orientable_genus_complete(r)) + (m * m - 1) * math.comb(r, 2)
    cap = _ceil_div(m * m * r * r, 2)
    assert value <= cap, (m, r, value, cap)
    return value


def kierstead_choice_K3r(r: int) -> int:
    """ch(K_{3*r}) = ceil((4r - 1) / 3)."""
    if r < 1:
        raise OutOfDomain("r must be >= 1")
    return _ceil_div(4 * r - 1, 3)


def euler_degree_bound(g: int, n: int) -> int:
    """floor(6 + 12(g-1)/n): the minimum degree cap from Euler's formula on S_g."""
    if g < 0:
        raise OutOfDomain("genus must be >= 0")
    if n < 3:
        raise OutOfDomain("need at least 3 vertices")
    return max(0, (6 * n + 12 * (g - 1)) // n)


def euler_degree_cap(g: int) -> int:
    """Global minimum-degree cap: 5 on the sphere, 12g + 6 otherwise."""
    if g < 0:
        raise OutOfDomain("genus must be >= 0")
    return 5 if g == 0 else 12 * g + 6


def ert_bipartite_threshold(k: int) -> int:
    """Smallest n guaranteed to give ch(K_{n,n}) > k: binomial(2k - 1, k)."""
    if k < 1:
        raise OutOfDomain("k must be >= 1")
    return math.comb(2 * k - 1, k)


def jump_upper_bound(g: int) -> int:
    h = heawood(g)
    # h <= 7 sqrt(g)  <=>  h^2 <= 49 g
    assert h * h <= 49 * g, (g, h)
    return h


# ---------------------------------------------------------------- density

def _densest_excess(g: Multigraph, lam: Fraction) -> int:
    """max over vertex sets S of q*e(S) - p*|S| for lam = p/q, via min cut.

    Network: source -> edge node (cap q), edge node -> both ends (uncapped),
    vertex -> sink (cap p).  The maximum equals q*|E| - mincut.
    """
    p, q = lam.numerator, lam.denominator
    net = nx.DiGraph()
    net.add_node("s")
    net.add_node("t")
    for idx, (u, v) in enumerate(g.edges):
        net.add_edge("s", ("e", idx), capacity=q)
        net.add_edge(("e", idx), ("v", u))
        net.add_edge(("e", idx), ("v", v))
    for v in g.vertices():
        net.add_edge(("v", v), "t", capacity=p)
    cut = nx.maximum_flow_value(net, "s", "t")
    return q * g.edge_count - cut


def max_subgraph_density(g: Multigraph) -> Fraction:
    """L(G) = max |E(H)| / |V(H)| over nonempty subgraphs H.

    Binary search over the finite set of candidate ratios e/v; the test
    "L(G) > lam" is a single min-cut computation.
    """
    if g.n == 0:
        raise OutOfDomain("density of the empty graph is undefined")
    if g.has_loops:
        raise InvalidInput("density expects a loopless graph")
    m = g.edge_count
    candidates = sorted({Fraction(e, v) for v in range(1, g.n + 1) for e in range(0, m + 1)})
    lo, hi = 0, len(candidates) - 1
    # smallest candidate lam with not (L > lam); L itself is a candidate
    while lo < hi:
        mid = (lo + hi) // 2
        if _densest_excess(g, candidates[mid]) > 0:
            lo = mid + 1
        else:
            hi = mid
    return candidates[lo]


def max_subgraph_density_bruteforce(g: Multigraph) -> Fraction:
    """Reference value by enumerating every nonempty vertex subset."""
    if g.n == 0:
        raise OutOfDomain("density of the empty graph is undefined")
    best = Fraction(0)
    for mask in range(1, 1 << g.n):
        e = sum(1 for u, v in g.edges if mask >> u & 1 and mask >> v & 1)
        best = max(best, Fraction(e, bin(mask).count("1")))
    return best


def bipartite_choosability_bound(g: Multigraph) -> int:
    """ceil(L(G)) + 1, an upper bound on ch(G) for bipartite G."""
    if not is_bipartite(g):
        raise InvalidInput("bipartite_choosability_bound needs a bipartite graph")
    if g.n == 0:
        return 0
    return math.ceil(max_subgraph_density(g)) + 1
