import itertools

import pytest
from hypothesis import strategies as st

from toruschoose.graph import Multigraph
from toruschoose.torus import build_torus_triangulation, three_chromatic_condition

ACCEPTANCE_LINES = []


def record_criterion(number, title, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else ""))
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


def torus_tuples(max_n):
    return [(r, s, t) for r in range(1, max_n + 1) for s in range(1, max_n // r + 1) for t in range(s)]


def simple_three_chromatic(max_n):
    out = []
    for p in torus_tuples(max_n):
        if three_chromatic_condition(p) and build_torus_triangulation(p).graph.is_simple:
            out.append(p)
    return out


def brute_force_list_coloring(g, L):
    """Reference: try every combination of list choices."""
    vs = list(g.vertices())
    for choice in itertools.product(*(sorted(L[v]) for v in vs)):
        col = dict(zip(vs, choice))
        if all(col[u] != col[v] for u, v in g.edges if u != v):
            return col
    return None


@st.composite
def simple_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Multigraph(n, tuple(sorted(chosen)))


@pytest.fixture(scope="session")
def T562():
    return build_torus_triangulation((5, 6, 2))


@pytest.fixture(scope="session")
def T330():
    return build_torus_triangulation((3, 3, 0))
