import itertools
from collections import Counter

import pytest

from toruschoose.errors import InvalidInput
from toruschoose.listcolor import find_list_coloring, random_list_assignment, verify_coloring
from toruschoose.structured import (CyclePath, TorusContext, color_component, color_cycle_I1,
                                    five_list_color, key_lemma_color_path, loss_counts,
                                    pick_escape_color, residual_lists, run_five_list_coloring)
from toruschoose.torus import build_torus_triangulation, canonical_three_coloring

from conftest import simple_three_chromatic

PAIRS = [frozenset(p) for p in itertools.combinations(range(1, 5), 2)]


def alternating(n, first_side=1, cyclic=False):
    side = {v: first_side if v % 2 == 0 else 3 - first_side for v in range(n)}
    return CyclePath(tuple(range(n)), side, cyclic)


def worst_loss(P, coloring, L):
    twos = [v for v in P.vertices if P.side[v] == 2]
    return max(loss_counts(P.neighbours(), coloring, L, twos).values(), default=0)


class TestCyclePath:
    def test_rejects_non_alternating(self):
        with pytest.raises(InvalidInput):
            CyclePath((0, 1), {0: 1, 1: 1})

    def test_rejects_odd_cycle(self):
        with pytest.raises(InvalidInput):
            CyclePath((0, 1, 2), {0: 1, 1: 2, 2: 1}, cyclic=True)


class TestColorComponent:
    def test_whole_path(self):
        P = alternating(4)
        assert color_component(P, 1, {v: {1, 2} for v in range(4)}, 0) == [0, 1, 2, 3]

    def test_singleton(self):
        P = alternating(3)
        assert color_component(P, 1, {0: {1, 2}, 1: {2, 3}, 2: {1, 3}}, 0) == [0]

    def test_prefix(self):
        P = alternating(4)
        L = {0: {1, 2}, 1: {1, 3}, 2: {4, 5}, 3: {1, 2}}
        assert color_component(P, 1, L, 0) == [0, 1]

    def test_wraps_on_cycles(self):
        C = alternating(4, cyclic=True)
        L = {0: {1, 2}, 1: {2, 3}, 2: {3, 4}, 3: {1, 4}}
        assert color_component(C, 1, L, 0) == [3, 0]

    def test_color_not_in_start(self):
        with pytest.raises(InvalidInput):
            color_component(alternating(2), 5, {0: {1}, 1: {5}}, 0)


class TestEscapeColor:
    def test_disjoint(self):
        assert pick_escape_color({0: {1, 2}, 1: {4, 5}}, 0, 1) == 4

    def test_difference(self):
        assert pick_escape_color({0: {1, 2, 3, 4, 5}, 1: {1, 2, 3, 4, 6}}, 0, 1) == 6

    def test_equal_lists(self):
        with pytest.raises(InvalidInput):
            pick_escape_color({0: {1, 2}, 1: {1, 2}}, 0, 1)


class TestKeyLemma:
    def test_two_vertices(self):
        P = alternating(2)
        L = {v: frozenset(range(1, 6)) for v in range(2)}
        col = key_lemma_color_path(P, L)
        assert col == {0: 1}
        assert loss_counts(P.neighbours(), col, L, [1]) == {1: 1}

    def test_shared_forced_color(self):
        P = alternating(7)
        L = {v: frozenset({9, v + 20}) for v in range(7)}
        col = key_lemma_color_path(P, L, start=0, forced=9)
        assert col == {0: 9, 2: 9, 4: 9, 6: 9}
        assert set(loss_counts(P.neighbours(), col, L, [1, 3, 5]).values()) == {1}

    def test_staged_lists(self):
        P = alternating(6)
        L = {0: {1, 2}, 1: {1, 3}, 2: {3, 4}, 3: {4, 5}, 4: {5, 6}, 5: {6, 1}}
        col = key_lemma_color_path(P, L)
        assert worst_loss(P, col, L) <= 1
        assert set(col) == {0, 2, 4}

    def test_start_from_other_end(self):
        P = alternating(4)
        L = {0: {1, 2}, 1: {2, 3}, 2: {3, 4}, 3: {4, 1}}
        col = key_lemma_color_path(P, L, start=3)
        assert worst_loss(P, col, L) <= 1

    def test_start_inside(self):
        with pytest.raises(InvalidInput):
            key_lemma_color_path(alternating(4), {v: {1, 2} for v in range(4)}, start=1)

    def test_forced_not_in_list(self):
        with pytest.raises(InvalidInput):
            key_lemma_color_path(alternating(2), {0: {1, 2}, 1: {1, 2}}, forced=3)

    def test_non_uniform(self):
        with pytest.raises(InvalidInput):
            key_lemma_color_path(alternating(2), {0: {1, 2}, 1: {1}})


class TestCycle:
    def test_case_a(self):
        C = alternating(6, cyclic=True)
        L = {v: frozenset({7, v + 10}) for v in range(6)}
        info = {}
        col = color_cycle_I1(C, L, info)
        assert info["case"] == "a" and col == {0: 7, 2: 7, 4: 7}
        assert worst_loss(C, col, L) <= 1

    def test_case_b_on_four_cycle(self):
        C = alternating(4, cyclic=True)
        L = {0: frozenset({1, 2}), 1: frozenset({1, 3}), 2: frozenset({3, 4}), 3: frozenset({2, 4})}
        info = {}
        col = color_cycle_I1(C, L, info)
        assert info["case"] == "b"
        assert len(info["component"]) % 2 == 0
        assert worst_loss(C, col, L) <= 1

    @pytest.mark.parametrize("n", [4, 6])
    def test_exhaustive_two_uniform(self, n):
        C = alternating(n, cyclic=True)
        cases = Counter()
        for lists in itertools.product(PAIRS, repeat=n):
            L = dict(enumerate(lists))
            info = {}
            col = color_cycle_I1(C, L, info)
            cases[info["case"]] += 1
            assert set(col) == {v for v in range(n) if C.side[v] == 1}
            assert all(col[v] in L[v] for v in col)
            assert worst_loss(C, col, L) <= 1, L
        assert sum(cases.values()) == len(PAIRS) ** n
        if n == 6:
            assert set(cases) == {"a", "b", "c"}

    def test_needs_cycle(self):
        with pytest.raises(InvalidInput):
            color_cycle_I1(alternating(4), {v: {1, 2} for v in range(4)})


class TestResidual:
    def setup_method(self):
        self.T = build_torus_triangulation((5, 6, 2))
        self.part = canonical_three_coloring(self.T)
        self.L = {v: frozenset(range(1, 6)) for v in self.T.graph.vertices()}

    def test_untouched(self):
        partial = {v: 9 for v in self.part.I1}
        res = residual_lists(self.T, self.L, partial, self.part)
        assert all(res[v] == self.L[v] for v in res)

    def test_loses_two(self):
        v = min(self.part.I2)
        ones = sorted(u for u in self.T.graph.neighbors[v] if u in self.part.I1)
        assert len(ones) == 3
        partial = {u: 9 for u in self.part.I1}
        partial.update({ones[0]: 1, ones[1]: 1, ones[2]: 2})
        assert residual_lists(self.T, self.L, partial, self.part)[v] == frozenset({3, 4, 5})

    def test_partial_must_be_I1(self):
        with pytest.raises(InvalidInput):
            residual_lists(self.T, self.L, {0: 1}, self.part)


class TestPipeline:
    def test_identical_lists(self, T562):
        L = {v: frozenset(range(1, 6)) for v in T562.graph.vertices()}
        col = five_list_color(T562, L)
        assert verify_coloring(T562.graph, col, L)

    def test_k333_against_direct_search(self, T330):
        ctx = TorusContext.build(T330)
        for seed in range(30):
            L = random_list_assignment(T330.graph, 5, 15, seed)
            assert verify_coloring(T330.graph, five_list_color(T330, L, ctx), L)
            assert find_list_coloring(T330.graph, L) is not None

    def test_hundred_random(self, T562):
        ctx = TorusContext.build(T562)
        for seed in range(100):
            L = random_list_assignment(T562.graph, 5, 15, seed)
            assert verify_coloring(T562.graph, five_list_color(T562, L, ctx, seed), L)

    def test_trace_shape(self, T562):
        run = run_five_list_coloring(T562, random_list_assignment(T562.graph, 5, 15, 3))
        events = [e["event"] for e in run.trace]
        assert events == ["cycle", "residual", "result"]
        assert run.trace[0]["length"] == 20 and run.trace[0]["max_loss"] <= 1
        assert run.trace[1]["min_I2"] >= 3 and run.trace[1]["min_I3"] >= 2

    def test_wrong_list_size(self, T562):
        L = {v: frozenset(range(1, 5)) for v in T562.graph.vertices()}
        with pytest.raises(InvalidInput):
            five_list_color(T562, L)

    def test_not_simple(self):
        T = build_torus_triangulation((1, 3, 0))
        with pytest.raises(InvalidInput):
            five_list_color(T, {v: frozenset(range(1, 6)) for v in T.graph.vertices()})

    @pytest.mark.parametrize("p", simple_three_chromatic(18))
    def test_oracle_equivalence_small(self, p):
        T = build_torus_triangulation(p)
        ctx = TorusContext.build(T, count_eulerian=True)
        assert ctx.eulerian[1] == 0
        for seed in range(20):
            L = random_list_assignment(T.graph, 5, 12, seed)
            assert verify_coloring(T.graph, five_list_color(T, L, ctx), L)
            assert find_list_coloring(T.graph, L) is not None
