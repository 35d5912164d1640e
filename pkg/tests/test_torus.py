from math import gcd

import pytest
from hypothesis import given, strategies as st

from toruschoose.errors import ConditionNotApplicable, InvalidInput, InvalidParameter
from toruschoose.graph import build_complete_bipartite, build_complete_multipartite, is_bipartite, is_isomorphic
from toruschoose.torus import (TorusParams, build_G1, build_H, build_torus_triangulation,
                               canonical_three_coloring, classify, expected_h_cycles,
                               h_cycle_decomposition, is_three_chromatic, three_chromatic_condition)

from conftest import simple_three_chromatic


def params(max_rs=40):
    return st.integers(1, 8).flatmap(
        lambda r: st.integers(1, max(1, max_rs // r)).flatmap(
            lambda s: st.integers(0, s - 1).map(lambda t: TorusParams(r, s, t))))


class TestBuild:
    def test_figure_instance(self, T562):
        g = T562.graph
        assert (g.n, g.edge_count) == (30, 90)
        assert set(g.degrees) == {6}
        assert g.is_simple

    def test_loop_case(self):
        assert build_torus_triangulation((1, 3, 0)).graph.has_loops

    def test_multi_edge_case(self):
        g = build_torus_triangulation((2, 4, 0)).graph
        assert not g.has_loops and g.has_multi_edges

    @pytest.mark.parametrize("p", [(0, 3, 0), (1, 0, 0), (2, 3, 3), (2, 3, -1)])
    def test_invalid(self, p):
        with pytest.raises(InvalidParameter):
            build_torus_triangulation(p)

    def test_r_message(self):
        with pytest.raises(InvalidParameter, match="r must be ≥ 1"):
            TorusParams(0, 3, 0).validate()

    def test_interior_neighbours(self, T562):
        v = T562.vid(3, 4)
        expected = {T562.vid(3, 3), T562.vid(3, 5), T562.vid(2, 4), T562.vid(4, 4),
                    T562.vid(2, 5), T562.vid(4, 3)}
        assert T562.graph.neighbors[v] == expected

    def test_row_one_wraps_with_twist(self, T562):
        # row 1 meets row r shifted by t and t+1
        v = T562.vid(1, 2)
        assert T562.vid(5, 4) in T562.graph.neighbors[v]
        assert T562.vid(5, 5) in T562.graph.neighbors[v]

    def test_coord_roundtrip(self, T562):
        assert all(T562.vid(*T562.coord(v)) == v for v in T562.graph.vertices())

    @given(params())
    def test_six_regular(self, p):
        g = build_torus_triangulation(p).graph
        assert sum(g.degrees) == 6 * p.r * p.s
        assert set(g.degrees) == {6}
        if g.is_simple:
            assert g.edge_count == 3 * p.r * p.s


class TestClassify:
    def test_multi_edge_example(self):
        c = classify((1, 5, 2))
        assert c.has_multi_edges and not c.has_loops

    def test_figure_instance(self):
        c = classify((5, 6, 2))
        assert c.is_simple and c.is_three_chromatic

    def test_simple_not_three_chromatic(self):
        c = classify((3, 4, 0))
        assert c.is_simple and c.is_three_chromatic is False

    def test_non_simple_has_no_verdict(self):
        assert classify((1, 3, 0)).is_three_chromatic is None

    @pytest.mark.parametrize("p,expected", [((5, 6, 2), True), ((3, 3, 0), True), ((4, 6, 2), False)])
    def test_condition(self, p, expected):
        assert is_three_chromatic(p) is expected

    def test_condition_needs_simple(self):
        with pytest.raises(ConditionNotApplicable):
            is_three_chromatic((1, 3, 0))

    @given(params())
    def test_condition_is_arithmetic(self, p):
        assert three_chromatic_condition(p) == (p.s % 3 == 0 and (p.r - p.t) % 3 == 0)


class TestPartition:
    def test_diagonal_in_first_class(self, T562):
        part = canonical_three_coloring(T562)
        assert {T562.vid(1, 1), T562.vid(2, 2), T562.vid(3, 3)} <= part.I1
        assert T562.vid(1, 2) in part.I2 and T562.vid(1, 3) in part.I3

    def test_k333_parts(self, T330):
        part = canonical_three_coloring(T330)
        assert [len(c) for c in part] == [3, 3, 3]
        g = T330.graph
        assert all(not (u in c and v in c) for u, v in g.edges for c in part)

    def test_needs_three_chromatic(self):
        with pytest.raises(InvalidInput):
            canonical_three_coloring(build_torus_triangulation((3, 4, 0)))

    @pytest.mark.parametrize("p", simple_three_chromatic(36))
    def test_equal_classes(self, p):
        T = build_torus_triangulation(p)
        part = canonical_three_coloring(T)
        assert {len(c) for c in part} == {p[0] * p[1] // 3}


class TestG1:
    def test_figure_instance(self, T562):
        G1 = build_G1(T562, canonical_three_coloring(T562))
        assert (G1.n, G1.edge_count, set(G1.degrees)) == (20, 30, {3})
        assert is_bipartite(G1)

    def test_k33(self, T330):
        G1 = build_G1(T330, canonical_three_coloring(T330))
        assert is_isomorphic(G1, build_complete_bipartite(3, 3))

    @pytest.mark.parametrize("p", simple_three_chromatic(60))
    def test_edge_count_is_rs(self, p):
        T = build_torus_triangulation(p)
        assert build_G1(T, canonical_three_coloring(T)).edge_count == p[0] * p[1]


class TestH:
    def test_figure_instance_single_cycle(self, T562):
        H = build_H(T562, canonical_three_coloring(T562))
        cycles = h_cycle_decomposition(H)
        assert [len(c) for c in cycles] == [20]

    @pytest.mark.parametrize("p,count", [((3, 3, 0), 1), ((3, 6, 0), 1), ((6, 9, 0), 1),
                                         ((3, 9, 0), 1), ((6, 6, 0), 2)])
    def test_cycle_counts(self, p, count):
        T = build_torus_triangulation(p)
        assert len(h_cycle_decomposition(build_H(T, canonical_three_coloring(T)))) == count
        assert expected_h_cycles(p) == count

    def test_cycles_alternate(self, T562):
        part = canonical_three_coloring(T562)
        H = build_H(T562, part)
        for cyc in h_cycle_decomposition(H):
            sides = [H.origin[v] in part.I1 for v in cyc]
            assert all(a != b for a, b in zip(sides, sides[1:] + sides[:1]))

    def test_decomposition_rejects_non_cycles(self):
        with pytest.raises(InvalidInput):
            h_cycle_decomposition(build_complete_multipartite(3, 3))

    @pytest.mark.parametrize("p", simple_three_chromatic(60))
    def test_gcd_count_and_even(self, p):
        T = build_torus_triangulation(p)
        cycles = h_cycle_decomposition(build_H(T, canonical_three_coloring(T)))
        r, s, t = p
        assert len(cycles) == gcd(s, r - t) // 3
        assert all(len(c) % 2 == 0 for c in cycles)
