from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings

from pathcat.complexes import CubicalComplex, Interval, InvalidInput, triangulate_sk2, vset
from pathcat.engine import enumerate_paths, hom_set
from pathcat.frontier import (
    frontier_compute,
    frontier_hom,
    frontier_split,
    level_subcomplex,
    level_triangulation_iso_check,
    min_crossing_cut,
)
from pathcat.generators import grid, swiss_flag, swiss_flag_names
from pathcat.verify import verify_frontier
from conftest import all_subsets, cubical_complexes

SQUARE = CubicalComplex.cube(2)


def brute_level_faces(K, r, s):
    """Every interval of K whose vertices all have size in [r, s]."""
    out = set()
    subs = all_subsets(K.ambient)
    for A in subs:
        for B in subs:
            if A <= B and r <= len(A) and len(B) <= s and K.contains(Interval(A, B)):
                out.add(Interval(A, B))
    return out


def faces(K):
    return {Interval(A, B) for c in K.maximal_cells for A in c.members() for B in c.members() if A <= B}


class TestLevelSubcomplex:
    def test_trim_top(self):
        K = level_subcomplex(SQUARE, 0, 1)
        assert set(K.vertices) == {vset(), vset(1), vset(2)}
        assert triangulate_sk2(K).complex.counts() == (3, 2)

    def test_whole(self):
        assert level_subcomplex(SQUARE, 0, 2) == SQUARE

    def test_middle(self):
        K = level_subcomplex(SQUARE, 1, 1)
        assert set(K.vertices) == {vset(1), vset(2)} and K.dim == 0

    @settings(max_examples=60)
    @given(cubical_complexes(max_ambient=4))
    def test_against_interval_scan(self, K):
        n = K.ambient
        for r in range(n + 1):
            for s in range(r, n + 1):
                assert faces(level_subcomplex(K, r, s)) == brute_level_faces(K, r, s)


class TestIsoCheck:
    def test_square(self):
        assert level_triangulation_iso_check(SQUARE, 0, 1)

    def test_cube(self):
        assert level_triangulation_iso_check(CubicalComplex.cube(3), 1, 2)

    @given(cubical_complexes(max_ambient=5))
    def test_full_range(self, K):
        assert level_triangulation_iso_check(K, 0, K.ambient)


class TestSplit:
    def test_square_bottom(self):
        d = frontier_split(SQUARE, 0)
        assert d.lower.vertices == [vset()]
        assert set(d.upper.vertices) == {vset(1), vset(2), vset(1, 2)}
        assert set(d.crossing_edges) == {(vset(), vset(1)), (vset(), vset(2)), (vset(), vset(1, 2))}

    def test_square_top(self):
        d = frontier_split(SQUARE, 1)
        assert set(d.crossing_edges) == {(vset(1), vset(1, 2)), (vset(2), vset(1, 2)), (vset(), vset(1, 2))}

    def test_segment(self):
        d = frontier_split(CubicalComplex.cube(1), 0)
        assert d.crossing_edges == [(vset(), vset(1))] and d.relation_generators == []

    def test_bad_cut(self):
        with pytest.raises(InvalidInput):
            frontier_split(SQUARE, 2)

    @given(cubical_complexes(max_ambient=5))
    def test_invariants(self, K):
        for M in range(K.ambient):
            d = frontier_split(K, M)
            assert not set(d.lower.vertices) & set(d.upper.vertices)
            for x, y in d.crossing_edges:
                assert d.lower.has_vertex(x) and d.upper.has_vertex(y)
            for a, _, c in d.relation_generators:
                assert len(a) <= M < len(c)

    @settings(max_examples=40)
    @given(cubical_complexes(max_ambient=4))
    def test_each_path_crosses_once(self, K):
        T = triangulate_sk2(K)
        for M in range(K.ambient):
            for u in K.vertices:
                for v in K.vertices:
                    if not len(u) <= M < len(v):
                        continue
                    for p in enumerate_paths(T.complex, T.label(u), T.label(v)):
                        sizes = [len(T.vertex(i)) for i in p]
                        assert sum(a <= M < b for a, b in zip(sizes, sizes[1:])) == 1


class TestFrontierHom:
    def test_segment(self):
        assert len(frontier_hom(CubicalComplex.cube(1), 0, vset(), vset(1))) == 1

    def test_square(self):
        h = frontier_hom(SQUARE, 0, vset(), vset(1, 2))
        assert len(h) == 1

    def test_swiss_flag(self):
        names = swiss_flag_names()
        K = swiss_flag()
        T = triangulate_sk2(K)
        direct = hom_set(T.complex, T.label(names["init"]), T.label(names["term"]))
        h = frontier_hom(K, 3, names["init"], names["term"])
        assert len(h) == len(direct) == 2
        assert h.representatives == direct.representatives

    def test_same_side(self):
        with pytest.raises(InvalidInput, match="does not separate"):
            frontier_hom(SQUARE, 0, vset(1), vset(1, 2))

    def test_classifier_matches_direct(self):
        K = grid(2, 2, holes=[(0, 0)])
        T = triangulate_sk2(K)
        u, v = vset(), vset(1, 2, 3, 4)
        h = frontier_hom(K, 2, u, v)
        direct = hom_set(T.complex, T.label(u), T.label(v))
        for p in enumerate_paths(T.complex, T.label(u), T.label(v)):
            assert h.classify(p) == direct.classify(p)

    @settings(max_examples=40, deadline=None)
    @given(cubical_complexes(max_ambient=4))
    def test_against_direct(self, K):
        assert verify_frontier(K).ok

    @pytest.mark.parametrize("K", [swiss_flag(), CubicalComplex.cube(3), grid(2, 2, holes=[(1, 0)])],
                             ids=["swiss", "cube3", "grid"])
    def test_order_and_workers_do_not_matter(self, K):
        u, v = K.vertices[0], K.vertices[-1]
        for M in range(len(u), len(v)):
            base = frontier_hom(K, M, u, v).representatives
            assert frontier_hom(K, M, u, v, order="upper-first").representatives == base
            with ThreadPoolExecutor(2) as ex:
                assert frontier_hom(K, M, u, v, executor=ex).representatives == base

    def test_report_timings(self):
        res = frontier_compute(SQUARE, 0, vset(), vset(1, 2))
        assert "merge" in res.timings
        js = res.decomposition.to_json(res.summands)
        assert js["cut"] == 0 and len(js["crossing_edges"]) == 3
        assert sum(s["a_count"] * s["b_count"] for s in js["summands"]) == 3

    def test_min_crossing_cut(self):
        K = CubicalComplex.cube(3)
        M = min_crossing_cut(K, vset(), vset(1, 2, 3))
        counts = [len(frontier_split(K, c).crossing_edges) for c in range(3)]
        assert counts[M] == min(counts)
