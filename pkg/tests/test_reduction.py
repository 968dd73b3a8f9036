import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathcat.complexes import CubicalComplex, Interval, InvalidInput, SimplicialComplex, triangulate_sk2, vset
from pathcat.engine import hom_set
from pathcat.generators import ZIGZAG_LABELS, grid_vertex, horn, necklace, swiss_flag, swiss_flag_names, zigzag
from pathcat.reduction import (
    corner_reduce,
    corners,
    delete_vertices,
    interval_restriction,
    is_full_subcomplex,
    minimal_path_subcomplex,
    path_scan_subcomplex,
    remove_corner,
    sources_and_sinks,
)
from pathcat.verify import check_cubical_embedding, check_simplicial_embedding
from conftest import brute_paths, cubical_complexes, simplicial_complexes

V = ZIGZAG_LABELS


def brute_full(L0, L):
    """Fullness straight from the definition: path-closed, and every spanned simplex present."""
    if not set(L0.simplices) <= set(L.simplices):
        return False
    verts = set(L0.vertices)
    for s in L.simplices:
        if set(s) <= verts and not L0.has_simplex(s):
            return False
    for v in verts:
        for w in verts:
            if v < w:
                for p in brute_paths(L, v, w):
                    if not set(p) <= verts:
                        return False
    return True


def all_faces(K):
    out = set()
    for c in K.maximal_cells:
        for A in c.members():
            for B in c.members():
                if A <= B:
                    out.add(Interval(A, B))
    return out


def hom_count(K, u, v):
    T = triangulate_sk2(K)
    return len(hom_set(T.complex, T.label(u), T.label(v)))


class TestFullSubcomplex:
    def test_face_of_horn(self):
        L0 = SimplicialComplex.from_simplices([(1, 2), (2, 3), (1, 3)])
        assert is_full_subcomplex(L0, horn(3, 0))

    def test_missing_spanned_edge(self):
        L0 = SimplicialComplex.from_simplices([(0,), (2,)])
        assert not is_full_subcomplex(L0, SimplicialComplex.simplex(2))

    def test_self(self):
        L = necklace(2)
        assert is_full_subcomplex(L, L)

    def test_not_a_subcomplex(self):
        with pytest.raises(InvalidInput):
            is_full_subcomplex(SimplicialComplex.simplex(3), SimplicialComplex.simplex(2))

    @settings(max_examples=60)
    @given(simplicial_complexes(), st.data())
    def test_against_definition(self, L, data):
        keep = data.draw(st.sets(st.sampled_from(L.vertices), min_size=1))
        L0 = L.restrict(keep)
        assert is_full_subcomplex(L0, L) == brute_full(L0, L)


class TestIntervalRestriction:
    def test_one_bead(self):
        assert interval_restriction(necklace(3), 0, 2) == SimplicialComplex.boundary(2)

    def test_whole_triangle(self):
        L = SimplicialComplex.simplex(2)
        assert interval_restriction(L, 0, 2) == L

    def test_single_vertex(self):
        assert interval_restriction(SimplicialComplex.simplex(2), 1, 1).counts() == (1,)

    def test_reversed(self):
        with pytest.raises(InvalidInput):
            interval_restriction(SimplicialComplex.simplex(2), 2, 0)


class TestSourcesAndSinks:
    def test_horn_source(self):
        sources, _ = sources_and_sinks(horn(3, 0))
        assert 0 in sources

    def test_zigzag(self):
        sources, sinks = sources_and_sinks(zigzag())
        assert V["v1"] in sources and V["v3"] in sinks

    def test_single_vertex(self):
        L = SimplicialComplex.from_simplices([(0,)])
        assert sources_and_sinks(L) == ({0}, {0})

    def test_zigzag_deletion_is_discrete(self):
        L = delete_vertices(zigzag(), {V["v1"], V["v3"]})
        assert set(L.vertices) == {V["v0"], V["v2"], V["v4"]}
        assert L.dim == 0

    def test_delete_nothing(self):
        assert delete_vertices(necklace(2), set()) == necklace(2)

    def test_delete_middle_of_boundary(self):
        assert delete_vertices(SimplicialComplex.boundary(2), {1}) == SimplicialComplex.from_simplices([(0, 2)])


class TestMinimalPathSubcomplex:
    def test_zigzag_empties(self):
        L, rep = minimal_path_subcomplex(zigzag(), V["v0"], V["v4"])
        assert len(L) == 0 and rep.endpoints_dropped
        assert len(hom_set(zigzag(), V["v0"], V["v4"])) == 0

    def test_horn(self):
        L, _ = minimal_path_subcomplex(horn(3, 0), 1, 3)
        assert L == SimplicialComplex.from_simplices([(1, 2), (2, 3), (1, 3)])

    def test_triangle(self):
        L, rep = minimal_path_subcomplex(SimplicialComplex.simplex(2), 0, 2)
        assert L == SimplicialComplex.simplex(2) and rep.removed == []

    @settings(max_examples=80)
    @given(simplicial_complexes())
    def test_equals_path_scan(self, L):
        for v in L.vertices:
            for w in L.vertices:
                if v > w:
                    continue
                got, rep = minimal_path_subcomplex(L, v, w)
                if rep.endpoints_dropped:
                    assert not brute_paths(L, v, w)
                    continue
                assert got == path_scan_subcomplex(L, v, w)
                assert v not in rep.removed and w not in rep.removed

    @settings(max_examples=60)
    @given(simplicial_complexes())
    def test_deleting_outer_sources_and_sinks_first(self, L):
        sources, sinks = sources_and_sinks(L)
        for v in L.vertices:
            for w in L.vertices:
                if v >= w:
                    continue
                S = (sources | sinks) - {v, w}
                a, _ = minimal_path_subcomplex(L, v, w)
                b, _ = minimal_path_subcomplex(delete_vertices(L, S), v, w)
                assert a == b

    @settings(max_examples=60)
    @given(simplicial_complexes())
    def test_fully_faithful(self, L):
        for v in L.vertices:
            for w in L.vertices:
                if v > w:
                    continue
                small, rep = minimal_path_subcomplex(L, v, w)
                if rep.endpoints_dropped:
                    continue
                assert is_full_subcomplex(small, L)
                assert all(c.ok for c in check_simplicial_embedding(small, L, [(v, w)]))


class TestCorners:
    def test_cube(self):
        for n in (1, 2, 3):
            assert len(corners(CubicalComplex.cube(n))) == 2 ** n

    def test_swiss_flag(self):
        K = swiss_flag()
        names = swiss_flag_names()
        inner = set(corners(K)) - {names["init"], names["term"]}
        assert len(inner) == 6

    def test_swiss_flag_extra_source_and_sink(self):
        T = triangulate_sk2(swiss_flag())
        sources, sinks = sources_and_sinks(T.complex)
        assert {T.vertex(x) for x in sources} == {vset(), grid_vertex(3, 2, 2)}
        assert {T.vertex(x) for x in sinks} == {vset(*range(1, 7)), grid_vertex(3, 1, 1)}

    def test_two_squares(self):
        K = CubicalComplex.from_cells(3, [Interval(vset(), vset(1, 2)), Interval(vset(1), vset(1, 2, 3))])
        shared = {vset(1), vset(1, 2)}
        assert len(K.vertices) == 6
        assert set(corners(K)) == set(K.vertices) - shared
        incidences = {F: sum(F in c for c in K.maximal_cells) for F in K.vertices}
        assert {F for F, k in incidences.items() if k == 1} == set(corners(K))


class TestRemoveCorner:
    def test_segment(self):
        K = remove_corner(CubicalComplex.cube(1), vset(1))
        assert K.vertices == [vset()]

    def test_square(self):
        K = remove_corner(CubicalComplex.cube(2), vset(1))
        assert set(K.maximal_cells) == {Interval(vset(), vset(2)), Interval(vset(2), vset(1, 2))}

    def test_swiss_flag_inner_corner(self):
        K = swiss_flag()
        x = grid_vertex(3, 1, 1)
        Kx = remove_corner(K, x)
        assert not Kx.has_vertex(x)
        assert all_faces(Kx) == {c for c in all_faces(K) if x not in c}

    def test_not_a_corner(self):
        K = CubicalComplex.from_cells(2, [Interval(vset(), vset(1)), Interval(vset(1), vset(1, 2))])
        with pytest.raises(InvalidInput):
            remove_corner(K, vset(1))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_cube_any_vertex(self, n):
        K = CubicalComplex.cube(n)
        for x in K.vertices:
            checks = check_cubical_embedding(remove_corner(K, x), K)
            assert checks and all(c.ok for c in checks)

    @settings(max_examples=40, deadline=None)
    @given(cubical_complexes(max_ambient=4))
    def test_random(self, K):
        for x in corners(K):
            assert all(c.ok for c in check_cubical_embedding(remove_corner(K, x), K))


class TestCornerReduce:
    def test_swiss_flag(self):
        K = swiss_flag()
        names = swiss_flag_names()
        R, rep = corner_reduce(K, {names["init"], names["term"]})
        assert len(rep.removed) >= 4
        assert hom_count(R, names["init"], names["term"]) == 2

    def test_swiss_flag_inner_corners_only(self):
        names = swiss_flag_names()
        protect = {names["init"], names["term"], grid_vertex(3, 3, 0), grid_vertex(3, 0, 3)}
        R, rep = corner_reduce(swiss_flag(), protect)
        inner = {grid_vertex(3, i, j) for i, j in [(1, 1), (2, 1), (1, 2), (2, 2)]}
        assert set(rep.removed) == inner
        assert hom_count(R, names["init"], names["term"]) == 2

    def test_everything_protected(self):
        K = CubicalComplex.cube(2)
        R, rep = corner_reduce(K, set(K.vertices))
        assert R == K and rep.removed == []

    def test_square(self):
        R, _ = corner_reduce(CubicalComplex.cube(2), {vset(), vset(1, 2)})
        assert hom_count(R, vset(), vset(1, 2)) == 1

    @settings(max_examples=50, deadline=None)
    @given(cubical_complexes(max_ambient=4), st.data())
    def test_terminates_and_respects_protection(self, K, data):
        protected = data.draw(st.sets(st.sampled_from(K.vertices), max_size=3))
        R, rep = corner_reduce(K, protected)
        assert rep.iterations <= len(K.vertices)
        assert not set(rep.removed) & protected
        assert all(R.has_vertex(x) for x in protected)
        assert all(c.ok for c in check_cubical_embedding(R, K))
