"""Splitting a cubical complex at a size level and gluing hom sets back together.

With ``A = K(0, M)`` and ``B = K(M + 1, n)``, every path ``u -> v`` from
A to B crosses exactly one edge ``x -> y`` of the triangulation with
``|x| <= M < |y|``.  So hom(u, v) is a quotient of the disjoint union
of ``hom_A(u, x) x hom_B(y, v)`` over those crossing edges, by the
relations coming from 2-simplices that straddle the cut.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from .complexes import (
    CubicalComplex,
    Interval,
    InvalidInput,
    Triangulation,
    sorted_vertices,
    triangulate_sk2,
)
from .engine import HomSet, Morphism, PathCategory
from .reduction import is_full_subcomplex
from .unionfind import UnionFind


def level_subcomplex(K: CubicalComplex, r: int, s: int) -> CubicalComplex:
    """Cells of ``K`` all of whose vertices have size between ``r`` and ``s``."""
    if r > s:
        raise InvalidInput(f"empty size range [{r}, {s}]")
    cells = []
    for c in K.maximal_cells:
        lo = max(r, len(c.lower))
        hi = min(s, len(c.upper))
        if lo > hi:
            continue
        lowers = [F for F in c.members() if len(F) == lo]
        uppers = [G for G in c.members() if len(G) == hi]
        cells.extend(Interval(F, G) for F in lowers for G in uppers if F <= G)
    return CubicalComplex.from_cells(K.ambient, cells)


def _as_sets(T: Triangulation) -> set:
    return {T.path_to_sets(s) for s in T.complex.simplices}


def level_triangulation_iso_check(K: CubicalComplex, r: int, s: int) -> bool:
    """Compare the triangulated level subcomplex with the level part of the triangulation.

    Also checks that the level part is a full subcomplex.
    """
    T = triangulate_sk2(K)
    keep = [i for i, F in enumerate(T.vertex_sets) if r <= len(F) <= s]
    part = T.complex.restrict(keep)
    if not is_full_subcomplex(part, T.complex):
        return False
    direct = triangulate_sk2(level_subcomplex(K, r, s))
    part_sets = {T.path_to_sets(x) for x in part.simplices}
    return _as_sets(direct) == part_sets


@dataclass
class FrontierDecomposition:
    cut: int
    lower: CubicalComplex
    upper: CubicalComplex
    crossing_edges: list
    relation_generators: list
    triangulation: Triangulation = field(repr=False, default=None)

    def to_json(self, summands=None) -> dict:
        out = {
            "cut": self.cut,
            "crossing_edges": [[sorted(x), sorted(y)] for x, y in self.crossing_edges],
        }
        if summands is not None:
            out["summands"] = [
                {"edge": [sorted(x), sorted(y)], "a_count": a, "b_count": b}
                for (x, y), (a, b) in summands.items()
            ]
        return out


def frontier_split(K: CubicalComplex, M: int) -> FrontierDecomposition:
    if not 0 <= M < K.ambient:
        raise InvalidInput(f"cut {M} outside [0, {K.ambient})")
    T = triangulate_sk2(K)
    sets = T.vertex_sets
    edges = sorted(
        ((sets[a], sets[b]) for a, b in T.complex.edges if len(sets[a]) <= M < len(sets[b])),
        key=lambda e: (T.label(e[0]), T.label(e[1])),
    )
    triangles = [
        T.path_to_sets(t) for t in sorted(T.complex.triangles)
        if len(sets[t[0]]) <= M < len(sets[t[2]])
    ]
    return FrontierDecomposition(
        M, level_subcomplex(K, 0, M), level_subcomplex(K, M + 1, K.ambient),
        edges, triangles, T,
    )


@dataclass
class FrontierResult:
    hom: HomSet
    decomposition: FrontierDecomposition
    summands: dict
    timings: dict


class _Side:
    """Hom sets of one side, keyed by cubical vertices."""

    def __init__(self, K: CubicalComplex):
        self.tri = triangulate_sk2(K)
        self.category = PathCategory(self.tri.complex)

    def hom(self, x, y) -> HomSet:
        return self.category.hom(self.tri.label(x), self.tri.label(y))

    def rep_sets(self, m: Morphism) -> tuple:
        return self.tri.path_to_sets(m.representative)

    def classify(self, x, y, path_sets) -> int:
        return self.hom(x, y).classify(self.tri.path_to_labels(path_sets))


def _lower_job(A: _Side, u, sources) -> dict:
    return {x: A.hom(u, x) for x in sources}


def _upper_job(B: _Side, v, targets) -> dict:
    return {y: B.hom(y, v) for y in targets}


def frontier_compute(K: CubicalComplex, M: int, u, v, executor=None,
                     order: str = "lower-first") -> FrontierResult:
    """hom(u, v) from the hom sets of the two sides and the crossing data.

    The two sides are independent; pass an ``executor`` to evaluate them
    concurrently, or ``order="upper-first"`` to swap the sequential order.
    """
    u, v = frozenset(u), frozenset(v)
    for x in (u, v):
        if not K.has_vertex(x):
            raise InvalidInput(f"{sorted(x)} is not a vertex of the complex")
    if not 0 <= M < K.ambient:
        raise InvalidInput(f"cut {M} outside [0, {K.ambient})")
    if not len(u) <= M < len(v):
        raise InvalidInput(f"cut {M} does not separate {sorted(u)} and {sorted(v)}")

    decomp = frontier_split(K, M)
    T = decomp.triangulation
    sources = sorted_vertices({x for x, _ in decomp.crossing_edges})
    targets = sorted_vertices({y for _, y in decomp.crossing_edges})
    timings = {}

    def timed(name, fn, *args):
        def run():
            t0 = time.perf_counter()
            out = fn(*args)
            timings[name] = time.perf_counter() - t0
            return out
        return run

    A, B = _Side(decomp.lower), _Side(decomp.upper)
    lower = timed("lower", _lower_job, A, u, sources)
    upper = timed("upper", _upper_job, B, v, targets)
    if executor is not None:
        fa, fb = executor.submit(lower), executor.submit(upper)
        homs_a, homs_b = fa.result(), fb.result()
    elif order == "upper-first":
        homs_b = upper()
        homs_a = lower()
    else:
        homs_a = lower()
        homs_b = upper()

    t0 = time.perf_counter()
    base = {}
    total = 0
    summands = {}
    for e in decomp.crossing_edges:
        x, y = e
        na, nb = len(homs_a[x]), len(homs_b[y])
        summands[e] = (na, nb)
        base[e] = total
        total += na * nb

    def element(e, p, q):
        return base[e] + p * summands[e][1] + q

    uf = UnionFind(total)
    for a, b, c in decomp.relation_generators:
        if len(b) <= M:
            # a -> b -> c with a, b below the cut: slide the crossing edge down
            for p, q in product(homs_a[a], homs_b[c]):
                moved = A.classify(u, b, A.rep_sets(p) + (b,))
                uf.union(element((b, c), moved, q.class_id), element((a, c), p.class_id, q.class_id))
        else:
            for p, q in product(homs_a[a], homs_b[c]):
                moved = B.classify(b, v, (b,) + B.rep_sets(q))
                uf.union(element((a, b), p.class_id, moved), element((a, c), p.class_id, q.class_id))

    best: dict[int, tuple] = {}
    for e in decomp.crossing_edges:
        x, y = e
        for p, q in product(homs_a[x], homs_b[y]):
            path = T.path_to_labels(A.rep_sets(p) + B.rep_sets(q))
            root = uf.find(element(e, p.class_id, q.class_id))
            if root not in best or path < best[root]:
                best[root] = path
    roots = sorted(best, key=best.get)
    class_of_root = {root: i for i, root in enumerate(roots)}
    su, sv = T.label(u), T.label(v)
    classes = tuple(Morphism(su, sv, i, best[root]) for i, root in enumerate(roots))

    def classify(path) -> int:
        sets = T.path_to_sets(path)
        if not sets or sets[0] != u or sets[-1] != v:
            raise InvalidInput(f"{path} is not a path {su} -> {sv}")
        cross = next(i for i in range(len(sets) - 1) if len(sets[i + 1]) > M)
        x, y = sets[cross], sets[cross + 1]
        if (x, y) not in base:
            raise InvalidInput(f"{path} uses a non-edge")
        p = A.classify(u, x, sets[: cross + 1])
        q = B.classify(y, v, sets[cross + 1:])
        return class_of_root[uf.find(element((x, y), p, q))]

    timings["merge"] = time.perf_counter() - t0
    hom = HomSet(su, sv, classes, classifier=classify)
    return FrontierResult(hom, decomp, summands, timings)


def frontier_hom(K: CubicalComplex, M: int, u, v, executor=None,
                 order: str = "lower-first") -> HomSet:
    return frontier_compute(K, M, u, v, executor=executor, order=order).hom


def min_crossing_cut(K: CubicalComplex, u, v) -> int:
    """The separating cut with the fewest crossing edges, smallest on ties."""
    u, v = frozenset(u), frozenset(v)
    cuts = range(len(u), len(v))
    if not cuts:
        raise InvalidInput(f"no cut separates {sorted(u)} and {sorted(v)}")
    return min(cuts, key=lambda M: (len(frontier_split(K, M).crossing_edges), M))
