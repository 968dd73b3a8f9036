"""Oracle comparisons: does a reduced complex compute the same hom sets?

Every check computes hom sets on both sides by brute-force enumeration
and asks whether the induced map of morphism sets is a bijection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .complexes import CubicalComplex, SimplicialComplex, triangulate, triangulate_sk2
from .engine import PathCategory, hom_set
from .frontier import frontier_hom
from .reduction import (
    corner_reduce,
    corners,
    delete_vertices,
    interval_restriction,
    is_full_subcomplex,
    minimal_path_subcomplex,
    remove_corner,
    sources_and_sinks,
)
from .refinement import PosetMono, refine


@dataclass
class PairCheck:
    source: object
    target: object
    expected: int
    actual: int
    ok: bool
    context: str = ""

    def to_json(self) -> dict:
        enc = lambda x: sorted(x) if isinstance(x, frozenset) else x
        out = {"from": enc(self.source), "to": enc(self.target),
               "expected": self.expected, "actual": self.actual, "ok": self.ok}
        if self.context:
            out["context"] = self.context
        return out


@dataclass
class VerificationReport:
    pass_name: str
    checks: list = field(default_factory=list)
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems and all(c.ok for c in self.checks)

    @property
    def mismatches(self) -> list:
        return [c for c in self.checks if not c.ok]

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.problems.extend(other.problems)

    def to_json(self) -> dict:
        return {
            "pass": self.pass_name,
            "pairs": len(self.checks),
            "ok": self.ok,
            "mismatches": [c.to_json() for c in self.mismatches],
            "problems": list(self.problems),
        }


def _bijective(small, big, transport: Callable) -> bool:
    if len(small) != len(big):
        return False
    images = {big.classify(transport(m.representative)) for m in small}
    return len(images) == len(small)


def check_simplicial_embedding(L0: SimplicialComplex, L: SimplicialComplex,
                               pairs: Iterable | None = None, context: str = "",
                               big: PathCategory | None = None) -> list:
    """Compare hom sets of a subcomplex (same labels) with those of ``L``."""
    small = PathCategory(L0)
    big = big or PathCategory(L)
    if pairs is None:
        pairs = small.pairs()
    out = []
    for v, w in pairs:
        a, b = small.hom(v, w), big.hom(v, w)
        out.append(PairCheck(v, w, len(b), len(a), _bijective(a, b, tuple), context))
    return out


def check_cubical_embedding(K0: CubicalComplex, K: CubicalComplex,
                            vertex_map: Callable = frozenset, pairs: Iterable | None = None,
                            context: str = "") -> list:
    """Compare hom sets of ``K0`` with those of ``K`` along a vertex map."""
    T0, T = triangulate_sk2(K0), triangulate_sk2(K)
    small, big = PathCategory(T0.complex), PathCategory(T.complex)
    if pairs is None:
        pairs = [(u, v) for u in K0.vertices for v in K0.vertices if u <= v]
    out = []
    for u, v in pairs:
        a = small.hom(T0.label(u), T0.label(v))
        b = big.hom(T.label(vertex_map(u)), T.label(vertex_map(v)))

        def transport(path):
            return tuple(T.label(vertex_map(F)) for F in T0.path_to_sets(path))

        out.append(PairCheck(u, v, len(b), len(a), _bijective(a, b, transport), context))
    return out


def verify_interval(L: SimplicialComplex) -> VerificationReport:
    report = VerificationReport("interval")
    big = PathCategory(L)
    for i in L.vertices:
        for j in L.vertices:
            if i > j:
                continue
            L0 = interval_restriction(L, i, j)
            if not is_full_subcomplex(L0, L):
                report.problems.append(f"L[{i},{j}] is not full")
            report.checks += check_simplicial_embedding(L0, L, context=f"[{i},{j}]", big=big)
    return report


def verify_source_sink(L: SimplicialComplex) -> VerificationReport:
    report = VerificationReport("source-sink")
    big = PathCategory(L)
    sources, sinks = sources_and_sinks(L)
    L0 = delete_vertices(L, sources | sinks)
    if not is_full_subcomplex(L0, L):
        report.problems.append("deleting sources and sinks did not give a full subcomplex")
    report.checks += check_simplicial_embedding(L0, L, context="L(-S)", big=big)
    for v, w in big.pairs():
        reduced, rep = minimal_path_subcomplex(L, v, w)
        expected = len(big.hom(v, w))
        if rep.endpoints_dropped:
            report.checks.append(PairCheck(v, w, expected, 0, expected == 0, "L(v,w) empty"))
            continue
        if not is_full_subcomplex(reduced, L):
            report.problems.append(f"L({v},{w}) is not full")
        report.checks += check_simplicial_embedding(reduced, L, [(v, w)], f"L({v},{w})", big)
    return report


def verify_corner(K: CubicalComplex, protected=None) -> VerificationReport:
    """Remove each corner in turn; with ``protected``, also run the full reduction."""
    report = VerificationReport("corner")
    for x in corners(K):
        if protected is not None and x in protected:
            continue
        Kx = remove_corner(K, x)
        report.checks += check_cubical_embedding(Kx, K, context=f"without {sorted(x)}")
    if protected is not None:
        reduced, rep = corner_reduce(K, protected)
        report.checks += check_cubical_embedding(reduced, K, context="corner_reduce")
    return report


def verify_refine(K: CubicalComplex, alpha: PosetMono) -> VerificationReport:
    report = VerificationReport("refine")
    report.checks += check_cubical_embedding(K, refine(K, alpha), vertex_map=alpha,
                                             context="alpha_*")
    return report


def verify_frontier(K: CubicalComplex, cut: int | None = None,
                    pairs: Iterable | None = None) -> VerificationReport:
    """Frontier gluing against direct enumeration, for every separated pair."""
    report = VerificationReport("frontier")
    T = triangulate_sk2(K)
    direct = PathCategory(T.complex)
    cuts = range(K.ambient) if cut is None else [cut]
    for M in cuts:
        todo = pairs
        if todo is None:
            todo = [(u, v) for u in K.vertices for v in K.vertices if len(u) <= M < len(v)]
        for u, v in todo:
            glued = frontier_hom(K, M, u, v)
            d = direct.hom(T.label(u), T.label(v))
            ok = len(glued) == len(d) and glued.representatives == d.representatives
            report.checks.append(PairCheck(u, v, len(d), len(glued), ok, f"cut {M}"))
    return report


def verify_skeleton(K: CubicalComplex) -> VerificationReport:
    """Hom counts with and without simplices above dimension two."""
    report = VerificationReport("sk2")
    full, low = triangulate(K), triangulate_sk2(K)
    for u in K.vertices:
        for v in K.vertices:
            if u <= v:
                a = hom_set(full.complex, full.label(u), full.label(v))
                b = hom_set(low.complex, low.label(u), low.label(v))
                ok = len(a) == len(b) and a.representatives == b.representatives
                report.checks.append(PairCheck(u, v, len(a), len(b), ok))
    return report
