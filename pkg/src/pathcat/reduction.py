"""Subcomplexes that compute the same hom sets as the whole complex.

Each pass returns a smaller complex whose path category embeds fully
faithfully in the original one: full subcomplexes, iterated deletion of
sources and sinks, and removal of corners from cubical complexes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import (
    CubicalComplex,
    Interval,
    InvalidInput,
    SimplicialComplex,
    vertex_key,
)
from .engine import between, reachable_from


@dataclass
class ReductionReport:
    pass_name: str
    removed: list = field(default_factory=list)
    iterations: int = 0
    input_size: int = 0
    output_size: int = 0
    endpoints_dropped: bool = False
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        removed = [sorted(x) if isinstance(x, frozenset) else x for x in self.removed]
        out = {"pass": self.pass_name, "removed": removed, "iterations": self.iterations}
        out.update(self.extra)
        return out


def is_subcomplex(L0: SimplicialComplex, L: SimplicialComplex) -> bool:
    return set(L0.vertices) <= set(L.vertices) and all(
        L.has_simplex(s) for s in L0.maximal_simplices
    )


def is_full_subcomplex(L0: SimplicialComplex, L: SimplicialComplex) -> bool:
    """Path-closed, and containing every simplex of L spanned by its vertices."""
    if not is_subcomplex(L0, L):
        raise InvalidInput("first complex is not a subcomplex of the second")
    inside = set(L0.vertices)
    reached: set = set()
    for v in inside:
        reached |= reachable_from(L, v)
    for z in reached - inside:
        if not reachable_from(L, z).isdisjoint(inside):
            return False
    spanned = L.restrict(inside)
    return all(L0.has_simplex(s) for s in spanned.maximal_simplices)


def interval_restriction(L: SimplicialComplex, i: int, j: int) -> SimplicialComplex:
    """The full subcomplex on labels ``i <= v <= j``."""
    if i > j:
        raise InvalidInput(f"empty label range [{i}, {j}]")
    return L.restrict(v for v in L.vertices if i <= v <= j)


def sources_and_sinks(L: SimplicialComplex) -> tuple[set, set]:
    sources = {v for v in L.vertices if not L.predecessors[v]}
    sinks = {v for v in L.vertices if not L.successors[v]}
    return sources, sinks


def delete_vertices(L: SimplicialComplex, S) -> SimplicialComplex:
    """Keep the simplices with no vertex in ``S``."""
    S = set(S)
    return L.restrict(v for v in L.vertices if v not in S)


def path_scan_subcomplex(L: SimplicialComplex, v, w) -> SimplicialComplex:
    """Simplices whose vertices all lie on paths from ``v`` to ``w``, found by reachability."""
    return L.restrict(between(L, v, w))


def minimal_path_subcomplex(L: SimplicialComplex, v, w):
    """Shrink ``L[v, w]`` by deleting sources and sinks other than ``v``, ``w``.

    All current sources and sinks go in one round.  If the endpoints end
    up disconnected there is no path, and the result is empty.
    """
    for x in (v, w):
        if not L.has_vertex(x):
            raise InvalidInput(f"unknown vertex {x!r}")
    if v > w:
        raise InvalidInput(f"{v} > {w}: no paths")
    report = ReductionReport("source-sink", input_size=len(L))
    current = interval_restriction(L, v, w)
    while True:
        sources, sinks = sources_and_sinks(current)
        doomed = (sources | sinks) - {v, w}
        if not doomed:
            break
        report.removed.extend(sorted(doomed))
        report.iterations += 1
        current = delete_vertices(current, doomed)
    if v != w and w not in reachable_from(current, v):
        current = SimplicialComplex()
        report.endpoints_dropped = True
    report.output_size = len(current)
    return current, report


def corners(K: CubicalComplex) -> list:
    """Vertices lying in exactly one maximal cell, in canonical order."""
    return [F for F in K.vertices if len(K.cells_containing(F)) == 1]


def _faces_avoiding(cell: Interval, x: frozenset) -> list:
    # the codimension-one faces on the far side of x
    out = []
    for i in sorted(cell.upper - cell.lower):
        if i in x:
            out.append(Interval(cell.lower, cell.upper - {i}))
        else:
            out.append(Interval(cell.lower | {i}, cell.upper))
    return out


def delete_cubical_vertex(K: CubicalComplex, x) -> CubicalComplex:
    """The subcomplex of cells that do not have ``x`` as a vertex."""
    x = frozenset(x)
    cells = []
    for c in K.maximal_cells:
        cells.extend(_faces_avoiding(c, x) if x in c else [c])
    return CubicalComplex.from_cells(K.ambient, cells)


def remove_corner(K: CubicalComplex, x) -> CubicalComplex:
    x = frozenset(x)
    if len(K.cells_containing(x)) != 1:
        raise InvalidInput(f"{sorted(x)} is not a corner")
    return delete_cubical_vertex(K, x)


def corner_reduce(K: CubicalComplex, protected=()):
    """Remove unprotected corners one at a time, smallest first, until none is left."""
    protected = {frozenset(p) for p in protected}
    report = ReductionReport("corner", input_size=len(K))
    while True:
        candidates = [c for c in corners(K) if c not in protected]
        if not candidates:
            break
        x = min(candidates, key=vertex_key)
        K = remove_corner(K, x)
        report.removed.append(x)
        report.iterations += 1
    report.output_size = len(K)
    return K, report
