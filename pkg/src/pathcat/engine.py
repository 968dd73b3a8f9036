"""Brute-force path category computation for simplicial complexes.

A path is a strictly increasing tuple of vertex labels whose
consecutive pairs are edges.  Two paths are elementarily homotopic when
one is obtained from the other by replacing ``(a, c)`` with
``(a, b, c)`` for a 2-simplex ``(a, b, c)``.  The morphisms ``v -> w``
of the path category are the connected components of the resulting
graph on paths ``v -> w``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Optional

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .complexes import InvalidInput, SimplicialComplex, sk2
from .unionfind import UnionFind

Path = tuple


@dataclass(frozen=True)
class Morphism:
    source: int
    target: int
    class_id: int
    representative: Path


@dataclass(frozen=True, eq=False)
class HomSet:
    """The morphism set between two vertices.

    ``index`` maps every path ``source -> target`` to its class id when
    the paths were enumerated.  Hom sets assembled without enumerating
    paths carry a ``classifier`` callable instead.
    """

    source: int
    target: int
    classes: tuple
    index: Optional[Mapping] = None
    classifier: Optional[Callable[[Path], int]] = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[Morphism]:
        return iter(self.classes)

    @property
    def representatives(self) -> list:
        return [m.representative for m in self.classes]

    def classify(self, path) -> int:
        path = tuple(path)
        if self.index is not None:
            try:
                return self.index[path]
            except KeyError:
                raise InvalidInput(f"{path} is not a path {self.source} -> {self.target}") from None
        return self.classifier(path)

    def morphism(self, path) -> Morphism:
        return self.classes[self.classify(path)]


def _check_vertex(L: SimplicialComplex, v) -> None:
    if not L.has_vertex(v):
        raise InvalidInput(f"unknown vertex {v!r}")


def reachable_from(L: SimplicialComplex, v) -> set:
    seen = {v}
    stack = [v]
    while stack:
        for b in L.successors[stack.pop()]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


def reaching(L: SimplicialComplex, w) -> set:
    seen = {w}
    stack = [w]
    while stack:
        for a in L.predecessors[stack.pop()]:
            if a not in seen:
                seen.add(a)
                stack.append(a)
    return seen


def between(L: SimplicialComplex, v, w) -> set:
    """Vertices lying on some path from ``v`` to ``w``."""
    return reachable_from(L, v) & reaching(L, w)


def iter_paths(L: SimplicialComplex, v, w) -> Iterator[Path]:
    """Depth-first over successors in ascending order; lexicographic as a result."""
    _check_vertex(L, v)
    _check_vertex(L, w)
    useful = reaching(L, w)
    if v not in useful:
        return
    succ = L.successors
    path = [v]
    stack = [iter(succ[v])]
    if v == w:
        yield (v,)
        return
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            path.pop()
            continue
        if nxt not in useful:
            continue
        if nxt == w:
            yield tuple(path) + (w,)
            continue
        path.append(nxt)
        stack.append(iter(succ[nxt]))


def enumerate_paths(L: SimplicialComplex, v, w) -> list:
    return list(iter_paths(L, v, w))


def _expansions(L: SimplicialComplex, p: Path) -> Iterator[Path]:
    triangles = L.triangles
    succ = L.successors
    for i in range(len(p) - 1):
        a, c = p[i], p[i + 1]
        for b in succ[a]:
            if b >= c:
                break
            if (a, b, c) in triangles:
                yield p[: i + 1] + (b,) + p[i + 1:]


def _contractions(L: SimplicialComplex, p: Path) -> Iterator[Path]:
    triangles = L.triangles
    for i in range(len(p) - 2):
        if p[i: i + 3] in triangles:
            yield p[: i + 1] + p[i + 2:]


def elementary_homotopies(L: SimplicialComplex, p) -> list:
    """Paths one expansion or contraction along a 2-simplex away from ``p``."""
    p = tuple(p)
    out = []
    for q in list(_expansions(L, p)) + list(_contractions(L, p)):
        if q not in out:
            out.append(q)
    return out


def hom_set(L: SimplicialComplex, v, w) -> HomSet:
    """Enumerate paths ``v -> w`` and quotient them by elementary homotopies."""
    paths = enumerate_paths(L, v, w)
    index = {p: i for i, p in enumerate(paths)}
    uf = UnionFind(len(paths))
    # contractions are inverse expansions, so expansions alone generate the relation
    for i, p in enumerate(paths):
        for q in _expansions(L, p):
            uf.union(i, index[q])
    groups = sorted(uf.groups().values(), key=lambda g: paths[g[0]])
    classes = []
    class_of = {}
    for cid, members in enumerate(groups):
        # paths are in lexicographic order, so members[0] is the least
        classes.append(Morphism(v, w, cid, paths[members[0]]))
        for i in members:
            class_of[paths[i]] = cid
    return HomSet(v, w, tuple(classes), index=class_of)


def count_paths(L: SimplicialComplex, v, w) -> int:
    """Number of paths ``v -> w``, by dynamic programming over the label order."""
    _check_vertex(L, v)
    _check_vertex(L, w)
    live = between(L, v, w)
    counts = {v: 1}
    for x in sorted(live):
        if x == v:
            continue
        counts[x] = sum(counts.get(a, 0) for a in L.predecessors[x] if a in live)
    return counts.get(w, 0) if w in live else 0


def _sweep_count(L: SimplicialComplex, v, w) -> int:
    """Count classes by sweeping targets in label order.

    Every path ``v -> x`` has a unique last edge ``y -> x``, so hom(v, x)
    is the disjoint union of hom(v, y) over incoming edges, modulo the
    relations from 2-simplices ``(a, b, x)``: ``[p](a->b)`` on edge
    ``b -> x`` is identified with ``[p]`` on edge ``a -> x``.
    """
    live = between(L, v, w)
    if w not in live:
        return 0
    size = {v: 1}
    extend: dict[tuple, np.ndarray] = {}
    preds = L.predecessors
    triangles = L.triangles
    for x in sorted(live):
        if x == v:
            continue
        incoming = [y for y in preds[x] if y in live]
        offset = {}
        total = 0
        for y in incoming:
            offset[y] = total
            total += size[y]
        rows, cols = [], []
        for ai, a in enumerate(incoming):
            for b in incoming[ai + 1:]:
                if (a, b, x) in triangles:
                    rows.append(offset[b] + extend[(a, b)])
                    cols.append(offset[a] + np.arange(size[a]))
        if rows:
            r = np.concatenate(rows)
            c = np.concatenate(cols)
            graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(total, total))
            n, labels = connected_components(graph, directed=False)
        else:
            n, labels = total, np.arange(total)
        size[x] = int(n)
        for y in incoming:
            extend[(y, x)] = labels[offset[y]: offset[y] + size[y]]
    return size[w]


def count_homs(L: SimplicialComplex, v, w, strategy: str = "auto") -> int:
    """Size of hom(v, w) without materializing representatives.

    ``strategy`` is ``"paths"`` (valid only when no 2-simplex lies
    between v and w), ``"sweep"``, ``"enumerate"`` or ``"auto"``.
    """
    _check_vertex(L, v)
    _check_vertex(L, w)
    if strategy == "enumerate":
        return len(hom_set(L, v, w))
    live = between(L, v, w)
    relations = any(all(x in live for x in t) for t in L.triangles)
    if strategy == "auto":
        strategy = "sweep" if relations else "paths"
    if strategy == "paths":
        if relations:
            raise InvalidInput("path counting requires no 2-simplices between the endpoints")
        return count_paths(L, v, w)
    if strategy == "sweep":
        return _sweep_count(L, v, w)
    raise InvalidInput(f"unknown counting strategy {strategy!r}")


class PathCategory:
    """The path category of a complex, with hom sets computed on demand.

    Higher simplices are discarded first; they never change the result.
    Distinct hom sets may be requested from several threads.
    """

    def __init__(self, L: SimplicialComplex):
        self.complex = sk2(L)
        self._homs: dict[tuple, HomSet] = {}
        self._lock = threading.Lock()

    @property
    def objects(self) -> tuple:
        return self.complex.vertices

    def hom(self, v, w) -> HomSet:
        key = (v, w)
        with self._lock:
            cached = self._homs.get(key)
        if cached is not None:
            return cached
        result = hom_set(self.complex, v, w)
        with self._lock:
            return self._homs.setdefault(key, result)

    def identity(self, v) -> Morphism:
        return self.hom(v, v).classes[0]

    def pairs(self) -> list:
        objs = self.objects
        return [(v, w) for v in objs for w in objs if v <= w]

    def materialize(self, executor=None) -> dict:
        pairs = self.pairs()
        if executor is None:
            for v, w in pairs:
                self.hom(v, w)
        else:
            list(executor.map(lambda p: self.hom(*p), pairs))
        return {p: self._homs[p] for p in pairs}

    def compose(self, f: Morphism, g: Morphism) -> Morphism:
        return compose(self, f, g)


def path_category(L: SimplicialComplex) -> PathCategory:
    return PathCategory(L)


def compose(C: PathCategory, f: Morphism, g: Morphism) -> Morphism:
    """``f`` followed by ``g``."""
    if f.target != g.source:
        raise InvalidInput(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
    path = f.representative + g.representative[1:]
    return C.hom(f.source, g.target).morphism(path)
