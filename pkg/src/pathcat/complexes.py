"""Cubical and simplicial complexes, and the triangulation between them.

Vertices of a cubical complex K in the n-cube are finite subsets of
{1, ..., n}; they are represented as ``frozenset`` objects.  Cells are
intervals ``[A, B] = {F : A <= F <= B}``.  Only maximal cells (resp.
simplices) are stored; membership of a smaller cell is decided by
containment in a maximal one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Union

VertexSet = frozenset


class InvalidInput(ValueError):
    """Raised when an argument violates a documented precondition."""


def vset(*elements: int) -> frozenset:
    return frozenset(elements)


def size(F: Iterable[int]) -> int:
    """The cardinality of a cubical vertex (the 'clock' value of F)."""
    return len(frozenset(F))


def vertex_key(F: frozenset) -> tuple:
    """Sort key giving a linear extension of inclusion: (size, sorted elements)."""
    return (len(F), tuple(sorted(F)))


def sorted_vertices(vertices: Iterable[frozenset]) -> list[frozenset]:
    return sorted(vertices, key=vertex_key)


def subsets(elements: Iterable[int]) -> Iterator[frozenset]:
    elements = sorted(elements)
    for k in range(len(elements) + 1):
        for combo in combinations(elements, k):
            yield frozenset(combo)


@dataclass(frozen=True)
class Interval:
    """The cell ``[lower, upper]`` of the subset lattice."""

    lower: frozenset
    upper: frozenset

    def __post_init__(self):
        object.__setattr__(self, "lower", frozenset(self.lower))
        object.__setattr__(self, "upper", frozenset(self.upper))

    @property
    def dim(self) -> int:
        return len(self.upper) - len(self.lower)

    def is_valid(self) -> bool:
        return self.lower <= self.upper

    def __contains__(self, F) -> bool:
        F = frozenset(F)
        return self.lower <= F <= self.upper

    def within(self, other: "Interval") -> bool:
        """True iff this interval is a subinterval of ``other``."""
        return other.lower <= self.lower and self.upper <= other.upper

    def members(self) -> list[frozenset]:
        free = self.upper - self.lower
        return sorted_vertices(self.lower | s for s in subsets(free))

    def sort_key(self) -> tuple:
        return (vertex_key(self.lower), vertex_key(self.upper))

    def __repr__(self) -> str:
        lo = "{" + ",".join(map(str, sorted(self.lower))) + "}"
        hi = "{" + ",".join(map(str, sorted(self.upper))) + "}"
        return f"[{lo},{hi}]"


def interval_members(cell: Interval) -> list[frozenset]:
    """All F with lower <= F <= upper, in canonical order."""
    return cell.members()


def _maximal_intervals(cells: Iterable[Interval]) -> frozenset:
    cells = sorted(set(cells), key=lambda c: -c.dim)
    kept: list[Interval] = []
    for c in cells:
        if not any(c.within(k) for k in kept):
            kept.append(c)
    return frozenset(kept)


@dataclass(frozen=True)
class CubicalComplex:
    """A subcomplex of the ``ambient``-cube, given by its maximal cells.

    Build instances through :meth:`from_cells`, which validates and
    drops non-maximal cells.  The raw constructor stores what it is
    given so that :func:`validate` can report problems.
    """

    ambient: int
    maximal_cells: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "maximal_cells", frozenset(self.maximal_cells))

    @classmethod
    def from_cells(cls, ambient: int, cells: Iterable) -> "CubicalComplex":
        cells = [c if isinstance(c, Interval) else Interval(*c) for c in cells]
        raw = cls(ambient, frozenset(cells))
        problems = [p for p in validate(raw) if p != "maximal cells contain one another"]
        if problems:
            raise InvalidInput("; ".join(problems))
        return cls(ambient, _maximal_intervals(cells))

    @classmethod
    def cube(cls, n: int) -> "CubicalComplex":
        return cls(n, frozenset([Interval(frozenset(), frozenset(range(1, n + 1)))]))

    @cached_property
    def cells(self) -> list[Interval]:
        """Maximal cells in canonical order."""
        return sorted(self.maximal_cells, key=Interval.sort_key)

    @cached_property
    def vertices(self) -> list[frozenset]:
        verts: set[frozenset] = set()
        for c in self.maximal_cells:
            verts.update(c.members())
        return sorted_vertices(verts)

    @cached_property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def has_vertex(self, F) -> bool:
        return frozenset(F) in self._vertex_set

    def contains(self, cell: Interval) -> bool:
        return complex_contains(self, cell)

    def cells_containing(self, F) -> list[Interval]:
        F = frozenset(F)
        return [c for c in self.cells if F in c]

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.maximal_cells), default=-1)

    def __len__(self) -> int:
        return len(self.vertices)


def complex_contains(K: CubicalComplex, cell: Interval) -> bool:
    """True iff ``cell`` is a subinterval of some maximal cell of ``K``."""
    universe = frozenset(range(1, K.ambient + 1))
    if not (cell.lower | cell.upper) <= universe:
        raise InvalidInput(f"cell {cell!r} has elements outside 1..{K.ambient}")
    return any(cell.within(c) for c in K.maximal_cells)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on integer labels, edges running upward.

    Simplices are strictly increasing tuples.  ``maximal_simplices``
    generates the complex; ``vertices`` may also list isolated vertices.
    Use :meth:`from_simplices` to build a validated, normalized instance.
    """

    vertices: tuple = ()
    maximal_simplices: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "maximal_simplices", frozenset(tuple(s) for s in self.maximal_simplices)
        )

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]], vertices: Iterable[int] = ()
                       ) -> "SimplicialComplex":
        simplices = [tuple(s) for s in simplices]
        verts = set(vertices)
        for s in simplices:
            verts.update(s)
        raw = cls(tuple(sorted(verts)), frozenset(simplices))
        problems = validate(raw)
        if problems:
            raise InvalidInput("; ".join(problems))
        return cls(tuple(sorted(verts)), _maximal_simplices(simplices))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(tuple(range(n + 1)), frozenset([tuple(range(n + 1))]))

    @classmethod
    def boundary(cls, n: int) -> "SimplicialComplex":
        """The boundary of the n-simplex."""
        full = tuple(range(n + 1))
        faces = [tuple(v for v in full if v != i) for i in full]
        return cls(full, frozenset(faces))

    @cached_property
    def simplices(self) -> frozenset:
        """Every non-empty simplex, closed under faces."""
        out: set[tuple] = {(v,) for v in self.vertices}
        for s in self.maximal_simplices:
            for k in range(1, len(s) + 1):
                out.update(combinations(s, k))
        return frozenset(out)

    @cached_property
    def edges(self) -> frozenset:
        out: set[tuple] = set()
        for s in self.maximal_simplices:
            out.update(combinations(s, 2))
        return frozenset(out)

    @cached_property
    def triangles(self) -> frozenset:
        out: set[tuple] = set()
        for s in self.maximal_simplices:
            out.update(combinations(s, 3))
        return frozenset(out)

    @cached_property
    def successors(self) -> dict:
        out: dict[int, list] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            out[a].append(b)
        return {v: tuple(sorted(bs)) for v, bs in out.items()}

    @cached_property
    def predecessors(self) -> dict:
        out: dict[int, list] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            out[b].append(a)
        return {v: tuple(sorted(bs)) for v, bs in out.items()}

    @cached_property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def has_vertex(self, v) -> bool:
        return v in self._vertex_set

    def has_simplex(self, s: Iterable[int]) -> bool:
        s = tuple(sorted(s))
        if len(s) == 1:
            return s[0] in self._vertex_set
        return s in self.simplices

    @property
    def dim(self) -> int:
        if not self.vertices:
            return -1
        return max((len(s) - 1 for s in self.maximal_simplices), default=0)

    def skeleton(self, k: int) -> "SimplicialComplex":
        faces: set[tuple] = set()
        for s in self.maximal_simplices:
            if len(s) - 1 <= k:
                faces.add(s)
            else:
                faces.update(combinations(s, k + 1))
        return SimplicialComplex(self.vertices, _maximal_simplices(faces))

    def restrict(self, keep: Iterable[int]) -> "SimplicialComplex":
        """The full subcomplex on the vertex set ``keep``."""
        keep = frozenset(keep) & self._vertex_set
        faces = {tuple(v for v in s if v in keep) for s in self.maximal_simplices}
        faces.discard(())
        return SimplicialComplex(tuple(sorted(keep)), _maximal_simplices(faces))

    def counts(self) -> tuple[int, ...]:
        """Number of simplices in each dimension."""
        by_dim: dict[int, int] = {}
        for s in self.simplices:
            by_dim[len(s) - 1] = by_dim.get(len(s) - 1, 0) + 1
        return tuple(by_dim.get(d, 0) for d in range(self.dim + 1))

    def __len__(self) -> int:
        return len(self.vertices)


def _maximal_simplices(simplices: Iterable[tuple]) -> frozenset:
    simplices = sorted({tuple(s) for s in simplices if s}, key=len, reverse=True)
    kept: list[frozenset] = []
    out: list[tuple] = []
    for s in simplices:
        fs = frozenset(s)
        if not any(fs <= k for k in kept):
            kept.append(fs)
            out.append(s)
    return frozenset(out)


def sk2(L: SimplicialComplex) -> SimplicialComplex:
    """Drop every simplex of dimension above two."""
    return L.skeleton(2)


@dataclass(frozen=True)
class Triangulation:
    """A simplicial complex |K| together with its vertex labelling.

    ``vertex_sets[i]`` is the cubical vertex carrying label ``i``.
    """

    complex: SimplicialComplex
    vertex_sets: tuple

    @cached_property
    def labels(self) -> dict:
        return {F: i for i, F in enumerate(self.vertex_sets)}

    def label(self, F) -> int:
        try:
            return self.labels[frozenset(F)]
        except KeyError:
            raise InvalidInput(f"{sorted(F)} is not a vertex of the complex") from None

    def vertex(self, i: int) -> frozenset:
        return self.vertex_sets[i]

    def path_to_sets(self, path: Iterable[int]) -> tuple:
        return tuple(self.vertex_sets[i] for i in path)

    def path_to_labels(self, path: Iterable) -> tuple:
        return tuple(self.label(F) for F in path)


def _chains(cell: Interval, max_len: int | None) -> Iterator[tuple]:
    """Strict chains F0 < F1 < ... inside ``cell`` with at most ``max_len`` members."""
    members = cell.members()

    def extend(chain):
        yield chain
        if max_len is not None and len(chain) >= max_len:
            return
        top = chain[-1]
        for G in members:
            if top < G:
                yield from extend(chain + (G,))

    for F in members:
        yield from extend((F,))


def triangulate(K: CubicalComplex, max_dim: int | None = None) -> Triangulation:
    """The triangulation |K|, optionally truncated to ``max_dim``.

    Each cell [A, B] contributes the nerve of its subset lattice, so a
    pair F < G in a common cell is an edge even when |G| - |F| > 1.
    Labels follow the (size, lexicographic) linear extension.
    """
    vertex_sets = tuple(K.vertices)
    label = {F: i for i, F in enumerate(vertex_sets)}
    max_len = None if max_dim is None else max_dim + 1
    simplices: set[tuple] = set()
    for cell in K.maximal_cells:
        for chain in _chains(cell, max_len):
            simplices.add(tuple(label[F] for F in chain))
    L = SimplicialComplex(tuple(range(len(vertex_sets))), _maximal_simplices(simplices))
    return Triangulation(L, vertex_sets)


def triangulate_sk2(K: CubicalComplex) -> Triangulation:
    return triangulate(K, max_dim=2)


Complex = Union[CubicalComplex, SimplicialComplex]


def validate(X) -> list[str]:
    """Human-readable invariant violations of an interval or complex; empty if valid."""
    if isinstance(X, Interval):
        return [] if X.is_valid() else ["lower not contained in upper"]
    if isinstance(X, CubicalComplex):
        return _validate_cubical(X)
    if isinstance(X, SimplicialComplex):
        return _validate_simplicial(X)
    raise TypeError(f"cannot validate {type(X).__name__}")


def _validate_cubical(K: CubicalComplex) -> list[str]:
    problems = []
    if not isinstance(K.ambient, int) or K.ambient < 1:
        problems.append(f"ambient dimension must be a positive integer, got {K.ambient!r}")
        return problems
    universe = frozenset(range(1, K.ambient + 1))
    for c in sorted(K.maximal_cells, key=Interval.sort_key):
        if not c.is_valid():
            problems.append(f"{c!r}: lower not contained in upper")
        if not (c.lower | c.upper) <= universe:
            problems.append(f"{c!r}: elements outside 1..{K.ambient}")
    cells = list(K.maximal_cells)
    if any(a != b and a.within(b) for a in cells for b in cells):
        problems.append("maximal cells contain one another")
    return problems


def _validate_simplicial(L: SimplicialComplex) -> list[str]:
    problems = []
    if len(set(L.vertices)) != len(L.vertices):
        problems.append("duplicate vertex labels")
    verts = set(L.vertices)
    for s in sorted(L.maximal_simplices, key=lambda s: (len(s), s)):
        if not s:
            problems.append("empty simplex")
            continue
        if any(not isinstance(v, int) for v in s):
            problems.append(f"{s}: labels must be integers")
            continue
        if any(a >= b for a, b in zip(s, s[1:])):
            kind = "degenerate edge" if len(s) == 2 and s[0] == s[1] else f"{s}: not strictly increasing"
            problems.append(kind)
        missing = [v for v in s if v not in verts]
        if missing:
            problems.append(f"{s}: vertices {missing} not listed")
    return problems
