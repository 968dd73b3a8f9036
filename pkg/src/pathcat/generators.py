"""Fixture families: necklaces, cubes, grids, the Swiss flag, random complexes."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .complexes import CubicalComplex, Interval, InvalidInput, SimplicialComplex


def necklace(k: int) -> SimplicialComplex:
    """``k`` hollow triangles glued end to end on vertices ``0..2k``."""
    if k < 0:
        raise InvalidInput("necklace needs k >= 0 beads")
    edges = []
    for i in range(k):
        a = 2 * i
        edges += [(a, a + 1), (a + 1, a + 2), (a, a + 2)]
    return SimplicialComplex.from_simplices(edges, vertices=range(2 * k + 1))


def hypercube(n: int) -> CubicalComplex:
    if n < 1:
        raise InvalidInput("hypercube needs n >= 1")
    return CubicalComplex.cube(n)


def horn(n: int, k: int) -> SimplicialComplex:
    """The horn: all faces of the n-simplex except the k-th and the interior."""
    full = tuple(range(n + 1))
    faces = [tuple(v for v in full if v != i) for i in full if i != k]
    return SimplicialComplex.from_simplices(faces)


def grid_vertex(w: int, i: int, j: int) -> frozenset:
    """Embed grid point (i, j) as {1..i} | {w+1..w+j}."""
    return frozenset(range(1, i + 1)) | frozenset(range(w + 1, w + j + 1))


def grid(w: int, h: int, holes: Iterable = (), missing_edges: Iterable = ()) -> CubicalComplex:
    """A ``w`` by ``h`` grid of squares inside the (w + h)-cube.

    ``holes`` lists squares by their lower-left corner ``(i, j)``;
    ``missing_edges`` lists unit edges ``((i, j), (i', j'))`` to drop.
    A missing edge may not bound a square that is present.
    """
    if w < 1 or h < 1:
        raise InvalidInput("grid dimensions must be positive")
    holes = {tuple(s) for s in holes}
    missing = {(tuple(a), tuple(b)) for a, b in missing_edges}
    for i, j in holes:
        if not (0 <= i < w and 0 <= j < h):
            raise InvalidInput(f"hole {(i, j)} is outside the grid")
    for a, b in missing:
        (i, j), (i2, j2) = a, b
        if (i2 - i, j2 - j) not in ((1, 0), (0, 1)) or not (0 <= i <= w and 0 <= j <= h
                                                          and i2 <= w and j2 <= h):
            raise InvalidInput(f"{a}->{b} is not a grid edge")
    v = lambda i, j: grid_vertex(w, i, j)
    cells = []
    squares = [(i, j) for i in range(w) for j in range(h) if (i, j) not in holes]
    for i, j in squares:
        cells.append(Interval(v(i, j), v(i + 1, j + 1)))
        for edge in [((i, j), (i + 1, j)), ((i, j), (i, j + 1)),
                     ((i + 1, j), (i + 1, j + 1)), ((i, j + 1), (i + 1, j + 1))]:
            if edge in missing:
                raise InvalidInput(f"missing edge {edge} bounds the square {(i, j)}")
    for i in range(w + 1):
        for j in range(h + 1):
            cells.append(Interval(v(i, j), v(i, j)))
            if i < w and ((i, j), (i + 1, j)) not in missing:
                cells.append(Interval(v(i, j), v(i + 1, j)))
            if j < h and ((i, j), (i, j + 1)) not in missing:
                cells.append(Interval(v(i, j), v(i, j + 1)))
    return CubicalComplex.from_cells(w + h, cells)


SWISS_FLAG_HOLES = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]
SWISS_FLAG_MISSING = [((1, 1), (2, 1)), ((1, 1), (1, 2)), ((2, 1), (2, 2)), ((1, 2), (2, 2))]


def swiss_flag() -> CubicalComplex:
    """Four filled corner squares of a 3x3 grid, joined by bare edges around an empty centre."""
    return grid(3, 3, SWISS_FLAG_HOLES, SWISS_FLAG_MISSING)


def swiss_flag_names() -> dict:
    return {"init": grid_vertex(3, 0, 0), "term": grid_vertex(3, 3, 3)}


# v1 -> v0, v1 -> v2, v2 -> v3, v4 -> v3, labelled so that edges increase.
ZIGZAG_LABELS = {"v1": 0, "v0": 1, "v2": 2, "v4": 3, "v3": 4}


def zigzag() -> SimplicialComplex:
    """Five vertices, four edges, no path from v0 to v4 (see ``ZIGZAG_LABELS``)."""
    n = ZIGZAG_LABELS
    edges = [(n["v1"], n["v0"]), (n["v1"], n["v2"]), (n["v2"], n["v3"]), (n["v4"], n["v3"])]
    return SimplicialComplex.from_simplices(edges, vertices=range(5))


def random_simplicial(rng: np.random.Generator, max_vertices: int = 8,
                      max_simplices: int = 6, max_size: int = 4) -> SimplicialComplex:
    """Sample maximal simplices on at most ``max_vertices`` vertices."""
    nv = int(rng.integers(1, max_vertices + 1))
    count = int(rng.integers(1, max_simplices + 1))
    simplices = []
    for _ in range(count):
        k = int(rng.integers(1, min(max_size, nv) + 1))
        simplices.append(tuple(sorted(int(x) for x in rng.choice(nv, size=k, replace=False))))
    return SimplicialComplex.from_simplices(simplices, vertices=range(nv))


def random_interval(rng: np.random.Generator, n: int, max_dim: int | None = None) -> Interval:
    # each element lands in the lower set, the free part, or outside
    state = rng.integers(0, 3, size=n)
    lower = {i + 1 for i in range(n) if state[i] == 0}
    free = [i + 1 for i in range(n) if state[i] == 1]
    if max_dim is not None and len(free) > max_dim:
        free = sorted(int(x) for x in rng.choice(free, size=max_dim, replace=False))
    return Interval(frozenset(lower), frozenset(lower) | frozenset(free))


def random_cubical(rng: np.random.Generator, max_ambient: int = 5, max_cells: int = 4,
                   min_ambient: int = 1) -> CubicalComplex:
    """Sample a few intervals in the n-cube, ``n <= max_ambient``."""
    n = int(rng.integers(min_ambient, max_ambient + 1))
    count = int(rng.integers(1, max_cells + 1))
    return CubicalComplex.from_cells(n, [random_interval(rng, n) for _ in range(count)])
