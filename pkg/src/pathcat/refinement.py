"""Lattice embeddings of subset posets and the refined complexes they induce."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .complexes import CubicalComplex, Interval, InvalidInput, subsets


@dataclass(frozen=True)
class PosetMono:
    """A map of subset lattices generated by its values on the empty set and singletons.

    ``A`` is sent to ``empty | union(singletons[i - 1] for i in A)``.
    """

    m: int
    n: int
    empty: frozenset
    singletons: tuple

    def __post_init__(self):
        object.__setattr__(self, "empty", frozenset(self.empty))
        object.__setattr__(self, "singletons", tuple(frozenset(s) for s in self.singletons))

    @classmethod
    def identity(cls, n: int) -> "PosetMono":
        return cls(n, n, frozenset(), tuple(frozenset([i]) for i in range(1, n + 1)))

    @classmethod
    def from_map(cls, m: int, n: int, empty: Iterable[int], singletons: dict) -> "PosetMono":
        return cls(m, n, frozenset(empty), tuple(frozenset(singletons[i]) for i in range(1, m + 1)))

    def __call__(self, A) -> frozenset:
        out = set(self.empty)
        for i in A:
            out |= self.singletons[i - 1]
        return frozenset(out)

    def then(self, other: "PosetMono") -> "PosetMono":
        """``other`` after ``self``."""
        if self.n != other.m:
            raise InvalidInput("monomorphisms are not composable")
        return PosetMono(self.m, other.n, other(self.empty),
                         tuple(other(s) for s in self.singletons))


def validate_mono(alpha: PosetMono, exhaustive_limit: int = 4) -> list[str]:
    """Structural check, plus a brute-force lattice check when ``m`` is small."""
    problems = []
    if len(alpha.singletons) != alpha.m:
        return [f"expected {alpha.m} singleton images, got {len(alpha.singletons)}"]
    universe = frozenset(range(1, alpha.n + 1))
    for i, s in enumerate((alpha.empty,) + alpha.singletons):
        if not s <= universe:
            name = "empty set" if i == 0 else f"{{{i}}}"
            problems.append(f"image of {name} leaves 1..{alpha.n}")
    blocks = []
    for i, s in enumerate(alpha.singletons, start=1):
        if not alpha.empty <= s:
            problems.append(f"image of empty set not below image of {{{i}}}")
        block = s - alpha.empty
        if not block:
            problems.append(f"image of {{{i}}} adds nothing to the image of the empty set")
        blocks.append(block)
    for (i, a), (j, b) in combinations(enumerate(blocks, start=1), 2):
        if a & b:
            problems.append(f"blocks of {{{i}}} and {{{j}}} intersect")
    if not problems and alpha.m <= exhaustive_limit:
        problems += _lattice_violations(alpha)
    return problems


def _lattice_violations(alpha: PosetMono) -> list[str]:
    domain = list(subsets(range(1, alpha.m + 1)))
    image = {A: alpha(A) for A in domain}
    if len(set(image.values())) != len(domain):
        return ["not injective"]
    for A, B in combinations(domain, 2):
        if image[A & B] != image[A] & image[B]:
            return [f"meet of {sorted(A)} and {sorted(B)} not preserved"]
        if image[A | B] != image[A] | image[B]:
            return [f"join of {sorted(A)} and {sorted(B)} not preserved"]
    return []


def _require_valid(alpha: PosetMono) -> None:
    problems = validate_mono(alpha)
    if problems:
        raise InvalidInput("; ".join(problems))


def apply_mono(alpha: PosetMono, cell: Interval) -> Interval:
    _require_valid(alpha)
    if not cell.upper <= frozenset(range(1, alpha.m + 1)):
        raise InvalidInput(f"{cell!r} is not a cell of the {alpha.m}-cube")
    return Interval(alpha(cell.lower), alpha(cell.upper))


def refine(K: CubicalComplex, alpha: PosetMono) -> CubicalComplex:
    """The complex generated by the images of the cells of ``K``."""
    if K.ambient != alpha.m:
        raise InvalidInput(f"complex lives in dimension {K.ambient}, map starts at {alpha.m}")
    return CubicalComplex.from_cells(alpha.n, [apply_mono(alpha, c) for c in K.maximal_cells])


def is_refinement(K: CubicalComplex, alpha: PosetMono, L: CubicalComplex) -> bool:
    return all(L.contains(c) for c in refine(K, alpha).maximal_cells)


def random_mono(rng: np.random.Generator, m: int, n: int) -> PosetMono:
    """A random valid monomorphism; needs ``m <= n``."""
    if m > n:
        raise InvalidInput("a monomorphism needs m <= n")
    perm = [int(x) + 1 for x in rng.permutation(n)]
    extra = n - m
    n_empty = int(rng.integers(0, extra + 1))
    empty, rest = perm[:n_empty], perm[n_empty:]
    blocks = [{rest[i]} for i in range(m)]
    for x in rest[m:]:
        if m and rng.random() < 0.5:
            blocks[int(rng.integers(0, m))].add(x)
    return PosetMono(m, n, frozenset(empty), tuple(frozenset(b) | frozenset(empty) for b in blocks))
