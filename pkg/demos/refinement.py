"""
Refining a complex along a lattice embedding
============================================

A monomorphism of subset lattices sends each cell to a bigger cell.
Hom sets of the original complex and of its image agree.
"""

import numpy as np

from pathcat.complexes import CubicalComplex, Interval, vset
from pathcat.refinement import PosetMono, random_mono, refine, validate_mono
from pathcat.verify import verify_refine

# an L-shaped pair of edges in the square
K = CubicalComplex.from_cells(2, [Interval(vset(), vset(1)), Interval(vset(1), vset(1, 2))])

# stretch coordinate 1 into two coordinates
alpha = PosetMono.from_map(2, 3, [], {1: [1, 3], 2: [2]})
print(validate_mono(alpha))
print(refine(K, alpha))
print("bijective:", verify_refine(K, alpha).ok)

# overlapping blocks are not allowed
bad = PosetMono.from_map(2, 2, [], {1: [1], 2: [1, 2]})
print(validate_mono(bad))

rng = np.random.default_rng(0)
for _ in range(3):
    beta = random_mono(rng, 2, 4)
    print(sorted(beta.empty), [sorted(s) for s in beta.singletons], verify_refine(K, beta).ok)
