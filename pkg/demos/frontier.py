"""
Splitting a complex at a size cut
=================================

Vertices of size at most M go to the lower part, the rest to the upper
part.  Each side is solved on its own and the results are glued along
the edges that cross the cut.
"""

import time
from concurrent.futures import ThreadPoolExecutor

from pathcat.complexes import triangulate_sk2
from pathcat.engine import hom_set
from pathcat.frontier import frontier_compute, min_crossing_cut
from pathcat.generators import grid

K = grid(3, 3, holes=[(1, 1)])
u, v = K.vertices[0], K.vertices[-1]
print("cheapest cut:", min_crossing_cut(K, u, v))
M = 3  # through the middle of the grid

with ThreadPoolExecutor(2) as ex:
    res = frontier_compute(K, M, u, v, executor=ex)
print("crossing edges:", len(res.decomposition.crossing_edges))
print("glued classes:", len(res.hom))
print({k: round(t, 4) for k, t in res.timings.items()})

# the same number straight from the whole triangulation
t0 = time.perf_counter()
T = triangulate_sk2(K)
direct = hom_set(T.complex, T.label(u), T.label(v))
print("direct classes:", len(direct), f"{time.perf_counter() - t0:.4f}s")
