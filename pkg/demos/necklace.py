"""
Counting execution classes on a necklace
========================================

A necklace of k hollow triangles has two ways through every bead and no
filled triangles, so the number of classes from end to end is 2**k.
"""

from pathcat.complexes import SimplicialComplex
from pathcat.engine import count_homs, hom_set
from pathcat.generators import necklace

# three beads: list the eight classes explicitly
L = necklace(3)
for m in hom_set(L, 0, 6):
    print(m.class_id, m.representative)

# the count-only mode never lists paths, so twenty beads are cheap
for k in (5, 10, 20):
    print(k, count_homs(necklace(k), 0, 2 * k))

# filling one bead merges its two routes
filled = SimplicialComplex.from_simplices(list(L.maximal_simplices) + [(0, 1, 2)])
print("one bead filled:", len(hom_set(filled, 0, 6)))
