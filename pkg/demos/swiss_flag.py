"""
The Swiss flag: corners and the two ways around the centre
==========================================================

A 3x3 grid of squares embedded in the 6-cube.  The centre cross is
missing, so a process must pass either below or above it.
"""

from pathcat.complexes import triangulate_sk2
from pathcat.engine import hom_set
from pathcat.generators import swiss_flag, swiss_flag_names
from pathcat.reduction import corner_reduce, corners

K = swiss_flag()
names = swiss_flag_names()
init, term = names["init"], names["term"]
print("maximal cells:", len(K.maximal_cells), "vertices:", len(K.vertices))
print("corners:", [sorted(x) for x in corners(K)])


def classes(X):
    T = triangulate_sk2(X)
    h = hom_set(T.complex, T.label(init), T.label(term))
    return [[sorted(F) for F in T.path_to_sets(r)] for r in h.representatives]


for rep in classes(K):
    print(rep)

# removing corners one by one leaves the two classes alone
reduced, report = corner_reduce(K, {init, term})
print("removed:", [sorted(x) for x in report.removed])
print("classes after reduction:", len(classes(reduced)))
