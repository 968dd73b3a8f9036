"""Path categories of cubical and simplicial complexes, with reductions that keep hom sets intact."""

from .complexes import (
    CubicalComplex,
    Interval,
    InvalidInput,
    SimplicialComplex,
    Triangulation,
    complex_contains,
    interval_members,
    size,
    sk2,
    triangulate,
    triangulate_sk2,
    validate,
)
from .engine import (
    HomSet,
    Morphism,
    PathCategory,
    compose,
    count_homs,
    elementary_homotopies,
    enumerate_paths,
    hom_set,
    path_category,
)
from .frontier import (
    FrontierDecomposition,
    frontier_hom,
    frontier_split,
    level_subcomplex,
    level_triangulation_iso_check,
)
from .reduction import (
    ReductionReport,
    corner_reduce,
    corners,
    delete_vertices,
    interval_restriction,
    is_full_subcomplex,
    minimal_path_subcomplex,
    remove_corner,
    sources_and_sinks,
)
from .refinement import PosetMono, apply_mono, is_refinement, refine, validate_mono

__version__ = "0.1.0"
