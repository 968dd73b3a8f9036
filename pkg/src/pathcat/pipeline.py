"""Reduction pipelines applied ahead of a hom-set query.

A pipeline is a comma-separated list of pass names, each optionally
followed by ``:argument``::

    corner,sk2,interval,source-sink
    refine:mono.json,frontier:3

Cubical passes (``corner``, ``refine``) must come before the complex is
triangulated; ``frontier`` ends the pipeline and replaces enumeration on
the whole complex by gluing across a size cut.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import CubicalComplex, InvalidInput, sk2, triangulate_sk2
from .engine import count_homs, hom_set
from .frontier import frontier_compute, min_crossing_cut
from .reduction import ReductionReport, corner_reduce, interval_restriction, minimal_path_subcomplex
from .refinement import refine

PASSES = ("sk2", "interval", "source-sink", "corner", "refine", "frontier")
CUBICAL_ONLY = {"corner", "refine", "frontier"}


@dataclass
class PipelineSpec:
    passes: list = field(default_factory=list)

    @classmethod
    def parse(cls, text: str | None, monos: dict | None = None) -> "PipelineSpec":
        """``monos`` maps the argument of each ``refine`` pass to a :class:`PosetMono`."""
        passes = []
        if text:
            for item in text.split(","):
                name, _, arg = item.strip().partition(":")
                if name not in PASSES:
                    raise InvalidInput(f"unknown pass {name!r}; choose from {', '.join(PASSES)}")
                if name == "frontier":
                    if arg and not arg.isdigit():
                        raise InvalidInput(f"frontier cut must be a natural number, got {arg!r}")
                    arg = int(arg) if arg else None
                elif name == "refine":
                    if not arg:
                        raise InvalidInput("refine needs a monomorphism: refine:<file>")
                    if monos is None or arg not in monos:
                        raise InvalidInput(f"no monomorphism loaded for {arg!r}")
                    arg = monos[arg]
                elif arg:
                    raise InvalidInput(f"pass {name!r} takes no argument")
                passes.append((name, arg))
        names = [n for n, _ in passes]
        if "frontier" in names and names.index("frontier") != len(names) - 1:
            raise InvalidInput("frontier must be the last pass")
        return cls(passes)

    @property
    def names(self) -> list:
        return [n for n, _ in self.passes]


@dataclass
class QueryResult:
    source: object
    target: object
    count: int
    representatives: list
    reports: list


def run_query(X, u, v, spec: PipelineSpec, count_only: bool = False, fallback: bool = False,
              executor=None) -> QueryResult:
    """hom(u, v) of a cubical or simplicial complex after the pipeline.

    Representatives are label tuples for simplicial input and tuples of
    vertex sets for cubical input (in the refined cube after ``refine``).
    """
    reports: list = []
    cubical = isinstance(X, CubicalComplex)
    src, tgt = u, v
    if cubical:
        src, tgt = frozenset(u), frozenset(v)
        for x in (src, tgt):
            if not X.has_vertex(x):
                raise InvalidInput(f"{sorted(x)} is not a vertex of the complex")
    elif not (X.has_vertex(u) and X.has_vertex(v)):
        raise InvalidInput(f"unknown vertex in query ({u!r}, {v!r})")
    tri = None
    L = None if cubical else X
    for name, arg in spec.passes:
        if name in CUBICAL_ONLY and (not cubical or tri is not None):
            raise InvalidInput(f"pass {name!r} needs a cubical complex that is not yet triangulated")
        if name == "corner":
            X, rep = corner_reduce(X, {src, tgt})
            reports.append(rep)
        elif name == "refine":
            before = len(X)
            X = refine(X, arg)
            src, tgt = arg(src), arg(tgt)
            reports.append(ReductionReport("refine", input_size=before, output_size=len(X)))
        elif name == "frontier":
            M = arg
            try:
                if M is None:
                    M = min_crossing_cut(X, src, tgt)
                result = frontier_compute(X, M, src, tgt, executor=executor)
            except InvalidInput:
                if not fallback:
                    raise
                break
            T = result.decomposition.triangulation
            rep = ReductionReport("frontier", iterations=1, input_size=len(X), output_size=len(X))
            rep.extra = result.decomposition.to_json(result.summands)
            rep.extra["timings"] = {k: round(t, 6) for k, t in sorted(result.timings.items())}
            reports.append(rep)
            reps = [] if count_only else [T.path_to_sets(m.representative) for m in result.hom]
            return QueryResult(u, v, len(result.hom), reps, reports)
        else:
            if tri is None and cubical:
                tri = triangulate_sk2(X)
                L = tri.complex
            a, b = _labels(tri, src, tgt)
            if name == "sk2":
                L = sk2(L)
            elif name == "interval":
                L = interval_restriction(L, a, b)
            elif name == "source-sink":
                L, rep = minimal_path_subcomplex(L, a, b)
                reports.append(rep)
    if cubical and tri is None:
        tri = triangulate_sk2(X)
        L = tri.complex
    a, b = _labels(tri, src, tgt)
    if not (L.has_vertex(a) and L.has_vertex(b)):
        return QueryResult(u, v, 0, [], reports)
    if count_only:
        return QueryResult(u, v, count_homs(L, a, b), [], reports)
    hom = hom_set(L, a, b)
    reps = [m.representative for m in hom]
    if tri is not None:
        reps = [tri.path_to_sets(r) for r in reps]
    return QueryResult(u, v, len(hom), reps, reports)


def _labels(tri, src, tgt):
    if tri is None:
        return src, tgt
    return tri.label(src), tri.label(tgt)


def reduce_complex(X, spec: PipelineSpec, u=None, v=None):
    """Apply the pipeline and return the reduced complex and the pass reports."""
    reports = []
    cubical = isinstance(X, CubicalComplex)
    pair = None if u is None else ((frozenset(u), frozenset(v)) if cubical else (u, v))
    for name, arg in spec.passes:
        if name == "corner":
            if not isinstance(X, CubicalComplex):
                raise InvalidInput("corner removal needs a cubical complex")
            X, rep = corner_reduce(X, pair or ())
            reports.append(rep)
        elif name == "refine":
            if not isinstance(X, CubicalComplex):
                raise InvalidInput("refinement needs a cubical complex")
            X = refine(X, arg)
            if pair:
                pair = (arg(pair[0]), arg(pair[1]))
        elif name == "frontier":
            raise InvalidInput("frontier is a query strategy, not a reduction")
        else:
            if isinstance(X, CubicalComplex):
                tri = triangulate_sk2(X)
                X = tri.complex
                if pair:
                    pair = (tri.label(pair[0]), tri.label(pair[1]))
            if name == "sk2":
                X = sk2(X)
                continue
            if pair is None:
                raise InvalidInput(f"pass {name!r} needs --from and --to")
            if name == "interval":
                X = interval_restriction(X, *pair)
            else:
                X, rep = minimal_path_subcomplex(X, *pair)
                reports.append(rep)
    return X, reports
