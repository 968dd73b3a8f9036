"""Command-line front end.

Exit codes: 0 on success, 1 when a verification finds a mismatch,
2 for invalid input or usage.
"""

from __future__ import annotations

import argparse
import csv
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import generators
from .complexes import CubicalComplex, InvalidInput, triangulate_sk2
from .engine import count_homs, hom_set
from .frontier import frontier_hom, min_crossing_cut
from .io import (
    category_to_json,
    complex_from_json,
    complex_to_json,
    dumps,
    load_json,
    mono_from_json,
    names_from_json,
)
from .pipeline import PipelineSpec, reduce_complex, run_query
from .reduction import minimal_path_subcomplex
from .refinement import random_mono
from .verify import (
    VerificationReport,
    verify_corner,
    verify_frontier,
    verify_interval,
    verify_refine,
    verify_skeleton,
    verify_source_sink,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


class Usage(InvalidInput):
    pass


def _load_complex(path: str):
    obj = load_json(path)
    return complex_from_json(obj), names_from_json(obj)


def parse_vertex(text: str, X, names: dict):
    """A vertex given by name, label, or (for cubical complexes) a set such as ``[1,2]``."""
    if text in names:
        return names[text]
    verts = X.vertices
    if text in ("init", "term") and len(verts):
        return verts[0] if text == "init" else verts[-1]
    if isinstance(X, CubicalComplex):
        body = text.strip()
        if body.startswith("[") or body.startswith("{"):
            body = body[1:-1]
        try:
            F = frozenset(int(x) for x in body.split(",") if x.strip())
        except ValueError:
            raise Usage(f"cannot parse vertex {text!r}") from None
        if not X.has_vertex(F):
            raise Usage(f"vertex {text!r} is not in the complex")
        return F
    try:
        v = int(text)
    except ValueError:
        raise Usage(f"cannot parse vertex {text!r}") from None
    if not X.has_vertex(v):
        raise Usage(f"vertex {text!r} is not in the complex")
    return v


def split_vertex_list(text: str) -> list:
    """Split on commas that are not inside ``[...]`` or ``{...}``."""
    return [t.strip() for t in re.findall(r"\[[^\]]*\]|\{[^}]*\}|[^,]+", text) if t.strip()]


def _load_monos(spec_text: str | None) -> dict:
    monos = {}
    for item in (spec_text or "").split(","):
        name, _, arg = item.strip().partition(":")
        if name == "refine" and arg:
            monos[arg] = mono_from_json(load_json(arg))
    return monos


def _executor(workers: int):
    return ThreadPoolExecutor(max_workers=workers) if workers > 1 else None


def cmd_compute(args) -> int:
    X, names = _load_complex(args.input)
    spec = PipelineSpec.parse(args.pipeline, _load_monos(args.pipeline))
    if args.all:
        # subset order for cubical vertices, label order for simplicial ones
        verts = list(X.vertices)
        pairs = [(u, v) for u in verts for v in verts if u <= v]
    else:
        if args.source is None or args.target is None:
            raise Usage("give --from and --to, or --all")
        pairs = [(parse_vertex(args.source, X, names), parse_vertex(args.target, X, names))]
    executor = _executor(args.workers)
    try:
        def one(pair):
            return run_query(X, pair[0], pair[1], spec, count_only=args.count_only,
                             fallback=args.fallback, executor=executor)

        if executor is not None and len(pairs) > 1:
            results = list(executor.map(one, pairs))
        else:
            results = [one(p) for p in pairs]
    finally:
        if executor is not None:
            executor.shutdown()
    homs = [(r.source, r.target, r.count, r.representatives) for r in results]
    if args.all:
        homs = [h for h in homs if h[2] > 0]
    out = category_to_json(X.vertices, homs, count_only=args.count_only)
    if args.count_only and not args.all:
        out["count"] = results[0].count
    if args.report:
        out["reports"] = [rep.to_json() for r in results for rep in r.reports]
    sys.stdout.write(dumps(out))
    return EXIT_OK


def _parse_pairs(text: str | None) -> list:
    """``"i,j;i,j"`` -> ``[(i, j), ...]``."""
    out = []
    for item in (text or "").split(";"):
        if item.strip():
            i, j = (int(x) for x in item.split(","))
            out.append((i, j))
    return out


def _parse_edges(text: str | None) -> list:
    """``"i,j-i,j;..."`` -> ``[((i, j), (i', j')), ...]``."""
    out = []
    for item in (text or "").split(";"):
        if item.strip():
            a, b = item.split("-")
            out.append(tuple(tuple(int(x) for x in p.split(",")) for p in (a, b)))
    return out


def cmd_gen(args) -> int:
    fam = args.family
    p = args.params
    names = None
    try:
        if fam == "necklace":
            X = generators.necklace(int(p[0]))
            names = {"init": 0, "term": 2 * int(p[0])}
        elif fam == "hypercube":
            X = generators.hypercube(int(p[0]))
        elif fam == "grid":
            w, h = int(p[0]), int(p[1])
            X = generators.grid(w, h, _parse_pairs(args.holes), _parse_edges(args.missing_edges))
            names = {"init": generators.grid_vertex(w, 0, 0), "term": generators.grid_vertex(w, w, h)}
        elif fam == "swiss-flag":
            X = generators.swiss_flag()
            names = generators.swiss_flag_names()
        elif fam == "zigzag":
            X = generators.zigzag()
            names = dict(generators.ZIGZAG_LABELS)
        elif fam == "random-simplicial":
            X = generators.random_simplicial(np.random.default_rng(args.seed))
        elif fam == "random-cubical":
            X = generators.random_cubical(np.random.default_rng(args.seed))
        else:
            raise Usage(f"unknown family {fam!r}")
    except (IndexError, ValueError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise Usage(f"bad parameters for {fam}: {' '.join(p)}") from None
    sys.stdout.write(dumps(complex_to_json(X, names)))
    return EXIT_OK


def _random_cases(pass_name: str, count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        if pass_name in ("interval", "source-sink"):
            yield generators.random_simplicial(rng), None
        elif pass_name == "refine":
            m = int(rng.integers(1, 4))
            n = int(rng.integers(m, 6))
            yield generators.random_cubical(rng, max_ambient=m, min_ambient=m), random_mono(rng, m, n)
        else:
            yield generators.random_cubical(rng, max_ambient=4 if pass_name == "corner" else 5), None


def _verify_one(X, args, names, alpha=None) -> VerificationReport:
    pass_name = args.pass_name
    if pass_name in ("interval", "source-sink"):
        if isinstance(X, CubicalComplex):
            X = triangulate_sk2(X).complex
        return verify_interval(X) if pass_name == "interval" else verify_source_sink(X)
    if not isinstance(X, CubicalComplex):
        raise Usage(f"pass {pass_name!r} needs a cubical complex")
    if pass_name == "corner":
        protected = None
        if args.protect:
            protected = {parse_vertex(t, X, names) for t in split_vertex_list(args.protect)}
        return verify_corner(X, protected)
    if pass_name == "refine":
        if alpha is None:
            if not args.mono:
                raise Usage("refine needs --mono FILE")
            alpha = mono_from_json(load_json(args.mono))
        return verify_refine(X, alpha)
    if pass_name == "frontier":
        pairs = None
        if args.source is not None or args.target is not None:
            if args.source is None or args.target is None:
                raise Usage("give both --from and --to")
            u, v = parse_vertex(args.source, X, names), parse_vertex(args.target, X, names)
            pairs = [(u, v)]
            cut = args.cut if args.cut is not None else min_crossing_cut(X, u, v)
            if not len(u) <= cut < len(v):
                raise InvalidInput(f"cut {cut} does not separate {args.source} and {args.target}")
            return verify_frontier(X, cut, pairs)
        return verify_frontier(X, args.cut, pairs)
    if pass_name == "sk2":
        return verify_skeleton(X)
    raise Usage(f"unknown pass {pass_name!r}")


def cmd_verify(args) -> int:
    if args.random:
        total = VerificationReport(args.pass_name)
        passed = 0
        for X, alpha in _random_cases(args.pass_name, args.random, args.seed):
            rep = _verify_one(X, args, {}, alpha)
            passed += rep.ok
            total.extend(rep)
        out = total.to_json()
        out.update({"instances": args.random, "passed": passed, "seed": args.seed})
    else:
        if not args.input:
            raise Usage("give an input file or --random N")
        X, names = _load_complex(args.input)
        total = _verify_one(X, args, names)
        out = total.to_json()
    sys.stdout.write(dumps(out))
    if not total.ok:
        for c in total.mismatches:
            sys.stderr.write(f"mismatch {c.to_json()}\n")
        for p in total.problems:
            sys.stderr.write(f"problem: {p}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _parse_range(text: str) -> list:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _bench_rows(family: str, params: list):
    if family == "necklace":
        for k in _parse_range(params[0]):
            L = generators.necklace(k)
            v, w = 0, 2 * k
            name = f"necklace-{k}"
            yield name, "direct", *_timed(lambda: len(hom_set(L, v, w)))
            yield name, "reduced", *_timed(lambda: len(hom_set(minimal_path_subcomplex(L, v, w)[0], v, w)))
            yield name, "count", *_timed(lambda: count_homs(L, v, w))
        return
    if family == "hypercube":
        instances = [(f"hypercube-{n}", generators.hypercube(n)) for n in _parse_range(params[0])]
    elif family == "grid":
        w, h = int(params[0]), int(params[1] if len(params) > 1 else params[0])
        instances = [(f"grid-{w}x{h}", generators.grid(w, h))]
    elif family == "swiss-flag":
        instances = [("swiss-flag", generators.swiss_flag())]
    else:
        raise Usage(f"unknown family {family!r}")
    for name, K in instances:
        u, v = K.vertices[0], K.vertices[-1]
        direct = PipelineSpec.parse("sk2")
        reduced = PipelineSpec.parse("corner,source-sink")
        yield name, "direct", *_timed(lambda: run_query(K, u, v, direct).count)
        yield name, "reduced", *_timed(lambda: run_query(K, u, v, reduced).count)
        cut = min_crossing_cut(K, u, v)
        yield name, f"frontier-{cut}", *_timed(lambda: len(frontier_hom(K, cut, u, v)))


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["instance", "pipeline", "count", "seconds"])
    for name, strategy, count, seconds in _bench_rows(args.family, args.params):
        writer.writerow([name, strategy, count, f"{seconds:.6f}"])
    return EXIT_OK


def cmd_reduce(args) -> int:
    X, names = _load_complex(args.input)
    spec = PipelineSpec.parse(args.pipeline, _load_monos(args.pipeline))
    u = v = None
    if args.source is not None or args.target is not None:
        if args.source is None or args.target is None:
            raise Usage("give both --from and --to")
        u, v = parse_vertex(args.source, X, names), parse_vertex(args.target, X, names)
    reduced, reports = reduce_complex(X, spec, u, v)
    out = complex_to_json(reduced)
    if args.report:
        out["reports"] = [r.to_json() for r in reports]
    sys.stdout.write(dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pipeline", help="comma-separated passes, e.g. corner,sk2,source-sink")
    common.add_argument("--report", action="store_true", help="append pass reports")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--count-only", action="store_true")
    common.add_argument("--all", action="store_true", help="query every pair of vertices")
    common.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="pathcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="hom sets of a complex")
    p.add_argument("input")
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target")
    p.add_argument("--fallback", action="store_true",
                   help="compute directly when a frontier cut does not separate the pair")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("gen", parents=[common], help="generate a fixture complex")
    p.add_argument("family", choices=["necklace", "hypercube", "grid", "swiss-flag", "zigzag",
                                      "random-simplicial", "random-cubical"])
    p.add_argument("params", nargs="*")
    p.add_argument("--holes", help="missing squares 'i,j;i,j'")
    p.add_argument("--missing-edges", help="missing unit edges 'i,j-i,j;...'")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="check a pass against the oracle")
    p.add_argument("input", nargs="?")
    p.add_argument("--pass", dest="pass_name", required=True,
                   choices=["interval", "source-sink", "corner", "refine", "frontier", "sk2"])
    p.add_argument("--protect", help="comma-separated vertices kept by corner removal")
    p.add_argument("--cut", type=int)
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target")
    p.add_argument("--mono", help="monomorphism JSON for --pass refine")
    p.add_argument("--random", type=int, default=0, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time direct, reduced and frontier strategies")
    p.add_argument("family", choices=["necklace", "hypercube", "grid", "swiss-flag"])
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("reduce", parents=[common], help="apply a pipeline, emit the reduced complex")
    p.add_argument("input")
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InvalidInput as exc:
        sys.stderr.write(f"pathcat: error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
