"""JSON encodings of complexes, monomorphisms and hom-set listings."""

from __future__ import annotations

import json
import sys

from .complexes import CubicalComplex, Interval, InvalidInput, SimplicialComplex, vertex_key
from .refinement import PosetMono


def _int_list(value, what: str) -> list:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise InvalidInput(f"{what} must be a list of integers")
    if len(set(value)) != len(value):
        raise InvalidInput(f"{what} has duplicate elements")
    return value


def complex_to_json(X, names: dict | None = None) -> dict:
    if isinstance(X, CubicalComplex):
        out = {
            "type": "cubical",
            "ambient": X.ambient,
            "maximal_cells": [{"A": sorted(c.lower), "B": sorted(c.upper)} for c in X.cells],
        }
        if names:
            out["names"] = {k: sorted(v) for k, v in sorted(names.items())}
        return out
    if isinstance(X, SimplicialComplex):
        out = {
            "type": "simplicial",
            "vertices": list(X.vertices),
            "maximal_simplices": [list(s) for s in sorted(X.maximal_simplices)],
        }
        if names:
            out["names"] = dict(sorted(names.items()))
        return out
    raise TypeError(f"cannot encode {type(X).__name__}")


def complex_from_json(obj):
    """Parse and validate a complex; raises :class:`InvalidInput`."""
    if not isinstance(obj, dict):
        raise InvalidInput("complex JSON must be an object")
    kind = obj.get("type")
    if kind == "cubical":
        n = obj.get("ambient")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidInput("'ambient' must be a positive integer")
        cells = obj.get("maximal_cells")
        if not isinstance(cells, list):
            raise InvalidInput("'maximal_cells' must be a list")
        parsed = []
        for i, c in enumerate(cells):
            if not isinstance(c, dict) or set(c) != {"A", "B"}:
                raise InvalidInput(f"cell {i} must have exactly the keys 'A' and 'B'")
            parsed.append(Interval(_int_list(c["A"], f"cell {i} A"), _int_list(c["B"], f"cell {i} B")))
        return CubicalComplex.from_cells(n, parsed)
    if kind == "simplicial":
        verts = _int_list(obj.get("vertices", []), "'vertices'")
        simplices = obj.get("maximal_simplices")
        if not isinstance(simplices, list):
            raise InvalidInput("'maximal_simplices' must be a list")
        simplices = [_int_list(s, f"simplex {i}") for i, s in enumerate(simplices)]
        return SimplicialComplex.from_simplices(simplices, vertices=verts)
    raise InvalidInput(f"unknown complex type {kind!r}")


def names_from_json(obj) -> dict:
    """Optional vertex aliases stored next to a complex."""
    names = obj.get("names", {}) if isinstance(obj, dict) else {}
    if not isinstance(names, dict):
        raise InvalidInput("'names' must be an object")
    if obj.get("type") == "cubical":
        return {k: frozenset(_int_list(v, f"name {k}")) for k, v in names.items()}
    return dict(names)


def mono_to_json(alpha: PosetMono) -> dict:
    return {
        "m": alpha.m,
        "n": alpha.n,
        "empty": sorted(alpha.empty),
        "singletons": {str(i): sorted(s) for i, s in enumerate(alpha.singletons, start=1)},
    }


def mono_from_json(obj) -> PosetMono:
    try:
        m, n = obj["m"], obj["n"]
        singletons = {int(k): _int_list(v, f"singleton {k}") for k, v in obj["singletons"].items()}
        alpha = PosetMono.from_map(m, n, _int_list(obj.get("empty", []), "'empty'"), singletons)
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"malformed monomorphism JSON: {exc}") from None
    return alpha


def encode_vertex(x):
    return sorted(x) if isinstance(x, frozenset) else x


def category_to_json(objects, homs, count_only: bool = False) -> dict:
    """``homs`` is a list of ``(source, target, count, representatives)``."""
    objects = list(objects)
    if objects and isinstance(objects[0], frozenset):
        objects = sorted(objects, key=vertex_key)
    out = {"objects": [encode_vertex(x) for x in objects], "homs": []}
    for src, tgt, count, reps in homs:
        entry = {"from": encode_vertex(src), "to": encode_vertex(tgt), "count": count}
        if not count_only:
            entry["representatives"] = [[encode_vertex(x) for x in r] for r in reps]
        out["homs"].append(entry)
    return out


def _decode_vertex(x):
    return frozenset(x) if isinstance(x, list) else x


def category_from_json(obj):
    """Inverse of :func:`category_to_json`: ``(objects, homs, count_only)``."""
    if not isinstance(obj, dict) or "objects" not in obj or "homs" not in obj:
        raise InvalidInput("category JSON needs 'objects' and 'homs'")
    objects = [_decode_vertex(x) for x in obj["objects"]]
    homs = []
    count_only = bool(obj["homs"]) and all("representatives" not in h for h in obj["homs"])
    for h in obj["homs"]:
        reps = [tuple(_decode_vertex(x) for x in r) for r in h.get("representatives", [])]
        homs.append((_decode_vertex(h["from"]), _decode_vertex(h["to"]), h["count"], reps))
    return objects, homs, count_only


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":")) + "\n"


def load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: invalid JSON ({exc})") from None
