import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathcat.complexes import InvalidInput
from pathcat.io import (
    category_from_json,
    category_to_json,
    complex_from_json,
    complex_to_json,
    dumps,
    load_json,
    mono_from_json,
    mono_to_json,
    names_from_json,
)
from pathcat.refinement import PosetMono
from conftest import FIXTURES, cubical_complexes, simplicial_complexes


@given(cubical_complexes(max_ambient=5))
def test_cubical_round_trip(K):
    assert complex_from_json(json.loads(dumps(complex_to_json(K)))) == K


@given(simplicial_complexes())
def test_simplicial_round_trip(L):
    assert complex_from_json(json.loads(dumps(complex_to_json(L)))) == L


@given(st.integers(1, 4), st.data())
def test_mono_round_trip(m, data):
    blocks = data.draw(st.permutations(range(1, m + 3)))
    alpha = PosetMono(m, m + 2, frozenset(), tuple(frozenset([b]) for b in blocks[:m]))
    assert mono_from_json(json.loads(dumps(mono_to_json(alpha)))) == alpha


def test_category_round_trip():
    objs = [frozenset(), frozenset({1})]
    homs = [(frozenset(), frozenset({1}), 1, [(frozenset(), frozenset({1}))])]
    encoded = category_to_json(objs, homs)
    assert category_from_json(json.loads(dumps(encoded))) == (objs, homs, False)
    counted = category_to_json([0, 1], [(0, 1, 3, [])], count_only=True)
    assert "representatives" not in counted["homs"][0]
    assert category_from_json(counted) == ([0, 1], [(0, 1, 3, [])], True)


def test_sets_are_sorted():
    obj = {"type": "cubical", "ambient": 2, "maximal_cells": [{"A": [], "B": [2, 1]}]}
    assert complex_to_json(complex_from_json(obj))["maximal_cells"] == [{"A": [], "B": [1, 2]}]


@pytest.mark.parametrize("obj", [
    {"type": "cubical", "ambient": 2, "maximal_cells": [{"A": [1, 1], "B": [1]}]},
    {"type": "cubical", "ambient": 0, "maximal_cells": []},
    {"type": "cubical", "ambient": 2, "maximal_cells": [{"A": [1], "B": [2]}]},
    {"type": "cubical", "ambient": 2, "maximal_cells": [{"A": [], "B": [3]}]},
    {"type": "cubical", "ambient": 2, "maximal_cells": [{"A": []}]},
    {"type": "simplicial", "vertices": [0, 1], "maximal_simplices": [[0, 0]]},
    {"type": "simplicial", "vertices": [0], "maximal_simplices": [["a"]]},
    {"type": "polytope"},
    [],
])
def test_rejects_bad_complexes(obj):
    with pytest.raises(InvalidInput):
        complex_from_json(obj)


def test_rejects_bad_mono():
    with pytest.raises(InvalidInput):
        mono_from_json({"m": 1, "n": 2})


def test_load_errors(tmp_path):
    with pytest.raises(InvalidInput):
        load_json(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(InvalidInput):
        load_json(str(bad))


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.json")), ids=lambda p: p.stem)
def test_fixtures_load(path):
    obj = load_json(str(path))
    X = complex_from_json(obj)
    out = complex_to_json(X, names_from_json(obj))
    assert out == obj
