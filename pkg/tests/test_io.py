from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pretensor.algebra import cartan_matrix
from pretensor.corpus import dual_numbers
from pretensor.io import (
    ParseError,
    load_json,
    parse_algebra,
    parse_bound_quiver,
    parse_pseudoring,
    parse_subcategory,
)
from pretensor.qlinalg import Q, qstr
from pretensor.zplus import ZPlusPseudoring, unit_and_square


def test_structure_constants_roundtrip():
    d = dual_numbers()
    data = {
        "type": "structure_constants",
        "dim": 2,
        "table": [[[qstr(x) for x in d.mul(d.basis_vector(i), d.basis_vector(j))] for j in range(2)] for i in range(2)],
        "unit": ["1", "0"],
    }
    parsed = parse_algebra(data)
    assert parsed.algebra.table == d.table and parsed.quiver is None


def test_bound_quiver_input():
    parsed = parse_algebra(
        {"type": "bound_quiver", "vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}], "relations": []}
    )
    assert parsed.algebra.dim == 3 and parsed.labels == ["e1", "e2", "a"]
    assert cartan_matrix(parsed.algebra) == [[1, 0], [1, 1]]
    # a single-term relation may be given without the surrounding list
    q = parse_bound_quiver(
        {"vertices": 1, "arrows": [{"name": "x", "from": 1, "to": 1}], "relations": [{"path": ["x", "x"]}]}
    )
    assert len(q.relations) == 1


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"type": "mystery"},
        {"type": "structure_constants", "dim": 1, "table": [[[1, 2]]], "unit": [1]},
        {"type": "structure_constants", "dim": 1, "table": [[["1/0"]]], "unit": [1]},
        {"type": "structure_constants", "dim": 1, "table": [[[1.5]]], "unit": [1]},
        {"type": "structure_constants", "dim": 1, "table": [[[1]]], "unit": [1, 0]},
        {"type": "bound_quiver", "vertices": 1, "arrows": [{"name": "a", "from": 1, "to": 2}]},
        {"type": "bound_quiver", "vertices": 1, "arrows": [{"name": "a", "from": 1, "to": 1}], "relations": ["aa"]},
    ],
)
def test_malformed_algebras(data):
    with pytest.raises(ParseError):
        parse_algebra(data)


def test_load_json_errors():
    with pytest.raises(ParseError):
        load_json("{not json")


def test_pseudoring_input():
    r = parse_pseudoring(unit_and_square().to_json())
    assert r == unit_and_square()
    for bad in ([], {"basis": ["b"]}, {"table": [[[-1]]]}, {"table": [[[1, 0]]]}):
        with pytest.raises(ParseError):
            parse_pseudoring(bad)


def test_subcategory_input():
    d = dual_numbers()
    gens, names = parse_subcategory({"generators": ["unit", [1, 1]], "names": ["d", "t"]}, d)
    assert names == ["d", "t"] and [g.dim for g in gens] == [2, 4]
    gens, names = parse_subcategory({"generators": [[1, 1]]}, d)
    assert names == ["g1"]
    for bad in ({}, {"generators": ["x"]}, {"generators": ["unit"], "names": ["a", "b"]}):
        with pytest.raises(ParseError):
            parse_subcategory(bad, d)


@given(st.integers(-50, 50), st.integers(1, 50))
def test_rational_strings_roundtrip(p, q):
    text = qstr(Q(f"{p}/{q}"))
    assert Q(text) * q == p
    data = {"type": "structure_constants", "dim": 1, "table": [[[text]]], "unit": ["1"]}
    assert parse_algebra(json.loads(json.dumps(data))).algebra.dim == 1


@given(st.lists(st.lists(st.integers(0, 3), min_size=2, max_size=2), min_size=4, max_size=4))
def test_pseudoring_json_roundtrip(cells):
    table = [[cells[0], cells[1]], [cells[2], cells[3]]]
    r = ZPlusPseudoring(("a", "b"), table)
    assert parse_pseudoring(json.loads(r.dumps())) == r
