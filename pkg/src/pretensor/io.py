"""JSON input formats.

Algebras come in two flavours::

    {"type": "structure_constants", "dim": n, "table": [[[c_ij^k]]], "unit": [..],
     "names": optional, "idempotents": optional}
    {"type": "bound_quiver", "vertices": n,
     "arrows": [{"name": "a", "from": 1, "to": 2}],
     "relations": [[{"coeff": "1", "path": ["c", "a"]}, {"coeff": "-1", "path": ["d", "b"]}]]}

Rationals are "p/q" strings (plain integers are accepted too).  Vertices are
numbered from 1.  Paths list arrows in product order, so ``["c", "a"]`` is
``c a`` (first ``a``, then ``c``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .algebra import FiniteDimAlgebra
from .modules import Bimodule, free_bimodule, regular_bimodule
from .qlinalg import Q
from .quiver import Arrow, BoundQuiver, from_bound_quiver
from .zplus import ZPlusPseudoring


class ParseError(ValueError):
    pass


def _rational(x: Any):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected a rational as int or 'p/q' string, got {x!r}")
    try:
        return Q(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {x!r}") from exc


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


@dataclass
class ParsedAlgebra:
    algebra: FiniteDimAlgebra
    quiver: BoundQuiver | None = None
    labels: list | None = None  # path names for quiver input


def parse_structure_constants(data: dict) -> FiniteDimAlgebra:
    n = _int(data.get("dim"), "dim")
    table = data.get("table")
    if not isinstance(table, list) or len(table) != n:
        raise ParseError("table must be an n x n x n array")
    dense = []
    for row in table:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError("table must be an n x n x n array")
        out_row = []
        for entry in row:
            if not isinstance(entry, list) or len(entry) != n:
                raise ParseError("table must be an n x n x n array")
            out_row.append([_rational(c) for c in entry])
        dense.append(out_row)
    unit = data.get("unit")
    if not isinstance(unit, list) or len(unit) != n:
        raise ParseError("unit must be a length-n vector")
    unit = [_rational(c) for c in unit]
    names = data.get("names")
    if names is not None and (not isinstance(names, list) or len(names) != n):
        raise ParseError("names must list one string per basis element")
    idems = data.get("idempotents")
    if idems is not None:
        if not isinstance(idems, list) or any(not isinstance(e, list) or len(e) != n for e in idems):
            raise ParseError("idempotents must be a list of length-n vectors")
        idems = [[_rational(c) for c in e] for e in idems]
    return FiniteDimAlgebra(dense, unit, names, idems)


def parse_bound_quiver(data: dict) -> BoundQuiver:
    n = _int(data.get("vertices"), "vertices")
    arrows = []
    for a in data.get("arrows", []):
        if not isinstance(a, dict) or "name" not in a:
            raise ParseError("each arrow needs name, from and to")
        src, tgt = _int(a.get("from"), "arrow source"), _int(a.get("to"), "arrow target")
        if not (1 <= src <= n and 1 <= tgt <= n):
            raise ParseError(f"arrow {a['name']!r} uses a vertex outside 1..{n}")
        arrows.append(Arrow(str(a["name"]), src - 1, tgt - 1))
    relations = []
    for rel in data.get("relations", []):
        terms = rel if isinstance(rel, list) else [rel]
        parsed = []
        for t in terms:
            if not isinstance(t, dict) or not isinstance(t.get("path"), list):
                raise ParseError("relation terms look like {'coeff': 'p/q', 'path': [arrow names]}")
            parsed.append((_rational(t.get("coeff", 1)), tuple(str(p) for p in t["path"])))
        relations.append(parsed)
    try:
        return BoundQuiver(n, arrows, relations)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_algebra(data: Any) -> ParsedAlgebra:
    if not isinstance(data, dict):
        raise ParseError("algebra input must be a JSON object")
    kind = data.get("type")
    if kind == "structure_constants":
        return ParsedAlgebra(parse_structure_constants(data))
    if kind == "bound_quiver":
        q = parse_bound_quiver(data)
        alg, _, labels = from_bound_quiver(q)
        return ParsedAlgebra(alg, q, list(labels))
    raise ParseError(f"unknown algebra type {kind!r}")


def parse_pseudoring(data: Any) -> ZPlusPseudoring:
    if not isinstance(data, dict):
        raise ParseError("pseudoring input must be a JSON object")
    try:
        return ZPlusPseudoring.from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise ParseError(str(exc)) from exc


def parse_subcategory(data: Any, alg: FiniteDimAlgebra) -> tuple[list[Bimodule], list[str]]:
    """Generators: "unit" or [i, j] (1-based free bimodule label); optional "names"."""
    if not isinstance(data, dict) or not isinstance(data.get("generators"), list):
        raise ParseError("subcategory input must be {'generators': [...], 'names': optional}")
    gens = []
    for g in data["generators"]:
        if g in ("unit", "regular"):
            gens.append(regular_bimodule(alg))
        elif isinstance(g, list) and len(g) == 2:
            i, j = (_int(x, "label index") for x in g)
            gens.append(free_bimodule(alg, i - 1, j - 1))
        else:
            raise ParseError(f"bad generator {g!r}")
    names = data.get("names") or [f"g{k + 1}" for k in range(len(gens))]
    if len(names) != len(gens):
        raise ParseError("one name per generator expected")
    return gens, [str(x) for x in names]
