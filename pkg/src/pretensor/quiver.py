"""Path algebras of bound quivers.

Convention: an arrow ``a: s -> t`` satisfies ``a = e_t a e_s``, and a product
``p q`` of paths is nonzero only when ``source(p) == target(q)``.  Paths are
written as algebra products, so ``("c", "a")`` means ``c a`` (first ``a``,
then ``c``).  Vertices are numbered from 1 in names and in JSON, from 0
internally.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import FiniteDimAlgebra, NotFiniteDimensional
from .qlinalg import ONE, ZERO, Q, Quotient, Subspace


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass
class BoundQuiver:
    vertex_count: int
    arrows: list[Arrow]
    relations: list[list[tuple]] = field(default_factory=list)  # [(coeff, (arrow names...)), ...]

    def __post_init__(self):
        self.arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows]
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be distinct")
        for a in self.arrows:
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise ValueError(f"arrow {a.name} has an endpoint outside the vertex range")
        self._by_name = {a.name: a for a in self.arrows}
        for rel in self.relations:
            ends = set()
            for coeff, path in rel:
                if len(path) < 2:
                    raise ValueError("relations must combine paths of length >= 2")
                ends.add(self._endpoints(tuple(path)))
            if len(ends) > 1:
                raise ValueError("relation terms must share source and target")

    def _endpoints(self, path: tuple) -> tuple[int, int]:
        arrows = [self._by_name[n] for n in path]
        for left, right in zip(arrows, arrows[1:]):
            if left.source != right.target:
                raise ValueError(f"path {path} is not composable")
        return arrows[-1].source, arrows[0].target


def _paths_of_length(q: BoundQuiver, length: int) -> list[tuple]:
    """Paths as (kind, data): vertices for length 0, arrow-name tuples otherwise."""
    if length == 0:
        return [("e", v) for v in range(q.vertex_count)]
    paths = [("p", (a.name,)) for a in q.arrows]
    for _ in range(length - 1):
        nxt = []
        for _, p in paths:
            first = q._by_name[p[-1]]
            for a in q.arrows:
                if a.target == first.source:
                    nxt.append(("p", p + (a.name,)))
        paths = nxt
    return paths


def _source_target(q: BoundQuiver, path) -> tuple[int, int]:
    kind, data = path
    if kind == "e":
        return data, data
    return q._by_name[data[-1]].source, q._by_name[data[0]].target


def _concat(q: BoundQuiver, p, r):
    """Product p r as a path, or None when it vanishes."""
    ps, _ = _source_target(q, p)
    _, rt = _source_target(q, r)
    if ps != rt:
        return None
    if p[0] == "e":
        return r
    if r[0] == "e":
        return p
    return ("p", p[1] + r[1])


def _length(path) -> int:
    return 0 if path[0] == "e" else len(path[1])


def _path_name(path) -> str:
    kind, data = path
    return f"e{data + 1}" if kind == "e" else "".join(data) if all(len(x) == 1 for x in data) else "*".join(data)


def from_bound_quiver(q: BoundQuiver, max_length: int = 32):
    """Path algebra modulo relations.

    Returns ``(algebra, vertex_idempotents, basis_labels)``.
    """
    stop = None
    prev_dim = None
    for length in range(0, max_length + 1):
        dim = _quotient_dim(q, length)
        if prev_dim is not None and dim == prev_dim:
            stop = length
            break
        prev_dim = dim
    if stop is None:
        raise NotFiniteDimensional(f"new independent paths persist past length {max_length}")
    top = max(2 * (stop - 1), stop)
    paths, index, ideal = _truncated_ideal(q, top)
    quot = Quotient(ideal)
    # present the basis shortest-first (vertices, arrows, ...)
    order = sorted(range(len(quot.free)), key=lambda k: (_length(paths[quot.free[k]]), k))
    basis_paths = [paths[quot.free[k]] for k in order]
    if any(_length(p) >= stop for p in basis_paths):
        raise NotFiniteDimensional("relations are not admissible at the detected length")
    n = len(basis_paths)
    table = []
    for p in basis_paths:
        row = []
        for r in basis_paths:
            prod = _concat(q, p, r)
            v = [ZERO] * len(paths)
            if prod is not None:
                if prod not in index:
                    raise NotFiniteDimensional("product escapes the truncation")
                v[index[prod]] = ONE
            coords = quot.project.apply(v)
            row.append(tuple(coords[k] for k in order))
        table.append(row)
    unit = [ZERO] * n
    idems = []
    for v in range(q.vertex_count):
        e = [ZERO] * n
        pos = basis_paths.index(("e", v))
        e[pos] = ONE
        unit[pos] = ONE
        idems.append(tuple(e))
    labels = [_path_name(p) for p in basis_paths]
    alg = FiniteDimAlgebra(table, unit, labels, idems)
    return alg, idems, labels


def _truncated_ideal(q: BoundQuiver, top: int):
    # longest paths first so the echelon pivots eliminate long paths
    paths = []
    for length in range(top, -1, -1):
        paths.extend(_paths_of_length(q, length))
    index = {p: i for i, p in enumerate(paths)}
    gens = []
    for rel in q.relations:
        terms = [(Q(c), ("p", tuple(path))) for c, path in rel]
        for u in paths:
            for w in paths:
                v = [ZERO] * len(paths)
                nonzero = False
                for c, t in terms:
                    left = _concat(q, u, t)
                    prod = _concat(q, left, w) if left is not None else None
                    if prod is None:
                        continue
                    if prod not in index:
                        continue  # zero modulo paths longer than the truncation
                    v[index[prod]] += c
                    nonzero = True
                if nonzero:
                    gens.append(tuple(v))
    return paths, index, Subspace(len(paths), gens)


def _quotient_dim(q: BoundQuiver, length: int) -> int:
    paths, _, ideal = _truncated_ideal(q, length)
    return len(paths) - ideal.dim
