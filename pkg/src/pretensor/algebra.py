"""Finite-dimensional associative unital algebras over Q.

An algebra is stored by structure constants on a fixed basis
``a_0, ..., a_{n-1}``: ``a_i a_j = sum_k c[i][j][k] a_k``.  The table is kept
sparse (one ``{k: c}`` dict per pair) because endomorphism algebras built
later are mostly zeros.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .qlinalg import (
    ONE,
    ZERO,
    CoordinateReader,
    Matrix,
    Quotient,
    Q,
    Subspace,
    Vector,
    kernel_basis,
    unit_vector,
    vcomb,
    vsub,
)


class NonSplit(Exception):
    """Idempotents would require an extension field (or a non-matrix block)."""


class NotFiniteDimensional(Exception):
    pass


class FiniteDimAlgebra:
    def __init__(
        self,
        table: Sequence,
        unit: Sequence,
        names: Sequence[str] | None = None,
        idempotents: Sequence[Sequence] | None = None,
    ):
        n = len(unit)
        self.dim = n
        self.unit: Vector = tuple(Q(x) for x in unit)
        self.table = _sparse_table(table, n)
        self.names = tuple(names) if names is not None else tuple(f"a{i}" for i in range(n))
        if len(self.names) != n:
            raise ValueError("one name per basis element expected")
        self.idempotents = (
            tuple(tuple(Q(x) for x in e) for e in idempotents) if idempotents is not None else None
        )

    def __repr__(self) -> str:
        return f"FiniteDimAlgebra(dim={self.dim})"

    # products -----------------------------------------------------------
    def basis_product(self, i: int, j: int) -> dict:
        return self.table[i][j]

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        acc = [ZERO] * self.dim
        ynz = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in ynz:
                ab = a * b
                for k, c in row[j].items():
                    acc[k] += ab * c
        return tuple(acc)

    def mul_many(self, *xs: Sequence) -> Vector:
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out

    def power(self, x: Sequence, k: int) -> Vector:
        out = self.unit
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def element(self, coeffs: dict | Sequence) -> Vector:
        """Vector from ``{name or index: coeff}`` or a plain sequence."""
        if isinstance(coeffs, dict):
            v = [ZERO] * self.dim
            for key, c in coeffs.items():
                idx = self.names.index(key) if isinstance(key, str) else key
                v[idx] += Q(c)
            return tuple(v)
        return tuple(Q(c) for c in coeffs)

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> x y."""
        return Matrix.from_columns([self.mul(x, self.basis_vector(j)) for j in range(self.dim)], self.dim)

    def right_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> y x."""
        return Matrix.from_columns([self.mul(self.basis_vector(j), x) for j in range(self.dim)], self.dim)

    @cached_property
    def left_regular(self) -> tuple[Matrix, ...]:
        return tuple(self._basis_mult_matrix(i, left=True) for i in range(self.dim))

    @cached_property
    def right_regular(self) -> tuple[Matrix, ...]:
        return tuple(self._basis_mult_matrix(i, left=False) for i in range(self.dim))

    def _basis_mult_matrix(self, i: int, left: bool) -> Matrix:
        n = self.dim
        rows = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            prod = self.table[i][j] if left else self.table[j][i]
            for k, c in prod.items():
                rows[k][j] = c
        return Matrix._raw([tuple(r) for r in rows], n)

    def is_idempotent(self, e: Sequence) -> bool:
        return self.mul(e, e) == tuple(e)

    def dense_table(self) -> list[list[list]]:
        n = self.dim
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                v = [ZERO] * n
                for k, c in self.table[i][j].items():
                    v[k] = c
                row.append(v)
            out.append(row)
        return out

    def same_structure(self, other: "FiniteDimAlgebra") -> bool:
        return self.dim == other.dim and self.unit == other.unit and self.table == other.table

    @cached_property
    def trace_vector(self) -> Vector:
        """tr(L_{a_k}) for every basis element."""
        return tuple(sum((self.table[k][m].get(m, ZERO) for m in range(self.dim)), ZERO) for k in range(self.dim))

    def trace_form(self) -> Matrix:
        t = self.trace_vector
        n = self.dim
        rows = []
        for i in range(n):
            rows.append(tuple(sum((c * t[k] for k, c in self.table[i][j].items()), ZERO) for j in range(n)))
        return Matrix._raw(rows, n)

    @cached_property
    def radical(self) -> "RadicalResult":
        return jacobson_radical(self)


def _sparse_table(table, n: int) -> list[list[dict]]:
    if len(table) != n:
        raise ValueError(f"table has {len(table)} rows, expected {n}")
    out = []
    for i in range(n):
        row = []
        if len(table[i]) != n:
            raise ValueError(f"table row {i} has wrong length")
        for j in range(n):
            entry = table[i][j]
            if isinstance(entry, dict):
                row.append({k: Q(c) for k, c in entry.items() if c})
            else:
                if len(entry) != n:
                    raise ValueError(f"table entry ({i},{j}) has wrong length")
                row.append({k: Q(c) for k, c in enumerate(entry) if c})
        out.append(row)
    return out


@dataclass
class ValidationReport:
    ok: bool
    defect: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_algebra(a: FiniteDimAlgebra) -> ValidationReport:
    """Exhaustive unit-law and associativity check; reports the first failure."""
    n = a.dim
    u = a.unit
    for i in range(n):
        ai = a.basis_vector(i)
        if a.mul(u, ai) != ai or a.mul(ai, u) != ai:
            return ValidationReport(False, "unit law", (i,))
    for i in range(n):
        for j in range(n):
            left_ij = a.table[i][j]
            for k in range(n):
                lhs = [ZERO] * n
                for m, c in left_ij.items():
                    for l, d in a.table[m][k].items():
                        lhs[l] += c * d
                rhs = [ZERO] * n
                for m, c in a.table[j][k].items():
                    for l, d in a.table[i][m].items():
                        rhs[l] += c * d
                if lhs != rhs:
                    l = next(l for l in range(n) if lhs[l] != rhs[l])
                    return ValidationReport(False, "associativity", (i, j, k, l))
    if a.idempotents is not None:
        report = check_idempotent_set(a, a.idempotents)
        if not report.ok:
            return report
    return ValidationReport(True)


def check_idempotent_set(a: FiniteDimAlgebra, idems: Sequence[Sequence]) -> ValidationReport:
    total = tuple(ZERO for _ in range(a.dim))
    for p, e in enumerate(idems):
        if not a.is_idempotent(e):
            return ValidationReport(False, "not idempotent", (p,))
        for q, f in enumerate(idems):
            if p != q and any(a.mul(e, f)):
                return ValidationReport(False, "not orthogonal", (p, q))
        total = tuple(x + y for x, y in zip(total, e))
    if total != a.unit:
        return ValidationReport(False, "idempotents do not sum to the unit", ())
    return ValidationReport(True)


# ---------------------------------------------------------------------------
# constructions


def zero_algebra() -> FiniteDimAlgebra:
    return FiniteDimAlgebra([], [], names=[], idempotents=[])


def opposite(a: FiniteDimAlgebra) -> FiniteDimAlgebra:
    n = a.dim
    table = [[a.table[j][i] for j in range(n)] for i in range(n)]
    return FiniteDimAlgebra(table, a.unit, a.names, a.idempotents)


def tensor(a: FiniteDimAlgebra, b: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """A (x) B on the Kronecker basis a_i (x) b_j -> index i * dim B + j."""
    n, m = a.dim, b.dim
    table = []
    for i in range(n):
        for j in range(m):
            row = []
            for k in range(n):
                ak = a.table[i][k]
                for l in range(m):
                    bl = b.table[j][l]
                    entry = {}
                    for p, c in ak.items():
                        for q, d in bl.items():
                            entry[p * m + q] = c * d
                    row.append(entry)
            table.append(row)
    unit = tuple(x * y for x in a.unit for y in b.unit)
    names = [f"{x}⊗{y}" for x in a.names for y in b.names]
    idems = None
    if a.idempotents is not None and b.idempotents is not None:
        idems = [tuple(x * y for x in e for y in f) for e in a.idempotents for f in b.idempotents]
    return FiniteDimAlgebra(table, unit, names, idems)


def enveloping(a: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """A^op (x) A; basis index i * n + j stands for a_i^op (x) a_j."""
    return tensor(opposite(a), a)


def build(kind: str, a: FiniteDimAlgebra, b: FiniteDimAlgebra | None = None) -> FiniteDimAlgebra:
    if kind == "opposite":
        return opposite(a)
    if kind == "tensor":
        if b is None:
            raise ValueError("tensor needs a second algebra")
        return tensor(a, b)
    if kind == "enveloping":
        return enveloping(a)
    raise ValueError(f"unknown construction {kind!r}")


def product(*algebras: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """Direct product A_1 x ... x A_r (block-diagonal structure constants)."""
    n = sum(a.dim for a in algebras)
    table = [[{} for _ in range(n)] for _ in range(n)]
    unit = []
    names = []
    idems = []
    offset = 0
    for t, a in enumerate(algebras):
        for i in range(a.dim):
            for j in range(a.dim):
                table[offset + i][offset + j] = {offset + k: c for k, c in a.table[i][j].items()}
        unit.extend(a.unit)
        names.extend(f"{x}[{t}]" if len(algebras) > 1 else x for x in a.names)
        own = a.idempotents if a.idempotents is not None else [a.unit]
        for e in own:
            v = [ZERO] * n
            v[offset : offset + a.dim] = e
            idems.append(tuple(v))
        offset += a.dim
    return FiniteDimAlgebra(table, unit, names, idems)


def subspace_product(a: FiniteDimAlgebra, u: Subspace, v: Subspace) -> Subspace:
    return Subspace(a.dim, [a.mul(x, y) for x in u.basis for y in v.basis])


def is_nilpotent_subspace(a: FiniteDimAlgebra, u: Subspace) -> bool:
    power = u
    for _ in range(a.dim + 1):
        if power.is_zero():
            return True
        power = subspace_product(a, power, u)
    return power.is_zero()


def ideal_generated(a: FiniteDimAlgebra, vectors: Sequence[Sequence]) -> Subspace:
    """Two-sided ideal spanned by a_i x a_j for the given x."""
    out = []
    for x in vectors:
        for i in range(a.dim):
            ax = a.mul(a.basis_vector(i), x)
            for j in range(a.dim):
                out.append(a.mul(ax, a.basis_vector(j)))
    return Subspace(a.dim, out)


def is_two_sided_ideal(a: FiniteDimAlgebra, s: Subspace) -> bool:
    for x in s.basis:
        for i in range(a.dim):
            ai = a.basis_vector(i)
            if not s.contains(a.mul(ai, x)) or not s.contains(a.mul(x, ai)):
                return False
    return True


@dataclass
class QuotientAlgebra:
    algebra: FiniteDimAlgebra
    ideal: Subspace
    quotient: Quotient

    @property
    def projection(self) -> Matrix:
        return self.quotient.project

    def project(self, x: Sequence) -> Vector:
        return self.quotient.project.apply(x)

    def lift(self, y: Sequence) -> Vector:
        return self.quotient.lift.apply(y)


def quotient_algebra(a: FiniteDimAlgebra, ideal: Subspace) -> QuotientAlgebra:
    """A / I on the complement basis given by non-pivot coordinates of I."""
    q = Quotient(ideal)
    free = q.free
    table = []
    for p in free:
        row = []
        for r in free:
            row.append(q.project.apply(_dense(a.table[p][r], a.dim)))
        table.append(row)
    unit = q.project.apply(a.unit)
    names = [a.names[p] for p in free]
    idems = None
    if a.idempotents is not None:
        images = [q.project.apply(e) for e in a.idempotents]
        idems = [e for e in images if any(e)]
    alg = FiniteDimAlgebra(table, unit, names, idems)
    return QuotientAlgebra(alg, ideal, q)


def _dense(entry: dict, n: int) -> Vector:
    v = [ZERO] * n
    for k, c in entry.items():
        v[k] = c
    return tuple(v)


@dataclass
class RadicalResult:
    ideal: Subspace
    quotient: FiniteDimAlgebra
    projection: Matrix
    lift: Matrix

    @property
    def dim(self) -> int:
        return self.ideal.dim


def jacobson_radical(a: FiniteDimAlgebra, check: bool = True) -> RadicalResult:
    """Rad(A) as the kernel of the trace form (x, y) -> tr(L_{xy}).

    The trace-form criterion needs characteristic zero.
    """
    ideal = kernel_basis(a.trace_form())
    qa = quotient_algebra(a, ideal)
    if check:
        if not is_nilpotent_subspace(a, ideal):
            raise AssertionError("trace-form radical is not nilpotent")
        if qa.algebra.dim and qa.algebra.trace_form().rank() != qa.algebra.dim:
            raise AssertionError("semisimple quotient has a degenerate trace form")
    return RadicalResult(ideal, qa.algebra, qa.quotient.project, qa.quotient.lift)


@dataclass
class CornerAlgebra:
    """eAe with its embedding (columns are basis vectors of eAe inside A)."""

    algebra: FiniteDimAlgebra
    embedding: Matrix
    idempotent: Vector

    def to_ambient(self, y: Sequence) -> Vector:
        return self.embedding.apply(y)

    def from_ambient(self, x: Sequence) -> Vector:
        return self._reader(x, check=True)

    @cached_property
    def _reader(self) -> CoordinateReader:
        return CoordinateReader(self.embedding.columns(), self.embedding.rows)


def subalgebra(a: FiniteDimAlgebra, space: Subspace, unit: Sequence, idempotents=None) -> CornerAlgebra:
    basis = list(space.basis)
    reader = CoordinateReader(basis, a.dim)
    table = [[reader(a.mul(x, y), check=True) for y in basis] for x in basis]
    names = []
    for b in basis:
        nz = [k for k, c in enumerate(b) if c]
        names.append(a.names[nz[0]] if len(nz) == 1 and b[nz[0]] == 1 else "(" + "+".join(
            (f"{c}*" if c != 1 else "") + a.names[k] for k, c in enumerate(b) if c) + ")")
    u = reader(unit, check=True) if basis else ()
    idems = [reader(e, check=True) for e in idempotents] if idempotents is not None else None
    alg = FiniteDimAlgebra(table, u, names, idems)
    return CornerAlgebra(alg, Matrix.from_columns(basis, a.dim), tuple(unit))


def corner_space(a: FiniteDimAlgebra, e: Sequence, f: Sequence | None = None) -> Subspace:
    """e A f as a subspace of A."""
    f = e if f is None else f
    return Subspace(a.dim, [a.mul(a.mul(e, a.basis_vector(i)), f) for i in range(a.dim)])


def corner_algebra(a: FiniteDimAlgebra, e: Sequence, idempotents=None) -> CornerAlgebra:
    e = tuple(Q(x) for x in e)
    if not a.is_idempotent(e):
        raise ValueError("corner_algebra needs an idempotent")
    if idempotents is None and a.idempotents is not None:
        inside = [f for f in a.idempotents if a.mul(e, f) == f and a.mul(f, e) == f]
        if inside and vcomb(((ONE, f) for f in inside), a.dim) == e:
            idempotents = inside
    return subalgebra(a, corner_space(a, e), e, idempotents)


def quotient_by_idempotent_ideal(a: FiniteDimAlgebra, e: Sequence) -> QuotientAlgebra:
    """A / AeA."""
    return quotient_algebra(a, ideal_generated(a, [tuple(Q(x) for x in e)]))


# ---------------------------------------------------------------------------
# idempotent calculus built on primitive idempotents


def primitive_idempotents(a: FiniteDimAlgebra, supplied: Sequence[Sequence] | None = None) -> list[Vector]:
    from .idempotents import primitive_idempotents as _impl

    return _impl(a, supplied)


def block_classes(a: FiniteDimAlgebra, idems: Sequence[Sequence]) -> list[int]:
    """Class index per primitive idempotent: equal iff A e_i and A e_j are isomorphic."""
    rad = a.radical
    B = rad.quotient
    images = [rad.projection.apply(e) for e in idems]
    classes: list[int] = []
    reps: list[int] = []
    for i, ei in enumerate(images):
        found = None
        for c, r in enumerate(reps):
            er = images[r]
            if any(any(B.mul(B.mul(ei, B.basis_vector(k)), er)) for k in range(B.dim)):
                found = c
                break
        if found is None:
            reps.append(i)
            found = len(reps) - 1
        classes.append(found)
    return classes


def is_basic(a: FiniteDimAlgebra) -> bool:
    idems = primitive_idempotents(a)
    classes = block_classes(a, idems)
    return len(set(classes)) == len(classes)


def basify(a: FiniteDimAlgebra) -> tuple[FiniteDimAlgebra, Vector]:
    """Basic algebra eAe Morita equivalent to A, and the idempotent e used."""
    idems = primitive_idempotents(a)
    classes = block_classes(a, idems)
    chosen = []
    seen = set()
    for e, c in zip(idems, classes):
        if c not in seen:
            seen.add(c)
            chosen.append(e)
    e = vcomb(((ONE, f) for f in chosen), a.dim)
    corner = corner_algebra(a, e, idempotents=chosen)
    return corner.algebra, e


def cartan_matrix(a: FiniteDimAlgebra) -> list[list[int]]:
    """C[i][j] = dim e_i A e_j over the primitive idempotents."""
    idems = primitive_idempotents(a)
    return [[corner_space(a, ei, ej).dim for ej in idems] for ei in idems]


@dataclass
class IdempotentDiagnostics:
    basic: bool
    corner_in_radical: bool
    rad_corner_equal: bool
    quotient_left_projective: bool
    e_A_one_minus_e_zero: bool
    details: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        if self.basic and not self.corner_in_radical:
            return False
        if not self.rad_corner_equal:
            return False
        if self.basic and self.quotient_left_projective and not self.e_A_one_minus_e_zero:
            return False
        return True

    def as_dict(self) -> dict:
        return {
            "basic": self.basic,
            "one_minus_e_A_e_in_radical": self.corner_in_radical,
            "rad_corner_equals_corner_of_rad": self.rad_corner_equal,
            "quotient_by_AeA_left_projective": self.quotient_left_projective,
            "e_A_one_minus_e_is_zero": self.e_A_one_minus_e_zero,
            "consistent": self.consistent,
            **self.details,
        }


def radical_of_corner_in_ambient(a: FiniteDimAlgebra, e: Sequence) -> tuple[Subspace, Subspace]:
    """(Rad(eAe) embedded in A, e Rad(A) e)."""
    corner = corner_algebra(a, e)
    rc = jacobson_radical(corner.algebra)
    embedded = Subspace(a.dim, [corner.to_ambient(v) for v in rc.ideal.basis])
    rad = a.radical.ideal
    sandwiched = Subspace(a.dim, [a.mul(a.mul(e, r), e) for r in rad.basis])
    return embedded, sandwiched


def idempotent_diagnostics(a: FiniteDimAlgebra, e: Sequence) -> IdempotentDiagnostics:
    from .modules import LeftModule, is_projective

    e = tuple(Q(x) for x in e)
    if not a.is_idempotent(e):
        raise ValueError("not an idempotent")
    one_minus = vsub(a.unit, e)
    basic = is_basic(a)
    rad = a.radical.ideal
    inc = rad.contains_subspace(corner_space(a, one_minus, e))
    embedded, sandwiched = radical_of_corner_in_ambient(a, e)
    qa = quotient_by_idempotent_ideal(a, e)
    quotient_module = LeftModule.quotient_of_regular(a, qa.ideal)
    projective = is_projective(quotient_module)
    e_rest = corner_space(a, e, one_minus)
    return IdempotentDiagnostics(
        basic=basic,
        corner_in_radical=inc,
        rad_corner_equal=embedded == sandwiched,
        quotient_left_projective=projective,
        e_A_one_minus_e_zero=e_rest.is_zero(),
        details={"dim_AeA": qa.ideal.dim, "dim_rad": rad.dim, "dim_e_A_one_minus_e": e_rest.dim},
    )
