"""Left, right and two-sided modules over finite-dimensional algebras.

Actions are stored as one matrix per algebra basis element, acting on column
vectors.  For a right module the matrix ``R_i`` represents ``v -> v a_i``, so
``R_i R_j`` represents right multiplication by ``a_j a_i``.

Hom spaces are computed in a basis adapted to the weight decomposition
``M = (+)_key e M f`` given by a complete set of orthogonal idempotents: any
module map preserves weights, so only block-diagonal unknowns are needed and
only algebra generators (not the whole basis) impose equations.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import (
    FiniteDimAlgebra,
    NonSplit,
    ValidationReport,
    block_classes,
    corner_space,
    primitive_idempotents,
    subspace_product,
)
from .qlinalg import (
    ONE,
    ZERO,
    CoordinateReader,
    Matrix,
    Quotient,
    Subspace,
    Vector,
    kernel_basis,
    kron,
    kron_vec,
    unit_vector,
)


class NotProjective(ValueError):
    pass


# ---------------------------------------------------------------------------
# per-algebra data shared by every module over it


def _alg_cache(alg: FiniteDimAlgebra) -> dict:
    cache = alg.__dict__.get("_module_cache")
    if cache is None:
        cache = {}
        alg.__dict__["_module_cache"] = cache
    return cache


def orthogonal_idempotents(alg: FiniteDimAlgebra) -> list[Vector]:
    """Complete orthogonal idempotents used to block Homs and tensor products."""
    cache = _alg_cache(alg)
    if "orth" not in cache:
        if alg.idempotents is not None and alg.idempotents:
            idems = list(alg.idempotents)
        else:
            try:
                idems = primitive_idempotents(alg)
            except NonSplit:
                idems = [alg.unit]
        cache["orth"] = idems
    return cache["orth"]


def algebra_generators(alg: FiniteDimAlgebra) -> list[Vector]:
    """Weight vectors e x f which, with the orthogonal idempotents, generate alg."""
    cache = _alg_cache(alg)
    if "gens" in cache:
        return cache["gens"]
    idems = orthogonal_idempotents(alg)
    n = alg.dim
    rad = alg.radical.ideal
    if Subspace(n, list(idems) + list(rad.basis)).dim == n:
        # A = span(idempotents) + Rad, and Rad is generated by a complement of Rad^2
        current = subspace_product(alg, rad, rad)
        pool = []
        for r in rad.basis:
            if not current.contains(r):
                pool.append(r)
                current = Subspace(n, current.basis + (r,))
    else:
        pool = [alg.basis_vector(k) for k in range(n)]
    gens: list[Vector] = []
    span = Subspace.zero(n)
    for x in pool:
        for e in idems:
            ex = alg.mul(e, x)
            for f in idems:
                y = alg.mul(ex, f)
                if any(y) and not span.contains(y):
                    gens.append(y)
                    span = Subspace(n, span.basis + (y,))
    cache["gens"] = gens
    return gens


def label_idempotents(alg: FiniteDimAlgebra) -> list[Vector]:
    """One primitive idempotent per isomorphism class of indecomposable projective."""
    cache = _alg_cache(alg)
    if "labels" not in cache:
        idems = primitive_idempotents(alg)
        classes = block_classes(alg, idems)
        seen = set()
        reps = []
        for e, c in zip(idems, classes):
            if c not in seen:
                seen.add(c)
                reps.append(e)
        cache["labels"] = reps
    return cache["labels"]


def _combine(mats: Sequence[Matrix], x: Sequence, dim: int) -> Matrix:
    acc = None
    for c, m in zip(x, mats):
        if c:
            acc = m.scale(c) if acc is None else acc + m.scale(c)
    return acc if acc is not None else Matrix.zeros(dim, dim)


def _apply_combination(mats: Sequence[Matrix], x: Sequence, v: Sequence) -> Vector:
    out = [ZERO] * len(v)
    for c, m in zip(x, mats):
        if c:
            w = m.apply(v)
            for k, y in enumerate(w):
                if y:
                    out[k] += c * y
    return tuple(out)


# ---------------------------------------------------------------------------
# module types


@dataclass(frozen=True)
class FreeData:
    """Presentation of a cyclic projective: A e, e A, or A e (x) f A with its generator."""

    kind: str  # "left", "right" or "bi"
    left_idempotent: Vector | None
    right_idempotent: Vector | None
    left_basis: tuple  # basis of A e inside A (kind left/bi)
    right_basis: tuple  # basis of f A inside A (kind right/bi)
    generator: Vector  # e, f or e (x) f in module coordinates


class _Module:
    kind = ""
    algebra: FiniteDimAlgebra

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def all_actions(self) -> list[Matrix]:
        raise NotImplementedError

    def weight_projectors(self) -> list[tuple]:
        raise NotImplementedError

    def generator_actions(self) -> list[Matrix]:
        raise NotImplementedError

    def radical_part(self) -> Subspace:
        raise NotImplementedError

    def cache(self) -> dict:
        c = self.__dict__.get("_cache")
        if c is None:
            c = {}
            object.__setattr__(self, "_cache", c)
        return c


@dataclass(eq=False)
class LeftModule(_Module):
    algebra: FiniteDimAlgebra
    action: tuple
    name: str = ""
    free: FreeData | None = None
    kind = "left"

    def __post_init__(self):
        self.action = tuple(self.action)
        if len(self.action) != self.algebra.dim:
            raise ValueError("one action matrix per algebra basis element expected")

    @property
    def dim(self) -> int:
        return self.action[0].rows

    def matrix(self, x: Sequence) -> Matrix:
        return _combine(self.action, x, self.dim)

    def act(self, x: Sequence, v: Sequence) -> Vector:
        return _apply_combination(self.action, x, v)

    def all_actions(self) -> list[Matrix]:
        return list(self.action)

    def weight_projectors(self):
        return [((m,), self.matrix(e)) for m, e in enumerate(orthogonal_idempotents(self.algebra))]

    def generator_actions(self):
        return [self.matrix(g) for g in algebra_generators(self.algebra)]

    def radical_part(self) -> Subspace:
        cols = []
        for r in self.algebra.radical.ideal.basis:
            cols.extend(self.matrix(r).columns())
        return Subspace(self.dim, cols)

    def restrict(self, basis: Sequence[Sequence], name: str = "") -> "LeftModule":
        reader = CoordinateReader(basis, self.dim)
        acts = [Matrix.from_columns([reader(L.apply(b), check=True) for b in basis], len(basis)) for L in self.action]
        return LeftModule(self.algebra, acts, name)

    def quotient(self, sub: Subspace, name: str = "") -> tuple["LeftModule", Quotient]:
        q = Quotient(sub)
        acts = [q.project @ L @ q.lift for L in self.action]
        return LeftModule(self.algebra, acts, name), q

    @classmethod
    def regular(cls, alg: FiniteDimAlgebra) -> "LeftModule":
        return cls(alg, alg.left_regular, "A")

    @classmethod
    def quotient_of_regular(cls, alg: FiniteDimAlgebra, ideal: Subspace) -> "LeftModule":
        return cls.regular(alg).quotient(ideal, "A/I")[0]


@dataclass(eq=False)
class RightModule(_Module):
    algebra: FiniteDimAlgebra
    action: tuple
    name: str = ""
    free: FreeData | None = None
    kind = "right"

    def __post_init__(self):
        self.action = tuple(self.action)
        if len(self.action) != self.algebra.dim:
            raise ValueError("one action matrix per algebra basis element expected")

    @property
    def dim(self) -> int:
        return self.action[0].rows

    def matrix(self, x: Sequence) -> Matrix:
        return _combine(self.action, x, self.dim)

    def act(self, v: Sequence, x: Sequence) -> Vector:
        return _apply_combination(self.action, x, v)

    def all_actions(self) -> list[Matrix]:
        return list(self.action)

    def weight_projectors(self):
        return [((m,), self.matrix(e)) for m, e in enumerate(orthogonal_idempotents(self.algebra))]

    def generator_actions(self):
        return [self.matrix(g) for g in algebra_generators(self.algebra)]

    def radical_part(self) -> Subspace:
        cols = []
        for r in self.algebra.radical.ideal.basis:
            cols.extend(self.matrix(r).columns())
        return Subspace(self.dim, cols)

    def restrict(self, basis: Sequence[Sequence], name: str = "") -> "RightModule":
        reader = CoordinateReader(basis, self.dim)
        acts = [Matrix.from_columns([reader(R.apply(b), check=True) for b in basis], len(basis)) for R in self.action]
        return RightModule(self.algebra, acts, name)

    def quotient(self, sub: Subspace, name: str = "") -> tuple["RightModule", Quotient]:
        q = Quotient(sub)
        acts = [q.project @ R @ q.lift for R in self.action]
        return RightModule(self.algebra, acts, name), q

    @classmethod
    def regular(cls, alg: FiniteDimAlgebra) -> "RightModule":
        return cls(alg, alg.right_regular, "A")


@dataclass(eq=False)
class Bimodule(_Module):
    """An A-A bimodule (left and right algebras are the same object)."""

    algebra: FiniteDimAlgebra
    left: tuple
    right: tuple
    name: str = ""
    free: FreeData | None = None
    kind = "bi"

    def __post_init__(self):
        self.left = tuple(self.left)
        self.right = tuple(self.right)
        n = self.algebra.dim
        if len(self.left) != n or len(self.right) != n:
            raise ValueError("one action matrix per algebra basis element expected on each side")

    @property
    def dim(self) -> int:
        return self.left[0].rows

    def left_matrix(self, x: Sequence) -> Matrix:
        return _combine(self.left, x, self.dim)

    def right_matrix(self, x: Sequence) -> Matrix:
        return _combine(self.right, x, self.dim)

    def act_left(self, x: Sequence, v: Sequence) -> Vector:
        return _apply_combination(self.left, x, v)

    def act_right(self, v: Sequence, x: Sequence) -> Vector:
        return _apply_combination(self.right, x, v)

    def all_actions(self) -> list[Matrix]:
        return list(self.left) + list(self.right)

    def weight_projectors(self):
        idems = orthogonal_idempotents(self.algebra)
        lefts = [self.left_matrix(e) for e in idems]
        rights = [self.right_matrix(e) for e in idems]
        return [((m, p), L @ R) for m, L in enumerate(lefts) for p, R in enumerate(rights)]

    def generator_actions(self):
        gens = algebra_generators(self.algebra)
        return [self.left_matrix(g) for g in gens] + [self.right_matrix(g) for g in gens]

    def radical_part(self) -> Subspace:
        cols = []
        for r in self.algebra.radical.ideal.basis:
            cols.extend(self.left_matrix(r).columns())
            cols.extend(self.right_matrix(r).columns())
        return Subspace(self.dim, cols)

    def restrict(self, basis: Sequence[Sequence], name: str = "") -> "Bimodule":
        reader = CoordinateReader(basis, self.dim)
        k = len(basis)

        def restricted(m: Matrix) -> Matrix:
            return Matrix.from_columns([reader(m.apply(b), check=True) for b in basis], k)

        return Bimodule(self.algebra, [restricted(L) for L in self.left], [restricted(R) for R in self.right], name)

    def quotient(self, sub: Subspace, name: str = "") -> tuple["Bimodule", Quotient]:
        q = Quotient(sub)
        return (
            Bimodule(
                self.algebra,
                [q.project @ L @ q.lift for L in self.left],
                [q.project @ R @ q.lift for R in self.right],
                name,
            ),
            q,
        )

    def left_restriction(self) -> LeftModule:
        return LeftModule(self.algebra, self.left, self.name)

    def right_restriction(self) -> RightModule:
        return RightModule(self.algebra, self.right, self.name)

    def to_enveloping(self, env: FiniteDimAlgebra | None = None) -> LeftModule:
        """Left module over A^op (x) A: basis element (i, j) acts by v -> a_j v a_i."""
        from .algebra import enveloping

        env = env if env is not None else enveloping(self.algebra)
        n = self.algebra.dim
        acts = [self.left[j] @ self.right[i] for i in range(n) for j in range(n)]
        return LeftModule(env, acts, self.name)


Module = LeftModule | RightModule | Bimodule


@dataclass(frozen=True)
class ModuleMap:
    source: _Module
    target: _Module
    matrix: Matrix

    def is_homomorphism(self) -> bool:
        return is_module_map(self.source, self.target, self.matrix)


def is_module_map(m: _Module, n: _Module, f: Matrix) -> bool:
    if f.shape != (n.dim, m.dim):
        return False
    return all(B @ f == f @ A for A, B in zip(m.all_actions(), n.all_actions()))


def validate_module(m: _Module) -> ValidationReport:
    """Unit acts as the identity, actions respect products, and (for bimodules) sides commute."""
    alg = m.algebra
    n = alg.dim
    ident = Matrix.identity(m.dim)
    sides = []
    if isinstance(m, LeftModule):
        sides.append(("left", m.action, False))
    elif isinstance(m, RightModule):
        sides.append(("right", m.action, True))
    else:
        sides.extend([("left", m.left, False), ("right", m.right, True)])
    for side, mats, reverse in sides:
        for M in mats:
            if M.shape != (m.dim, m.dim):
                return ValidationReport(False, f"{side} action has the wrong shape", ())
        if _combine(mats, alg.unit, m.dim) != ident:
            return ValidationReport(False, f"{side} unit law", ())
        for i in range(n):
            for j in range(n):
                prod = alg.table[j][i] if reverse else alg.table[i][j]
                expected = Matrix.zeros(m.dim, m.dim)
                for k, c in prod.items():
                    expected = expected + mats[k].scale(c)
                if mats[i] @ mats[j] != expected:
                    return ValidationReport(False, f"{side} action is not multiplicative", (i, j))
    if isinstance(m, Bimodule):
        for i, L in enumerate(m.left):
            for j, R in enumerate(m.right):
                if L @ R != R @ L:
                    return ValidationReport(False, "left and right actions do not commute", (i, j))
    return ValidationReport(True)


# ---------------------------------------------------------------------------
# free modules


def _ideal_basis(alg: FiniteDimAlgebra, e: Sequence, left: bool) -> tuple:
    """Echelon basis of A e (left=True) or e A."""
    n = alg.dim
    if left:
        vecs = [alg.mul(alg.basis_vector(k), e) for k in range(n)]
    else:
        vecs = [alg.mul(e, alg.basis_vector(k)) for k in range(n)]
    return Subspace(n, vecs).basis


def _restricted_mult(alg: FiniteDimAlgebra, basis: Sequence, left: bool) -> list[Matrix]:
    reader = CoordinateReader(basis, alg.dim)
    k = len(basis)
    mats = []
    for i in range(alg.dim):
        ai = alg.basis_vector(i)
        cols = [reader(alg.mul(ai, b) if left else alg.mul(b, ai), check=True) for b in basis]
        mats.append(Matrix.from_columns(cols, k))
    return mats


def projective_left(alg: FiniteDimAlgebra, label: int) -> LeftModule:
    """The indecomposable projective A e for the label's idempotent."""
    e = label_idempotents(alg)[label]
    cache = _alg_cache(alg)
    key = ("projL", label)
    if key not in cache:
        basis = _ideal_basis(alg, e, left=True)
        gen = CoordinateReader(basis, alg.dim)(e, check=True)
        fd = FreeData("left", e, None, basis, (), gen)
        cache[key] = LeftModule(alg, _restricted_mult(alg, basis, True), f"P{label + 1}", fd)
    return cache[key]


def projective_right(alg: FiniteDimAlgebra, label: int) -> RightModule:
    e = label_idempotents(alg)[label]
    cache = _alg_cache(alg)
    key = ("projR", label)
    if key not in cache:
        basis = _ideal_basis(alg, e, left=False)
        gen = CoordinateReader(basis, alg.dim)(e, check=True)
        fd = FreeData("right", None, e, (), basis, gen)
        cache[key] = RightModule(alg, _restricted_mult(alg, basis, False), f"P{label + 1}'", fd)
    return cache[key]


def free_bimodule(alg: FiniteDimAlgebra, i: int, j: int) -> Bimodule:
    """A e_i (x) e_j A with outer actions (labels are 0-based indices)."""
    cache = _alg_cache(alg)
    key = ("free", i, j)
    if key in cache:
        return cache[key]
    idems = label_idempotents(alg)
    ei, ej = idems[i], idems[j]
    lb = _ideal_basis(alg, ei, left=True)
    rb = _ideal_basis(alg, ej, left=False)
    lmult = _restricted_mult(alg, lb, True)
    rmult = _restricted_mult(alg, rb, False)
    il, ir = Matrix.identity(len(lb)), Matrix.identity(len(rb))
    left = [kron(L, ir) for L in lmult]
    right = [kron(il, R) for R in rmult]
    gen = kron_vec(CoordinateReader(lb, alg.dim)(ei, check=True), CoordinateReader(rb, alg.dim)(ej, check=True))
    fd = FreeData("bi", ei, ej, lb, rb, gen)
    b = Bimodule(alg, left, right, f"F({i + 1},{j + 1})", fd)
    cache[key] = b
    return b


def regular_bimodule(alg: FiniteDimAlgebra) -> Bimodule:
    return Bimodule(alg, alg.left_regular, alg.right_regular, "A")


def bimodule_labels(alg: FiniteDimAlgebra) -> list[tuple[int, int]]:
    k = len(label_idempotents(alg))
    return [(i, j) for i in range(k) for j in range(k)]


def _free_of(alg: FiniteDimAlgebra, kind: str, label) -> _Module:
    if kind == "left":
        return projective_left(alg, label)
    if kind == "right":
        return projective_right(alg, label)
    return free_bimodule(alg, *label)


def yoneda_space(src: _Module, target: _Module) -> Subspace:
    """e N, N f or e N f: the space classifying maps out of a cyclic projective."""
    fd = src.free
    if fd is None:
        raise ValueError("source is not a presented cyclic projective")
    if fd.kind == "left":
        return Subspace.column_space(target.matrix(fd.left_idempotent))
    if fd.kind == "right":
        return Subspace.column_space(target.matrix(fd.right_idempotent))
    return Subspace.column_space(target.left_matrix(fd.left_idempotent) @ target.right_matrix(fd.right_idempotent))


def yoneda_map(src: _Module, target: _Module, n: Sequence) -> Matrix:
    """The module map sending the generator of ``src`` to ``n``."""
    fd = src.free
    if fd.kind == "left":
        cols = [target.act(u, n) for u in fd.left_basis]
    elif fd.kind == "right":
        cols = [target.act(n, v) for v in fd.right_basis]
    else:
        rights = [target.act_right(n, v) for v in fd.right_basis]
        cols = [target.act_left(u, w) for u in fd.left_basis for w in rights]
    return Matrix.from_columns(cols, target.dim)


# ---------------------------------------------------------------------------
# Hom spaces


@dataclass
class HomSpace:
    source: _Module
    target: _Module
    basis: list  # of Matrix (target.dim x source.dim)
    _coords: Callable | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, f: Matrix) -> Vector:
        if self._coords is None:
            reader = CoordinateReader([b.flatten() for b in self.basis], self.source.dim * self.target.dim)
            self._coords = lambda g: reader(g.flatten(), check=True)
        return self._coords(f)

    def element(self, coeffs: Sequence) -> Matrix:
        out = Matrix.zeros(self.target.dim, self.source.dim)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def subspace(self) -> Subspace:
        """Canonical subspace of flattened matrices."""
        return Subspace(self.source.dim * self.target.dim, [b.flatten() for b in self.basis])


@dataclass
class _Adapted:
    keys: list
    blocks: list  # list of lists of vectors
    offsets: list
    T: Matrix  # columns = concatenated block bases
    Tinv: Matrix
    gens: list  # generator actions in adapted coordinates


def _adapted(m: _Module) -> _Adapted:
    cache = m.cache()
    if "adapted" in cache:
        return cache["adapted"]
    keys, blocks = [], []
    for key, P in m.weight_projectors():
        keys.append(key)
        blocks.append(list(Subspace.column_space(P).basis) if m.dim else [])
    flat = [v for b in blocks for v in b]
    if len(flat) != m.dim:
        raise AssertionError("weight spaces do not decompose the module")
    offsets = []
    o = 0
    for b in blocks:
        offsets.append(o)
        o += len(b)
    reader = CoordinateReader(flat, m.dim)
    T = Matrix.from_columns(flat, m.dim)
    Tinv = Matrix.from_columns([reader(unit_vector(m.dim, j)) for j in range(m.dim)], m.dim) if m.dim else T
    gens = [Matrix.from_columns([reader(G.apply(v)) for v in flat], m.dim) if m.dim else G for G in m.generator_actions()]
    ad = _Adapted(keys, blocks, offsets, T, Tinv, gens)
    cache["adapted"] = ad
    return ad


def _same_kind(m: _Module, n: _Module) -> None:
    if m.kind != n.kind or m.algebra is not n.algebra:
        raise ValueError("Hom needs modules of the same kind over the same algebra")


def hom_generic(m: _Module, n: _Module) -> HomSpace:
    """All module maps m -> n by solving the intertwining equations blockwise."""
    _same_kind(m, n)
    am, an = _adapted(m), _adapted(n)
    # unknown Y_k : block k of m -> block k of n, stored row-major
    sizes = [(len(bn), len(bm)) for bn, bm in zip(an.blocks, am.blocks)]
    uoff = []
    u = 0
    for rn, cm in sizes:
        uoff.append(u)
        u += rn * cm
    block_of_n = [k for k, b in enumerate(an.blocks) for _ in b]
    block_of_m = [k for k, b in enumerate(am.blocks) for _ in b]
    rows = []
    for GM, GN in zip(am.gens, an.gens):
        gn, gm = GN.data, GM.data
        for rho in range(n.dim):
            kp = block_of_n[rho]
            rloc = rho - an.offsets[kp]
            for gamma in range(m.dim):
                k = block_of_m[gamma]
                cloc = gamma - am.offsets[k]
                row = None
                # (G_N Y)[rho, gamma]
                ncols = sizes[k][1]
                for sl in range(sizes[k][0]):
                    c = gn[rho][an.offsets[k] + sl]
                    if c:
                        row = row or [ZERO] * u
                        row[uoff[k] + sl * ncols + cloc] += c
                # -(Y G_M)[rho, gamma]
                ncols2 = sizes[kp][1]
                for tl in range(ncols2):
                    c = gm[am.offsets[kp] + tl][gamma]
                    if c:
                        row = row or [ZERO] * u
                        row[uoff[kp] + rloc * ncols2 + tl] -= c
                if row is not None and any(row):
                    rows.append(tuple(row))
    sol = kernel_basis(Matrix._raw(rows, u)) if rows else Subspace.full(u)
    basis = []
    for y in sol.basis:
        big = [[ZERO] * m.dim for _ in range(n.dim)]
        for k, (rn, cm) in enumerate(sizes):
            for r in range(rn):
                for c in range(cm):
                    val = y[uoff[k] + r * cm + c]
                    if val:
                        big[an.offsets[k] + r][am.offsets[k] + c] = val
        Y = Matrix._raw([tuple(r) for r in big], m.dim)
        basis.append(an.T @ Y @ am.Tinv)
    return HomSpace(m, n, basis)


def hom_yoneda(m: _Module, n: _Module) -> HomSpace:
    """Maps out of a presented cyclic projective, via Hom(A e (x) f A, N) = e N f."""
    _same_kind(m, n)
    space = yoneda_space(m, n)
    basis = [yoneda_map(m, n, v) for v in space.basis]
    reader = CoordinateReader(list(space.basis), n.dim)
    gen = m.free.generator
    return HomSpace(m, n, basis, lambda f: reader(f.apply(gen), check=True))


def hom_space(m: _Module, n: _Module) -> HomSpace:
    if m.free is not None:
        return hom_yoneda(m, n)
    return hom_generic(m, n)


def endomorphism_algebra(m: _Module, hom: HomSpace | None = None) -> tuple[FiniteDimAlgebra, HomSpace]:
    """End(m) with product x y = x o y on the Hom basis."""
    hom = hom if hom is not None else hom_space(m, m)
    table = [[hom.coordinates(x @ y) for y in hom.basis] for x in hom.basis]
    unit = hom.coordinates(Matrix.identity(m.dim))
    return FiniteDimAlgebra(table, unit, [f"f{k}" for k in range(hom.dim)]), hom


def is_local(m: _Module) -> bool:
    """End(m) / Rad End(m) is one-dimensional (m indecomposable, split case)."""
    if m.dim == 0:
        return False
    end, _ = endomorphism_algebra(m)
    return end.radical.quotient.dim == 1


# ---------------------------------------------------------------------------
# simples, tops and projective covers


def _label_list(m: _Module) -> list:
    k = len(label_idempotents(m.algebra))
    if m.kind == "bi":
        return [(i, j) for i in range(k) for j in range(k)]
    return list(range(k))


def _label_projector(m: _Module, label) -> Matrix:
    idems = label_idempotents(m.algebra)
    if m.kind == "bi":
        i, j = label
        return m.left_matrix(idems[i]) @ m.right_matrix(idems[j])
    return m.matrix(idems[label])


def simple_modules(alg: FiniteDimAlgebra) -> list[LeftModule]:
    """B e for each label, B = A / Rad(A), pulled back to A."""
    rad = alg.radical
    B = rad.quotient
    out = []
    for c, e in enumerate(label_idempotents(alg)):
        eb = rad.projection.apply(e)
        basis = _ideal_basis(B, eb, left=True)
        reader = CoordinateReader(basis, B.dim)
        acts = []
        for i in range(alg.dim):
            x = rad.projection.apply(alg.basis_vector(i))
            acts.append(Matrix.from_columns([reader(B.mul(x, b), check=True) for b in basis], len(basis)))
        out.append(LeftModule(alg, acts, f"S{c + 1}"))
    return out


def simple_right_modules(alg: FiniteDimAlgebra) -> list[RightModule]:
    rad = alg.radical
    B = rad.quotient
    out = []
    for c, e in enumerate(label_idempotents(alg)):
        eb = rad.projection.apply(e)
        basis = _ideal_basis(B, eb, left=False)
        reader = CoordinateReader(basis, B.dim)
        acts = []
        for i in range(alg.dim):
            x = rad.projection.apply(alg.basis_vector(i))
            acts.append(Matrix.from_columns([reader(B.mul(b, x), check=True) for b in basis], len(basis)))
        out.append(RightModule(alg, acts, f"S{c + 1}'"))
    return out


def simple_bimodule(alg: FiniteDimAlgebra, i: int, j: int) -> Bimodule:
    """S_i (x) S'_j: top of the free bimodule F(i, j)."""
    s = simple_modules(alg)[i]
    t = simple_right_modules(alg)[j]
    il, ir = Matrix.identity(s.dim), Matrix.identity(t.dim)
    return Bimodule(alg, [kron(L, ir) for L in s.action], [kron(il, R) for R in t.action], f"S({i + 1},{j + 1})")


def simple_bimodules(alg: FiniteDimAlgebra) -> dict:
    return {lab: simple_bimodule(alg, *lab) for lab in bimodule_labels(alg)}


@dataclass
class Top:
    module: _Module
    multiplicities: dict
    quotient: Quotient


def _split_denominator(m: _Module, label) -> int:
    """dim e S e' for the simple with this label (1 in the split case)."""
    alg = m.algebra
    cache = _alg_cache(alg)
    key = ("den", m.kind, label)
    if key not in cache:
        if m.kind == "left":
            s = simple_modules(alg)[label]
            cache[key] = Subspace.column_space(s.matrix(label_idempotents(alg)[label])).dim
        elif m.kind == "right":
            s = simple_right_modules(alg)[label]
            cache[key] = Subspace.column_space(s.matrix(label_idempotents(alg)[label])).dim
        else:
            cache[key] = _split_denominator(LeftModule.regular(alg), label[0]) * _split_denominator(
                RightModule.regular(alg), label[1]
            )
    return cache[key]


def top(m: _Module) -> Top:
    rad = m.radical_part()
    quotient_module, q = m.quotient(rad, f"top({m.name})")
    mult = {}
    for lab in _label_list(m):
        d = Subspace.column_space(_label_projector(quotient_module, lab)).dim if quotient_module.dim else 0
        den = _split_denominator(m, lab)
        if d % den:
            raise NonSplit("top multiplicity is not an integer")
        if d:
            mult[lab] = d // den
    return Top(quotient_module, mult, q)


def _top_generators(m: _Module) -> list[tuple]:
    """(label, w) with w in the label's weight space, lifting a basis of the top."""
    rad = m.radical_part()
    out = []
    for lab in _label_list(m):
        weight = Subspace.column_space(_label_projector(m, lab)) if m.dim else Subspace.zero(0)
        if weight.is_zero():
            continue
        current = rad
        for w in weight.basis:
            if not current.contains(w):
                out.append((lab, w))
                current = Subspace(m.dim, current.basis + (w,))
    return out


@dataclass
class ProjectiveCover:
    labels: list
    summands: list
    map: Matrix  # from (+) summands onto m

    @property
    def module_dim(self) -> int:
        return sum(s.dim for s in self.summands)


def projective_cover(m: _Module) -> ProjectiveCover:
    gens = _top_generators(m)
    summands = [_free_of(m.algebra, m.kind, lab) for lab, _ in gens]
    blocks = [yoneda_map(s, m, w) for s, (_, w) in zip(summands, gens)]
    phi = Matrix.hstack(blocks, m.dim) if blocks else Matrix.zeros(m.dim, 0)
    if phi.rank() != m.dim:
        raise AssertionError("projective cover map is not surjective")
    return ProjectiveCover([lab for lab, _ in gens], summands, phi)


def is_projective(m: _Module) -> bool:
    return projective_cover(m).module_dim == m.dim


def decompose_projective(m: _Module) -> Counter:
    """Multiplicities of indecomposable projectives, read off the top."""
    t = top(m)
    total = sum(mult * _free_of(m.algebra, m.kind, lab).dim for lab, mult in t.multiplicities.items())
    if total != m.dim:
        raise NotProjective(f"top predicts dimension {total}, module has {m.dim}")
    return Counter(t.multiplicities)


@dataclass
class ProjectiveSplitting:
    """m = (+)_s P_s with inclusions and projections."""

    labels: list
    summands: list
    generators: list  # image of each summand's generator in m
    inclusions: list
    projections: list


def split_projective(m: _Module) -> ProjectiveSplitting:
    gens = _top_generators(m)
    summands = [_free_of(m.algebra, m.kind, lab) for lab, _ in gens]
    blocks = [yoneda_map(s, m, w) for s, (_, w) in zip(summands, gens)]
    total = sum(s.dim for s in summands)
    if total != m.dim:
        raise NotProjective(f"projective cover has dimension {total}, module has {m.dim}")
    if not blocks:
        return ProjectiveSplitting([], [], [], [], [])
    phi = Matrix.hstack(blocks, m.dim)
    try:
        inv = phi.inverse()
    except ZeroDivisionError as exc:
        raise NotProjective("cover map is not injective") from exc
    projections = []
    o = 0
    for s in summands:
        projections.append(Matrix._raw(inv.data[o : o + s.dim], m.dim))
        o += s.dim
    return ProjectiveSplitting([lab for lab, _ in gens], summands, [w for _, w in gens], blocks, projections)


def composition_factors(m: _Module) -> Counter:
    """Multiplicities of simples, summed over the radical layers M > Rad M > Rad^2 M > ..."""
    alg = m.algebra
    rad_basis = alg.radical.ideal.basis
    if m.kind == "bi":
        acts = [m.left_matrix(r) for r in rad_basis] + [m.right_matrix(r) for r in rad_basis]
    else:
        acts = [m.matrix(r) for r in rad_basis]
    layer = Subspace.full(m.dim)
    projectors = {lab: _label_projector(m, lab) for lab in _label_list(m)}
    counts: Counter = Counter()
    while not layer.is_zero():
        nxt = Subspace(m.dim, [A.apply(v) for A in acts for v in layer.basis])
        for lab, P in projectors.items():
            d = Subspace(m.dim, [P.apply(v) for v in layer.basis]).dim - Subspace(
                m.dim, [P.apply(v) for v in nxt.basis]
            ).dim
            if d:
                counts[lab] += d // _split_denominator(m, lab)
        if nxt == layer:
            raise AssertionError("radical layers do not terminate")
        layer = nxt
    return counts


def direct_sum_modules(mods: Sequence[_Module], name: str = "") -> _Module:
    first = mods[0]
    if first.kind == "bi":
        return Bimodule(
            first.algebra,
            [Matrix.block_diag([m.left[k] for m in mods]) for k in range(first.algebra.dim)],
            [Matrix.block_diag([m.right[k] for m in mods]) for k in range(first.algebra.dim)],
            name,
        )
    cls = type(first)
    return cls(first.algebra, [Matrix.block_diag([m.action[k] for m in mods]) for k in range(first.algebra.dim)], name)


def corner_dims(alg: FiniteDimAlgebra) -> list[list[int]]:
    """dim e_i A e_j over the label idempotents (the Cartan matrix of a basic algebra)."""
    idems = label_idempotents(alg)
    return [[corner_space(alg, ei, ej).dim for ej in idems] for ei in idems]
