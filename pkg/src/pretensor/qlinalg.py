"""Exact dense linear algebra over the rationals.

Scalars are ``gmpy2.mpq`` values.  Vectors are tuples of scalars, matrices
are :class:`Matrix` instances (row-major, treated as immutable), and
subspaces are stored through a canonical reduced echelon basis so that two
equal subspaces compare equal structurally.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

Vector = tuple

ZERO = mpq(0)
ONE = mpq(1)


class NoSolution(ValueError):
    """Raised by :func:`solve` for an inconsistent system."""


class DimensionMismatch(ValueError):
    pass


def Q(x) -> mpq:
    """Coerce ints, strings ("p/q"), Fractions and mpq to a rational."""
    if isinstance(x, str):
        return mpq(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; use 'p/q' strings")
    return mpq(x)


def qstr(x) -> str:
    """Serialize a rational as "p/q" (or "p" when q = 1)."""
    return str(mpq(x))


def vec(xs: Iterable) -> Vector:
    return tuple(Q(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def vcomb(terms: Iterable[tuple], n: int) -> Vector:
    """Sum of ``c * v`` over ``(c, v)`` pairs, in dimension ``n``."""
    acc = [ZERO] * n
    for c, v in terms:
        if c == 0:
            continue
        for i, a in enumerate(v):
            if a:
                acc[i] += c * a
    return tuple(acc)


def is_zero_vector(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def dot(u: Sequence, v: Sequence):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


class Matrix:
    """Dense rational matrix.

    ``Matrix([[1, 2], [3, 4]])`` builds a 2x2 matrix; an empty list needs an
    explicit column count (``Matrix([], cols=3)``).
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Sequence] = (), cols: int | None = None, *, _trusted: bool = False):
        if _trusted:
            rows = data
        else:
            rows = [tuple(Q(x) for x in r) for r in data]
        if cols is None:
            if not rows:
                raise ValueError("empty matrix needs an explicit column count")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self.data = rows

    # construction -----------------------------------------------------
    @classmethod
    def _raw(cls, rows: list, cols: int) -> "Matrix":
        return cls(rows, cols, _trusted=True)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        z = (ZERO,) * cols
        return cls._raw([z] * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw([unit_vector(n, i) for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        if not columns:
            return cls.zeros(rows, 0)
        return cls._raw([tuple(c[i] for c in columns) for i in range(rows)], len(columns))

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        rows = []
        for i, x in enumerate(entries):
            r = [ZERO] * n
            r[i] = Q(x)
            rows.append(tuple(r))
        return cls._raw(rows, n)

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        cols = sum(b.cols for b in blocks)
        out = []
        offset = 0
        for b in blocks:
            left = (ZERO,) * offset
            right = (ZERO,) * (cols - offset - b.cols)
            out.extend(left + r + right for r in b.data)
            offset += b.cols
        return cls._raw(out, cols)

    @classmethod
    def hstack(cls, blocks: Sequence["Matrix"], rows: int | None = None) -> "Matrix":
        if not blocks:
            return cls.zeros(rows or 0, 0)
        n = blocks[0].rows
        if any(b.rows != n for b in blocks):
            raise DimensionMismatch("hstack row counts differ")
        out = [sum((b.data[i] for b in blocks), ()) for i in range(n)]
        return cls._raw(out, sum(b.cols for b in blocks))

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"], cols: int | None = None) -> "Matrix":
        if not blocks:
            return cls.zeros(0, cols or 0)
        c = blocks[0].cols
        if any(b.cols != c for b in blocks):
            raise DimensionMismatch("vstack column counts differ")
        out = []
        for b in blocks:
            out.extend(b.data)
        return cls._raw(out, c)

    # access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[Vector]:
        return [tuple(r[j] for r in self.data) for j in range(self.cols)]

    def flatten(self) -> Vector:
        return sum(self.data, ())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.data)))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(qstr(x) for x in r) + "]" for r in self.data)
        return f"Matrix([{body}], cols={self.cols})"

    def tolist(self) -> list[list[str]]:
        return [[qstr(x) for x in r] for r in self.data]

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix._raw([tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix._raw([tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)], self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw([tuple(-a for a in r) for r in self.data], self.cols)

    def scale(self, c) -> "Matrix":
        c = Q(c)
        return Matrix._raw([tuple(c * a for a in r) for r in self.data], self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        n = other.cols
        odata = other.data
        out = []
        for r in self.data:
            acc = [ZERO] * n
            for k, a in enumerate(r):
                if a:
                    brow = odata[k]
                    for j in range(n):
                        b = brow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(out, n)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"{self.shape} applied to length {len(v)}")
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(sum((r[k] * a for k, a in nz), ZERO) for r in self.data)

    @property
    def T(self) -> "Matrix":
        if self.rows == 0:
            return Matrix.zeros(self.cols, 0)
        return Matrix._raw([tuple(c) for c in zip(*self.data)], self.rows)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.data for a in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw([tuple(self.data[i][j] for j in cols) for i in rows], len(cols))

    def rank(self) -> int:
        return len(rref(self)[1])

    def trace(self):
        return sum((self.data[i][i] for i in range(min(self.rows, self.cols))), ZERO)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix.hstack([self, Matrix.identity(n)]) if n else self
        red, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix._raw([r[n:] for r in red.data], n)


def _rref_rows(rows: list[list], ncols: int) -> list[int]:
    """In-place reduced row echelon form of mutable rows; returns pivots."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = ONE / prow[c]
        if inv != 1:
            prow = [x * inv if x else x for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                row = rows[i]
                f = row[c]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Unique reduced row echelon form of ``m`` and its pivot columns."""
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(rows, m.cols)
    return Matrix._raw([tuple(r) for r in rows], m.cols), pivots


def _echelon_basis(vectors: Iterable[Sequence], n: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    rows = [list(v) for v in vectors if any(v)]
    for v in rows:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")
    pivots = _rref_rows(rows, n)
    return tuple(tuple(r) for r in rows[: len(pivots)]), tuple(pivots)


class Subspace:
    """A subspace of ``Q^n`` with canonical reduced-echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        self.ambient_dim = ambient_dim
        self.basis, self.pivots = _echelon_basis(vectors, ambient_dim)

    @classmethod
    def _canonical(cls, n: int, basis, pivots) -> "Subspace":
        s = object.__new__(cls)
        s.ambient_dim = n
        s.basis = basis
        s.pivots = pivots
        return s

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls._canonical(n, (), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls._canonical(n, tuple(unit_vector(n, i) for i in range(n)), tuple(range(n)))

    @classmethod
    def column_space(cls, m: Matrix) -> "Subspace":
        return cls(m.rows, m.columns())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(ambient={self.ambient_dim}, dim={self.dim})"

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def basis_matrix(self) -> Matrix:
        """Basis vectors as columns."""
        return Matrix.from_columns(self.basis, self.ambient_dim)

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the echelon basis; raises NoSolution if v is outside."""
        coords = tuple(v[p] for p in self.pivots)
        if vcomb(zip(coords, self.basis), self.ambient_dim) != tuple(v):
            raise NoSolution("vector not in subspace")
        return coords

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing the pivot coordinates."""
        w = list(v)
        for b, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for j, x in enumerate(b):
                    if x:
                        w[j] -= c * x
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        return is_zero_vector(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return all(self.contains(v) for v in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def annihilator(self) -> "Subspace":
        """{a : a . v = 0 for all v in self} under the standard pairing."""
        return _kernel_from_rref(self.basis, self.pivots, self.ambient_dim)

    def equations(self) -> Matrix:
        """Matrix N with self = ker N."""
        return Matrix._raw(list(self.annihilator().basis), self.ambient_dim)

    def quotient(self) -> "Quotient":
        return Quotient(self)


def _check_same_ambient(*spaces: Subspace) -> None:
    dims = {s.ambient_dim for s in spaces}
    if len(dims) > 1:
        raise DimensionMismatch(f"ambient dimensions differ: {sorted(dims)}")


def _kernel_from_rref(rows: Sequence[Sequence], pivots: Sequence[int], n: int) -> Subspace:
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    vectors = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for r, p in zip(rows, pivots):
            if r[f]:
                v[p] = -r[f]
        vectors.append(tuple(v))
    return Subspace(n, vectors)


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of {v : m v = 0}."""
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(rows, m.cols)
    return _kernel_from_rref(rows[: len(pivots)], pivots, m.cols)


def image(m: Matrix) -> Subspace:
    return Subspace.column_space(m)


def solve(m: Matrix, b: Sequence) -> Vector:
    """One solution of m x = b with free variables set to zero."""
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side length differs from row count")
    rows = [list(r) + [Q(x)] for r, x in zip(m.data, b)]
    pivots = _rref_rows(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        raise NoSolution("inconsistent linear system")
    x = [ZERO] * m.cols
    for r, p in zip(rows, pivots):
        x[p] = r[m.cols]
    return tuple(x)


def solve_matrix(m: Matrix, b: Matrix) -> Matrix:
    """Solve m X = b column by column (free variables zero)."""
    if b.rows != m.rows:
        raise DimensionMismatch("right-hand side row count differs")
    rows = [list(r) + list(s) for r, s in zip(m.data, b.data)]
    n = m.cols
    pivots = _rref_rows(rows, n + b.cols)
    if any(p >= n for p in pivots):
        raise NoSolution("inconsistent linear system")
    out = [[ZERO] * b.cols for _ in range(n)]
    for r, p in zip(rows, pivots):
        out[p] = r[n:]
    return Matrix._raw([tuple(r) for r in out], b.cols)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; (a x b)[i*b.rows + k, j*b.cols + l] = a[i,j] b[k,l]."""
    out = []
    zb = (ZERO,) * b.cols
    for ar in a.data:
        for br in b.data:
            row = []
            for x in ar:
                if x:
                    row.extend(x * y for y in br)
                else:
                    row.extend(zb)
            out.append(tuple(row))
    return Matrix._raw(out, a.cols * b.cols)


def kron_vec(u: Sequence, v: Sequence) -> Vector:
    return tuple(x * y for x in u for y in v)


def intersect(*spaces: Subspace) -> Subspace:
    """Intersection of one or more subspaces of the same ambient space."""
    if not spaces:
        raise ValueError("intersect needs at least one subspace")
    _check_same_ambient(*spaces)
    result = spaces[0]
    for s in spaces[1:]:
        if result.is_zero() or s.is_full():
            continue
        if s.is_zero():
            return Subspace.zero(result.ambient_dim)
        eqs = s.equations()
        # coordinates t with eqs (B t) = 0, B = basis columns of result
        B = result.basis_matrix()
        ker = kernel_basis(eqs @ B)
        result = Subspace(result.ambient_dim, [B.apply(t) for t in ker.basis])
    return result


def span_sum(*spaces: Subspace) -> Subspace:
    if not spaces:
        raise ValueError("span_sum needs at least one subspace")
    _check_same_ambient(*spaces)
    return Subspace(spaces[0].ambient_dim, [v for s in spaces for v in s.basis])


def preimage(f: Matrix, s: Subspace) -> Subspace:
    """{v : f v in s}."""
    if f.rows != s.ambient_dim:
        raise DimensionMismatch(f"map with {f.rows} rows into ambient dimension {s.ambient_dim}")
    if s.is_full():
        return Subspace.full(f.cols)
    if s.is_zero():
        return kernel_basis(f)
    return kernel_basis(s.equations() @ f)


def direct_sum(spaces: Sequence[Subspace]) -> Subspace:
    """Block subspace of the concatenated ambient space."""
    n = sum(s.ambient_dim for s in spaces)
    vectors = []
    offset = 0
    for s in spaces:
        left = (ZERO,) * offset
        right = (ZERO,) * (n - offset - s.ambient_dim)
        vectors.extend(left + v + right for v in s.basis)
        offset += s.ambient_dim
    # blocks are already in echelon form, so this is canonical
    basis = tuple(vectors)
    pivots = []
    offset = 0
    for s in spaces:
        pivots.extend(offset + p for p in s.pivots)
        offset += s.ambient_dim
    return Subspace._canonical(n, basis, tuple(pivots))


def subspace_calculus(kind: str, *args):
    """Dispatcher over intersect / preimage / contains / sum."""
    if kind == "intersect":
        spaces = args[0] if len(args) == 1 and not isinstance(args[0], Subspace) else args
        return intersect(*spaces)
    if kind == "preimage":
        return preimage(*args)
    if kind == "contains":
        s, v = args
        return s.contains(v)
    if kind == "sum":
        spaces = args[0] if len(args) == 1 and not isinstance(args[0], Subspace) else args
        return span_sum(*spaces)
    raise ValueError(f"unknown subspace operation {kind!r}")


class Quotient:
    """V / S with the complement basis on the non-pivot coordinates of S."""

    __slots__ = ("sub", "free", "project", "lift")

    def __init__(self, sub: Subspace):
        n = sub.ambient_dim
        pivset = set(sub.pivots)
        self.sub = sub
        self.free = tuple(j for j in range(n) if j not in pivset)
        index = {j: k for k, j in enumerate(self.free)}
        rows = [[ZERO] * n for _ in self.free]
        for j, k in index.items():
            rows[k][j] = ONE
        for b, p in zip(sub.basis, sub.pivots):
            for j, k in index.items():
                if b[j]:
                    rows[k][p] = -b[j]
        self.project = Matrix._raw([tuple(r) for r in rows], n)
        self.lift = Matrix.from_columns([unit_vector(n, j) for j in self.free], n)

    @property
    def dim(self) -> int:
        return len(self.free)


class CoordinateReader:
    """Reads coordinates of vectors lying in span(basis) from a few entries.

    The basis need not be echelon; pivot entries of its echelon form are
    located once and inverted, so each lookup is a small matrix product.
    """

    __slots__ = ("n", "k", "positions", "inv", "basis")

    def __init__(self, basis: Sequence[Sequence], n: int):
        self.n = n
        self.k = len(basis)
        self.basis = [tuple(b) for b in basis]
        if not basis:
            self.positions = ()
            self.inv = Matrix.zeros(0, 0)
            return
        space = Subspace(n, basis)
        if space.dim != len(basis):
            raise ValueError("basis vectors are linearly dependent")
        self.positions = space.pivots
        sub = Matrix._raw([tuple(b[p] for b in basis) for p in self.positions], len(basis))
        self.inv = sub.inverse()

    def __call__(self, v: Sequence, check: bool = False) -> Vector:
        if self.k == 0:
            if check and not is_zero_vector(v):
                raise NoSolution("nonzero vector in zero space")
            return ()
        coords = self.inv.apply(tuple(v[p] for p in self.positions))
        if check and vcomb(zip(coords, self.basis), self.n) != tuple(v):
            raise NoSolution("vector not in span")
        return coords
