"""Small named algebras used by the tests, the CLI samples and the docs."""
from __future__ import annotations

from .algebra import FiniteDimAlgebra, product
from .qlinalg import ONE, ZERO
from .quiver import Arrow, BoundQuiver, from_bound_quiver


def _table(n: int, products: dict) -> list:
    """Dense table from ``{(i, j): {k: c}}``; missing pairs multiply to zero."""
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [ZERO] * n
            for k, c in products.get((i, j), {}).items():
                v[k] = c
            row.append(v)
        table.append(row)
    return table


def rationals() -> FiniteDimAlgebra:
    return FiniteDimAlgebra([[[1]]], [1], ["1"], [[1]])


def dual_numbers() -> FiniteDimAlgebra:
    """Q[x]/(x^2) on the basis {1, x}."""
    t = _table(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})
    return FiniteDimAlgebra(t, [1, 0], ["1", "x"], [[1, 0]])


def truncated_polynomial(k: int) -> FiniteDimAlgebra:
    """Q[x]/(x^k) on the basis {1, x, ..., x^(k-1)}."""
    prods = {(i, j): {i + j: 1} for i in range(k) for j in range(k) if i + j < k}
    names = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, k)]
    return FiniteDimAlgebra(_table(k, prods), [1] + [0] * (k - 1), names, [[1] + [0] * (k - 1)])


def split_pair() -> FiniteDimAlgebra:
    """Q x Q."""
    return product(rationals(), rationals())


def upper_triangular() -> FiniteDimAlgebra:
    """Upper-triangular 2x2 matrices on the basis {E11, E12, E22}."""
    t = _table(3, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}})
    return FiniteDimAlgebra(t, [1, 0, 1], ["E11", "E12", "E22"], [[1, 0, 0], [0, 0, 1]])


def matrix_algebra(n: int = 2) -> FiniteDimAlgebra:
    """Mat_n(Q) on matrix units E_ij (index i*n + j), with diagonal idempotents."""
    prods = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                prods[(i * n + j, j * n + l)] = {i * n + l: 1}
    unit = [ONE if i == j else ZERO for i in range(n) for j in range(n)]
    idems = [[ONE if (r == c == k) else ZERO for r in range(n) for c in range(n)] for k in range(n)]
    names = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return FiniteDimAlgebra(_table(n * n, prods), unit, names, idems)


def a2_quiver() -> BoundQuiver:
    return BoundQuiver(2, [Arrow("a", 0, 1)])


def a2() -> FiniteDimAlgebra:
    """Path algebra of 1 -a-> 2; basis {e1, e2, a}."""
    return from_bound_quiver(a2_quiver())[0]


def dual_numbers_quiver() -> BoundQuiver:
    return BoundQuiver(1, [Arrow("x", 0, 0)], [[(1, ("x", "x"))]])


def commutative_square_quiver() -> BoundQuiver:
    """a: 1->2, b: 1->3, c: 2->4, d: 3->4 with ca = db."""
    arrows = [Arrow("a", 0, 1), Arrow("b", 0, 2), Arrow("c", 1, 3), Arrow("d", 2, 3)]
    return BoundQuiver(4, arrows, [[(1, ("c", "a")), (-1, ("d", "b"))]])


def commutative_square() -> FiniteDimAlgebra:
    return from_bound_quiver(commutative_square_quiver())[0]


def acceptance_corpus() -> dict[str, FiniteDimAlgebra]:
    """The seven basic algebras every global check runs over."""
    return {
        "Q": rationals(),
        "D": dual_numbers(),
        "A2": a2(),
        "Q[x]/(x^3)": truncated_polynomial(3),
        "QxQ": split_pair(),
        "UT2": upper_triangular(),
        "square": commutative_square(),
    }
