"""Complete sets of primitive orthogonal idempotents.

Idempotents are found in the semisimple quotient A/Rad(A) and lifted back
with the Newton iteration e <- 3e^2 - 2e^3.  The only polynomial
factorisation used is rational-root extraction on squarefree parts, so
algebras whose semisimple quotient is not a product of matrix algebras
over Q raise :class:`NonSplit`.
"""
from __future__ import annotations

from itertools import combinations
from math import gcd, isqrt
from typing import Sequence

from gmpy2 import mpq

from .algebra import (
    FiniteDimAlgebra,
    NonSplit,
    check_idempotent_set,
    corner_algebra,
    corner_space,
    jacobson_radical,
)
from .qlinalg import ONE, ZERO, Subspace, Vector, kernel_basis, Matrix, vcomb, vsub

Poly = list  # coefficients, lowest degree first, trailing coefficient nonzero


# -- polynomials over Q -------------------------------------------------------


def _trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        c = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = c
        for i, x in enumerate(b):
            r[shift + i] -= c * x
        r = _trim(r)
    return _trim(q), r


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    a = list(a) + [ZERO] * (n - len(a))
    b = list(b) + [ZERO] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def poly_monic(p: Poly) -> Poly:
    p = _trim(p)
    lead = p[-1]
    return [c / lead for c in p]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return poly_monic(a) if a else []


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s a + t b = g monic."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]


def poly_derivative(p: Poly) -> Poly:
    return _trim([i * c for i, c in enumerate(p)][1:])


def squarefree_part(p: Poly) -> Poly:
    p = poly_monic(p)
    g = poly_gcd(p, poly_derivative(p))
    q, _ = poly_divmod(p, g)
    return poly_monic(q)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p: Poly) -> list[mpq]:
    """Distinct rational roots, by the rational root theorem on an integer multiple."""
    p = _trim(p)
    roots: list[mpq] = []
    while p and p[0] == 0:
        if ZERO not in roots:
            roots.append(ZERO)
        p = p[1:]
    if len(p) <= 1:
        return roots
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    a0, an = ints[0], ints[-1]
    if abs(a0) > 10**12 or abs(an) > 10**12:
        raise NonSplit("coefficients too large for rational-root extraction")
    for q in _divisors(an):
        for r in _divisors(a0):
            for cand in (mpq(r, q), mpq(-r, q)):
                if cand not in roots and _eval(p, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _eval(p: Poly, x) -> mpq:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


# -- minimal polynomials and evaluation in an algebra --------------------------


def minimal_polynomial(a: FiniteDimAlgebra, x: Sequence, unit: Sequence) -> Poly:
    """Monic minimal polynomial of x inside the corner algebra with the given unit."""
    powers = [tuple(unit)]
    while True:
        nxt = a.mul(powers[-1], x)
        m = Matrix.from_columns(powers + [nxt], a.dim)
        ker = kernel_basis(m)
        if ker.dim:
            rel = ker.basis[0]
            lead = rel[-1]
            return [c / lead for c in rel]
        powers.append(nxt)
        if len(powers) > a.dim + 1:
            raise AssertionError("minimal polynomial search did not terminate")


def evaluate(a: FiniteDimAlgebra, p: Poly, x: Sequence, unit: Sequence) -> Vector:
    acc = tuple(ZERO for _ in range(a.dim))
    for c in reversed(_trim(p)):
        acc = a.mul(acc, x)
        acc = tuple(s + c * u for s, u in zip(acc, unit))
    return acc


def splitting_idempotent(a: FiniteDimAlgebra, x: Sequence, unit: Sequence, commutative: bool) -> Vector | None:
    """A nontrivial idempotent polynomial in x (inside the corner with ``unit``), or None.

    In the commutative (central) case an irreducible factor of degree > 1 shows
    the centre contains a proper field extension, which is reported as NonSplit.
    """
    mu = minimal_polynomial(a, x, unit)
    sf = squarefree_part(mu)
    roots = rational_roots(sf)
    rest = sf
    for r in roots:
        rest, _ = poly_divmod(rest, [-r, ONE])
    if len(rest) > 1 and commutative:
        raise NonSplit("centre of the semisimple quotient is not a product of copies of Q")
    if not roots:
        return None
    lam = roots[0]
    # mu = (t - lam)^k * q with gcd = 1
    factor = [ONE]
    q = mu
    while True:
        qq, rr = poly_divmod(q, [-lam, ONE])
        if rr:
            break
        q = qq
        factor = poly_mul(factor, [-lam, ONE])
    if len(q) <= 1:
        return None
    g, s, t = poly_xgcd(factor, q)
    assert g == [ONE]
    p = poly_mul(t, q)
    e = evaluate(a, p, x, unit)
    return e


# -- semisimple splitting -----------------------------------------------------


def centre(a: FiniteDimAlgebra) -> Subspace:
    n = a.dim
    # z a_i = a_i z for every basis element
    blocks = [a.left_regular[i] - a.right_regular[i] for i in range(n)]
    return kernel_basis(Matrix.vstack(blocks, n)) if n else Subspace.zero(0)


def _candidates(a: FiniteDimAlgebra, basis: Sequence[Sequence]):
    yield from basis
    for u, v in combinations(basis, 2):
        yield tuple(x + y for x, y in zip(u, v))
        yield tuple(x - y for x, y in zip(u, v))
        yield tuple(x + 2 * y for x, y in zip(u, v))
    for u, v in combinations(basis, 2):
        yield a.mul(u, v)
        yield tuple(x + y for x, y in zip(a.mul(u, v), a.mul(v, u)))


def _split_recursive(a: FiniteDimAlgebra, e: Vector, space_fn, commutative: bool, primitive_fn) -> list[Vector]:
    if primitive_fn(e):
        return [e]
    basis = space_fn(e)
    for x in _candidates(a, basis):
        f = splitting_idempotent(a, x, e, commutative)
        if f is not None and any(f) and f != e:
            g = vsub(e, f)
            return _split_recursive(a, f, space_fn, commutative, primitive_fn) + _split_recursive(
                a, g, space_fn, commutative, primitive_fn
            )
    raise NonSplit("no splitting element found; supply idempotents explicitly")


def central_primitive_idempotents(b: FiniteDimAlgebra) -> list[Vector]:
    """Primitive idempotents of the centre of a semisimple algebra."""
    z = centre(b)

    def space(e):
        return list(Subspace(b.dim, [b.mul(e, v) for v in z.basis]).basis)

    def primitive(e):
        return len(space(e)) == 1

    return _split_recursive(b, b.unit, space, True, primitive)


def semisimple_primitive_idempotents(b: FiniteDimAlgebra) -> list[Vector]:
    """Complete set of primitive orthogonal idempotents of a split semisimple algebra."""
    if b.dim == 0:
        return []
    out = []
    for c in central_primitive_idempotents(b):

        def space(e):
            return list(corner_space(b, e).basis)

        def primitive(e):
            return corner_space(b, e).dim == 1

        out.extend(_split_recursive(b, c, space, False, primitive))
    return out


def newton_lift(a: FiniteDimAlgebra, x: Sequence) -> Vector:
    e = tuple(x)
    for _ in range(2 * a.dim + 4):
        e2 = a.mul(e, e)
        if e2 == e:
            return e
        e3 = a.mul(e2, e)
        e = tuple(3 * p - 2 * q for p, q in zip(e2, e3))
    raise AssertionError("idempotent lifting did not converge")


def lift_idempotents(a: FiniteDimAlgebra, lift, images: Sequence[Sequence]) -> list[Vector]:
    """Lift orthogonal idempotents summing to 1 from A/Rad(A) to A."""
    if not images:
        return []
    rest = a.unit
    out = []
    for img in images[:-1]:
        x = lift.apply(img)
        x = a.mul(a.mul(rest, x), rest)
        e = newton_lift(a, x)
        out.append(e)
        rest = vsub(rest, e)
    out.append(rest)
    return out


def discover(a: FiniteDimAlgebra) -> list[Vector]:
    if a.dim == 0:
        return []
    rad = jacobson_radical(a)
    images = semisimple_primitive_idempotents(rad.quotient)
    return lift_idempotents(a, rad.lift, images)


def primitive_idempotents(a: FiniteDimAlgebra, supplied: Sequence[Sequence] | None = None) -> list[Vector]:
    """Supplied (or built-in vertex) idempotents refined to primitives, else discovered."""
    if supplied is None:
        supplied = a.idempotents
    if supplied is None:
        return discover(a)
    supplied = [tuple(mpq(x) for x in e) for e in supplied]
    report = check_idempotent_set(a, supplied)
    if not report.ok:
        raise ValueError(f"supplied idempotents rejected: {report.defect} at {report.witness}")
    out: list[Vector] = []
    for e in supplied:
        corner = corner_algebra(a, e, idempotents=[e])
        rc = jacobson_radical(corner.algebra)
        if rc.quotient.dim == 1:
            out.append(e)
            continue
        corner = corner_algebra(a, e, idempotents=None)
        inner = discover(FiniteDimAlgebra(corner.algebra.table, corner.algebra.unit, corner.algebra.names))
        out.extend(corner.to_ambient(f) for f in inner)
    return out
