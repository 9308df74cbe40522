from __future__ import annotations

import itertools
import random

import pytest

from helpers import oracle_radical_dim, unit_conjugate, vertex_sums
from pretensor.algebra import (
    FiniteDimAlgebra,
    NonSplit,
    NotFiniteDimensional,
    basify,
    block_classes,
    build,
    cartan_matrix,
    corner_algebra,
    corner_space,
    idempotent_diagnostics,
    is_basic,
    is_nilpotent_subspace,
    is_two_sided_ideal,
    jacobson_radical,
    opposite,
    primitive_idempotents,
    product,
    quotient_by_idempotent_ideal,
    radical_of_corner_in_ambient,
    tensor,
    validate_algebra,
)
from pretensor.corpus import (
    a2,
    a2_quiver,
    commutative_square_quiver,
    dual_numbers,
    dual_numbers_quiver,
    matrix_algebra,
    rationals,
    split_pair,
    truncated_polynomial,
    upper_triangular,
)
from pretensor.modules import orthogonal_idempotents
from pretensor.qlinalg import ZERO, Q, Subspace, vsub
from pretensor.quiver import Arrow, BoundQuiver, from_bound_quiver


# -- examples -----------------------------------------------------------------


def test_validate_examples():
    assert validate_algebra(rationals()).ok
    assert validate_algebra(dual_numbers()).ok
    d = dual_numbers()
    broken = [[[d.table[i][j].get(k, 0) for k in range(2)] for j in range(2)] for i in range(2)]
    broken[0][0][0] = 2
    report = validate_algebra(FiniteDimAlgebra(broken, [1, 0]))
    assert not report.ok and "unit" in report.defect


def test_bound_quiver_examples():
    alg, idems, labels = from_bound_quiver(dual_numbers_quiver())
    assert alg.dim == 2 and list(labels) == ["e1", "x"]
    alg, idems, labels = from_bound_quiver(a2_quiver())
    assert alg.dim == 3 and list(labels) == ["e1", "e2", "a"]
    with pytest.raises(NotFiniteDimensional):
        from_bound_quiver(BoundQuiver(1, [Arrow("x", 0, 0)]))


def test_quiver_dual_numbers_matches_hand_entry():
    q, _, _ = from_bound_quiver(dual_numbers_quiver())
    d = dual_numbers()
    assert q.dim == d.dim
    assert q.radical.dim == d.radical.dim
    assert cartan_matrix(q) == cartan_matrix(d) == [[2]]


def test_quiver_path_convention():
    alg, idems, labels = from_bound_quiver(a2_quiver())
    e1, e2, a = (alg.basis_vector(i) for i in range(3))
    assert alg.mul(alg.mul(e2, a), e1) == a  # a = e_target a e_source
    assert alg.mul(e1, a) == (0, 0, 0)


def test_square_relation():
    alg, _, labels = from_bound_quiver(commutative_square_quiver())
    assert alg.dim == 9
    idx = {name: k for k, name in enumerate(labels)}
    ca = alg.mul(alg.basis_vector(idx["c"]), alg.basis_vector(idx["a"]))
    db = alg.mul(alg.basis_vector(idx["d"]), alg.basis_vector(idx["b"]))
    assert ca == db and any(ca)


def test_build_examples():
    assert opposite(rationals()).table == rationals().table
    for alg in (a2(), upper_triangular(), truncated_polynomial(3)):
        assert opposite(opposite(alg)).table == alg.table
    dd = build("tensor", dual_numbers(), dual_numbers())
    assert dd.dim == 4 and dd.radical.dim == 3
    env = build("enveloping", a2())
    assert env.dim == 9 and validate_algebra(env).ok


def test_radical_examples():
    r = jacobson_radical(rationals())
    assert r.ideal.is_zero() and r.quotient.dim == 1
    r = jacobson_radical(dual_numbers())
    assert r.ideal == Subspace(2, [[0, 1]]) and r.quotient.dim == 1
    r = jacobson_radical(a2())
    assert r.ideal == Subspace(3, [[0, 0, 1]]) and r.quotient.dim == 2
    assert cartan_matrix(r.quotient) == [[1, 0], [0, 1]]


def test_primitive_idempotent_examples():
    assert primitive_idempotents(rationals()) == [(1,)]
    assert primitive_idempotents(dual_numbers()) == [(1, 0)]
    alg = a2()
    assert primitive_idempotents(alg, [[1, 0, 0], [0, 1, 0]]) == [(1, 0, 0), (0, 1, 0)]
    # a non-primitive supplied idempotent is refined, an incomplete set is rejected
    assert len(primitive_idempotents(alg, [[1, 1, 0]])) == 2
    with pytest.raises(ValueError):
        primitive_idempotents(alg, [[1, 0, 0]])


def test_basic_examples():
    assert is_basic(dual_numbers())
    b, e = basify(dual_numbers())
    assert b.dim == 2 and e == (1, 0)
    m2 = matrix_algebra(2)
    assert not is_basic(m2)
    b, e = basify(m2)
    assert b.dim == 1
    assert is_basic(a2())


def test_corner_examples():
    alg = a2()
    assert corner_algebra(alg, alg.unit).algebra.dim == 3
    assert corner_algebra(alg, (0, 0, 0)).algebra.dim == 0
    c = corner_algebra(alg, (1, 0, 0))
    assert c.algebra.dim == 1 and c.algebra.radical.dim == 0


def test_quotient_by_idempotent_examples():
    alg = a2()
    assert quotient_by_idempotent_ideal(alg, (0, 0, 0)).algebra.dim == 3
    assert quotient_by_idempotent_ideal(alg, alg.unit).algebra.dim == 0
    q = quotient_by_idempotent_ideal(alg, (0, 1, 0))
    assert q.algebra.dim == 1 and q.ideal == Subspace(3, [[0, 1, 0], [0, 0, 1]])


def test_diagnostics_examples():
    d = idempotent_diagnostics(rationals(), (1,))
    assert d.consistent and d.corner_in_radical and d.rad_corner_equal
    alg = a2()
    d1 = idempotent_diagnostics(alg, (1, 0, 0))
    assert d1.quotient_left_projective and d1.e_A_one_minus_e_zero
    d2 = idempotent_diagnostics(alg, (0, 1, 0))
    assert not d2.e_A_one_minus_e_zero and not d2.quotient_left_projective
    assert d1.consistent and d2.consistent


def test_cartan_examples():
    assert cartan_matrix(rationals()) == [[1]]
    assert cartan_matrix(dual_numbers()) == [[2]]
    assert cartan_matrix(a2()) == [[1, 0], [1, 1]]


def test_non_split_field():
    gaussian = FiniteDimAlgebra([[[1, 0], [0, 1]], [[0, 1], [-1, 0]]], [1, 0])
    assert validate_algebra(gaussian).ok
    with pytest.raises(NonSplit):
        primitive_idempotents(gaussian)


def test_discovered_idempotents_without_supplied_ones():
    # idempotents are found by splitting, not read off the input
    plain = FiniteDimAlgebra(upper_triangular().dense_table(), upper_triangular().unit)
    idems = primitive_idempotents(plain)
    assert len(idems) == 2 and sorted(sum(r) for r in cartan_matrix(plain)) == [1, 2]


# -- properties over the corpus --------------------------------------------------


def test_radical_matches_sympy_oracle(corpus):
    for alg in list(corpus.values()) + [matrix_algebra(2), tensor(dual_numbers(), dual_numbers())]:
        assert alg.radical.dim == oracle_radical_dim(alg)


def test_radical_nilpotent_and_quotient_semisimple(corpus):
    for name, alg in corpus.items():
        r = jacobson_radical(alg)
        assert is_two_sided_ideal(alg, r.ideal), name
        assert is_nilpotent_subspace(alg, r.ideal), name
        assert r.quotient.radical.dim == 0, name


def test_corner_in_radical_for_vertex_sums(corpus):
    for name, alg in corpus.items():
        rad = alg.radical.ideal
        for e in vertex_sums(alg):
            assert rad.contains_subspace(corner_space(alg, vsub(alg.unit, e), e)), (name, e)


def test_corner_radical_equality_on_vertex_sums(corpus):
    for name, alg in corpus.items():
        for e in vertex_sums(alg):
            embedded, sandwiched = radical_of_corner_in_ambient(alg, e)
            assert embedded == sandwiched, (name, e)


def test_corner_radical_equality_on_random_idempotents(corpus):
    rng = random.Random(7)
    pool = [(n, a) for n, a in corpus.items() if a.radical.dim and len(orthogonal_idempotents(a)) > 1]
    checked = 0
    while checked < 100:
        name, alg = rng.choice(pool)
        base = rng.choice([e for e in vertex_sums(alg) if any(e) and e != alg.unit])
        rad = alg.radical.ideal
        r = tuple(sum((Q(rng.randint(-3, 3)) * b[i] for b in rad.basis), ZERO) for i in range(alg.dim))
        e = unit_conjugate(alg, base, r)
        assert alg.is_idempotent(e)
        embedded, sandwiched = radical_of_corner_in_ambient(alg, e)
        assert embedded == sandwiched, (name, e)
        # independent dimension count for the corner
        assert embedded.dim == oracle_radical_dim(corner_algebra(alg, e).algebra)
        assert rad.contains_subspace(corner_space(alg, vsub(alg.unit, e), e))
        checked += 1


def test_projective_quotient_forces_vanishing_corner(corpus):
    seen_projective = 0
    for name, alg in corpus.items():
        for e in vertex_sums(alg):
            d = idempotent_diagnostics(alg, e)
            assert d.consistent, (name, e)
            if d.quotient_left_projective:
                seen_projective += 1
                assert d.e_A_one_minus_e_zero, (name, e)
    assert seen_projective > 0


def test_basify_preserves_blocks_and_cartan():
    cases = [matrix_algebra(2), tensor(matrix_algebra(2), dual_numbers()), product(matrix_algebra(2), a2()), a2()]
    for alg in cases:
        idems = primitive_idempotents(alg)
        classes = block_classes(alg, idems)
        reps = [idems[classes.index(c)] for c in sorted(set(classes), key=classes.index)]
        expected = [[corner_space(alg, ei, ej).dim for ej in reps] for ei in reps]
        b, _ = basify(alg)
        assert is_basic(b)
        assert len(primitive_idempotents(b)) == len(reps)
        got = cartan_matrix(b)
        # same matrix up to simultaneous permutation of the blocks
        n = len(reps)
        assert any(
            all(got[p[i]][p[j]] == expected[i][j] for i in range(n) for j in range(n))
            for p in itertools.permutations(range(n))
        )


def test_product_and_split_pair():
    alg = split_pair()
    assert alg.dim == 2 and alg.radical.dim == 0
    assert cartan_matrix(alg) == [[1, 0], [0, 1]]
