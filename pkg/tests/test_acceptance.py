"""The fourteen acceptance criteria, one test each.

Each test prints a single ``criterion N: PASS|FAIL`` line (outside pytest's
capture) and then lets any assertion error propagate.
"""
from __future__ import annotations

import random
from contextlib import contextmanager

from helpers import oracle_radical_dim, unit_conjugate, vertex_sums
from pretensor.algebra import (
    corner_algebra,
    corner_space,
    idempotent_diagnostics,
    product,
    radical_of_corner_in_ambient,
)
from pretensor.corpus import a2, dual_numbers, rationals, truncated_polynomial
from pretensor.modules import bimodule_labels, free_bimodule, hom_space, orthogonal_idempotents
from pretensor.monoidal import (
    cartan_pseudoring,
    decompose,
    dual,
    grothendieck_pseudoring,
    iso_indecomposable,
    tensor_morphisms,
    tensor_objects,
)
from pretensor.qlinalg import ZERO, Matrix, Q, Subspace, kernel_basis, vsub
from pretensor.radical import (
    build_proj_model,
    hom_vanishing,
    module_radical,
    quotient_model,
    radical_nontriviality_check,
    serre_condition,
)
from pretensor.zplus import all_ideals, cell_decomposition, is_discrete_bruteforce, is_indecomposable_discrete, is_nearring


@contextmanager
def criterion(capsys, number: int, title: str):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\ncriterion {number:2d}: FAIL  {title}")
        raise
    with capsys.disabled():
        print(f"\ncriterion {number:2d}: PASS  {title}")


def test_criterion_01_tensor_square_of_t(capsys, D):
    with criterion(capsys, 1, "T (x)_D T = T + T and b*b = 2b"):
        T = free_bimodule(D, 0, 0)
        parts = decompose(tensor_objects(T, T).object)
        assert len(parts) == 1
        summand, mult, _ = parts[0]
        assert mult == 2 and iso_indecomposable(summand, T)
        assert cartan_pseudoring(D).table == (((2,),),)


def test_criterion_02_unit_and_square_not_discrete(capsys, dt_semigroup):
    with criterion(capsys, 2, "{d,t} pseudoring is not discrete under both algorithms"):
        r = dt_semigroup.pseudoring
        t, d = r.basis.index("t"), r.basis.index("d")
        bf = is_discrete_bruteforce(r)
        assert not bf.discrete and bf.ideal == {t} and bf.complement == {d, t}
        cells = cell_decomposition(r)
        assert not cells.discrete and cells.asymmetric_pair == (t, d)


def test_criterion_03_corpus_indecomposable_discrete(capsys, corpus):
    with criterion(capsys, 3, "corpus pseudorings are indecomposable discrete"):
        assert len(corpus) == 7
        for name, alg in corpus.items():
            r = grothendieck_pseudoring(alg)
            assert is_indecomposable_discrete(r), name
            assert cell_decomposition(r).discrete, name


def test_criterion_04_corpus_nearrings(capsys, corpus):
    with criterion(capsys, 4, "corpus pseudorings are nearrings"):
        for name, alg in corpus.items():
            assert is_nearring(grothendieck_pseudoring(alg)).ok, name


def test_criterion_05_two_sided_radical_vanishes(capsys, models):
    with criterion(capsys, 5, "two-sided module radical is zero on every corpus model"):
        for name, pm in models.items():
            rad = module_radical(pm, "two_sided")
            assert rad.dim == 0, name


def _left_radical_oracle(D):
    """f in End(T) with id_T (x) f in Rad End(T (x) T), via the trace form on End(T (x) T)."""
    T = free_bimodule(D, 0, 0)
    tt = tensor_objects(T, T)
    end_t = hom_space(T, T)
    end_tt = hom_space(tt.object, tt.object)
    ident = Matrix.identity(T.dim)
    images = [tensor_morphisms(ident, f, tt, tt) for f in end_t.basis]
    # rows: h in End(T(x)T); columns: basis f of End(T); entry tr(h o (id (x) f))
    form = Matrix([[(h @ g).trace() for g in images] for h in end_tt.basis])
    return end_t, kernel_basis(form)


def test_criterion_06_left_radical_of_dual_numbers(capsys, models, D):
    with criterion(capsys, 6, "left module radical of model(D) has dim 2 and E/L is D"):
        end_t, oracle = _left_radical_oracle(D)
        assert end_t.dim == 4 and oracle.dim == 2
        pm = models["D"]
        L = module_radical(pm, "left")
        assert L.slices[(0, 0)] == oracle
        assert L.dim == 2
        q = quotient_model(pm, L, sides=("left",))
        E = q.E
        assert E.dim == 2 and E.radical.dim == 1
        (r,) = E.radical.ideal.basis
        assert any(r) and not any(E.mul(r, r))
        # 1 -> unit, x -> r is an algebra isomorphism D -> E/L
        basis = [E.unit, r]
        assert Subspace(2, basis).is_full()
        for i in range(2):
            for j in range(2):
                c = D.mul(D.basis_vector(i), D.basis_vector(j))
                expected = tuple(sum(c[k] * basis[k][t] for k in range(2)) for t in range(2))
                assert E.mul(basis[i], basis[j]) == expected


def test_criterion_07_quotient_is_exact(capsys, models):
    with criterion(capsys, 7, "left radical of the quotient by the left radical is zero"):
        for name, pm in models.items():
            L = module_radical(pm, "left")
            q = quotient_model(pm, L, sides=("left",))
            assert module_radical(q, "left").is_zero(), name


def test_criterion_08_idempotent_corners(capsys, corpus):
    with criterion(capsys, 8, "corner radicals and the projective-quotient criterion"):
        for name, alg in corpus.items():
            rad = alg.radical.ideal
            for e in vertex_sums(alg):
                one_minus = vsub(alg.unit, e)
                assert rad.contains_subspace(corner_space(alg, one_minus, e)), (name, e)
                embedded, sandwiched = radical_of_corner_in_ambient(alg, e)
                assert embedded == sandwiched, (name, e)
                d = idempotent_diagnostics(alg, e)
                if d.quotient_left_projective:
                    assert corner_space(alg, e, one_minus).is_zero(), (name, e)
        # contrapositive on A2: e = e2 has eA(1-e) != 0 and A/AeA is not left projective
        alg = a2()
        d = idempotent_diagnostics(alg, (0, 1, 0))
        assert not d.e_A_one_minus_e_zero and not d.quotient_left_projective
        rng = random.Random(2024)
        pool = [(n, a) for n, a in corpus.items() if a.radical.dim and len(orthogonal_idempotents(a)) > 1]
        for _ in range(100):
            name, alg = rng.choice(pool)
            base = rng.choice([e for e in vertex_sums(alg) if any(e) and e != alg.unit])
            coeffs = [Q(rng.randint(-3, 3)) for _ in alg.radical.ideal.basis]
            r = tuple(
                sum((c * b[i] for c, b in zip(coeffs, alg.radical.ideal.basis)), ZERO) for i in range(alg.dim)
            )
            e = unit_conjugate(alg, base, r)
            assert alg.is_idempotent(e)
            embedded, sandwiched = radical_of_corner_in_ambient(alg, e)
            assert embedded == sandwiched, (name, e)
            assert embedded.dim == oracle_radical_dim(corner_algebra(alg, e).algebra)
            assert alg.radical.ideal.contains_subspace(corner_space(alg, vsub(alg.unit, e), e))


def test_criterion_09_zigzags(capsys, corpus):
    with criterion(capsys, 9, "zigzag identities for both duals of every free bimodule"):
        count = 0
        for name, alg in corpus.items():
            for lab in bimodule_labels(alg):
                f = free_bimodule(alg, *lab)
                for side in ("left", "right"):
                    datum = dual(f, side)
                    assert all(datum.zigzags), (name, lab, side)
                    count += 1
        assert count == 2 * sum(len(bimodule_labels(a)) for a in corpus.values())


def test_criterion_10_discreteness_oracles(capsys, nearrings):
    with criterion(capsys, 10, "brute-force and cell discreteness agree on 500+ nearrings"):
        assert len(nearrings) >= 500
        assert all(r.m <= 5 and max(x for row in r.table for c in row for x in c) <= 3 for r in nearrings)
        disagreements = [r for r in nearrings if is_discrete_bruteforce(r).discrete != cell_decomposition(r).discrete]
        assert not disagreements


def test_criterion_11_cartan_formula(capsys, corpus):
    with criterion(capsys, 11, "closed-form Cartan pseudoring equals the generic pipeline"):
        for name, alg in corpus.items():
            assert cartan_pseudoring(alg) == grothendieck_pseudoring(alg), name


def _block_labels(alg, blocks):
    return [[(i, j) for i in block for j in block] for block in blocks]


def test_criterion_12_hom_vanishing(capsys, dt_model):
    with criterion(capsys, 12, "Hom(Q, P) = 0 for Q in I^c, P in I; fails for {d,t}"):
        cases = [
            (product(dual_numbers(), a2()), [[0], [1, 2]]),
            (product(rationals(), dual_numbers()), [[0], [1]]),
            (product(a2(), truncated_polynomial(3)), [[0, 1], [2]]),
        ]
        for alg, blocks in cases:
            groups = _block_labels(alg, blocks)
            labels = [lab for g in groups for lab in g]
            pm = build_proj_model(alg, labels=labels)
            start = 0
            for g in groups:
                members = list(range(start, start + len(g)))
                start += len(g)
                rep = hom_vanishing(pm, members)
                assert rep.ok, (blocks, members)
                assert rep.complement.isdisjoint(members)
        rep = hom_vanishing(dt_model, [1])
        assert not rep.ok
        q, p, dim = rep.witness
        assert (dt_model.labels[q], dt_model.labels[p], dim) == ("d", "t", 2)


def test_criterion_13_serre_condition(capsys, models):
    with criterion(capsys, 13, "Serre condition matches the ideal test on all subsets (k <= 4)"):
        checked = 0
        for name, pm in models.items():
            if pm.n > 4:
                continue
            ideals = set(all_ideals(pm.pseudoring))
            for mask in range(1 << pm.n):
                sigma = frozenset(k for k in range(pm.n) if mask >> k & 1)
                rep = serre_condition(pm, sigma)
                assert rep.ok == (sigma in ideals), (name, sorted(sigma))
                checked += 1
        assert checked == sum(2**pm.n for pm in models.values() if pm.n <= 4) == 54


def test_criterion_14_radical_nontriviality(capsys, dt_model):
    with criterion(capsys, 14, "Rad(D, T) is a proper subspace of Hom(D, T)"):
        rep = radical_nontriviality_check(dt_model)
        assert not rep.vacuous
        assert (dt_model.labels[rep.source], dt_model.labels[rep.target]) == ("d", "t")
        assert rep.hom_dim == 2 and rep.radical_dim < rep.hom_dim
