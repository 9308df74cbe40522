from __future__ import annotations

import itertools

import pytest

from helpers import oracle_radical_dim
from pretensor.algebra import product
from pretensor.corpus import a2, dual_numbers
from pretensor.modules import free_bimodule, hom_space
from pretensor.monoidal import semigroup_model
from pretensor.qlinalg import Matrix, Subspace, intersect, kernel_basis
from pretensor.radical import (
    HomIdeal,
    NotStable,
    build_proj_model,
    build_proj_model_from_semigroup,
    category_radical,
    exactness_report,
    hom_vanishing,
    is_stable_ideal,
    module_radical,
    quotient_model,
    radical_nontriviality_check,
    serre_condition,
    two_sided_radical_direct,
    unit_action_is_identity,
)
from pretensor.zplus import all_ideals

D_, T_ = 0, 1


@pytest.fixture(scope="module")
def model_D(models):
    return models["D"]


# -- model construction ---------------------------------------------------------


def test_model_examples(models, dt_model):
    assert models["Q"].n == 1 and models["Q"].E.dim == 1
    pm = models["D"]
    assert pm.n == 1 and pm.dims[(0, 0)] == 4
    assert oracle_radical_dim(pm.E) == 3  # local, so the radical has codimension one
    assert dt_model.n == 2 and dt_model.E.dim == 10
    assert [[dt_model.dims[(a, b)] for b in range(2)] for a in range(2)] == [[2, 2], [2, 4]]


def test_model_invariants(models, dt_model):
    for name, pm in list(models.items()) + [("dt", dt_model)]:
        assert pm.E.dim == sum(pm.dims.values())
        idems = pm.E.idempotents
        for i, e in enumerate(idems):
            assert pm.E.mul(e, e) == e
            for j, f in enumerate(idems):
                if i != j:
                    assert not any(pm.E.mul(e, f))
        assert tuple(sum(c) for c in zip(*idems)) == pm.E.unit


def test_actions_are_functorial(models, dt_model):
    # (id_R (x) g)(id_R (x) f) = id_R (x) (g f), read through the split summands
    for name, pm in [("D", models["D"]), ("A2", models["A2"]), ("UT2", models["UT2"]), ("dt", dt_model)]:
        for side in pm.sides:
            for r, x, y, z in itertools.product(range(pm.n), repeat=4):
                sx, sy, Mf = pm.action(side, r, x, y)
                _, sz, Mg = pm.action(side, r, y, z)
                _, _, Mgf = pm.action(side, r, x, z)
                for i in range(pm.dims[(x, y)]):
                    f = tuple(1 if k == i else 0 for k in range(pm.dims[(x, y)]))
                    for j in range(pm.dims[(y, z)]):
                        g = tuple(1 if k == j else 0 for k in range(pm.dims[(y, z)]))
                        lhs = _compose_blocks(pm, sx, sy, sz, Mg.apply(g), Mf.apply(f))
                        rhs = Mgf.apply(pm.compose(x, y, z, g, f))
                        assert tuple(lhs) == tuple(rhs), (name, side, r, x, y, z)


def _compose_blocks(pm, sx, sy, sz, G, F):
    """Matrix product of block morphisms between direct sums of model objects."""
    Fb, Gb = _split(pm, F, sx, sy), _split(pm, G, sy, sz)
    out = []
    for a, s in enumerate(sx):
        for c, u in enumerate(sz):
            acc = [0] * pm.dims[(s, u)]
            for b, t in enumerate(sy):
                term = pm.compose(s, t, u, Gb[(b, c)], Fb[(a, b)])
                acc = [p + q for p, q in zip(acc, term)]
            out.extend(acc)
    return out


def _split(pm, v, src, dst):
    out, o = {}, 0
    for a, s in enumerate(src):
        for b, t in enumerate(dst):
            d = pm.dims[(s, t)]
            out[(a, b)] = tuple(v[o : o + d])
            o += d
    return out


# -- radicals -------------------------------------------------------------------


def test_category_radical_examples(models, dt_model):
    assert category_radical(models["Q"]).is_zero()
    assert category_radical(models["D"]).dim == 3
    rad = category_radical(dt_model)
    assert rad.slices[(D_, T_)].is_full() and rad.slices[(T_, D_)].is_full()
    assert rad.slice_dims() == [[1, 2], [2, 3]]


def test_category_radical_matches_trace_form_oracle(models, dt_model):
    for name, pm in list(models.items()) + [("dt", dt_model)]:
        if pm.E.dim <= 40:
            assert category_radical(pm).dim == oracle_radical_dim(pm.E), name


def test_module_radical_examples(models):
    for side in ("left", "right", "two_sided"):
        assert module_radical(models["Q"], side).is_zero()
    pm = models["D"]
    assert module_radical(pm, "two_sided").is_zero()
    L = module_radical(pm, "left")
    assert L.dim == 2
    # expected span: right-leg multiplication x_R and x_L x_R
    T = pm.objects[0]
    h = hom_space(T, T)
    xl, xr = T.left_matrix((0, 1)), T.right_matrix((0, 1))
    expected = Subspace(4, [h.coordinates(xr), h.coordinates(xl @ xr)])
    assert L.slices[(0, 0)] == expected


def test_radical_inclusions_and_stability(models, dt_model):
    for name, pm in list(models.items()) + [("dt", dt_model)]:
        rad = category_radical(pm)
        L, R, LR = (module_radical(pm, s) for s in ("left", "right", "two_sided"))
        assert LR <= L <= rad and LR <= R <= rad, name
        assert is_stable_ideal(pm, rad).ok
        assert is_stable_ideal(pm, L, ("left",)).ok
        assert is_stable_ideal(pm, R, ("right",)).ok
        assert is_stable_ideal(pm, LR, ("left", "right")).ok


def test_two_sided_radical_vanishes_on_corpus(models):
    for name, pm in models.items():
        assert module_radical(pm, "two_sided").is_zero(), name


def test_two_sided_routes_agree(models, dt_model):
    for name, pm in list(models.items()) + [("dt", dt_model)]:
        if pm.n <= 4:
            assert two_sided_radical_direct(pm) == module_radical(pm, "two_sided"), name


def test_two_sided_radical_is_kernel_on_left_quotient(model_D):
    # f lies in the two-sided radical iff every f (x) id_R vanishes modulo the left radical
    pm = model_D
    L = module_radical(pm, "left")
    for x, y in pm.pairs():
        kernels = []
        for r in range(pm.n):
            src, dst, M = pm.action("right", r, x, y)
            eqs = L.target_space(src, dst).equations()
            stacked = eqs @ M if eqs.rows else Matrix.zeros(1, M.cols)
            kernels.append(kernel_basis(stacked))
        assert intersect(*kernels) == module_radical(pm, "two_sided").slices[(x, y)]


def test_semigroup_generator_model_matches_free_model(D, model_D):
    # the model on the single generator T sees the same radicals as the model on all free bimodules
    sm = semigroup_model(D, [free_bimodule(D, 0, 0)], ["t"])
    pm = build_proj_model_from_semigroup(sm)
    assert pm.unit is None and pm.E.dim == model_D.E.dim
    for side in ("left", "right", "two_sided"):
        assert module_radical(pm, side).dim == module_radical(model_D, side).dim
    assert category_radical(pm).dim == category_radical(model_D).dim


# -- stability and quotients ----------------------------------------------------


def test_stability_examples(models, dt_model):
    for pm in (models["Q"], models["D"], dt_model):
        assert is_stable_ideal(pm, HomIdeal.zero(pm), ("left", "right")).ok
    assert is_stable_ideal(models["Q"], category_radical(models["Q"]), ("left", "right")).ok
    slices = {p: Subspace.zero(dt_model.dims[p]) for p in dt_model.pairs()}
    slices[(D_, T_)] = Subspace.full(2)
    report = is_stable_ideal(dt_model, HomIdeal(dt_model, slices))
    assert not report.ok and "composition" in report.reason
    with pytest.raises(NotStable):
        quotient_model(dt_model, HomIdeal(dt_model, slices))


def test_quotient_by_zero_is_isomorphic(models):
    for name in ("Q", "D", "A2"):
        pm = models[name]
        q = quotient_model(pm, HomIdeal.zero(pm))
        assert q.E.dim == pm.E.dim and q.dims == pm.dims
        assert [list(map(list, r)) for r in q.E.dense_table()] == [list(map(list, r)) for r in pm.E.dense_table()]


def test_quotient_by_left_radical_is_dual_numbers(model_D):
    q = quotient_model(model_D, module_radical(model_D, "left"), sides=("left",))
    E = q.E
    assert E.dim == 2 and E.radical.dim == 1
    # explicit isomorphism with D: 1 -> unit, x -> a nonzero radical element
    (r,) = E.radical.ideal.basis
    assert not any(E.mul(r, r))
    basis = [E.unit, r]
    assert Subspace(2, basis).is_full()
    d = dual_numbers()
    for i, j in itertools.product(range(2), repeat=2):
        expected = d.mul(d.basis_vector(i), d.basis_vector(j))
        image = tuple(sum(c * basis[k][t] for k, c in enumerate(expected)) for t in range(2))
        assert E.mul(basis[i], basis[j]) == image


def test_quotient_by_category_radical_is_field(model_D):
    q = quotient_model(model_D, category_radical(model_D))
    assert q.E.dim == 1 and q.E.radical.dim == 0


def test_quotient_actions_are_unital(dt_model):
    assert unit_action_is_identity(dt_model)
    q = quotient_model(dt_model, module_radical(dt_model, "left"), sides=("left",))
    assert unit_action_is_identity(q)
    q = quotient_model(dt_model, category_radical(dt_model))
    assert q.E.dim == 2 and unit_action_is_identity(q)


def test_left_quotient_has_zero_left_radical_on_discrete_bases(models):
    for name, pm in models.items():
        rep = exactness_report(pm)
        assert rep.base_discrete
        assert rep.recheck in ("passed", "not needed"), name


# -- reports ----------------------------------------------------------------------


def test_exactness_examples(models, dt_model):
    assert exactness_report(models["Q"]).exact
    rep = exactness_report(models["D"])
    assert not rep.exact and rep.recheck == "passed" and rep.quotient_radical_dim == 0
    rep = exactness_report(dt_model)
    assert rep.base_discrete is False and rep.recheck == "skipped" and rep.warnings


def test_nontriviality_examples(models, dt_model):
    rep = radical_nontriviality_check(dt_model)
    assert rep.proper and rep.hom_dim == 2 and rep.radical_dim == 1
    assert radical_nontriviality_check(models["Q"]).vacuous
    D = dual_numbers()
    unit_only = build_proj_model_from_semigroup(semigroup_model(D, [dt_model.objects[0]], ["d"]))
    assert radical_nontriviality_check(unit_only).vacuous


def test_hom_vanishing_examples(dt_model):
    assert hom_vanishing(dt_model, [D_, T_]).ok
    rep = hom_vanishing(dt_model, [T_])
    assert not rep.ok and rep.witness == (D_, T_, 2)
    alg = product(dual_numbers(), a2())
    blocks = [[(0, 0)], [(i, j) for i in (1, 2) for j in (1, 2)]]
    labels = blocks[0] + blocks[1]
    pm = build_proj_model(alg, labels=labels)
    assert hom_vanishing(pm, [0]).ok
    assert hom_vanishing(pm, [1, 2, 3, 4]).ok
    with pytest.raises(ValueError):
        build_proj_model(alg, labels=[(1, 2), (2, 1)])  # product lands on (1, 1)


def test_hom_vanishing_matches_discreteness(models, dt_model):
    # in a discrete model every ideal passes; {d,t} has a failing ideal
    for name, pm in list(models.items()) + [("dt", dt_model)]:
        r = pm.pseudoring
        if r.m > 12:
            continue
        verdicts = [hom_vanishing(pm, I).ok for I in all_ideals(r)]
        assert all(verdicts) == (name != "dt"), name


def test_serre_examples(models):
    pm = models["A2"]
    assert serre_condition(pm, []).ok
    assert serre_condition(pm, range(pm.n)).ok
    for k in range(pm.n + 1):
        for sigma in itertools.combinations(range(pm.n), k):
            rep = serre_condition(pm, sigma)
            assert rep.consistent, sigma


def test_serre_matches_ideal_test_on_corpus(models):
    for name, pm in models.items():
        if pm.n > 4:
            continue
        for k in range(pm.n + 1):
            for sigma in itertools.combinations(range(pm.n), k):
                assert serre_condition(pm, sigma).consistent, (name, sigma)
