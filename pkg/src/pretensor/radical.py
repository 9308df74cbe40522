"""Categorical radicals, stable ideals and quotients of projective models.

A :class:`ProjModel` is a finite list of indecomposable bimodules closed under
the tensor product up to direct summands.  It records every Hom space, the
composition law (as the algebra ``E = End(+ objects)``), and, for every object
``R``, the matrices of ``f -> id_R (x) f`` (left action) and ``f -> f (x) id_R``
(right action) written in components between the chosen summands of
``R (x) X`` and ``R (x) Y``.  Radical membership of a morphism between direct
sums is membership of every component, so all module radicals reduce to
preimages of subspaces under these matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import FiniteDimAlgebra, is_nilpotent_subspace, jacobson_radical, quotient_algebra
from .modules import (
    Bimodule,
    bimodule_labels,
    composition_factors,
    free_bimodule,
    hom_space,
    split_projective,
    yoneda_space,
)
from .monoidal import (
    SemigroupModel,
    apply_tensor_morphism,
    dual,
    label_name,
    left_unitor,
    right_unitor,
    tensor_objects,
    tensor_morphisms,
)
from .qlinalg import (
    ZERO,
    CoordinateReader,
    Matrix,
    Quotient,
    Subspace,
    Vector,
    direct_sum,
    intersect,
    preimage,
    span_sum,
)
from .zplus import ZPlusPseudoring, complement_ideal, is_discrete_bruteforce, cell_decomposition, is_ideal, is_nearring


class NotStable(ValueError):
    pass


@dataclass(eq=False)
class ProjModel:
    labels: list
    objects: list  # Bimodule per object (shared with the base model for quotients)
    dims: dict  # (a, b) -> dim Hom(a, b)
    offsets: dict  # (a, b) -> first E index of Hom(a, b)
    E: FiniteDimAlgebra
    splits: dict  # ("left", r, x) -> summand objects of R (x) X; ("right", r, x) -> of X (x) R
    actions: dict  # (side, r, x, y) -> Matrix, or missing when the side is not carried
    sides: tuple
    unit: int | None = None
    algebra: FiniteDimAlgebra | None = None
    base: "ProjModel | None" = None
    ideal: "HomIdeal | None" = None
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    def pairs(self):
        return [(a, b) for a in range(self.n) for b in range(self.n)]

    def hom_dim(self, a: int, b: int) -> int:
        return self.dims[(a, b)]

    def block(self, v: Sequence, a: int, b: int) -> Vector:
        o = self.offsets[(a, b)]
        return tuple(v[o : o + self.dims[(a, b)]])

    def embed(self, a: int, b: int, coords: Sequence) -> Vector:
        out = [ZERO] * self.E.dim
        o = self.offsets[(a, b)]
        for k, c in enumerate(coords):
            out[o + k] = c
        return tuple(out)

    def compose(self, a: int, b: int, c: int, g: Sequence, f: Sequence) -> Vector:
        """g o f for f in Hom(a, b), g in Hom(b, c), as coordinates in Hom(a, c)."""
        return self.block(self.E.mul(self.embed(b, c, g), self.embed(a, b, f)), a, c)

    def identity(self, a: int) -> Vector:
        return self.block(self.E.idempotents[a], a, a)

    @property
    def pseudoring(self) -> ZPlusPseudoring:
        n = self.n
        table = [[[0] * n for _ in range(n)] for _ in range(n)]
        for r in range(n):
            for x in range(n):
                for k in self.splits[("left", r, x)]:
                    table[r][x][k] += 1
        return ZPlusPseudoring(tuple(self.labels), table)

    def action(self, side: str, r: int, x: int, y: int) -> tuple[list, list, Matrix]:
        if side not in self.sides:
            raise ValueError(f"model carries no {side} action")
        return self.splits[(side, r, x)], self.splits[(side, r, y)], self.actions[(side, r, x, y)]

    def component_dims(self, src: Sequence[int], dst: Sequence[int]) -> list[int]:
        return [self.dims[(s, t)] for s in src for t in dst]

    def summary(self) -> dict:
        return {
            "objects": list(self.labels),
            "hom_dims": [[self.dims[(a, b)] for b in range(self.n)] for a in range(self.n)],
            "endo_algebra_dim": self.E.dim,
        }


@dataclass(eq=False)
class HomIdeal:
    model: ProjModel
    slices: dict  # (a, b) -> Subspace of coordinates of Hom(a, b)

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.slices.values())

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.slices.values())

    def slice_dims(self) -> list[list[int]]:
        n = self.model.n
        return [[self.slices[(a, b)].dim for b in range(n)] for a in range(n)]

    def in_E(self) -> Subspace:
        return direct_sum([self.slices[p] for p in self.model.pairs()])

    def __le__(self, other: "HomIdeal") -> bool:
        return all(other.slices[p].contains_subspace(s) for p, s in self.slices.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomIdeal):
            return NotImplemented
        return self.slices == other.slices

    def target_space(self, src: Sequence[int], dst: Sequence[int]) -> Subspace:
        return direct_sum([self.slices[(s, t)] for s in src for t in dst])

    @classmethod
    def zero(cls, pm: ProjModel) -> "HomIdeal":
        return cls(pm, {p: Subspace.zero(pm.dims[p]) for p in pm.pairs()})

    @classmethod
    def full(cls, pm: ProjModel) -> "HomIdeal":
        return cls(pm, {p: Subspace.full(pm.dims[p]) for p in pm.pairs()})

    @classmethod
    def from_E(cls, pm: ProjModel, space: Subspace) -> "HomIdeal":
        slices = {}
        for a, b in pm.pairs():
            slices[(a, b)] = Subspace(pm.dims[(a, b)], [pm.block(v, a, b) for v in space.basis])
        return cls(pm, slices)


# ---------------------------------------------------------------------------
# model construction


def _assemble_E(n: int, homs: dict, compose_coords) -> tuple[FiniteDimAlgebra, dict, dict]:
    """E = End(+ objects): basis = Hom bases in (a, b) order, product x y = x o y."""
    offsets, dims = {}, {}
    o = 0
    for a in range(n):
        for b in range(n):
            offsets[(a, b)] = o
            dims[(a, b)] = homs[(a, b)].dim
            o += dims[(a, b)]
    total = o
    table = [[{} for _ in range(total)] for _ in range(total)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                hf, hg = homs[(a, b)], homs[(b, c)]
                for j, f in enumerate(hf.basis):
                    for i, g in enumerate(hg.basis):
                        coords = compose_coords(a, c, g @ f)
                        entry = {offsets[(a, c)] + k: x for k, x in enumerate(coords) if x}
                        table[offsets[(b, c)] + i][offsets[(a, b)] + j] = entry
    idems = []
    for a in range(n):
        v = [ZERO] * total
        for k, x in enumerate(homs[(a, a)].coordinates(Matrix.identity(homs[(a, a)].source.dim))):
            v[offsets[(a, a)] + k] = x
        idems.append(tuple(v))
    unit = tuple(sum(col) for col in zip(*idems)) if idems else ()
    names = [f"h{a}{b}_{k}" for a in range(n) for b in range(n) for k in range(dims[(a, b)])]
    return FiniteDimAlgebra(table, unit, names, idems), offsets, dims


def build_proj_model(alg: FiniteDimAlgebra, labels: Sequence[tuple] | None = None) -> ProjModel:
    """Model on the free bimodules F(i, j) (optionally a tensor-closed subset of labels)."""
    chosen = list(labels) if labels is not None else bimodule_labels(alg)
    index = {lab: k for k, lab in enumerate(chosen)}
    n = len(chosen)
    objects = [free_bimodule(alg, *lab) for lab in chosen]
    homs, readers = {}, {}
    for a in range(n):
        for b in range(n):
            homs[(a, b)] = hom_space(objects[a], objects[b])
            readers[(a, b)] = CoordinateReader(list(yoneda_space(objects[a], objects[b]).basis), objects[b].dim)

    def coords_from_image(a: int, b: int, image_of_generator: Sequence) -> Vector:
        return readers[(a, b)](image_of_generator, check=True)

    E, offsets, dims = _assemble_E(n, homs, lambda a, c, m: coords_from_image(a, c, m.apply(objects[a].free.generator)))
    splits, split_data = {}, {}
    for side in ("left", "right"):
        for r in range(n):
            for x in range(n):
                tr = tensor_objects(objects[r], objects[x]) if side == "left" else tensor_objects(objects[x], objects[r])
                sp = split_projective(tr.object)
                try:
                    splits[(side, r, x)] = [index[lab] for lab in sp.labels]
                except KeyError as exc:
                    raise ValueError(f"labels are not closed under the tensor product: {exc}") from None
                split_data[(side, r, x)] = (tr, sp)
    actions = {}
    for side in ("left", "right"):
        for r in range(n):
            ident = Matrix.identity(objects[r].dim)
            for x in range(n):
                tr_x, sp_x = split_data[(side, r, x)]
                for y in range(n):
                    tr_y, sp_y = split_data[(side, r, y)]
                    cols = []
                    for f in homs[(x, y)].basis:
                        col = []
                        for s, w in zip(splits[(side, r, x)], sp_x.generators):
                            if side == "left":
                                image = apply_tensor_morphism(ident, f, tr_x, tr_y, w)
                            else:
                                image = apply_tensor_morphism(f, ident, tr_x, tr_y, w)
                            for t, proj in zip(splits[(side, r, y)], sp_y.projections):
                                col.extend(coords_from_image(s, t, proj.apply(image)))
                        cols.append(col)
                    rows = sum(dims[(s, t)] for s in splits[(side, r, x)] for t in splits[(side, r, y)])
                    actions[(side, r, x, y)] = Matrix.from_columns(cols, rows)
    return ProjModel(
        [label_name(l) for l in chosen], objects, dims, offsets, E, splits, actions, ("left", "right"), None, alg
    )


def _is_regular(b: Bimodule) -> bool:
    alg = b.algebra
    return b.left == alg.left_regular and b.right == alg.right_regular


def build_proj_model_from_semigroup(sm: SemigroupModel) -> ProjModel:
    gens = sm.generators
    n = len(gens)
    homs = {(a, b): hom_space(gens[a], gens[b]) for a in range(n) for b in range(n)}
    E, offsets, dims = _assemble_E(n, homs, lambda a, c, m: homs[(a, c)].coordinates(m))
    unit = next((k for k, g in enumerate(gens) if _is_regular(g)), None)
    splits, split_data = {}, {}
    for side in ("left", "right"):
        for r in range(n):
            for x in range(n):
                key = (r, x) if side == "left" else (x, r)
                tr = sm.tensors[key]
                pieces = sm.products[key]
                if r == unit:
                    # identify U (x) X with X through the unitor
                    lam = left_unitor(tr) if side == "left" else right_unitor(tr)
                    pieces = [(x, lam.inverse(), lam)]
                splits[(side, r, x)] = [k for k, _, _ in pieces]
                split_data[(side, r, x)] = (tr, pieces)
    actions = {}
    for side in ("left", "right"):
        for r in range(n):
            ident = Matrix.identity(gens[r].dim)
            for x in range(n):
                tr_x, pcs_x = split_data[(side, r, x)]
                for y in range(n):
                    tr_y, pcs_y = split_data[(side, r, y)]
                    cols = []
                    for f in homs[(x, y)].basis:
                        M = tensor_morphisms(ident, f, tr_x, tr_y) if side == "left" else tensor_morphisms(f, ident, tr_x, tr_y)
                        col = []
                        for s, inc, _ in pcs_x:
                            for t, _, proj in pcs_y:
                                col.extend(homs[(s, t)].coordinates(proj @ M @ inc))
                        cols.append(col)
                    rows = sum(dims[(s, t)] for s in splits[(side, r, x)] for t in splits[(side, r, y)])
                    actions[(side, r, x, y)] = Matrix.from_columns(cols, rows)
    return ProjModel(list(sm.names), list(gens), dims, offsets, E, splits, actions, ("left", "right"), unit, sm.algebra)


# ---------------------------------------------------------------------------
# radicals


def category_radical(pm: ProjModel) -> HomIdeal:
    """Rad(E) cut into Hom components; cross-object components must be full."""
    if "category_radical" in pm.cache:
        return pm.cache["category_radical"]
    rad = jacobson_radical(pm.E, check=pm.E.dim <= 40).ideal
    ideal = HomIdeal.from_E(pm, rad)
    if ideal.in_E() != rad:
        raise AssertionError("radical of E is not the sum of its Hom components")
    for a, b in pm.pairs():
        if a != b and not ideal.slices[(a, b)].is_full():
            raise AssertionError(f"radical misses maps between distinct objects {a} and {b}")
    if not is_nilpotent_subspace(pm.E, rad) if pm.E.dim <= 40 else not _nilpotent_by_blocks(pm, ideal):
        raise AssertionError("radical of E is not nilpotent")
    pm.cache["category_radical"] = ideal
    return ideal


def _nilpotent_by_blocks(pm: ProjModel, ideal: HomIdeal) -> bool:
    """Nilpotency via local endomorphism rings: each Rad End(a) is nilpotent."""
    for a in range(pm.n):
        sl = ideal.slices[(a, a)]
        power = sl
        for _ in range(pm.dims[(a, a)] + 1):
            if power.is_zero():
                break
            power = Subspace(
                pm.dims[(a, a)], [pm.compose(a, a, a, g, f) for g in sl.basis for f in power.basis]
            )
        if not power.is_zero():
            return False
        if pm.dims[(a, a)] - sl.dim != 1:
            return False  # End(a) must be local
    return True


def _preimage_ideal(pm: ProjModel, side: str, target: HomIdeal) -> HomIdeal:
    """{f : the side action of every object sends f into target}."""
    slices = {}
    for x, y in pm.pairs():
        spaces = []
        for r in range(pm.n):
            src, dst, M = pm.action(side, r, x, y)
            spaces.append(preimage(M, target.target_space(src, dst)))
        slices[(x, y)] = intersect(*spaces) if spaces else Subspace.full(pm.dims[(x, y)])
    return HomIdeal(pm, slices)


def module_radical(pm: ProjModel, side: str = "left") -> HomIdeal:
    """Rad^C for the left or right action; two_sided via the left radical.

    two_sided: f with id_P (x) f (x) id_Q radical for all P, Q.  Since
    id_P (x) (f (x) id_Q) is radical for all P exactly when f (x) id_Q lies in
    the left radical, this is the preimage of the left radical under the right
    action.
    """
    key = ("module_radical", side)
    if key in pm.cache:
        return pm.cache[key]
    if side in ("left", "right"):
        out = _preimage_ideal(pm, side, category_radical(pm))
        sides = (side,)
    elif side in ("two_sided", "lr"):
        out = _preimage_ideal(pm, "right", module_radical(pm, "left"))
        sides = ("left", "right")
    else:
        raise ValueError(f"unknown side {side!r}")
    report = is_stable_ideal(pm, out, sides)
    if not report.ok:
        raise AssertionError(f"module radical is not stable: {report}")
    if not out.is_zero() and not is_nilpotent_subspace(pm.E, out.in_E()):
        raise AssertionError("module radical is not nilpotent")
    pm.cache[key] = out
    return out


def two_sided_radical_direct(pm: ProjModel) -> HomIdeal:
    """Rad^lr straight from the definition: all components of id_P (x) f (x) id_Q radical."""
    rad = category_radical(pm)
    slices = {}
    for x, y in pm.pairs():
        spaces = []
        for p in range(pm.n):
            src, dst, L = pm.action("left", p, x, y)
            for q in range(pm.n):
                blocks, targets = [], []
                for s in src:
                    for t in dst:
                        s2, t2, R = pm.action("right", q, s, t)
                        blocks.append(R)
                        targets.append(rad.target_space(s2, t2))
                if not blocks:
                    continue
                big = Matrix.block_diag(blocks) @ L
                spaces.append(preimage(big, direct_sum(targets)))
        slices[(x, y)] = intersect(*spaces) if spaces else Subspace.full(pm.dims[(x, y)])
    return HomIdeal(pm, slices)


@dataclass
class StabilityReport:
    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_stable_ideal(pm: ProjModel, ideal: HomIdeal, sides: Iterable[str] = ()) -> StabilityReport:
    n = pm.n
    for (a, b), sl in ideal.slices.items():
        for f in sl.basis:
            for c in range(n):
                for k in range(pm.dims[(b, c)]):
                    g = tuple(1 if i == k else 0 for i in range(pm.dims[(b, c)]))
                    if not ideal.slices[(a, c)].contains(pm.compose(a, b, c, g, f)):
                        return StabilityReport(False, "post-composition", (a, b, c))
                for k in range(pm.dims[(c, a)]):
                    h = tuple(1 if i == k else 0 for i in range(pm.dims[(c, a)]))
                    if not ideal.slices[(c, b)].contains(pm.compose(c, a, b, f, h)):
                        return StabilityReport(False, "pre-composition", (c, a, b))
    for side in sides:
        for r in range(n):
            for (x, y), sl in ideal.slices.items():
                src, dst, M = pm.action(side, r, x, y)
                target = ideal.target_space(src, dst)
                for f in sl.basis:
                    if not target.contains(M.apply(f)):
                        return StabilityReport(False, f"{side} action", (r, x, y))
    return StabilityReport(True)


def quotient_model(pm: ProjModel, ideal: HomIdeal, sides: Sequence[str] | None = None) -> ProjModel:
    """Hom(a, b) / I(a, b) with induced composition and actions on the given sides.

    Default sides: those of the model under which the ideal is stable.
    """
    comp = is_stable_ideal(pm, ideal, ())
    if not comp.ok:
        raise NotStable(f"ideal is not closed under composition: {comp}")
    if sides is None:
        sides = tuple(s for s in pm.sides if is_stable_ideal(pm, ideal, (s,)).ok)
    else:
        sides = tuple(sides)
        report = is_stable_ideal(pm, ideal, sides)
        if not report.ok:
            raise NotStable(f"ideal is not stable: {report}")
    qa = quotient_algebra(pm.E, ideal.in_E())
    quots = {p: Quotient(ideal.slices[p]) for p in pm.pairs()}
    dims = {p: quots[p].dim for p in pm.pairs()}
    offsets = {}
    o = 0
    for p in pm.pairs():
        offsets[p] = o
        o += dims[p]
    if o != qa.algebra.dim:
        raise AssertionError("quotient dimensions disagree")
    identities = [qa.project(e) for e in pm.E.idempotents]
    E = FiniteDimAlgebra(qa.algebra.table, qa.algebra.unit, qa.algebra.names, identities)
    actions = {}
    for side in sides:
        for r in range(pm.n):
            for x, y in pm.pairs():
                src, dst, M = pm.action(side, r, x, y)
                projs = [quots[(s, t)].project for s in src for t in dst]
                P = Matrix.block_diag(projs) if projs else Matrix.zeros(0, M.rows)
                actions[(side, r, x, y)] = P @ M @ quots[(x, y)].lift
    return ProjModel(
        list(pm.labels), pm.objects, dims, offsets, E, pm.splits, actions, sides, pm.unit, pm.algebra, pm, ideal
    )


def unit_action_is_identity(pm: ProjModel) -> bool:
    """The unit object's actions are identity matrices on every Hom space."""
    if pm.unit is None:
        raise ValueError("model has no unit object")
    u = pm.unit
    for side in pm.sides:
        for x, y in pm.pairs():
            src, dst, M = pm.action(side, u, x, y)
            if src != [x] or dst != [y] or not M.is_identity():
                return False
    return True


# ---------------------------------------------------------------------------
# reports


@dataclass
class ExactnessReport:
    exact: bool
    base_discrete: bool | None
    radical_dims: list
    quotient_endo_dim: int | None = None
    quotient_radical_dim: int | None = None
    recheck: str = "not needed"
    warnings: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "exact": self.exact,
            "base_discrete": self.base_discrete,
            "module_radical_dims": self.radical_dims,
            "quotient_endo_dim": self.quotient_endo_dim,
            "quotient_module_radical_dim": self.quotient_radical_dim,
            "recheck": self.recheck,
            "warnings": list(self.warnings),
        }


def _discrete(r: ZPlusPseudoring, cap: int = 15) -> bool:
    if r.m <= cap:
        return is_discrete_bruteforce(r, cap).discrete
    if is_nearring(r):
        return cell_decomposition(r).discrete
    raise ValueError("pseudoring too large for brute force and not a nearring")


def exactness_report(pm: ProjModel, cap: int = 15) -> ExactnessReport:
    discrete = _discrete(pm.pseudoring, cap)
    L = module_radical(pm, "left")
    rep = ExactnessReport(L.is_zero(), discrete, L.slice_dims())
    if not discrete:
        rep.warnings.append("base pseudoring is not discrete; quotient re-check skipped")
        rep.recheck = "skipped"
        return rep
    if L.is_zero():
        return rep
    q = quotient_model(pm, L, sides=("left",))
    L2 = module_radical(q, "left")
    rep.quotient_endo_dim = q.E.dim
    rep.quotient_radical_dim = L2.dim
    rep.recheck = "passed" if L2.is_zero() else "failed"
    return rep


@dataclass
class NontrivialityReport:
    vacuous: bool
    source: int | None = None
    target: int | None = None
    hom_dim: int = 0
    radical_dim: int = 0

    @property
    def proper(self) -> bool:
        return not self.vacuous and self.radical_dim < self.hom_dim


def radical_nontriviality_check(pm: ProjModel, source: int | None = None, target: int | None = None) -> NontrivialityReport:
    """Compare Rad^S(S)(source, target) with the whole Hom space (default: unit -> first other object)."""
    if source is None:
        source = pm.unit
    if source is None or pm.n < 2:
        return NontrivialityReport(True)
    if target is None:
        target = next(k for k in range(pm.n) if k != source)
    L = module_radical(pm, "left")
    return NontrivialityReport(False, source, target, pm.dims[(source, target)], L.slices[(source, target)].dim)


@dataclass
class HomVanishingReport:
    ok: bool
    complement: frozenset
    witness: tuple | None = None  # (q, p, dim Hom(q, p))

    def __bool__(self) -> bool:
        return self.ok


def hom_vanishing(pm: ProjModel, members: Iterable[int]) -> HomVanishingReport:
    """Hom(Q, P) = 0 for every Q in I^c and P in I."""
    members = frozenset(members)
    r = pm.pseudoring
    if not is_ideal(r, members):
        raise ValueError("not an ideal of the model's pseudoring")
    comp = complement_ideal(r, members).members
    order = sorted(comp - members) + sorted(comp & members)
    for q in order:
        for p in sorted(members):
            d = pm.dims[(q, p)]
            if d:
                return HomVanishingReport(False, comp, (q, p, d))
    return HomVanishingReport(True, comp)


@dataclass
class SerreReport:
    ok: bool
    ideal_verdict: bool
    witness: tuple | None = None  # (P, Q, L, L')

    @property
    def consistent(self) -> bool:
        return self.ok == self.ideal_verdict


def serre_factor_table(pm: ProjModel) -> dict:
    """(P, L', Q) -> composition factors of P^v (x) L' (x) ^vQ (label indices)."""
    if "serre_factors" in pm.cache:
        return pm.cache["serre_factors"]
    from .modules import simple_bimodule

    alg = pm.algebra
    labels = bimodule_labels(alg)
    if len(labels) != pm.n:
        raise ValueError("the Serre condition needs the model on all free bimodules")
    index = {lab: k for k, lab in enumerate(labels)}
    left_duals = [dual(obj, "left").dual for obj in pm.objects]
    right_duals = [dual(obj, "right").dual for obj in pm.objects]
    simples = [simple_bimodule(alg, *lab) for lab in labels]
    table = {}
    for p in range(pm.n):
        for lp in range(pm.n):
            pl = tensor_objects(left_duals[p], simples[lp]).object
            for q in range(pm.n):
                obj = tensor_objects(pl, right_duals[q]).object
                table[(p, lp, q)] = {index[lab]: m for lab, m in composition_factors(obj).items()}
    pm.cache["serre_factors"] = table
    return table


def serre_condition(pm: ProjModel, sigma: Iterable[int]) -> SerreReport:
    """No L in sigma is a composition factor of P^v (x) L' (x) ^vQ with L' outside sigma.

    P^v is the dual built on Hom over the left action and ^vQ the one over the
    right action (see :func:`pretensor.monoidal.dual`).
    """
    sigma = frozenset(sigma)
    table = serre_factor_table(pm)
    ideal_ok = is_ideal(pm.pseudoring, sigma)
    for (p, lp, q), factors in sorted(table.items()):
        if lp in sigma:
            continue
        for l in sorted(sigma):
            if factors.get(l, 0):
                return SerreReport(False, ideal_ok, (p, q, l, lp))
    return SerreReport(True, ideal_ok)
