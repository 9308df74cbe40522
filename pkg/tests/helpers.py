"""Independent oracles and instance generators shared by the test modules.

Nothing here calls into the code under test except for plain data access
(tables, bases), so agreement with the library is meaningful.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy

from pretensor.zplus import ZPlusPseudoring, cartan_type, direct_sum


# ---------------------------------------------------------------------------
# linear algebra via sympy


def sym(m) -> sympy.Matrix:
    rows = [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in m.data] if hasattr(m, "data") else m
    return sympy.Matrix(rows) if rows else sympy.zeros(0, 0)


def sym_rank(m) -> int:
    return sym(m).rank() if m.rows and m.cols else 0


def dense_table(alg) -> list:
    n = alg.dim
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [0] * n
            for k, c in alg.table[i][j].items():
                v[k] = Fraction(int(c.numerator), int(c.denominator))
            row.append(v)
        out.append(row)
    return out


def oracle_radical_dim(alg) -> int:
    """dim ker of the trace form tr(L_{b_i b_j}), built straight from the table with sympy."""
    t = dense_table(alg)
    n = alg.dim
    if n == 0:
        return 0
    # tr(L_{b_k}) = sum_j c[k][j][j]
    tr = [sum(t[k][j][j] for j in range(n)) for k in range(n)]
    form = sympy.Matrix(n, n, lambda i, j: sum(t[i][j][k] * tr[k] for k in range(n)))
    return n - form.rank()


# ---------------------------------------------------------------------------
# idempotents


def vertex_sums(alg):
    """Every sum of a subset of the algebra's orthogonal primitive idempotents."""
    from pretensor.modules import orthogonal_idempotents
    from pretensor.qlinalg import ZERO

    idems = orthogonal_idempotents(alg)
    for k in range(len(idems) + 1):
        for combo in itertools.combinations(idems, k):
            yield tuple(sum((e[i] for e in combo), ZERO) for i in range(alg.dim))


def unit_conjugate(alg, e, r):
    """(1 + r) e (1 + r)^(-1) for r in the radical; the inverse is a finite geometric series."""
    from pretensor.qlinalg import vadd, vscale

    u = vadd(alg.unit, r)
    inv, power = alg.unit, alg.unit
    for _ in range(alg.dim):
        power = alg.mul(power, vscale(-1, r))
        inv = vadd(inv, power)
    assert alg.mul(u, inv) == alg.unit
    return alg.mul(alg.mul(u, e), inv)


# ---------------------------------------------------------------------------
# Z+ combinatorics from the definitions


def naive_closure(r: ZPlusPseudoring, seed) -> frozenset:
    members = set(seed)
    changed = True
    while changed:
        changed = False
        for j in list(members):
            for i in range(r.m):
                for l in range(r.m):
                    if (r.table[i][j][l] or r.table[j][i][l]) and l not in members:
                        members.add(l)
                        changed = True
    return frozenset(members)


def naive_ideals(r: ZPlusPseudoring) -> list[frozenset]:
    out = []
    for mask in range(1 << r.m):
        s = frozenset(i for i in range(r.m) if mask >> i & 1)
        if naive_closure(r, s) == s:
            out.append(s)
    return out


def triple_coefficient(r: ZPlusPseudoring, k: int, j: int, l: int) -> list[int]:
    m = r.m
    kj = [r.table[k][j][p] for p in range(m)]
    return [sum(kj[p] * r.table[p][l][q] for p in range(m)) for q in range(m)]


def naive_discrete(r: ZPlusPseudoring) -> bool:
    every = frozenset(range(r.m))
    for ideal in naive_ideals(r):
        comp = naive_closure(r, every - ideal)
        if ideal & comp:
            return False
    return True


def naive_nearring(r: ZPlusPseudoring) -> bool:
    return all(
        any(triple_coefficient(r, j, i, k)[i] > 0 for j in range(r.m) for k in range(r.m)) for i in range(r.m)
    )


def naive_associative(table) -> bool:
    m = len(table)
    for i, j, k in itertools.product(range(m), repeat=3):
        left = [sum(table[i][j][p] * table[p][k][q] for p in range(m)) for q in range(m)]
        right = [sum(table[j][k][p] * table[i][p][q] for p in range(m)) for q in range(m)]
        if left != right:
            return False
    return True


# ---------------------------------------------------------------------------
# nearring generator


def _monoids(size: int):
    """All monoid tables on {0..size-1} with identity 0 (brute force, small sizes)."""
    others = list(range(1, size))
    cells = [(a, b) for a in others for b in others]
    for values in itertools.product(range(size), repeat=len(cells)):
        mul = {(0, x): x for x in range(size)}
        mul.update({(x, 0): x for x in range(size)})
        mul.update(dict(zip(cells, values)))
        if all(mul[mul[a, b], c] == mul[a, mul[b, c]] for a in range(size) for b in range(size) for c in range(size)):
            yield mul


def monoid_ring(mul: dict, size: int) -> ZPlusPseudoring:
    table = [[[1 if mul[a, b] == k else 0 for k in range(size)] for b in range(size)] for a in range(size)]
    return ZPlusPseudoring(tuple(f"g{k}" for k in range(size)), table)


def unit_square_family(k: int) -> ZPlusPseudoring:
    """{d, t}: d unit, t^2 = k t."""
    return ZPlusPseudoring(("d", "t"), [[[1, 0], [0, 1]], [[0, 1], [0, k]]])


def _random_table(rng: random.Random, m: int) -> list:
    density = rng.choice([0.2, 0.35, 0.5])
    return [
        [[rng.randint(1, 3) if rng.random() < density else 0 for _ in range(m)] for _ in range(m)] for _ in range(m)
    ]


def _relabel(r: ZPlusPseudoring, perm) -> ZPlusPseudoring:
    return r.permuted(perm)


def nearring_suite(count: int = 520, seed: int = 20240611) -> list[ZPlusPseudoring]:
    """Deterministic list of distinct nearrings with m <= 5 and entries <= 3."""
    rng = random.Random(seed)
    seen: dict[str, ZPlusPseudoring] = {}

    def add(r: ZPlusPseudoring) -> None:
        if r.m == 0 or r.m > 5:
            return
        if max((x for row in r.table for cell in row for x in cell), default=0) > 3:
            return
        if not naive_associative(r.table) or not naive_nearring(r):
            return
        seen.setdefault(json_key(r), r)

    base: list[ZPlusPseudoring] = []
    # Cartan-type tables
    for k in (1, 2):
        for entries in itertools.product(range(4), repeat=k * k):
            C = [list(entries[i * k : (i + 1) * k]) for i in range(k)]
            if all(C[i][i] >= 1 for i in range(k)):
                base.append(cartan_type(C))
    # monoid rings
    for size in (1, 2, 3):
        base.extend(monoid_ring(mul, size) for mul in _monoids(size))
    # scaled and {d, t} families
    base.extend(ZPlusPseudoring(("b",), [[[k]]]) for k in (1, 2, 3))
    base.extend(unit_square_family(k) for k in (1, 2, 3))
    for r in base:
        add(r)
    # rejection sampling
    attempts = 0
    while attempts < 40000 and len(seen) < count // 2:
        attempts += 1
        m = rng.choice([1, 2, 2, 3])
        add(ZPlusPseudoring(tuple(f"x{i}" for i in range(m)), _random_table(rng, m)))
    # direct sums and permutations
    pool = list(seen.values())
    attempts = 0
    while len(seen) < count and attempts < 20000:
        attempts += 1
        a, b = rng.choice(pool), rng.choice(pool)
        if a.m + b.m <= 5:
            s = direct_sum(a, b)
            perm = list(range(s.m))
            rng.shuffle(perm)
            add(s.permuted(perm))
        a = rng.choice(pool)
        perm = list(range(a.m))
        rng.shuffle(perm)
        add(a.permuted(perm))
    return list(seen.values())


def json_key(r: ZPlusPseudoring) -> str:
    return repr([[list(c) for c in row] for row in r.table])
