"""Finite Z+-pseudorings: ideals, complements, the LR preorder and cells.

A pseudoring on basis ``b_0 .. b_{m-1}`` is a table ``c[i][j][k]`` of
nonnegative integers with ``b_i b_j = sum_k c[i][j][k] b_k``.  Subsets of the
basis are handled as ``frozenset`` values in the API and as bitmasks inside
the brute-force enumeration.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Iterable, Sequence


class TooLarge(ValueError):
    pass


class NotNearring(ValueError):
    pass


class InvalidPseudoring(ValueError):
    pass


@dataclass(frozen=True)
class ZPlusPseudoring:
    basis: tuple
    table: tuple  # table[i][j][k]

    def __post_init__(self):
        m = len(self.basis)
        table = tuple(tuple(tuple(int(x) for x in cell) for cell in row) for row in self.table)
        if len(table) != m or any(len(row) != m or any(len(cell) != m for cell in row) for row in table):
            raise InvalidPseudoring(f"table must be {m}x{m}x{m}")
        object.__setattr__(self, "basis", tuple(str(b) for b in self.basis))
        object.__setattr__(self, "table", table)

    @classmethod
    def from_products(cls, basis: Sequence[str], products: dict) -> "ZPlusPseudoring":
        """Build from ``{(x, y): {z: coeff}}`` keyed by basis names."""
        idx = {b: k for k, b in enumerate(basis)}
        m = len(basis)
        table = [[[0] * m for _ in range(m)] for _ in range(m)]
        for (x, y), out in products.items():
            for z, c in out.items():
                table[idx[x]][idx[y]][idx[z]] = c
        return cls(tuple(basis), table)

    @property
    def m(self) -> int:
        return len(self.basis)

    def product(self, u: Sequence[int], v: Sequence[int]) -> tuple:
        m = self.m
        out = [0] * m
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        for k, c in enumerate(self.table[i][j]):
                            if c:
                                out[k] += a * b * c
        return tuple(out)

    def basis_vector(self, i: int) -> tuple:
        return tuple(1 if k == i else 0 for k in range(self.m))

    def triple(self, i: int, j: int, k: int) -> tuple:
        """Coefficients of b_i b_j b_k."""
        return self.product(self.table[i][j], self.basis_vector(k))

    def to_json(self) -> dict:
        return {"basis": list(self.basis), "table": [[list(cell) for cell in row] for row in self.table]}

    @classmethod
    def from_json(cls, data: dict) -> "ZPlusPseudoring":
        if not isinstance(data, dict) or "table" not in data:
            raise InvalidPseudoring("expected an object with 'basis' and 'table'")
        table = data["table"]
        basis = data.get("basis") or [f"b{k}" for k in range(len(table))]
        for row in table:
            for cell in row:
                for x in cell:
                    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                        raise InvalidPseudoring(f"structure constants must be nonnegative integers, got {x!r}")
        return cls(tuple(basis), table)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def permuted(self, perm: Sequence[int]) -> "ZPlusPseudoring":
        """Relabel so that new basis element k is old element perm[k]."""
        inv = {old: new for new, old in enumerate(perm)}
        m = self.m
        table = [[[0] * m for _ in range(m)] for _ in range(m)]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    table[inv[i]][inv[j]][inv[k]] = self.table[i][j][k]
        return ZPlusPseudoring(tuple(self.basis[p] for p in perm), table)

    def restricted(self, members: Iterable[int]) -> "ZPlusPseudoring":
        """Sub-table on a subset (meaningful when the subset is closed under products)."""
        members = sorted(members)
        table = [[[self.table[i][j][k] for k in members] for j in members] for i in members]
        return ZPlusPseudoring(tuple(self.basis[i] for i in members), table)


@dataclass(frozen=True)
class ZPlusIdeal:
    members: frozenset

    def names(self, r: ZPlusPseudoring) -> list[str]:
        return [r.basis[k] for k in sorted(self.members)]


@dataclass(frozen=True)
class Report:
    ok: bool
    defect: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_pseudoring(r: ZPlusPseudoring) -> Report:
    m = r.m
    for i, j, k in iproduct(range(m), repeat=3):
        if r.table[i][j][k] < 0:
            return Report(False, "negative structure constant", (i, j, k))
    for i, j, k in iproduct(range(m), repeat=3):
        lhs = r.product(r.table[i][j], r.basis_vector(k))
        rhs = r.product(r.basis_vector(i), r.table[j][k])
        if lhs != rhs:
            l = next(l for l in range(m) if lhs[l] != rhs[l])
            return Report(False, "associativity", (i, j, k, l))
    return Report(True)


@dataclass(frozen=True)
class NearringReport:
    ok: bool
    witnesses: dict  # i -> (j, k) with b_i appearing in b_j b_i b_k
    failing: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_nearring(r: ZPlusPseudoring) -> NearringReport:
    witnesses = {}
    for i in range(r.m):
        found = None
        for j in range(r.m):
            left = r.table[j][i]
            if not any(left):
                continue
            for k in range(r.m):
                if r.product(left, r.basis_vector(k))[i] > 0:
                    found = (j, k)
                    break
            if found:
                break
        if found is None:
            return NearringReport(False, witnesses, i)
        witnesses[i] = found
    return NearringReport(True, witnesses)


def _neighbours(r: ZPlusPseudoring) -> list[int]:
    """Bitmask per j of all l with c[i][j][l] > 0 or c[j][i][l] > 0 for some i."""
    m = r.m
    out = []
    for j in range(m):
        mask = 0
        for i in range(m):
            for l in range(m):
                if r.table[i][j][l] or r.table[j][i][l]:
                    mask |= 1 << l
        out.append(mask)
    return out


def _closure_mask(nbr: Sequence[int], seed: int) -> int:
    closed = seed
    frontier = seed
    while frontier:
        new = 0
        f = frontier
        while f:
            low = f & -f
            new |= nbr[low.bit_length() - 1]
            f ^= low
        frontier = new & ~closed
        closed |= new
    return closed


def _mask(members: Iterable[int]) -> int:
    out = 0
    for k in members:
        out |= 1 << k
    return out


def _members(mask: int) -> frozenset:
    return frozenset(k for k in range(mask.bit_length()) if mask >> k & 1)


def ideal_closure(r: ZPlusPseudoring, seed: Iterable[int]) -> ZPlusIdeal:
    """Smallest subset containing seed and closed under one-sided products."""
    return ZPlusIdeal(_members(_closure_mask(_neighbours(r), _mask(seed))))


def is_ideal(r: ZPlusPseudoring, members: Iterable[int]) -> bool:
    mask = _mask(members)
    return _closure_mask(_neighbours(r), mask) == mask


def triple_support(r: ZPlusPseudoring, generators: Iterable[int]) -> frozenset:
    """All l such that b_l appears in some b_i b_j b_k with j among the generators."""
    gens = list(generators)
    out = set()
    for j in gens:
        for i in range(r.m):
            left = r.table[i][j]
            if not any(left):
                continue
            for k in range(r.m):
                for l, c in enumerate(r.product(left, r.basis_vector(k))):
                    if c:
                        out.add(l)
    return frozenset(out)


def complement_ideal(r: ZPlusPseudoring, ideal: ZPlusIdeal | Iterable[int], check: bool | None = None) -> ZPlusIdeal:
    """I^c: the ideal generated by the basis elements outside I.

    For nearrings the closure is cross-checked against the triple-product
    description of the same ideal (pass ``check=False`` to skip).
    """
    members = ideal.members if isinstance(ideal, ZPlusIdeal) else frozenset(ideal)
    rest = [k for k in range(r.m) if k not in members]
    out = ideal_closure(r, rest)
    if check is None:
        check = bool(is_nearring(r))
    if check and triple_support(r, rest) != out.members:
        raise AssertionError("closure and triple-product descriptions of the complement disagree")
    return out


@dataclass(frozen=True)
class DiscretenessResult:
    discrete: bool
    ideal: frozenset | None = None  # counterexample I
    complement: frozenset | None = None  # its I^c
    ideals_checked: int = 0


def all_ideals(r: ZPlusPseudoring, cap: int = 15) -> list[frozenset]:
    if r.m > cap:
        raise TooLarge(f"brute force over 2^{r.m} subsets exceeds the cap 2^{cap}")
    nbr = _neighbours(r)
    out = []
    for mask in range(1 << r.m):
        if _closure_mask(nbr, mask) == mask:
            out.append(mask)
    return [_members(x) for x in out]


def is_discrete_bruteforce(r: ZPlusPseudoring, cap: int = 15) -> DiscretenessResult:
    """Enumerate every ideal I and test I and I^c for a common basis element."""
    if r.m > cap:
        raise TooLarge(f"brute force over 2^{r.m} subsets exceeds the cap 2^{cap}")
    nbr = _neighbours(r)
    full = (1 << r.m) - 1
    bad = []
    count = 0
    for mask in range(1 << r.m):
        if _closure_mask(nbr, mask) != mask:
            continue
        count += 1
        comp = _closure_mask(nbr, full & ~mask)
        if mask & comp:
            bad.append((bin(mask).count("1"), mask, comp))
    if not bad:
        return DiscretenessResult(True, ideals_checked=count)
    _, mask, comp = min(bad)
    return DiscretenessResult(False, _members(mask), _members(comp), count)


def leq_lr(r: ZPlusPseudoring) -> list[list[bool]]:
    """rel[i][j] is True when b_i appears in some b_k b_j b_l."""
    m = r.m
    rel = [[False] * m for _ in range(m)]
    for j in range(m):
        for i in triple_support(r, [j]):
            rel[i][j] = True
    for a, b, c in iproduct(range(m), repeat=3):
        if rel[a][b] and rel[b][c] and not rel[a][c]:
            raise AssertionError(f"internal error: LR relation not transitive at {(a, b, c)}")
    reflexive = all(rel[i][i] for i in range(m))
    if reflexive != bool(is_nearring(r)):
        raise AssertionError("internal error: LR reflexivity disagrees with the nearring test")
    return rel


@dataclass(frozen=True)
class CellDecomposition:
    discrete: bool
    cells: tuple = ()  # tuple of tuples of indices
    pieces: tuple = ()  # sub-pseudorings, one per cell
    asymmetric_pair: tuple | None = None  # (i, j) with i <= j but not j <= i

    def cell_names(self, r: ZPlusPseudoring) -> list[list[str]]:
        return [[r.basis[k] for k in cell] for cell in self.cells]


def cell_decomposition(r: ZPlusPseudoring) -> CellDecomposition:
    if not is_nearring(r):
        raise NotNearring("cell decomposition needs a Z+-nearring")
    rel = leq_lr(r)
    m = r.m
    for i in range(m):
        for j in range(m):
            if rel[i][j] and not rel[j][i]:
                return CellDecomposition(False, asymmetric_pair=(i, j))
    cells = []
    seen = set()
    for i in range(m):
        if i in seen:
            continue
        cell = tuple(j for j in range(m) if rel[i][j])
        seen.update(cell)
        cells.append(cell)
    where = {k: c for c, cell in enumerate(cells) for k in cell}
    for i, j, k in iproduct(range(m), repeat=3):
        if r.table[i][j][k] and not (where[i] == where[j] == where[k]):
            raise AssertionError(f"cross-cell product b_{i} b_{j} has a b_{k} term")
    pieces = tuple(r.restricted(cell) for cell in cells)
    for piece in pieces:
        if not is_indecomposable_discrete(piece):
            raise AssertionError("a cell carries a nontrivial ideal")
    return CellDecomposition(True, tuple(cells), pieces)


def is_indecomposable_discrete(r: ZPlusPseudoring) -> bool:
    nbr = _neighbours(r)
    full = (1 << r.m) - 1
    return all(_closure_mask(nbr, 1 << j) == full for j in range(r.m))


def direct_sum(r1: ZPlusPseudoring, r2: ZPlusPseudoring) -> ZPlusPseudoring:
    m1, m = r1.m, r1.m + r2.m
    table = [[[0] * m for _ in range(m)] for _ in range(m)]
    for i, j, k in iproduct(range(m1), repeat=3):
        table[i][j][k] = r1.table[i][j][k]
    for i, j, k in iproduct(range(r2.m), repeat=3):
        table[m1 + i][m1 + j][m1 + k] = r2.table[i][j][k]
    names = list(r1.basis) + list(r2.basis)
    if len(set(names)) != len(names):
        names = [f"{b}.1" for b in r1.basis] + [f"{b}.2" for b in r2.basis]
    return ZPlusPseudoring(tuple(names), table)


# -- named examples ------------------------------------------------------------


def idempotent_ring() -> ZPlusPseudoring:
    """{b : b^2 = b}."""
    return ZPlusPseudoring(("b",), [[[1]]])


def scaled_ring(k: int) -> ZPlusPseudoring:
    """{b : b^2 = k b}."""
    return ZPlusPseudoring(("b",), [[[k]]])


def unit_and_square() -> ZPlusPseudoring:
    """{d, t}: d^2 = d, dt = td = t, t^2 = 2t."""
    return ZPlusPseudoring.from_products(
        ["d", "t"],
        {("d", "d"): {"d": 1}, ("d", "t"): {"t": 1}, ("t", "d"): {"t": 1}, ("t", "t"): {"t": 2}},
    )


def cartan_type(C: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> ZPlusPseudoring:
    """b_(i,j) b_(k,l) = C[j][k] b_(i,l)."""
    n = len(C)
    labels = [(i, j) for i in range(n) for j in range(n)]
    m = len(labels)
    idx = {lab: k for k, lab in enumerate(labels)}
    table = [[[0] * m for _ in range(m)] for _ in range(m)]
    for (i, j), (k, l) in iproduct(labels, repeat=2):
        table[idx[(i, j)]][idx[(k, l)]][idx[(i, l)]] = C[j][k]
    names = names or [f"({i + 1},{j + 1})" for i, j in labels]
    return ZPlusPseudoring(tuple(names), table)
