"""Group algebra of a finite R-group and its central projections.

With a split cocycle the commuting algebra of the induced representation is
C[R].  Here C[R] acts on itself by the left regular representation, and for
each irreducible character rho we form

    A_rho = (dim rho / |R|) * sum_r conj(chi_rho(r)) * L(r)

then check that the A_rho are central orthogonal idempotents summing to 1.
Abelian groups get exact cyclotomic characters; others use Burnside's
class-sum algorithm in floating point.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Hashable, NamedTuple, Sequence

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import CensusMismatch, InvalidGroupTable

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class FiniteGroupTable:
    order: int
    mult: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple = ()
    _inverse: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        n = self.order
        if n < 1 or len(self.mult) != n or any(len(r) != n for r in self.mult):
            raise InvalidGroupTable("multiplication table must be order x order")
        if any(not 0 <= x < n for r in self.mult for x in r):
            raise InvalidGroupTable("table entries out of range")
        e = self.identity
        if any(self.mult[e][g] != g or self.mult[g][e] != g for g in range(n)):
            raise InvalidGroupTable(f"element {e} is not a two-sided identity")
        inv = []
        for g in range(n):
            hs = [h for h in range(n) if self.mult[g][h] == e]
            if len(hs) != 1 or self.mult[hs[0]][g] != e:
                raise InvalidGroupTable(f"element {g} has no unique inverse")
            inv.append(hs[0])
        m = self.mult
        for a, b, c in itertools.product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise InvalidGroupTable(f"associativity fails at ({a}, {b}, {c})")
        object.__setattr__(self, "_inverse", tuple(inv))

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], op: Callable) -> "FiniteGroupTable":
        index = {x: i for i, x in enumerate(elements)}
        try:
            mult = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
        except KeyError as exc:
            raise InvalidGroupTable("element set is not closed under the operation") from exc
        ident = [i for i in range(len(elements)) if all(mult[i][j] == j for j in range(len(elements)))]
        if not ident:
            raise InvalidGroupTable("no identity element")
        return cls(len(elements), mult, ident[0], tuple(elements))

    @classmethod
    def cyclic(cls, m: int) -> "FiniteGroupTable":
        return cls(m, tuple(tuple((a + b) % m for b in range(m)) for a in range(m)))

    @classmethod
    def elementary_abelian(cls, d: int) -> "FiniteGroupTable":
        n = 2**d
        return cls(n, tuple(tuple(a ^ b for b in range(n)) for a in range(n)))

    @classmethod
    def dihedral(cls, k: int) -> "FiniteGroupTable":
        """Symmetries of a k-gon, order 2k; element (s, r) = x^s y^r with x y x = y^-1."""
        elems = [(s, r) for s in range(2) for r in range(k)]

        def op(a, b):
            (s1, r1), (s2, r2) = a, b
            return ((s1 + s2) % 2, (r2 + (r1 if s2 == 0 else -r1)) % k)

        return cls.from_elements(elems, op)

    @classmethod
    def trivial(cls) -> "FiniteGroupTable":
        return cls(1, ((0,),))

    def inverse(self, g: int) -> int:
        return self._inverse[g]

    def is_abelian(self) -> bool:
        return all(self.mult[a][b] == self.mult[b][a] for a in range(self.order) for b in range(a))

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mult[x][g]
            k += 1
        return k

    def exponent(self) -> int:
        e = 1
        for g in range(self.order):
            k = self.element_order(g)
            e = e * k // gcd(e, k)
        return e

    def conjugacy_classes(self) -> list[list[int]]:
        seen, classes = set(), []
        for g in range(self.order):
            if g in seen:
                continue
            cls_ = sorted({self.mult[self.mult[h][g]][self.inverse(h)] for h in range(self.order)})
            seen.update(cls_)
            classes.append(cls_)
        return classes

    @property
    def char_table(self) -> "CharacterTable":
        return character_table(self)


@dataclass(frozen=True)
class CharacterTable:
    """Rows are irreducible characters as functions on elements (not classes)."""

    values: tuple  # tuple of rows; each row a tuple of Cyclotomic or complex, indexed by element
    dims: tuple[int, ...]
    exact: bool


def _abelian_characters(tbl: FiniteGroupTable) -> CharacterTable:
    """All homomorphisms to Z/e (e the exponent), found by brute force over generator images."""
    e = tbl.exponent()
    gens, span = [], {tbl.identity}
    for g in range(tbl.order):
        if g not in span:
            gens.append(g)
            frontier = list(span)
            while frontier:
                x = frontier.pop()
                for h in gens:
                    y = tbl.mult[x][h]
                    if y not in span:
                        span.add(y)
                        frontier.append(y)
    rows = []
    for images in itertools.product(range(e), repeat=len(gens)):
        value = {tbl.identity: 0}
        frontier = [tbl.identity]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for h, k in zip(gens, images):
                y = tbl.mult[x][h]
                v = (value[x] + k) % e
                if y in value:
                    if value[y] != v:
                        ok = False
                        break
                else:
                    value[y] = v
                    frontier.append(y)
        if ok and all(
            (value[a] + value[b]) % e == value[tbl.mult[a][b]] for a in range(tbl.order) for b in range(tbl.order)
        ):
            rows.append(tuple(value[g] for g in range(tbl.order)))
    rows = sorted(set(rows))
    values = tuple(tuple(Cyclotomic.root(k, e) for k in row) for row in rows)
    return CharacterTable(values, (1,) * len(rows), True)


def _burnside_characters(tbl: FiniteGroupTable) -> CharacterTable:
    classes = tbl.conjugacy_classes()
    k = len(classes)
    where = {g: c for c, cl in enumerate(classes) for g in cl}
    reps = [cl[0] for cl in classes]
    # structure constants c[i][j][l] = #{(x, y) in C_i x C_j : x y = rep_l}
    c = np.zeros((k, k, k))
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            for x in ci:
                for y in cj:
                    z = tbl.mult[x][y]
                    if z in reps:
                        c[i, j, reps.index(z)] += 1
    rng = np.random.default_rng(12345)
    combo = np.einsum("j,ijl->il", rng.standard_normal(k), c)
    _, vecs = np.linalg.eig(combo)
    e_class = where[tbl.identity]
    sizes = np.array([len(cl) for cl in classes], dtype=float)
    rows, dims = [], []
    for col in range(k):
        omega = vecs[:, col] / vecs[e_class, col]
        deg2 = tbl.order / np.sum(np.abs(omega) ** 2 / sizes)
        deg = int(round(float(np.sqrt(deg2.real))))
        chi_classes = omega * deg / sizes
        rows.append(tuple(complex(chi_classes[where[g]]) for g in range(tbl.order)))
        dims.append(deg)
    order = sorted(range(k), key=lambda r: (dims[r], [round(v.real, 9) for v in rows[r]]))
    return CharacterTable(tuple(rows[r] for r in order), tuple(dims[r] for r in order), False)


def character_table(tbl: FiniteGroupTable) -> CharacterTable:
    if tbl.is_abelian():
        return _abelian_characters(tbl)
    return _burnside_characters(tbl)


def regular_matrix(tbl: FiniteGroupTable, r: int) -> np.ndarray:
    """Left regular action: e_g -> e_{r g}."""
    m = np.zeros((tbl.order, tbl.order), dtype=int)
    for g in range(tbl.order):
        m[tbl.mult[r][g], g] = 1
    return m


@dataclass(frozen=True)
class ProjectionSet:
    matrices: tuple  # exact: lists of lists of Cyclotomic; otherwise complex ndarrays
    regular: tuple[np.ndarray, ...]
    dims: tuple[int, ...]
    exact: bool
    tolerance: float = DEFAULT_TOLERANCE


def build_projections(tbl: FiniteGroupTable, tolerance: float = DEFAULT_TOLERANCE) -> ProjectionSet:
    ct = tbl.char_table
    n = tbl.order
    regular = tuple(regular_matrix(tbl, r) for r in range(n))
    mats = []
    for row, dim in zip(ct.values, ct.dims):
        if ct.exact:
            # (L(r))_{rg, g} = 1, so entry (a, b) collects r = a b^-1
            mat = [
                [row[tbl.mult[a][tbl.inverse(b)]].conjugate() * dim / n for b in range(n)]
                for a in range(n)
            ]
        else:
            mat = sum(np.conj(row[r]) * regular[r] for r in range(n)) * dim / n
        mats.append(mat)
    return ProjectionSet(tuple(mats), regular, ct.dims, ct.exact, tolerance)


class ProjectionVerdict(NamedTuple):
    idempotent: bool
    orthogonal: bool
    central: bool
    partition_of_identity: bool
    max_defect: float


def _exact_mul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Cyclotomic.rational(0)
            for k in range(n):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def _exact_defect(a, b) -> float:
    return max((abs(complex(x - y)) if not (x - y).is_zero() else 0.0 for ra, rb in zip(a, b) for x, y in zip(ra, rb)), default=0.0)


def _as_exact(m: np.ndarray):
    return [[Cyclotomic.rational(int(x)) for x in row] for row in m]


def verify_projections(ps: ProjectionSet) -> ProjectionVerdict:
    n = ps.regular[0].shape[0]
    k = len(ps.matrices)
    if ps.exact:
        zero = [[Cyclotomic.rational(0)] * n for _ in range(n)]
        ident = [[Cyclotomic.rational(int(i == j)) for j in range(n)] for i in range(n)]
        mats = ps.matrices
        idem = max(_exact_defect(_exact_mul(a, a), a) for a in mats)
        orth = max(
            (_exact_defect(_exact_mul(mats[i], mats[j]), zero) for i in range(k) for j in range(k) if i != j),
            default=0.0,
        )
        regs = [_as_exact(r) for r in ps.regular]
        cent = max(_exact_defect(_exact_mul(a, g), _exact_mul(g, a)) for a in mats for g in regs)
        total = zero
        for a in mats:
            total = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(total, a)]
        part = _exact_defect(total, ident)
    else:
        mats = [np.asarray(a, dtype=complex) for a in ps.matrices]
        idem = max(np.abs(a @ a - a).max() for a in mats)
        orth = max((np.abs(mats[i] @ mats[j]).max() for i in range(k) for j in range(k) if i != j), default=0.0)
        cent = max(np.abs(a @ g - g @ a).max() for a in mats for g in ps.regular)
        part = np.abs(sum(mats) - np.eye(n)).max()
    tol = ps.tolerance
    defects = [float(idem), float(orth), float(cent), float(part)]
    return ProjectionVerdict(defects[0] < tol, defects[1] < tol, defects[2] < tol, defects[3] < tol, max(defects))


def projection_ranks(ps: ProjectionSet) -> list[int]:
    out = []
    for a in ps.matrices:
        m = np.array([[complex(x) for x in row] for row in a]) if ps.exact else np.asarray(a, dtype=complex)
        out.append(int(np.linalg.matrix_rank(m, tol=1e-7)))
    return out


class Census(NamedTuple):
    group_order: int
    sum_of_squares: int
    irrep_count: int


def dimension_census(tbl: FiniteGroupTable) -> Census:
    ct = tbl.char_table
    total = sum(d * d for d in ct.dims)
    classes = len(tbl.conjugacy_classes())
    if total != tbl.order:
        raise CensusMismatch(f"sum of squared dimensions {total} != |R| = {tbl.order}")
    if len(ct.dims) != classes:
        raise CensusMismatch(f"{len(ct.dims)} characters but {classes} conjugacy classes")
    return Census(tbl.order, total, len(ct.dims))
