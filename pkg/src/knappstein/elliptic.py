"""Fixed spaces of Weyl elements on a = R^n and the two ellipticity tests.

Everything here is exact: entries are ``fractions.Fraction`` and subspaces are
stored by their reduced row-echelon basis, so equality of subspaces is
equality of data.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TYPE_CHECKING

from .errors import DimensionMismatch, NonAbelianR
from .weyl import WeylElement, simple_reflections

if TYPE_CHECKING:
    from .rgroup import RGroupReport


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form with zero rows dropped; returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Unique solution of matrix . x = rhs, or None if inconsistent or underdetermined."""
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots or len(pivots) < ncols:
        return None
    sol = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        sol[p] = row[ncols]
    return sol


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], n: int) -> "Subspace":
        vectors = list(vectors)
        if any(len(v) != n for v in vectors):
            raise DimensionMismatch(f"vectors must have length {n}")
        red, _ = rref(vectors, n)
        return cls(n, tuple(tuple(r) for r in red))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def annihilator(self) -> list[list[Fraction]]:
        return nullspace(self.basis, self.ambient_dim)

    def contains(self, other: "Subspace") -> bool:
        return intersect_all([self, other]) == other

    def as_lists(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.basis]


def fixed_space(w: WeylElement, n: int | None = None) -> Subspace:
    """Exact kernel of (w - 1) on the coordinate space."""
    n = w.n if n is None else n
    if n != w.n:
        raise DimensionMismatch(f"element acts on {w.n} coordinates, not {n}")
    m = w.matrix()
    rows = [[m[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    return Subspace.span(nullspace(rows, n), n)


def intersect_all(spaces: Sequence[Subspace], n: int | None = None) -> Subspace:
    if not spaces:
        if n is None:
            raise DimensionMismatch("ambient dimension required for an empty intersection")
        return Subspace.full(n)
    dims = {s.ambient_dim for s in spaces}
    if len(dims) != 1 or (n is not None and dims != {n}):
        raise DimensionMismatch(f"subspaces live in different ambient dimensions {sorted(dims)}")
    (n,) = dims
    equations = [row for s in spaces for row in s.annihilator()]
    return Subspace.span(nullspace(equations, n), n)


def weyl_invariants(rs) -> Subspace:
    """The W-fixed part of a; {0} for C and D, the diagonal line for GL-type A."""
    return intersect_all([fixed_space(s) for s in simple_reflections(rs)], rs.dim)


def r_fixed_space(report: "RGroupReport") -> Subspace:
    return intersect_all([fixed_space(w) for w in report.r_group], report.system.dim)


def _require_abelian(report: "RGroupReport") -> None:
    if not report.is_abelian:
        raise NonAbelianR("ellipticity criteria here assume an abelian R-group")


def arthur_elliptic(report: "RGroupReport", z: Subspace | None = None) -> bool:
    """Some w in R has a_w equal to z (the W-invariants unless overridden)."""
    _require_abelian(report)
    z = weyl_invariants(report.system) if z is None else z
    return any(fixed_space(w) == z for w in report.r_group)


def herb_induced(report: "RGroupReport") -> bool:
    """Some w in R has a_w equal to a_R."""
    _require_abelian(report)
    a_r = r_fixed_space(report)
    return any(fixed_space(w) == a_r for w in report.r_group)
