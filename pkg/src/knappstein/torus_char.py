"""Characters of the split torus, valued in a declared abelian group.

Each coordinate carries an element of Z^f + Z/m_1 + ... + Z/m_k, written
additively: inversion of a character is negation, the trivial character is 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DimensionMismatch
from .rootdata import RootSystem
from .weyl import WeylElement, _check_bound, canonical_sorted


@dataclass(frozen=True)
class CharGroup:
    free_rank: int = 0
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_orders", tuple(self.torsion_orders))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(m < 2 for m in self.torsion_orders):
            raise ValueError(f"torsion orders must be >= 2, got {self.torsion_orders}")

    def value(self, free: Sequence[int] = (), torsion: Sequence[int] = ()) -> "CharValue":
        free = tuple(free) or (0,) * self.free_rank
        torsion = tuple(torsion) or (0,) * len(self.torsion_orders)
        if len(free) != self.free_rank or len(torsion) != len(self.torsion_orders):
            raise DimensionMismatch(f"value shape does not match {self}")
        return CharValue(free, tuple(t % m for t, m in zip(torsion, self.torsion_orders)))

    def zero(self) -> "CharValue":
        return self.value()

    def add(self, a: "CharValue", b: "CharValue") -> "CharValue":
        return CharValue(
            tuple(x + y for x, y in zip(a.free, b.free)),
            tuple((x + y) % m for x, y, m in zip(a.torsion, b.torsion, self.torsion_orders)),
        )

    def neg(self, a: "CharValue") -> "CharValue":
        return CharValue(tuple(-x for x in a.free), tuple(-x % m for x, m in zip(a.torsion, self.torsion_orders)))

    def scale(self, k: int, a: "CharValue") -> "CharValue":
        return CharValue(tuple(k * x for x in a.free), tuple(k * x % m for x, m in zip(a.torsion, self.torsion_orders)))

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{m}" for m in self.torsion_orders]
        return " x ".join(parts) or "trivial"


@dataclass(frozen=True, order=True)
class CharValue:
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)


class ValuePredicates(NamedTuple):
    is_trivial: bool
    is_quadratic: bool


def value_predicates(v: CharValue, group: CharGroup) -> ValuePredicates:
    """Triviality (v = 0) and quadratic-ness (2v = 0) of a single value.

    The torsion orders live on the group, so it has to be passed in.
    """
    return ValuePredicates(v.is_zero(), group.scale(2, v).is_zero())


@dataclass(frozen=True)
class TorusCharacter:
    group: CharGroup
    values: tuple[CharValue, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        nf, nt = self.group.free_rank, len(self.group.torsion_orders)
        for v in self.values:
            if len(v.free) != nf or len(v.torsion) != nt:
                raise DimensionMismatch(f"value {v} does not belong to {self.group}")
            if any(not 0 <= t < m for t, m in zip(v.torsion, self.group.torsion_orders)):
                raise ValueError(f"torsion entries of {v} are not reduced")

    @classmethod
    def from_torsion(cls, group: CharGroup, rows: Sequence[Sequence[int]]) -> "TorusCharacter":
        return cls(group, tuple(group.value(torsion=r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.values)

    def is_trivial(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def predicates(self, i: int) -> ValuePredicates:
        return value_predicates(self.values[i], self.group)


def act(w: WeylElement, chi: TorusCharacter) -> TorusCharacter:
    """(w chi)_i = eps * chi_j whenever w e_j = eps e_i."""
    if w.n != chi.n:
        raise DimensionMismatch(f"element on {w.n} coordinates acting on a character of length {chi.n}")
    out = [None] * chi.n
    g = chi.group
    for j, (p, s) in enumerate(zip(w.perm, w.signs)):
        v = chi.values[j]
        out[p] = v if s > 0 else g.neg(v)
    return TorusCharacter(g, tuple(out))


def fixes(w: WeylElement, chi: TorusCharacter) -> bool:
    g = chi.group
    vals = chi.values
    for j, (p, s) in enumerate(zip(w.perm, w.signs)):
        v = vals[j] if s > 0 else g.neg(vals[j])
        if v != vals[p]:
            return False
    return True


def stabilizer(rs: RootSystem, chi: TorusCharacter, bound: int | None = None) -> list[WeylElement]:
    """W(chi) in canonical order.

    Built by a pruned search over images e_j -> +-e_i with chi_i = +-chi_j,
    which visits only stabilizer elements (plus dead ends) instead of all of W.
    """
    _check_bound(rs, bound)
    n = rs.dim
    if chi.n != n:
        raise DimensionMismatch(f"character of length {chi.n} for {rs.spec} (needs {n})")
    g = chi.group
    vals = chi.values
    negs = [g.neg(v) for v in vals]
    allowed_signs = (1,) if rs.family == "A" else (1, -1)
    found = []
    perm, signs, used = [0] * n, [1] * n, [False] * n

    def extend(j: int, neg_count: int):
        if j == n:
            if rs.family == "D" and neg_count % 2:
                return
            found.append(WeylElement(tuple(perm), tuple(signs)))
            return
        for i in range(n):
            if used[i]:
                continue
            for s in allowed_signs:
                if (vals[j] if s > 0 else negs[j]) != vals[i]:
                    continue
                used[i] = True
                perm[j], signs[j] = i, s
                extend(j + 1, neg_count + (s < 0))
                used[i] = False

    extend(0, 0)
    return canonical_sorted(rs.family, found)
