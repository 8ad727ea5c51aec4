"""Root systems of the classical Cartan families in the e_i coordinate basis.

Family A of rank n lives in n+1 coordinates (the GL_{n+1} picture), so every
root has integer coordinates.  B, C and D of rank n live in n coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import ForeignRoot, UnsupportedRank

FAMILIES = ("A", "B", "C", "D")

Root = tuple[int, ...]

# Names of the connected complex dual groups, for documentation only.
DUAL_GROUP_NAMES = {
    "A": "GL_n <-> GL_n",
    "B": "SO_{2n+1} <-> Sp_{2n}(C)",
    "C": "Sp_{2n} <-> SO_{2n+1}(C)",
    "D": "SO_{2n} <-> SO_{2n}(C) (often listed as Spin(2n))",
}


@dataclass(frozen=True, order=True)
class CartanSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedRank(f"unsupported Cartan family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool) or self.rank < 1:
            raise UnsupportedRank(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "D" and self.rank < 2:
            raise UnsupportedRank("family D requires rank >= 2")

    @property
    def ambient_dim(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self):
        return f"{self.family}{self.rank}"


def dual_type(spec: CartanSpec) -> CartanSpec:
    """Cartan type of the dual root datum: B and C swap, A and D are fixed."""
    swap = {"A": "A", "B": "C", "C": "B", "D": "D"}
    return CartanSpec(swap[spec.family], spec.rank)


def _unit(n: int, i: int, c: int = 1) -> list[int]:
    v = [0] * n
    v[i] = c
    return v


def _positive_roots(spec: CartanSpec) -> list[Root]:
    n = spec.ambient_dim
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            minus = _unit(n, i)
            minus[j] = -1
            roots.append(tuple(minus))
            if spec.family != "A":
                plus = _unit(n, i)
                plus[j] = 1
                roots.append(tuple(plus))
    if spec.family == "B":
        roots.extend(tuple(_unit(n, i)) for i in range(n))
    elif spec.family == "C":
        roots.extend(tuple(_unit(n, i, 2)) for i in range(n))
    return sorted(roots)


def _simple_roots(spec: CartanSpec) -> list[Root]:
    n = spec.ambient_dim
    simple = []
    for i in range(n - 1):
        v = _unit(n, i)
        v[i + 1] = -1
        simple.append(tuple(v))
    if spec.family == "B":
        simple.append(tuple(_unit(n, n - 1)))
    elif spec.family == "C":
        simple.append(tuple(_unit(n, n - 1, 2)))
    elif spec.family == "D":
        v = [0] * n
        v[n - 2] = v[n - 1] = 1
        simple.append(tuple(v))
    return sorted(simple)


@dataclass(frozen=True)
class RootSystem:
    spec: CartanSpec
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    _positive_set: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def dim(self) -> int:
        return self.spec.ambient_dim

    def is_root(self, v: Iterable[int]) -> bool:
        v = tuple(v)
        return v in self._positive_set or tuple(-x for x in v) in self._positive_set

    def is_positive(self, v: Root) -> bool:
        return v in self._positive_set

    def check_positive(self, beta: Root) -> Root:
        beta = tuple(beta)
        if beta not in self._positive_set:
            raise ForeignRoot(f"{beta} is not a positive root of {self.spec}")
        return beta


@lru_cache(maxsize=None)
def _build(spec: CartanSpec) -> RootSystem:
    pos = tuple(_positive_roots(spec))
    return RootSystem(spec, pos, tuple(_simple_roots(spec)), frozenset(pos))


def build_root_system(spec: CartanSpec) -> RootSystem:
    return _build(spec)


def is_positive_vector(v: Iterable[int]) -> bool:
    """Positivity for the standard positive systems: first nonzero entry > 0."""
    for x in v:
        if x:
            return x > 0
    return False


def normalize(v: Iterable[int]) -> Root:
    v = tuple(v)
    return v if is_positive_vector(v) else tuple(-x for x in v)


def reflect_vector(beta: Root, x: Iterable) -> tuple:
    """s_beta(x) = x - 2 (x, beta)/(beta, beta) beta, exact."""
    x = tuple(x)
    num = 2 * sum(a * b for a, b in zip(x, beta))
    den = sum(b * b for b in beta)
    c = Fraction(num, den)
    out = []
    for a, b in zip(x, beta):
        y = a - c * b
        out.append(int(y) if y.denominator == 1 else y)
    return tuple(out)


def is_sub_root_system(rs: RootSystem, subset: Iterable[Root]) -> bool:
    """Closure of ``subset`` under its own reflections, up to sign."""
    members = {tuple(b) for b in subset}
    for b in members:
        if not rs.is_positive(b):
            raise ForeignRoot(f"{b} is not a positive root of {rs.spec}")
    for b in members:
        for g in members:
            if normalize(reflect_vector(b, g)) not in members:
                return False
    return True


def simple_coefficients(rs: RootSystem, beta: Root) -> tuple[int, ...]:
    """Coordinates of ``beta`` in the simple-root basis, by exact elimination."""
    from .elliptic import solve_exact

    cols = [list(s) for s in rs.simple_roots]
    matrix = [[cols[k][i] for k in range(len(cols))] for i in range(rs.dim)]
    sol = solve_exact(matrix, list(beta))
    if sol is None or any(x.denominator != 1 for x in sol):
        raise ForeignRoot(f"{beta} is not an integral combination of simple roots")
    return tuple(int(x) for x in sol)
