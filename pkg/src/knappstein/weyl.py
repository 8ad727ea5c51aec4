"""Weyl groups of classical type as signed permutations.

An element sends e_j to signs[j] * e_{perm[j]} (0-based).  The one-line
notation lists signs[j] * (perm[j] + 1), e.g. ``[-2, 1, 3]``.
Composition is (w1 * w2)(x) = w1(w2(x)).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EnumerationBoundExceeded, ForeignRoot
from .rootdata import CartanSpec, Root, RootSystem, build_root_system, is_positive_vector, reflect_vector

DEFAULT_ENUMERATION_BOUND = 8


@dataclass(frozen=True)
class WeylElement:
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if len(self.signs) != n:
            raise DimensionMismatch("perm and signs differ in length")
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{n - 1}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1/-1, got {self.signs}")

    @classmethod
    def _unchecked(cls, perm: tuple[int, ...], signs: tuple[int, ...]) -> "WeylElement":
        # composition and inversion are closed; skip revalidation on the hot path
        w = object.__new__(cls)
        object.__setattr__(w, "perm", perm)
        object.__setattr__(w, "signs", signs)
        return w

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def from_oneline(cls, values: Sequence[int], family: str | None = None) -> "WeylElement":
        w = cls(tuple(abs(v) - 1 for v in values), tuple(1 if v > 0 else -1 for v in values))
        if family is not None:
            check_member(family, w)
        return w

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def oneline(self) -> tuple[int, ...]:
        return tuple(s * (p + 1) for p, s in zip(self.perm, self.signs))

    def __str__(self):
        return "[" + ", ".join(str(v) for v in self.oneline) + "]"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.n != other.n:
            raise DimensionMismatch("cannot compose elements of different rank")
        p1, s1 = self.perm, self.signs
        return WeylElement._unchecked(
            tuple([p1[q] for q in other.perm]),
            tuple([t * s1[q] for q, t in zip(other.perm, other.signs)]),
        )

    def inverse(self) -> "WeylElement":
        perm = [0] * self.n
        signs = [1] * self.n
        for j, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = j
            signs[p] = s
        return WeylElement._unchecked(tuple(perm), tuple(signs))

    def apply(self, x: Sequence) -> tuple:
        if len(x) != self.n:
            raise DimensionMismatch(f"vector of length {len(x)} for an element on {self.n} coordinates")
        out = [0] * self.n
        for j, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * x[j]
        return tuple(out)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and all(s == 1 for s in self.signs)

    def is_pure_sign_change(self) -> bool:
        return self.perm == tuple(range(self.n))

    def matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for j, (p, s) in enumerate(zip(self.perm, self.signs)):
            m[p][j] = s
        return m


def check_member(family: str, w: WeylElement) -> None:
    if family == "A" and any(s < 0 for s in w.signs):
        raise ValueError(f"{w} has sign changes, not in a type A Weyl group")
    if family == "D" and sum(1 for s in w.signs if s < 0) % 2:
        raise ValueError(f"{w} has an odd number of sign changes, not in a type D Weyl group")


def apply(w: WeylElement, beta: Sequence[int]) -> Root:
    return w.apply(beta)


def reflection(rs: RootSystem, beta: Root) -> WeylElement:
    beta = rs.check_positive(beta)
    n = rs.dim
    perm, signs = [0] * n, [0] * n
    for j in range(n):
        image = reflect_vector(beta, tuple(1 if k == j else 0 for k in range(n)))
        (i,) = [k for k, v in enumerate(image) if v]
        perm[j], signs[j] = i, image[i]
    return WeylElement(tuple(perm), tuple(signs))


def length(rs: RootSystem, w: WeylElement) -> int:
    return sum(1 for b in rs.positive_roots if not is_positive_vector(w.apply(b)))


def inversion_set(rs: RootSystem, w: WeylElement) -> list[Root]:
    return [b for b in rs.positive_roots if not is_positive_vector(w.apply(b))]


def _fast_length(family: str, w: WeylElement) -> int:
    p, s = w.perm, w.signs
    n = len(p)
    count = 0
    for i in range(n):
        pi, si = p[i], s[i]
        if family in ("B", "C") and si < 0:
            count += 1
        for j in range(i + 1, n):
            if pi < p[j]:
                if si < 0:
                    count += 1 if family == "A" else 2
            else:
                if s[j] > 0:
                    count += 1
                if family != "A" and s[j] < 0:
                    count += 1
    return count


def sort_key(family: str, w: WeylElement) -> tuple:
    return (_fast_length(family, w), w.oneline)


def canonical_sorted(family: str, elements: Iterable[WeylElement]) -> list[WeylElement]:
    return sorted(elements, key=lambda w: sort_key(family, w))


def simple_reflections(rs: RootSystem) -> list[WeylElement]:
    return [reflection(rs, a) for a in rs.simple_roots]


def closure(generators: Sequence[WeylElement], n: int) -> set[WeylElement]:
    """Breadth-first closure of a generating set under right multiplication."""
    ident = WeylElement.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for g in generators:
            x = w * g
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return seen


def _check_bound(rs: RootSystem, bound: int | None) -> None:
    bound = DEFAULT_ENUMERATION_BOUND if bound is None else bound
    if rs.rank > bound:
        raise EnumerationBoundExceeded(f"rank {rs.rank} exceeds the enumeration bound {bound}")


@lru_cache(maxsize=32)
def _enumerate(spec: CartanSpec) -> tuple[WeylElement, ...]:
    rs = build_root_system(spec)
    return tuple(canonical_sorted(spec.family, closure(simple_reflections(rs), rs.dim)))


def enumerate_weyl(rs: RootSystem, bound: int | None = None) -> tuple[WeylElement, ...]:
    """All of W, ordered by (length, one-line notation)."""
    _check_bound(rs, bound)
    return _enumerate(rs.spec)


def longest_element(rs: RootSystem) -> WeylElement:
    n = rs.dim
    if rs.family == "A":
        w = WeylElement(tuple(reversed(range(n))), (1,) * n)
    elif rs.family == "D" and n % 2:
        w = WeylElement(tuple(range(n)), (-1,) * (n - 1) + (1,))
    else:
        w = WeylElement(tuple(range(n)), (-1,) * n)
    assert length(rs, w) == len(rs.positive_roots)
    return w


def root_image(rs: RootSystem, w: WeylElement, beta: Root) -> Root:
    image = w.apply(beta)
    if not rs.is_root(image):
        raise ForeignRoot(f"{image} is not a root of {rs.spec}")
    return image
