"""Exact arithmetic in cyclotomic fields Q(zeta_N), stored sparsely.

An element at level N is a dict {k: c} meaning sum c * zeta_N^k.  Writing
zeta_N^k as a product of zeta_{p^e}^{j_p} over the prime powers of N, the
canonical support uses, in each factor, exponents j = a + p^(e-1) b with
b != 0 for odd p and b = 0 for p = 2.  These products form a Q-basis, so
every element has one representation per level and only the few terms in
play are ever touched, even when the level is large.
Mixed-level arithmetic lifts both operands to the lcm level.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

Scalar = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def _prime_powers(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """(p, p^e, N/p^e, inverse of N/p^e mod p^e) for each prime power exactly dividing n."""
    out, m, p = [], n, 2
    while p * p <= m:
        if m % p == 0:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            out.append((p, q))
        p += 1
    if m > 1:
        out.append((m, m))
    return tuple((p, q, n // q, pow(n // q, -1, q) if q > 1 else 0) for p, q in out)


@lru_cache(maxsize=65536)
def _expand(k: int, n: int) -> tuple[tuple[int, int], ...]:
    """zeta_n^k as a signed sum of canonical basis exponents: ((exponent, sign), ...)."""
    terms = [(k % n, 1)]
    for p, q, cof, inv in _prime_powers(n):
        step = q // p
        nxt = []
        for e, s in terms:
            j = e * inv % q
            b = j // step
            if p == 2 and b:
                # zeta_q^(j + q/2) = -zeta_q^j
                nxt.append(((e - b * step * cof) % n, -s))
            elif p != 2 and not b:
                # 1 + zeta_p + ... + zeta_p^(p-1) = 0
                nxt.extend(((e + bb * step * cof) % n, -s) for bb in range(1, p))
            else:
                nxt.append((e, s))
        terms = nxt
    return tuple(terms)


def _normalize(level: int, raw: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for k, c in raw.items():
        if not c:
            continue
        for e, s in _expand(k, level):
            out[e] = out.get(e, 0) + s * c
    return {k: c for k, c in out.items() if c}


class Cyclotomic:
    """Sum of c * zeta_level^k.  Arithmetic works on raw terms; the canonical form is built on demand."""

    __slots__ = ("level", "raw", "_canon")

    def __init__(self, level: int, raw: dict[int, Scalar]):
        if level < 1:
            raise ValueError("level must be positive")
        self.level = level
        merged: dict[int, Fraction] = {}
        for k, c in raw.items():
            if c:
                k %= level
                merged[k] = merged.get(k, 0) + Fraction(c)
        self.raw = {k: c for k, c in merged.items() if c}
        self._canon = None

    @property
    def canonical(self) -> dict[int, Fraction]:
        if self._canon is None:
            self._canon = _normalize(self.level, self.raw)
        return self._canon

    @classmethod
    def rational(cls, q: Scalar) -> "Cyclotomic":
        return cls(1, {0: q})

    @classmethod
    def root(cls, a: int, m: int) -> "Cyclotomic":
        """exp(2 pi i a / m)."""
        return cls(m, {a: 1})

    def lift(self, level: int) -> "Cyclotomic":
        if level == self.level:
            return self
        if level % self.level:
            raise ValueError(f"cannot lift level {self.level} to {level}")
        step = level // self.level
        return Cyclotomic(level, {k * step: c for k, c in self.raw.items()})

    def _common(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other)
        n = _lcm(self.level, other.level)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        a, b = self._common(other)
        out = dict(a.raw)
        for k, c in b.raw.items():
            out[k] = out.get(k, 0) + c
        return Cyclotomic(a.level, out)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.level, {k: -c for k, c in self.raw.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            q = Fraction(other)
            return Cyclotomic(self.level, {k: c * q for k, c in self.raw.items()})
        a, b = self._common(other)
        prod: dict[int, Fraction] = {}
        for i, x in a.raw.items():
            for j, y in b.raw.items():
                prod[i + j] = prod.get(i + j, 0) + x * y
        return Cyclotomic(a.level, prod)

    __rmul__ = __mul__

    def __truediv__(self, q: Scalar):
        return self * (1 / Fraction(q))

    def conjugate(self) -> "Cyclotomic":
        return Cyclotomic(self.level, {-k: c for k, c in self.raw.items()})

    def is_zero(self) -> bool:
        return not self.raw or not self.canonical

    def __eq__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __complex__(self):
        return sum(
            (complex(float(c)) * cmath.exp(2j * cmath.pi * k / self.level) for k, c in self.raw.items()),
            0j,
        )

    def terms(self) -> list[tuple[Fraction, int, int]]:
        """Canonical terms (coefficient, a, m), meaning coefficient * exp(2 pi i a/m) with a/m reduced.

        Read off at the element's own level, so the list is unique for a given level.
        """
        canon = self.canonical
        out = []
        for k in sorted(canon):
            g = gcd(k, self.level)
            out.append((canon[k], k // g, self.level // g))
        return out

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(str(x) if a == 0 else f"{x}*z{m}^{a}" for x, a, m in self.terms())
