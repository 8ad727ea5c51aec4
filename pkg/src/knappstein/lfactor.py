"""Unramified local L-factors as exact polynomials in t = q^{-s}.

Satake values are roots of unity exp(2 pi i a/m).  An L-factor is stored by
its denominator, a polynomial with cyclotomic coefficients and constant
term 1; a pole at s = 0 is a root at t = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .cyclotomic import Cyclotomic
from .errors import RamifiedComponent


@dataclass(frozen=True)
class SatakeValue:
    """``a/m`` for exp(2 pi i a/m); ``None`` for a ramified component."""

    root: tuple[int, int] | None

    def __post_init__(self):
        if self.root is None:
            return
        a, m = self.root
        if m < 1:
            raise ValueError("root of unity order must be positive")
        a %= m
        g = gcd(a, m) if a else m
        object.__setattr__(self, "root", (a // g, m // g))

    @classmethod
    def ramified(cls) -> "SatakeValue":
        return cls(None)

    @classmethod
    def unramified(cls, a: int, m: int) -> "SatakeValue":
        return cls((a, m))

    @property
    def is_ramified(self) -> bool:
        return self.root is None

    def value(self) -> Cyclotomic:
        return Cyclotomic.root(*self.root)


class LFactor:
    """1 / D(t) with D(0) = 1."""

    def __init__(self, denominator: Sequence):
        coeffs = [c if isinstance(c, Cyclotomic) else Cyclotomic.rational(c) for c in denominator]
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs or coeffs[0] != 1:
            raise ValueError("L-factor denominators must have constant term 1")
        self.denominator = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.denominator) - 1

    def __mul__(self, other: "LFactor") -> "LFactor":
        return LFactor(poly_mul(self.denominator, other.denominator))

    def __eq__(self, other):
        if not isinstance(other, LFactor):
            return NotImplemented
        if len(self.denominator) != len(other.denominator):
            return False
        return all(a == b for a, b in zip(self.denominator, other.denominator))

    __hash__ = None

    def serialize(self) -> list[list[list]]:
        """Each coefficient as a list of [coefficient, a, m] terms, lowest degree first."""
        return [[[str(x), a, m] for x, a, m in c.terms()] for c in self.denominator]

    def __repr__(self):
        return f"LFactor(1/({' + '.join(f'({c!r})t^{k}' for k, c in enumerate(self.denominator))}))"


def poly_mul(p: Sequence[Cyclotomic], q: Sequence[Cyclotomic]) -> list[Cyclotomic]:
    out = [Cyclotomic.rational(0) for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def tate_l(v: SatakeValue) -> LFactor:
    if v.is_ramified:
        return LFactor([1])
    return LFactor([Cyclotomic.rational(1), -v.value()])


def gl_unramified_l(values: Sequence[SatakeValue]) -> LFactor:
    """det(1 - A t)^{-1} for the diagonal Satake matrix A = diag(values)."""
    if any(v.is_ramified for v in values):
        raise RamifiedComponent("the determinant formula needs every component unramified")
    den = [Cyclotomic.rational(1)]
    for v in values:
        den = poly_mul(den, [Cyclotomic.rational(1), -v.value()])
    return LFactor(den)


def pole_order_at_zero(L: LFactor) -> int:
    """Multiplicity of t = 1 as a root of the denominator, by repeated synthetic division."""
    coeffs = list(L.denominator)
    order = 0
    while len(coeffs) > 1:
        total = Cyclotomic.rational(0)
        for c in coeffs:
            total = total + c
        if not total.is_zero():
            break
        # divide by (t - 1): Horner from the top
        quot = [Cyclotomic.rational(0)] * (len(coeffs) - 1)
        carry = Cyclotomic.rational(0)
        for k in range(len(coeffs) - 1, 0, -1):
            carry = carry + coeffs[k]
            quot[k - 1] = carry
        coeffs = quot
        order += 1
    return order


def satake_of_torsion_value(torsion: Sequence[int], orders: Sequence[int]) -> SatakeValue:
    """Value at a uniformizer of a finite-order unramified character.

    The abstract value (t_1, ..., t_k) in Z/m_1 x ... x Z/m_k is sent to
    exp(2 pi i sum t_j/m_j), i.e. each cyclic factor is embedded by its
    standard generator.
    """
    total = sum(Fraction(t, m) for t, m in zip(torsion, orders)) % 1
    return SatakeValue.unramified(total.numerator, total.denominator)
