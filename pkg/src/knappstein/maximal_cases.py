"""Decision tables for maximal parabolics.

``complementary_series`` describes I(s, sigma) for a
generic supercuspidal on a maximal Levi, given which P_{sigma,i}(1) vanishes.
``siegel_reducibility`` encodes the Siegel-parabolic table for Sp_2n,
SO_2n and SO_2n+1, with the "comes from" classification supplied by the
caller as an input flag.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InconsistentInput, NotSelfDual


class VanishingIndex(enum.Enum):
    NONE = "NONE"
    I1 = "I1"
    I2 = "I2"

    @property
    def i(self) -> int | None:
        return {"NONE": None, "I1": 1, "I2": 2}[self.value]


class Origin(enum.Enum):
    SO_N_PLUS_1 = "SO_N_PLUS_1"
    SO_N_STAR = "SO_N_STAR"
    SP_N_MINUS_1 = "SP_N_MINUS_1"
    NONE = "NONE"


class SiegelFamily(enum.Enum):
    Sp2n = "Sp2n"
    SO2n = "SO2n"
    SO2n_plus_1 = "SO2n+1"


IRREDUCIBLE_NONUNITARY = "IRREDUCIBLE_NONUNITARY"


@dataclass(frozen=True)
class CompSeriesInput:
    weyl_nontrivial: bool
    self_conjugate: bool
    vanishing_index: VanishingIndex
    ind_reducible_at_zero: bool


@dataclass(frozen=True)
class CompSeriesVerdict:
    complementary_interval: tuple[Fraction, Fraction] | None
    reducibility_point: Fraction | None
    special_subrep_generic: bool
    beyond_point: str | None
    tail_l_factors_trivial: bool

    def contains(self, s: Fraction) -> bool:
        if self.complementary_interval is None:
            return False
        lo, hi = self.complementary_interval
        return lo < s < hi

    def as_dict(self) -> dict:
        iv = self.complementary_interval
        return {
            "complementary_interval": None if iv is None else [str(iv[0]), str(iv[1])],
            "reducibility_point": None if self.reducibility_point is None else str(self.reducibility_point),
            "special_subrep_generic": self.special_subrep_generic,
            "beyond_point": self.beyond_point,
            "tail_l_factors_trivial": self.tail_l_factors_trivial,
        }


def validate_comp_series(inp: CompSeriesInput) -> None:
    if not inp.weyl_nontrivial:
        raise InconsistentInput("the theorem needs a nontrivial Weyl group W(G, A)")
    vanishing = inp.vanishing_index is not VanishingIndex.NONE
    if vanishing and not inp.self_conjugate:
        raise InconsistentInput("a vanishing P_{sigma,i}(1) forces w0 sigma ~ sigma")
    if vanishing and inp.ind_reducible_at_zero:
        raise InconsistentInput("a vanishing P_{sigma,i}(1) forces Ind(sigma) irreducible")
    if inp.self_conjugate and not inp.ind_reducible_at_zero and not vanishing:
        raise InconsistentInput("w0 sigma ~ sigma with Ind(sigma) irreducible forces some P_{sigma,i}(1) = 0")
    if inp.ind_reducible_at_zero and not inp.self_conjugate:
        raise InconsistentInput("Ind(sigma) can only reduce when w0 sigma ~ sigma")


def complementary_series(inp: CompSeriesInput) -> CompSeriesVerdict:
    validate_comp_series(inp)
    i = inp.vanishing_index.i
    if i is not None:
        point = Fraction(1, i)
        return CompSeriesVerdict((Fraction(0), point), point, True, IRREDUCIBLE_NONUNITARY, True)
    if inp.ind_reducible_at_zero:
        return CompSeriesVerdict(None, None, False, IRREDUCIBLE_NONUNITARY, True)
    # w0 sigma not ~ sigma: outside the reducibility statements, only part (1) applies
    return CompSeriesVerdict(None, None, False, None, True)


@dataclass(frozen=True)
class SiegelInput:
    family: SiegelFamily
    n: int
    self_dual: bool
    origin: Origin


class SiegelVerdict(NamedTuple):
    reducible_at_zero: bool
    adjoint_pieces: list[str]


ADJOINT_PIECES = {
    SiegelFamily.Sp2n: ["rho_n", "wedge2_rho_n"],
    SiegelFamily.SO2n: ["wedge2_rho_n"],
    SiegelFamily.SO2n_plus_1: ["sym2_rho_n"],
}

IRREDUCIBLE_ORIGINS = {
    SiegelFamily.SO2n_plus_1: {Origin.SO_N_STAR, Origin.SP_N_MINUS_1},
    SiegelFamily.Sp2n: {Origin.SO_N_PLUS_1},
    SiegelFamily.SO2n: {Origin.SO_N_PLUS_1, Origin.SP_N_MINUS_1},
}


def validate_siegel(inp: SiegelInput) -> None:
    if inp.n < 1:
        raise InconsistentInput("n must be positive")
    odd = inp.n % 2 == 1
    if inp.origin is Origin.SP_N_MINUS_1 and not odd:
        raise InconsistentInput("only n odd can come from Sp_{n-1}")
    if inp.origin in (Origin.SO_N_PLUS_1, Origin.SO_N_STAR) and odd:
        raise InconsistentInput(f"{inp.origin.value} requires n even")
    if inp.origin is not Origin.NONE and not inp.self_dual:
        raise InconsistentInput("the origin classification only applies to self-dual sigma")
    if inp.self_dual and inp.origin is Origin.NONE:
        raise InconsistentInput("a self-dual sigma comes from exactly one of the listed groups")


def siegel_reducibility(inp: SiegelInput) -> SiegelVerdict:
    validate_siegel(inp)
    if not inp.self_dual:
        raise NotSelfDual("reducibility at s = 0 needs sigma ~ its contragredient")
    irreducible = inp.origin in IRREDUCIBLE_ORIGINS[inp.family]
    return SiegelVerdict(not irreducible, list(ADJOINT_PIECES[inp.family]))


def wedge_l_trivial(n: int) -> bool:
    """True when L(s, sigma, wedge^2 rho_n) = 1 is guaranteed, i.e. n odd."""
    if n < 1:
        raise ValueError("n must be positive")
    return n % 2 == 1
