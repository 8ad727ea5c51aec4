"""Decomposition data of principal series of split classical p-adic groups."""

__version__ = "0.1.0"

from .rootdata import CartanSpec, RootSystem, build_root_system, dual_type, is_sub_root_system
from .weyl import WeylElement, enumerate_weyl, length, longest_element, reflection
from .torus_char import CharGroup, CharValue, TorusCharacter, act, stabilizer, value_predicates
from .plancherel_zero import RankOneKind, delta_prime, mu_is_zero, rank_one_class
from .rgroup import RGroupReport, keys_d_invariant, knapp_stein, lemma_225_check
from .elliptic import Subspace, arthur_elliptic, fixed_space, herb_induced, intersect_all

__all__ = [
    "CartanSpec", "RootSystem", "build_root_system", "dual_type", "is_sub_root_system",
    "WeylElement", "enumerate_weyl", "length", "longest_element", "reflection",
    "CharGroup", "CharValue", "TorusCharacter", "act", "stabilizer", "value_predicates",
    "RankOneKind", "delta_prime", "mu_is_zero", "rank_one_class",
    "RGroupReport", "keys_d_invariant", "knapp_stein", "lemma_225_check",
    "Subspace", "arthur_elliptic", "fixed_space", "herb_induced", "intersect_all",
]
