"""Vanishing of the rank-one Plancherel measures and the set Delta'.

mu_beta(chi) = 0 exactly when the reflection w_beta fixes chi and the
principal series of the rank-one Levi M_beta is irreducible.  The built-in
rules spell this out per root shape:

* e_i - e_j  (M_beta ~ GL_2):         chi_i = chi_j
* e_i + e_j  (M_beta ~ GL_2):         chi_i + chi_j = 0
* 2 e_i      (M_beta ~ G_m x SL_2):   chi_i = 0

The e_i + e_j rule is derived rather than quoted: w_{e_i+e_j} fixes chi iff
chi_j = -chi_i, and GL_2 principal series never reduce.  The property suite
checks every built-in rule against :func:`master_criterion`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping

from .errors import SubRootSystemViolation, UnsupportedRankOne
from .rootdata import Root, RootSystem, is_sub_root_system
from .torus_char import TorusCharacter, fixes
from .weyl import reflection


class RankOneKind(enum.Enum):
    GL2_TYPE = "GL2_TYPE"
    SL2_TYPE = "SL2_TYPE"
    UNSUPPORTED = "UNSUPPORTED"


ZeroRule = Callable[[Root, TorusCharacter], bool]


def _support(beta: Root) -> list[tuple[int, int]]:
    return [(i, c) for i, c in enumerate(beta) if c]


def rank_one_class(rs: RootSystem, beta: Root) -> RankOneKind:
    beta = rs.check_positive(beta)
    supp = _support(beta)
    if len(supp) == 2:
        return RankOneKind.GL2_TYPE
    if rs.family == "C":
        return RankOneKind.SL2_TYPE
    return RankOneKind.UNSUPPORTED


def gl2_rule(beta: Root, chi: TorusCharacter) -> bool:
    (i, a), (j, b) = _support(beta)
    vi, vj = chi.values[i], chi.values[j]
    if a == -b:
        return vi == vj
    return chi.group.add(vi, vj).is_zero()


def sl2_rule(beta: Root, chi: TorusCharacter) -> bool:
    ((i, _),) = _support(beta)
    return chi.values[i].is_zero()


@dataclass(frozen=True)
class RuleTable:
    """Zero rules keyed by rank-one kind.  Immutable; extend with :meth:`with_rule`."""

    rules: Mapping[RankOneKind, ZeroRule] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rules", MappingProxyType(dict(self.rules)))

    def with_rule(self, kind: RankOneKind, rule: ZeroRule) -> "RuleTable":
        merged = dict(self.rules)
        merged[kind] = rule
        return RuleTable(merged)

    def rule_for(self, kind: RankOneKind) -> ZeroRule:
        try:
            return self.rules[kind]
        except KeyError:
            raise UnsupportedRankOne(f"no zero rule registered for rank-one kind {kind.value}") from None

    def supports(self, kind: RankOneKind) -> bool:
        return kind in self.rules


DEFAULT_RULES = RuleTable({RankOneKind.GL2_TYPE: gl2_rule, RankOneKind.SL2_TYPE: sl2_rule})


def mu_is_zero(rs: RootSystem, beta: Root, chi: TorusCharacter, rules: RuleTable = DEFAULT_RULES) -> bool:
    kind = rank_one_class(rs, beta)
    return rules.rule_for(kind)(tuple(beta), chi)


def rank_one_irreducible(kind: RankOneKind, chi: TorusCharacter, beta: Root) -> bool:
    """Irreducibility of the rank-one principal series at beta.

    GL_2 principal series of unitary characters are always irreducible; the
    SL_2 one reduces exactly for a nontrivial quadratic character.
    """
    if kind is RankOneKind.GL2_TYPE:
        return True
    if kind is RankOneKind.SL2_TYPE:
        ((i, _),) = _support(beta)
        v = chi.values[i]
        quadratic = chi.group.scale(2, v).is_zero()
        return not (quadratic and not v.is_zero())
    raise UnsupportedRankOne(f"no irreducibility criterion for {kind.value}")


def master_criterion(rs: RootSystem, beta: Root, chi: TorusCharacter) -> bool:
    """w_beta fixes chi and the rank-one induced representation is irreducible."""
    kind = rank_one_class(rs, beta)
    return fixes(reflection(rs, beta), chi) and rank_one_irreducible(kind, chi, beta)


def delta_prime(rs: RootSystem, chi: TorusCharacter, rules: RuleTable = DEFAULT_RULES) -> list[Root]:
    zeros = [b for b in rs.positive_roots if mu_is_zero(rs, b, chi, rules)]
    if not is_sub_root_system(rs, zeros):
        raise SubRootSystemViolation(f"zero set {zeros} is not closed under its reflections")
    return zeros
