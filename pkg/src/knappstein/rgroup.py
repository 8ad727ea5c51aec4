"""R-groups for principal series of split classical groups."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DecompositionViolation, UnsupportedCocycle, UnsupportedFamily
from .plancherel_zero import DEFAULT_RULES, RankOneKind, RuleTable, delta_prime
from .rootdata import Root, RootSystem, is_positive_vector
from .torus_char import TorusCharacter, stabilizer
from .weyl import WeylElement, canonical_sorted, closure, reflection


@dataclass(frozen=True)
class RGroupReport:
    system: RootSystem
    character: TorusCharacter
    w_sigma: tuple[WeylElement, ...]
    delta_prime: tuple[Root, ...]
    w_prime: tuple[WeylElement, ...]
    r_group: tuple[WeylElement, ...]
    is_abelian: bool
    commuting_dim: int
    component_count: int
    multiplicities: tuple[int, ...]
    ledger: tuple[tuple[str, bool], ...] = field(default=())


def sign_characters(elements: list[WeylElement]) -> list[dict]:
    """Homomorphisms to {+1, -1} of an elementary abelian 2-group given by its elements."""
    ident = WeylElement.identity(elements[0].n)
    basis, span = [], {ident}
    for w in elements:
        if w not in span:
            basis.append(w)
            span |= {x * w for x in span}
    chars = []
    for bits in itertools.product((1, -1), repeat=len(basis)):
        values = {ident: 1}
        for b, s in zip(basis, bits):
            values.update({x * b: v * s for x, v in list(values.items())})
        chars.append(values)
    return chars


def _irrep_dims(r_group: list[WeylElement]) -> list[int]:
    if all((w * w).is_identity() for w in r_group):
        return [1] * len(sign_characters(r_group))
    from .commalg import FiniteGroupTable

    tbl = FiniteGroupTable.from_elements(r_group, lambda a, b: a * b)
    return sorted(tbl.char_table.dims)


def _check(ledger: list, name: str, ok: bool) -> None:
    ledger.append((name, bool(ok)))


def knapp_stein(
    rs: RootSystem,
    chi: TorusCharacter,
    bound: int | None = None,
    rules: RuleTable = DEFAULT_RULES,
    split_cocycle: bool = True,
) -> RGroupReport:
    if not split_cocycle:
        raise UnsupportedCocycle("only split 2-cocycles are supported")
    if rs.family == "B" and not rules.supports(RankOneKind.UNSUPPORTED):
        raise UnsupportedFamily("type B needs a zero rule for the short-root rank-one subgroups")

    w_sigma = stabilizer(rs, chi, bound)
    dp = delta_prime(rs, chi, rules)
    gens = [reflection(rs, b) for b in dp]
    w_prime = canonical_sorted(rs.family, closure(gens, rs.dim))
    r_group = [w for w in w_sigma if all(is_positive_vector(w.apply(b)) for b in dp)]

    ws_set, wp_set, r_set = set(w_sigma), set(w_prime), set(r_group)
    ident = WeylElement.identity(rs.dim)
    ledger: list = []
    _check(ledger, "w_prime_inside_w_sigma", wp_set <= ws_set)
    _check(ledger, "r_is_subgroup", all(a * b in r_set for a in r_group for b in r_group))
    _check(ledger, "r_meets_w_prime_trivially", r_set & wp_set == {ident})
    _check(ledger, "order_product", len(r_group) * len(w_prime) == len(w_sigma))
    _check(ledger, "w_prime_normal", all(w * g * w.inverse() in wp_set for w in w_sigma for g in gens))
    commuting_dim = len(r_group)
    _check(ledger, "commuting_dim_bound", commuting_dim <= len(w_sigma))
    dims = _irrep_dims(r_group)
    _check(ledger, "sum_of_squares", sum(d * d for d in dims) == len(r_group))
    _check(ledger, "r_positive_on_delta_prime", all(is_positive_vector(w.apply(b)) for w in r_group for b in dp))

    is_abelian = all(a * b == b * a for a in r_group for b in r_group)
    report = RGroupReport(
        system=rs,
        character=chi,
        w_sigma=tuple(w_sigma),
        delta_prime=tuple(dp),
        w_prime=tuple(w_prime),
        r_group=tuple(r_group),
        is_abelian=is_abelian,
        commuting_dim=commuting_dim,
        component_count=len(dims),
        multiplicities=tuple(dims),
        ledger=tuple(ledger),
    )
    failed = [name for name, ok in ledger if not ok]
    if failed:
        raise DecompositionViolation(
            f"R-group invariants failed: {', '.join(failed)}",
            forensic={
                "group": str(rs.spec),
                "failed": failed,
                "w_sigma": [str(w) for w in w_sigma],
                "delta_prime": [list(b) for b in dp],
                "w_prime": [str(w) for w in w_prime],
                "r_group": [str(w) for w in r_group],
            },
        )
    return report


def keys_d_invariant(chi: TorusCharacter) -> int:
    """Number of distinct values chi_i with 2 chi_i = 0 and chi_i != 0."""
    distinct = {v for v in chi.values if not v.is_zero() and chi.group.scale(2, v).is_zero()}
    return len(distinct)


def lemma_225_check(report: RGroupReport) -> bool:
    """Every element of R is a pure sign change (trivial permutation part)."""
    return all(w.is_pure_sign_change() for w in report.r_group)
