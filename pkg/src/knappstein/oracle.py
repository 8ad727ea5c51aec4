"""Brute-force recomputation of W(chi), Delta', W' and R from first principles.

Deliberately shares nothing with the main pipeline beyond the input types:
the group is listed with itertools, reflections come from the Euclidean
formula on vectors, and Delta' from "w_beta fixes chi and the rank-one
principal series is irreducible".  Elements are plain one-line tuples.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .rootdata import CartanSpec
from .torus_char import TorusCharacter

OneLine = tuple[int, ...]


def all_roots(spec: CartanSpec) -> list[tuple[int, ...]]:
    n = spec.ambient_dim
    out = []
    for i, j in itertools.permutations(range(n), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            if spec.family == "A" and si == sj:
                continue
            v = [0] * n
            v[i], v[j] = si, sj
            out.append(tuple(v))
    if spec.family in ("B", "C"):
        c = 1 if spec.family == "B" else 2
        for i in range(n):
            for s in (c, -c):
                v = [0] * n
                v[i] = s
                out.append(tuple(v))
    return sorted(set(out))


def positive(v) -> bool:
    return next(x for x in v if x) > 0


@lru_cache(maxsize=16)
def group_elements(spec: CartanSpec) -> tuple[OneLine, ...]:
    n = spec.ambient_dim
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            neg = signs.count(-1)
            if spec.family == "A" and neg:
                continue
            if spec.family == "D" and neg % 2:
                continue
            out.append(tuple(s * x for s, x in zip(signs, p)))
    return tuple(out)


def act_vector(w: OneLine, x) -> tuple:
    out = [0] * len(w)
    for j, v in enumerate(w):
        out[abs(v) - 1] = x[j] if v > 0 else -x[j]
    return tuple(out)


def compose(a: OneLine, b: OneLine) -> OneLine:
    """One-line notation of a o b: e_j -> b_j -> a applied to it."""
    return tuple(a[v - 1] if v > 0 else -a[-v - 1] for v in b)


def reflection_oneline(beta) -> OneLine:
    n = len(beta)
    bb = sum(b * b for b in beta)
    cols = []
    for j in range(n):
        img = [Fraction(int(k == j)) - Fraction(2 * beta[j], bb) * beta[k] for k in range(n)]
        (i,) = [k for k in range(n) if img[k]]
        cols.append(int(img[i]) * (i + 1))
    return tuple(cols)


def _fixes(w: OneLine, values: tuple, negated: tuple) -> bool:
    return all((values[j] if v > 0 else negated[j]) == values[abs(v) - 1] for j, v in enumerate(w))


def _rank_one_irreducible(spec: CartanSpec, beta, chi: TorusCharacter) -> bool:
    support = [i for i, c in enumerate(beta) if c]
    if len(support) == 2:
        return True
    if spec.family != "C":
        raise NotImplementedError("no rank-one rule for this root shape")
    v = chi.values[support[0]]
    return not (chi.group.scale(2, v).is_zero() and not v.is_zero())


def brute_force_rgroup(spec: CartanSpec, chi: TorusCharacter) -> dict:
    pos = [r for r in all_roots(spec) if positive(r)]
    values = chi.values
    negated = tuple(chi.group.neg(v) for v in values)
    w_chi = [w for w in group_elements(spec) if _fixes(w, values, negated)]
    dp = [b for b in pos if _fixes(reflection_oneline(b), values, negated) and _rank_one_irreducible(spec, b, chi)]
    n = spec.ambient_dim
    ident = tuple(range(1, n + 1))
    w_prime = {ident}
    frontier = [ident]
    gens = [reflection_oneline(b) for b in dp]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = compose(g, x)
            if y not in w_prime:
                w_prime.add(y)
                frontier.append(y)
    delta_set = set(dp)
    r = [w for w in w_chi if {act_vector(w, b) for b in dp} == delta_set]
    return {
        "w_sigma": set(w_chi),
        "delta_prime": delta_set,
        "w_prime": w_prime,
        "r_group": set(r),
    }
