import itertools
import random
from fractions import Fraction

import pytest

from knappstein.elliptic import (
    Subspace,
    arthur_elliptic,
    fixed_space,
    herb_induced,
    intersect_all,
    nullspace,
    r_fixed_space,
    rref,
    solve_exact,
    weyl_invariants,
)
from knappstein.errors import DimensionMismatch, NonAbelianR
from knappstein.rgroup import knapp_stein
from knappstein.rootdata import CartanSpec, build_root_system
from knappstein.torus_char import CharGroup
from knappstein.weyl import WeylElement, enumerate_weyl

from conftest import char, random_character


def test_identity_fixes_everything():
    assert fixed_space(WeylElement.identity(4)) == Subspace.full(4)


def test_d3_c1c2_fixes_third_axis():
    w = WeylElement.from_oneline([-1, -2, 3], "D")
    assert fixed_space(w) == Subspace.span([(0, 0, 1)], 3)


def test_minus_one_fixes_nothing():
    assert fixed_space(WeylElement.from_oneline([-1, -2], "C")) == Subspace.zero(2)


def test_transposition_fixes_diagonal_and_third():
    w = WeylElement.from_oneline([2, 1, 3])
    assert fixed_space(w) == Subspace.span([(1, 1, 0), (0, 0, 1)], 3)


def test_canonical_form_is_basis_independent():
    a = Subspace.span([(1, 2, 0), (0, 1, 1)], 3)
    b = Subspace.span([(1, 3, 1), (2, 5, 1), (0, 2, 2)], 3)
    assert a == b and a.dim == 2


def test_intersect_examples():
    e1 = Subspace.span([(1, 0)], 2)
    e2 = Subspace.span([(0, 1)], 2)
    assert intersect_all([e1, e2]) == Subspace.zero(2)
    assert intersect_all([e1]) == e1
    assert intersect_all([], 3) == Subspace.full(3)


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        intersect_all([Subspace.full(2), Subspace.full(3)])


def test_rref_nullspace_solve():
    rows, piv = rref([(2, 4), (1, 2)], 2)
    assert rows == [[1, 2]] and piv == [0]
    assert nullspace([(1, 2)], 2) == [[Fraction(-2), Fraction(1)]]
    assert solve_exact([(1, 1), (1, -1)], (3, 1)) == [2, 1]
    assert solve_exact([(1, 1), (2, 2)], (1, 2)) is None


def test_weyl_invariants():
    assert weyl_invariants(build_root_system(CartanSpec("C", 3))) == Subspace.zero(3)
    assert weyl_invariants(build_root_system(CartanSpec("D", 4))) == Subspace.zero(4)
    assert weyl_invariants(build_root_system(CartanSpec("A", 2))) == Subspace.span([(1, 1, 1)], 3)


def test_d3_quadratic_pair_example():
    g = CharGroup(0, (2, 2))
    chi = char(g, (0, 0), (1, 0), (0, 1))
    rep = knapp_stein(build_root_system(CartanSpec("D", 3)), chi)
    assert len(rep.r_group) == 4
    assert all(w.is_pure_sign_change() for w in rep.r_group)
    expected = {
        (-1, -2, 3): Subspace.span([(0, 0, 1)], 3),
        (-1, 2, -3): Subspace.span([(0, 1, 0)], 3),
        (1, -2, -3): Subspace.span([(1, 0, 0)], 3),
    }
    spaces = {w.oneline: fixed_space(w) for w in rep.r_group if not w.is_identity()}
    assert spaces == expected
    assert r_fixed_space(rep) == Subspace.zero(3)
    assert not arthur_elliptic(rep)
    assert not herb_induced(rep)
    assert rep.component_count == 4


def test_sp4_distinct_involutions_are_elliptic(c2):
    chi = char(CharGroup(0, (2, 2, 8)), (1, 0, 0), (0, 1, 0))
    rep = knapp_stein(c2, chi)
    assert len(rep.r_group) == 4
    assert arthur_elliptic(rep) and herb_induced(rep)


def test_non_abelian_r_rejected(c2):
    rep = knapp_stein(c2, char(CharGroup(0, (2,)), (1,), (1,)))
    fake = rep.__class__(**{**rep.__dict__, "is_abelian": False})
    with pytest.raises(NonAbelianR):
        arthur_elliptic(fake)
    with pytest.raises(NonAbelianR):
        herb_induced(fake)


@pytest.mark.parametrize("spec", [CartanSpec(f, n) for f in "CD" for n in (2, 3)] + [CartanSpec("A", 2)])
def test_fixed_space_of_product_contains_intersection(spec):
    ws = enumerate_weyl(build_root_system(spec))
    fs = {w: fixed_space(w) for w in ws}
    for a, b in itertools.product(ws, repeat=2):
        assert fs[a * b].contains(intersect_all([fs[a], fs[b]]))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sign_change_dimension_count(n):
    for signs in itertools.product((1, -1), repeat=n):
        w = WeylElement(tuple(range(n)), signs)
        assert fixed_space(w).dim + signs.count(-1) == n


@pytest.mark.parametrize("family", "CD")
def test_r_fixed_space_properties_random(family):
    rng = random.Random(2024)
    g = CharGroup(0, (2, 2, 4))
    for _ in range(60):
        n = rng.randint(2, 4)
        rep = knapp_stein(build_root_system(CartanSpec(family, n)), random_character(rng, n, g))
        a_r = r_fixed_space(rep)
        assert all(fixed_space(w).contains(a_r) for w in rep.r_group)
        if arthur_elliptic(rep, z=a_r):
            assert herb_induced(rep)
        if arthur_elliptic(rep):
            assert herb_induced(rep)


def test_no_floats_in_subspaces():
    sub = fixed_space(WeylElement.from_oneline([2, 3, 1]))
    assert all(isinstance(x, Fraction) for row in sub.basis for x in row)
