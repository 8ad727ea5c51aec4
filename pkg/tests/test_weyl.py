import math

import pytest

from knappstein import oracle
from knappstein.errors import DimensionMismatch, EnumerationBoundExceeded, ForeignRoot
from knappstein.rootdata import CartanSpec, build_root_system
from knappstein.weyl import (
    WeylElement,
    _fast_length,
    apply,
    enumerate_weyl,
    inversion_set,
    length,
    longest_element,
    reflection,
)

E = WeylElement.from_oneline


def order_formula(spec):
    n = spec.rank
    return {
        "A": math.factorial(n + 1),
        "B": 2**n * math.factorial(n),
        "C": 2**n * math.factorial(n),
        "D": 2 ** (n - 1) * math.factorial(n),
    }[spec.family]


SMALL = [CartanSpec(f, n) for f in "ABCD" for n in range(1, 5) if not (f == "D" and n < 2)]


def test_reflections_c2(c2):
    assert reflection(c2, (0, 2)) == E([1, -2])
    assert reflection(c2, (1, -1)) == E([2, 1])
    assert reflection(c2, (2, 0)) == E([-1, 2])


def test_reflection_d3(d3):
    w = reflection(d3, (1, 1, 0))
    assert w.perm == (1, 0, 2) and w.signs == (-1, -1, 1)
    assert apply(w, (1, 1, 0)) == (-1, -1, 0)
    # fixes the hyperplane orthogonal to e1 + e2
    assert apply(w, (1, -1, 0)) == (1, -1, 0)
    assert apply(w, (0, 0, 1)) == (0, 0, 1)


def test_reflection_foreign(c2):
    with pytest.raises(ForeignRoot):
        reflection(c2, (1, 0))


def test_apply_examples(c2, d3):
    assert apply(WeylElement.identity(2), (1, -1)) == (1, -1)
    assert apply(reflection(c2, (1, -1)), (0, 2)) == (2, 0)
    assert apply(E([-1, -2, 3]), (1, -1, 0)) == (-1, 1, 0)
    with pytest.raises(DimensionMismatch):
        apply(E([1, 2]), (1, 0, 0))


def test_c2_conjugation_relation(c2):
    wa, wb, wg = (reflection(c2, r) for r in [(1, -1), (0, 2), (2, 0)])
    assert wa * wb * wa.inverse() == wg


def test_c2_lengths(c2):
    wb, wg = reflection(c2, (0, 2)), reflection(c2, (2, 0))
    assert length(c2, WeylElement.identity(2)) == 0
    assert (wb * wg) == E([-1, -2])
    assert length(c2, wb * wg) == 4 == len(c2.positive_roots)
    assert set(inversion_set(c2, wb)) == {(0, 2)}
    assert set(inversion_set(c2, wg)) == {(1, -1), (1, 1), (2, 0)}


def test_oneline_roundtrip():
    w = E([-2, 1, 3])
    assert str(w) == "[-2, 1, 3]"
    assert E(w.oneline) == w


def test_family_literals_rejected():
    with pytest.raises(ValueError):
        E([-1, 2, 3], family="D")
    with pytest.raises(ValueError):
        E([-1, 2], family="A")
    E([-1, -2, 3], family="D")


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_enumeration_matches_oracle(spec):
    rs = build_root_system(spec)
    elems = enumerate_weyl(rs)
    assert len(elems) == len(set(elems)) == order_formula(spec)
    assert {w.oneline for w in elems} == set(oracle.group_elements(spec))
    keys = [(length(rs, w), w.oneline) for w in elems]
    assert keys == sorted(keys)


@pytest.mark.parametrize("spec", [CartanSpec(f, 6) for f in "ACD"], ids=str)
def test_rank6_orders(spec):
    assert len(enumerate_weyl(build_root_system(spec))) == order_formula(spec)


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_group_axioms_and_lengths(spec):
    rs = build_root_system(spec)
    elems = enumerate_weyl(rs)
    members = set(elems)
    gens = [reflection(rs, a) for a in rs.simple_roots]
    w0 = longest_element(rs)
    top = len(rs.positive_roots)
    assert [w for w in elems if length(rs, w) == top] == [w0]
    for w in elems:
        assert w.inverse() in members and (w * w.inverse()).is_identity()
        assert all(w * g in members for g in gens)
        assert _fast_length(spec.family, w) == length(rs, w)
        assert length(rs, w0 * w) == top - length(rs, w)
    if spec.rank <= 3:
        assert all(a * b in members for a in elems for b in elems)


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_reflection_length_one_iff_simple(spec):
    rs = build_root_system(spec)
    for beta in rs.positive_roots:
        assert (length(rs, reflection(rs, beta)) == 1) == (beta in rs.simple_roots)


def test_enumeration_bound(c2):
    with pytest.raises(EnumerationBoundExceeded):
        enumerate_weyl(build_root_system(CartanSpec("C", 9)))
    with pytest.raises(EnumerationBoundExceeded):
        enumerate_weyl(c2, bound=1)


@pytest.mark.parametrize("spec", [CartanSpec(f, n) for f in "ABCD" for n in range(2, 9)], ids=str)
def test_longest_element_length(spec):
    rs = build_root_system(spec)
    assert length(rs, longest_element(rs)) == len(rs.positive_roots)
