import random

import pytest

from qf.core.errors import NotACocycle, SizeLimitExceeded
from qf.extensions import abelian_extension, cocycle_from_section
from qf.homology import Cochain, coboundary, random_cochain
from qf.invariants import (
    brute_force_colorings,
    coloring_from_labels,
    constant_coloring,
    contribution,
    enumerate_colorings,
    extends_coloring,
    find_lifts,
    psi,
    smallest_nontrivial_level,
)
from qf.invariants.state_sum import weight
from qf.links.builtins import builtin
from qf.links.diagram import component_crossing_sets
from qf.quandles import dihedral


@pytest.mark.parametrize(
    "name, n, expected",
    [("unknot", 3, 3), ("trefoil", 3, 9), ("trefoil", 5, 5), ("figure8", 3, 3), ("figure8", 5, 25), ("hopf", 3, 3)],
)
def test_dihedral_coloring_counts(name, n, expected):
    assert len(enumerate_colorings(builtin(name), dihedral(n))) == expected


@pytest.mark.parametrize("name", ["trefoil", "figure8", "whitehead", "borromean"])
def test_backtracking_matches_brute_force(name, r3):
    D = builtin(name)
    fast = [c.colors for c in enumerate_colorings(D, r3)]
    slow = [c.colors for c in brute_force_colorings(D, r3)]
    assert fast == sorted(slow)
    assert all(c.is_valid() for c in enumerate_colorings(D, r3))


def test_thread_count_does_not_change_the_result(whitehead):
    X = cocycle_from_section("W", 2, 2).quandle
    one = enumerate_colorings(whitehead, X, threads=1)
    many = enumerate_colorings(whitehead, X, threads=4)
    assert [c.colors for c in one] == [c.colors for c in many]


def test_search_cap(whitehead, r3):
    with pytest.raises(SizeLimitExceeded):
        enumerate_colorings(whitehead, r3, max_enum=5)
    with pytest.raises(SizeLimitExceeded):
        brute_force_colorings(whitehead, r3, max_enum=100)


def test_colorings_from_labels(trefoil, r3):
    C = coloring_from_labels(trefoil, r3, {"a1": "0", "a2": "1", "a3": "2"})
    assert C.label("a3") == "2"
    assert not C.is_constant()
    assert constant_coloring(trefoil, r3, 1).is_valid()
    with pytest.raises(ValueError):
        coloring_from_labels(trefoil, r3, {"a1": "0", "a2": "0", "a3": "1"})


def test_kink_leaves_the_invariant_unchanged(trefoil, kinked_trefoil):
    phi = cocycle_from_section("W", 2, 2)
    X = phi.quandle
    assert psi(kinked_trefoil, X, phi).family() == psi(trefoil, X, phi).family()


def test_clasp_contributes_nothing(clasp):
    phi = cocycle_from_section("W", 2, 2)
    value = psi(clasp, phi.quandle, phi)
    assert value.family() == (((0, 0), 16),)
    assert not value.nontrivial()


def test_coboundary_does_not_change_contributions(whitehead):
    phi = cocycle_from_section("W", 2, 3)
    X = phi.quandle
    shifted = phi + coboundary(random_cochain(X, 1, 2, random.Random(11)))
    colorings = enumerate_colorings(whitehead, X)
    for C in colorings:
        assert contribution(C, shifted) == contribution(C, phi)


def test_whitehead_family_over_w3(whitehead):
    phi = cocycle_from_section("W", 2, 3)
    value = psi(whitehead, phi.quandle, phi)
    assert value.colorings == 64
    assert value.family() == (((0, 0), 32), ((1, 1), 32))
    assert value.format_family() == "{32 x (1, 1), 32 x (t, t)}"
    assert str(value.scalar()) == "64"
    assert value.format_vector() == "(32 + 32t, 32 + 32t)"
    assert value.to_model().colorings == 64


def test_whitehead_needs_level_three(whitehead):
    assert smallest_nontrivial_level(whitehead, "W", 2, 4) == 3
    assert smallest_nontrivial_level(whitehead, "W", 2, 2) is None


def test_state_sum_rejects_bad_cochains(trefoil, r3):
    with pytest.raises(NotACocycle):
        psi(trefoil, r3, Cochain.from_labels(r3, 2, 3, {("0", "1"): 1}))
    with pytest.raises(ValueError):
        psi(trefoil, r3, Cochain.zero(r3, 3, 3))


@pytest.mark.parametrize(
    "name, family, q, m",
    [("whitehead", "W", 2, 3), ("whitehead", "U", 2, 3), ("borromean", "W", 2, 2), ("borromean", "W", 3, 2)],
)
def test_lift_exists_exactly_when_contribution_vanishes(name, family, q, m):
    D = builtin(name)
    phi = cocycle_from_section(family, q, m)
    ext = abelian_extension(phi.quandle, q, phi)
    colorings = enumerate_colorings(D, phi.quandle)
    outcomes = set()
    for C in colorings:
        res = extends_coloring(C, ext)
        assert res.obstruction == contribution(C, phi)
        assert res.extends == all(e == 0 for e in res.obstruction)
        outcomes.add(res.extends)
    assert outcomes == {True, False}

    # exhaustive lift search on a fixed sample
    sample = colorings if len(colorings) <= 64 else random.Random(7).sample(colorings, 40)
    for C in sample:
        res = extends_coloring(C, ext)
        lifts = find_lifts(C, ext)
        assert res.extends == bool(lifts)
        if res.extends:
            assert res.lift.is_valid()
            assert res.lift.colors in [L.colors for L in lifts]
            assert len(lifts) == q ** D.n_components


def test_weights_follow_the_crossing_sign(whitehead):
    phi = cocycle_from_section("W", 2, 3)
    for C in enumerate_colorings(whitehead, phi.quandle)[:8]:
        for c in whitehead.crossings:
            raw = int(phi.values[C.color(c.alpha), C.color(c.over)])
            assert weight(c, C, phi) == (c.sign * raw) % 2
        sums = tuple(sum(weight(c, C, phi) for c in group) % 2 for group in component_crossing_sets(whitehead))
        assert sums == contribution(C, phi)
