import itertools

import numpy as np
import pytest

from qf.algebra.ring import family_ring, make_ring
from qf.core.errors import EvenN, InvalidDynamicalCocycle, NotACocycle
from qf.extensions import (
    MonomialMatrix,
    abelian_extension,
    alexander_extension,
    cocycle_from_fibration,
    cocycle_from_section,
    dynamical_cocycle,
    dynamical_extension,
    reflection,
    search_alexander_extension,
    trivial_dynamical_cocycle,
    validate_dynamical_cocycle,
    wreath_quandle,
)
from qf.homology import Cochain, coboundary, is_2cocycle
from qf.quandles import alexander_quandle, are_isomorphic, dihedral


def _r3_product(x, y, v):
    """Closed form of the R_3(v) operation on (letter, s1, s2) triples."""
    (p, s1, s2), (r, t1, t2) = x, y
    rules = {
        ("a", "a"): ("a", s2 + t1 - t2, s1 - t1 + t2),
        ("a", "b"): ("c", s2 - t2, s1 + t2),
        ("a", "c"): ("b", s1 - t2, s2 + t2),
        ("b", "a"): ("c", s1 + t2, s2 - t2),
        ("b", "b"): ("b", s2 + t1 - t2, s1 - t1 + t2),
        ("b", "c"): ("a", s1 - t1, s2 + t1),
        ("c", "a"): ("b", s1 + t1, s2 - t1),
        ("c", "b"): ("a", s2 + t1, s1 - t1),
        ("c", "c"): ("c", s2 + t1 - t2, s1 - t1 + t2),
    }
    letter, e1, e2 = rules[(p, r)]
    return letter, e1 % v, e2 % v


def _label(letter, e1, e2):
    return f"{letter}_{{{e1},{e2}}}"


@pytest.mark.parametrize("v", [1, 2, 3, 4, 5])
def test_r3_wreath_table(v):
    W = wreath_quandle("r3", v)
    Q = W.quandle
    assert len(Q) == 3 * v * v
    elems = [(l, i, j) for l in "abc" for i in range(v) for j in range(v)]
    for x, y in itertools.product(elems, repeat=2):
        assert Q.op(_label(*x), _label(*y)) == _label(*_r3_product(x, y, v))


def test_wreath_projection_and_sizes():
    W = wreath_quandle("r3", 2)
    assert W.projection.fiber_sizes() == (4, 4, 4)
    assert W.fiber_size() == 4
    assert are_isomorphic(W.base, dihedral(3))
    assert len(wreath_quandle("qs4", 2).quandle) == 4 * 2 ** 3
    assert len(wreath_quandle(("dihedral", 5), 2).quandle) == 5 * 2 ** 4
    assert wreath_quandle("qs4", 1).quandle.labels[0].startswith("[")


def test_wreath_rejects_even_dihedral():
    with pytest.raises(EvenN):
        wreath_quandle("r4", 2)
    with pytest.raises(ValueError):
        wreath_quandle("klein", 2)


def test_monomial_matrices():
    m = MonomialMatrix.from_permutation(reflection(3, 1), [0, 1, 2], 3)
    assert m * m.inverse() == MonomialMatrix.identity(3, 3)
    assert m.diagonal_slots() == [0]
    assert m.permutation() == reflection(3, 1)
    assert m.rows()[1][2] == "x^1"


def test_abelian_extension_by_coboundary(r3):
    f = Cochain.from_labels(r3, 1, 3, {("0",): 1})
    E = abelian_extension(r3, 3, coboundary(f))
    assert len(E.total) == 9
    assert E.projection.fiber_sizes() == (3, 3, 3)
    assert E.pair(E.index(2, 1)) == (2, 1)
    for x in range(3):
        assert E.projection.mapping[E.section[x]] == x


def test_abelian_extension_needs_a_cocycle(r3):
    spike = Cochain.from_labels(r3, 2, 3, {("0", "1"): 1})
    with pytest.raises(NotACocycle):
        abelian_extension(r3, 3, spike)


@pytest.mark.parametrize("family, q, m", [("W", 2, 2), ("W", 3, 1), ("U", 2, 2)])
def test_section_cocycle_extends_to_next_level(family, q, m):
    phi = cocycle_from_section(family, q, m)
    assert is_2cocycle(phi)
    E = abelian_extension(phi.quandle, q, phi)
    assert are_isomorphic(E.total, alexander_quandle(family_ring(family, q, m + 1)))


def test_alexander_extension_search_finds_r9(r3):
    found = search_alexander_extension(r3, make_ring(3, "T + 1"), dihedral(9))
    assert found is not None
    assert found.isomorphism.is_bijective()
    assert np.array_equal(found.total.table, alexander_extension(r3, make_ring(3, "T + 1"), found.cocycle).table)
    assert search_alexander_extension(r3, make_ring(3, "T + 1"), dihedral(5)) is None


def test_trivial_dynamical_cocycle(r3):
    alpha = trivial_dynamical_cocycle(r3, ["u", "w"])
    assert validate_dynamical_cocycle(alpha)
    Q = dynamical_extension(alpha)
    assert len(Q) == 6
    assert Q.op("(u,0)", "(w,1)") == "(u,2)"


def test_invalid_dynamical_cocycle(r3):
    alpha = dynamical_cocycle(r3, ["0", "1"], lambda s, t, a, b: 0)
    res = validate_dynamical_cocycle(alpha)
    assert not res
    assert res.reason == "alpha_{s,s}(a,a) != a"
    with pytest.raises(InvalidDynamicalCocycle):
        dynamical_extension(alpha)


def test_fibration_recovers_the_extension(r3):
    f = Cochain.from_labels(r3, 1, 3, {("1",): 2})
    E = abelian_extension(r3, 3, coboundary(f))
    alpha = cocycle_from_fibration(E.total, r3, E.projection)
    assert validate_dynamical_cocycle(alpha)
    assert np.array_equal(dynamical_extension(alpha).table, E.total.table)
    with pytest.raises(ValueError):
        cocycle_from_fibration(r3, r3, E.projection)
