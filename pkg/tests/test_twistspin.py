import pytest

from qf.extensions import wreath_quandle
from qf.invariants import coloring_from_labels
from qf.links.builtins import builtin_tangle
from qf.quandles import dihedral
from qf.twistspin import TwistSpinProblem, twist_action, twist_orbit_length, twist_spin_colorings


def test_twist_action_on_r3(trefoil, r3):
    C = coloring_from_labels(trefoil, r3, {"a1": "0", "a2": "1", "a3": "2"})
    moved = twist_action(C, 0)
    assert moved.as_labels() == {"a1": "0", "a2": "2", "a3": "1"}
    assert twist_orbit_length(C, 0) == 2


@pytest.mark.parametrize("k, count, nontrivial", [(0, 9, True), (1, 3, False), (2, 9, True), (3, 3, False)])
def test_twist_spun_trefoil_over_r3(r3, k, count, nontrivial):
    res = twist_spin_colorings(TwistSpinProblem(builtin_tangle("trefoil"), r3, k))
    assert res.count == count
    assert res.nontrivial is nontrivial
    assert (res.witness is None) is not nontrivial


def test_twist_spun_figure8_over_r5():
    tangle = builtin_tangle("figure8")
    assert twist_spin_colorings(TwistSpinProblem(tangle, dihedral(5), 2)).count == 25
    assert not twist_spin_colorings(TwistSpinProblem(tangle, dihedral(5), 1)).nontrivial


@pytest.mark.parametrize("v", [1, 2, 3])
def test_trefoil_is_colored_by_r3_wreath_at_twice_v(v):
    Q = wreath_quandle("r3", v).quandle
    res = twist_spin_colorings(TwistSpinProblem(builtin_tangle("trefoil"), Q, 2 * v))
    assert res.nontrivial
    assert all(C.is_valid() for C in res.fixed)


def test_negative_twist_is_rejected(r3):
    with pytest.raises(ValueError):
        TwistSpinProblem(builtin_tangle("trefoil"), r3, -1)
