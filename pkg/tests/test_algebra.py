import itertools
import random

import pytest
from sympy.combinatorics import Permutation

from qf.algebra.group_ring import GroupRingValue
from qf.algebra.laurent import LaurentPoly
from qf.algebra.matrix import RingMatrix, column_reduce, kernel, kernel_with_report, laurent_det
from qf.algebra.ring import invert_T, make_ring, project, section, strip_ideal_factor, u_ring, w_ring
from qf.core.errors import NonUnitLeadingCoefficient, NotInIdeal, ParseError, SizeLimitExceeded
from qf.services.reproduce import (
    A0_COLS,
    A0_ROWS,
    WHITEHEAD_A0,
    WHITEHEAD_A1,
    golden_matrix,
)


def L(text):
    return LaurentPoly.parse(text)


def test_laurent_parse_and_arithmetic():
    assert L("T^-1") == LaurentPoly.monomial(1, -1)
    assert L("1,2,3") == L("1 + 2*T + 3*T**2")
    assert (L("1-T") * L("1+T")) == L("1 - T^2")
    assert L("T^-1") * L("T") == LaurentPoly.const(1)
    assert (L("1-T") ** 3).coefficient_list() == (1, -3, 3, -1)
    assert L("T^2 - T^-1").min_degree == -1
    assert L("T^2 - T^-1").max_degree == 2
    assert str(L("1-T")) == "1 - T"
    assert str(L("-T^-1 + 2*T^3")) == "-T^-1 + 2T^3"
    assert str(LaurentPoly()) == "0"


def test_laurent_units():
    assert L("-T^2").is_unit()
    assert L("-T^2").unit_inverse() == L("-T^-2")
    assert not L("2*T").is_unit()
    with pytest.raises(ValueError):
        L("1-T").unit_inverse()


def test_laurent_parse_errors():
    with pytest.raises(ParseError):
        L("T+")
    with pytest.raises(ParseError):
        L("")
    with pytest.raises(ParseError):
        L("T**(1/2)")


def test_make_ring_rejects_non_unit_ends():
    with pytest.raises(NonUnitLeadingCoefficient):
        make_ring(4, "2 + T")
    with pytest.raises(NonUnitLeadingCoefficient):
        make_ring(3, "3*T + 3")
    r = make_ring(5, "T^2 + T + 1")
    assert r.size == 25


def test_w_and_u_rings():
    W = w_ring(3, 3)
    assert W.size == 27
    assert str(W.element([2, 0, 1])) == "2 + (1-T)^2"
    assert W.T * W.T_inv == W.one
    assert (W.one - W.T) ** 3 == W.zero

    U = u_ring(2, 2)
    assert U.q == 4 and U.size == 4
    assert str(U.T) == "3"
    assert U.T * U.T_inv == U.one


def test_ring_element_inverse_and_units():
    W = w_ring(2, 3)
    x = W.element([1, 1, 0])
    assert x.is_unit()
    assert x * x.inverse() == W.one
    y = W.element([0, 1, 0])
    assert not y.is_unit()
    assert y.inverse() is None
    assert W.T ** -2 == W.T_inv * W.T_inv


@pytest.mark.parametrize(
    "ring",
    [make_ring(3, "T + 1"), make_ring(2, "T^2 + T + 1"), make_ring(4, "T^2 + 3"), w_ring(3, 2), u_ring(2, 3)],
)
def test_invert_T(ring):
    assert invert_T(ring) * ring.T == ring.one
    assert invert_T(ring) == ring.T_inv

def test_elements_are_indexed_in_order():
    W = w_ring(2, 2)
    for i, e in enumerate(W.elements()):
        assert W.index_of(e) == i
        assert W.element_at(i) == e


def test_section_project_and_stripping():
    R, E = w_ring(2, 3), w_ring(2, 4)
    for x in R.elements():
        assert project(section(x, E), R) == x
    e = E.element([0, 0, 0, 1])
    assert strip_ideal_factor(e, "1-T") == 1
    with pytest.raises(NotInIdeal):
        strip_ideal_factor(E.element([1, 0, 0, 0]), "1-T")

    U2, U3 = u_ring(3, 2), u_ring(3, 3)
    assert strip_ideal_factor(U3.scalar(18), "q") == 2
    with pytest.raises(NotInIdeal):
        strip_ideal_factor(U3.scalar(4), "q")
    assert project(section(U2.scalar(7), U3), U2) == U2.scalar(7)


def test_group_ring_values():
    v = GroupRingValue(2, (32, 32))
    assert str(v) == "32 + 32t"
    assert v.total() == 64
    assert not v.is_trivial()
    assert str(GroupRingValue.from_exponents(3, [0, 1, 1, 5])) == "1 + 2t + t^2"
    assert GroupRingValue.from_exponents(4, [0, 0, 0]).is_trivial()
    one_plus_t = GroupRingValue(2, (1, 1))
    assert one_plus_t * one_plus_t == GroupRingValue(2, (2, 2))
    assert GroupRingValue.from_model(v.to_model()) == v
    with pytest.raises(ValueError):
        v + GroupRingValue.zero(3)


def test_column_reduce_reaches_printed_form():
    A0 = golden_matrix(WHITEHEAD_A0, A0_ROWS, A0_COLS)
    A1 = column_reduce(A0, 4)
    assert A1 == golden_matrix(WHITEHEAD_A1, A0_ROWS, A0_COLS)


def test_column_reduce_needs_unit_pivots():
    M = RingMatrix(((L("2"), L("1")), (L("1"), L("1"))), ("r1", "r2"), ("c1", "c2"))
    with pytest.raises(ValueError):
        column_reduce(M, 1)


def test_permute_by_labels():
    M = RingMatrix(((L("1"), L("T")), (L("0"), L("-1"))), ("r1", "r2"), ("c1", "c2"))
    P = M.permute(("r2", "r1"), ("c2", "c1"))
    assert P.entry(0, 0) == L("-1")
    assert P.entry(1, 0) == L("T")
    with pytest.raises(ValueError):
        M.permute(("r1", "r1"), None)


def test_laurent_det():
    M = RingMatrix(((L("T^-1"), L("1")), (L("1"), L("T"))), ("r1", "r2"), ("c1", "c2"))
    assert laurent_det(M) == LaurentPoly()
    N = RingMatrix(((L("1-T"), L("T")), (L("-1"), L("1"))), ("r1", "r2"), ("c1", "c2"))
    assert laurent_det(N) == LaurentPoly.const(1)
    trefoil_block = RingMatrix(((L("-1"), L("T")), (L("1-T"), L("-1"))), ("r1", "r2"), ("c1", "c2"))
    assert laurent_det(trefoil_block) == L("1 - T + T^2")
    assert laurent_det(RingMatrix(((L("T-1"),),), ("r",), ("c",))) == L("T - 1")


DET_ENTRIES = tuple(L(e) for e in ("0", "1", "-1", "T", "-T", "1-T"))


def _square(values):
    n = int(len(values) ** 0.5)
    labels = [f"x{i}" for i in range(n)]
    rows = tuple(tuple(values[i * n:(i + 1) * n]) for i in range(n))
    return RingMatrix(rows, tuple(labels), tuple(labels))


def _det_by_permutations(M):
    n = M.shape[0]
    total = LaurentPoly()
    for perm in itertools.permutations(range(n)):
        term = LaurentPoly.const(Permutation(list(perm)).signature())
        for i, j in enumerate(perm):
            term = term * M.entry(i, j)
        total = total + term
    return total


@pytest.mark.parametrize("n", [1, 2])
def test_laurent_det_on_every_small_matrix(n):
    for values in itertools.product(DET_ENTRIES, repeat=n * n):
        M = _square(values)
        assert laurent_det(M) == _det_by_permutations(M)


@pytest.mark.parametrize("n", [3, 4])
def test_laurent_det_on_sampled_matrices(n):
    rng = random.Random(20 + n)
    for _ in range(150):
        M = _square([rng.choice(DET_ENTRIES) for _ in range(n * n)])
        assert laurent_det(M) == _det_by_permutations(M)


def test_kernel_over_finite_ring():
    r = make_ring(3, "T + 1")
    one = r.one
    M = RingMatrix(((one,), (one,)), ("v1", "v2"), ("c",), r)
    sols = kernel(M)
    assert len(sols) == 3
    assert all((a + b).is_zero() for a, b in sols)
    _, report = kernel_with_report(M)
    assert report.pivots == (("v1", "c"),)
    assert report.free_rows == ("v2",)


def test_kernel_respects_cap():
    r = w_ring(2, 3)
    M = RingMatrix(((r.zero,), (r.zero,), (r.zero,)), ("a", "b", "c"), ("x",), r)
    with pytest.raises(SizeLimitExceeded):
        kernel(M, max_enum=100)
