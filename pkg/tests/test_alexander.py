import pytest

from qf.algebra.laurent import LaurentPoly
from qf.algebra.ring import family_ring, ideal_kind, make_ring, strip_ideal_factor, w_ring
from qf.alexander import (
    alexander_matrix,
    conway_coefficients,
    conway_min_degree,
    deleted_minor,
    inoue_count,
    invariant_factors,
    kernel_colorings,
    matrix_contribution,
    module_size,
    z_vector,
)
from qf.core.errors import InfiniteModule, NotAKernelVector, NotAKnot
from qf.extensions import cocycle_from_section
from qf.invariants import Coloring, contribution, enumerate_colorings
from qf.links.builtins import builtin
from qf.quandles import alexander_quandle
from qf.services.reproduce import WHITEHEAD_A, WHITEHEAD_COLS, WHITEHEAD_ROWS, golden_matrix


def test_whitehead_matrix_matches_printed_form(whitehead):
    A = alexander_matrix(whitehead)
    assert A.matrix == golden_matrix(WHITEHEAD_A, WHITEHEAD_ROWS, WHITEHEAD_COLS)
    assert A.signs == (-1, 1, 1, 1, 1, -1)
    assert A.shape == (6, 6)


def test_trefoil_matrix_and_minor(trefoil):
    A = alexander_matrix(trefoil)
    assert A.matrix.entry(0, 0) == LaurentPoly.const(-1)
    assert A.matrix.entry(0, 1) == LaurentPoly.parse("T")
    assert A.matrix.entry(0, 2) == LaurentPoly.parse("1 - T")
    assert deleted_minor(A, 0).shape == (2, 2)
    with pytest.raises(ValueError):
        deleted_minor(A, 3)


@pytest.mark.parametrize(
    "name, ring",
    [
        ("trefoil", make_ring(3, "T + 1")),
        ("figure8", make_ring(5, "T + 1")),
        ("trefoil", make_ring(2, "T^2 + T + 1")),
        ("whitehead", w_ring(2, 3)),
        ("borromean", w_ring(2, 2)),
    ],
)
def test_kernel_matches_backtracking(name, ring):
    D = builtin(name)
    from_kernel = [C.colors for C in kernel_colorings(D, ring)]
    searched = [C.colors for C in enumerate_colorings(D, alexander_quandle(ring))]
    assert from_kernel == searched


@pytest.mark.parametrize(
    "name, p, J, expected",
    [
        ("trefoil", 2, "T + 1", 2),
        ("trefoil", 3, "T + 1", 9),
        ("trefoil", 5, "T + 1", 5),
        ("trefoil", 2, "T^2 + T + 1", 16),
        ("trefoil", 3, "T^2 + T + 1", 9),
        ("trefoil", 5, "T^2 + T + 1", 25),
        ("figure8", 2, "T + 1", 2),
        ("figure8", 3, "T + 1", 3),
        ("figure8", 5, "T + 1", 25),
        ("figure8", 2, "T^2 + T + 1", 16),
        ("figure8", 3, "T^2 + T + 1", 9),
        ("figure8", 5, "T^2 + T + 1", 25),
    ],
)
def test_inoue_count(name, p, J, expected):
    D = builtin(name)
    assert inoue_count(D, p, J) == expected
    assert len(enumerate_colorings(D, alexander_quandle(make_ring(p, J)))) == expected


@pytest.mark.parametrize("name", ["trefoil", "figure8"])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_inoue_count_needs_a_finite_module(name, p):
    with pytest.raises(InfiniteModule):
        inoue_count(builtin(name), p, 0)


def test_inoue_edge_cases(trefoil, hopf):
    with pytest.raises(InfiniteModule):
        inoue_count(trefoil, 3, 0)
    with pytest.raises(InfiniteModule):
        inoue_count(trefoil, 3, None)
    with pytest.raises(NotAKnot):
        inoue_count(hopf, 3, "T + 1")
    assert inoue_count(builtin("unknot"), 3, "T^2 + 1") == 9
    assert module_size(3, "T + 1") == 3
    assert module_size(3, "3*T") is None


def test_invariant_factors_of_trefoil(trefoil):
    factors = invariant_factors(trefoil, 3)
    assert [f.degree() for f in factors] == [2, 0]
    with pytest.raises(ValueError):
        invariant_factors(trefoil, 4)


def test_conway_coefficients():
    assert conway_coefficients(LaurentPoly.from_dict({-2: 1, 0: -1, 2: 1})) == {2: 1, 0: 1}
    with pytest.raises(ValueError):
        conway_coefficients(LaurentPoly.from_dict({-3: 1}))


@pytest.mark.parametrize(
    "name, nabla, min_degree",
    [("unknot", "1", 0), ("trefoil", "1 + z^2", 0), ("hopf", "-z", 1)],
)
def test_conway_polynomials(name, nabla, min_degree):
    data = conway_min_degree(builtin(name))
    assert data.format_nabla() == nabla
    assert data.min_degree == min_degree


def test_hopf_has_half_integer_exponents(hopf):
    data = conway_min_degree(hopf)
    assert data.half_integer
    assert data.f == LaurentPoly.parse("T - 1")


def test_whitehead_conway_bound(whitehead):
    data = conway_min_degree(whitehead, check_bound=True, family="W", q=2, max_level=4)
    assert data.min_degree == 3
    assert data.bound_level == 3
    assert data.bound_holds


def test_borromean_conway_bound(borromean):
    data = conway_min_degree(borromean, check_bound=True, family="W", q=2, max_level=3)
    assert data.min_degree >= 2
    assert data.bound_level == 2
    assert data.bound_holds


@pytest.mark.parametrize(
    "name, family, q, m",
    [
        ("whitehead", "W", 2, 3),
        ("whitehead", "U", 2, 3),
        ("whitehead", "W", 3, 2),
        ("whitehead", "U", 3, 1),
        ("borromean", "W", 2, 2),
        ("borromean", "U", 2, 2),
        ("borromean", "W", 3, 2),
    ],
)
def test_matrix_contribution_agrees_with_state_sum(name, family, q, m):
    D = builtin(name)
    phi = cocycle_from_section(family, q, m)
    colorings = kernel_colorings(D, family_ring(family, q, m))
    assert [C.colors for C in colorings] == [C.colors for C in enumerate_colorings(D, phi.quandle)]
    for C in colorings:
        assert matrix_contribution(C) == contribution(C, phi)
        assert len(z_vector(C)) == len(D.crossings)


def test_whitehead_matrix_contribution_count(whitehead):
    assert len(kernel_colorings(whitehead, w_ring(2, 3))) == 64


@pytest.mark.parametrize("family, q, m", [("W", 2, 3), ("U", 3, 1), ("W", 3, 2)])
def test_stripping_t_z_agrees_with_z(whitehead, family, q, m):
    E = family_ring(family, q, m + 1)
    kind = ideal_kind(E)
    for C in kernel_colorings(whitehead, family_ring(family, q, m)):
        for z in z_vector(C):
            assert strip_ideal_factor(E.T * z, kind) == strip_ideal_factor(z, kind)


@pytest.mark.parametrize("name", ["trefoil", "figure8", "hopf", "whitehead", "borromean"])
def test_conway_data_does_not_depend_on_the_deleted_column(name):
    D = builtin(name)
    base = conway_min_degree(D, 0)
    for j in range(1, len(D.crossings)):
        other = conway_min_degree(D, j)
        assert other.deleted == j
        assert other.min_degree == base.min_degree
        assert other.delta in (base.delta, -base.delta)
        assert deleted_minor(alexander_matrix(D), j).shape == (len(D.crossings) - 1,) * 2


def test_matrix_contribution_rejects_non_colorings(whitehead):
    r = w_ring(2, 3)
    X = alexander_quandle(r)
    with pytest.raises(NotAKernelVector):
        matrix_contribution(Coloring(whitehead, X, (1, 0, 0, 0, 0, 0)))
    with pytest.raises(ValueError):
        matrix_contribution(Coloring(whitehead, alexander_quandle(make_ring(3, "T + 1")), (0,) * 6))
