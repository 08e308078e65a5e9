import numpy as np
import pytest

from qf.algebra.ring import make_ring
from qf.core.errors import (
    AxiomIIIViolation,
    AxiomIIViolation,
    AxiomIViolation,
    NotAHomomorphism,
    NotClosed,
    ParseError,
)
from qf.quandles import (
    QuandleHom,
    alexander_quandle,
    are_isomorphic,
    check_axioms,
    conjugation_quandle,
    dihedral,
    find_homomorphisms,
    find_isomorphism,
    from_operation,
    qs4,
    transpositions,
    trivial_quandle,
    validate_quandle,
)
from qf.quandles.io import read_table, table_from_csv, table_from_json, table_to_csv, table_to_json, write_table


def test_dihedral_operation(r3):
    R5 = dihedral(5)
    assert R5.op("1", "2") == "3"
    assert R5.inv("3", "2") == "1"
    assert r3.right_translation("0") == (0, 2, 1)
    assert r3.is_connected() and not r3.is_trivial()
    assert not dihedral(4).is_connected()


def test_trivial_quandle():
    T3 = trivial_quandle(3)
    assert T3.is_trivial()
    assert not T3.is_connected()
    assert T3.op("2", "0") == "2"


def test_qs4_is_connected_of_size_four():
    Q = qs4()
    assert len(Q) == 4
    assert Q.is_connected()
    assert all(sorted(Q.right_translation(a)) == [0, 1, 2, 3] for a in Q.labels)


@pytest.mark.parametrize(
    "table, exc, reason",
    [
        ([[1, 0], [0, 1]], AxiomIViolation, "I"),
        ([[0, 0], [0, 1]], AxiomIIViolation, "II"),
        ([[0, 2, 0], [2, 1, 1], [1, 0, 2]], AxiomIIIViolation, "III"),
    ],
)
def test_axiom_violations(table, exc, reason):
    res = check_axioms(np.array(table))
    assert not res
    assert res.reason == reason
    assert len(res.witness) == 3
    with pytest.raises(exc):
        validate_quandle(table)


def test_validate_rejects_malformed_tables():
    with pytest.raises(ValueError):
        validate_quandle([[0, 1]])
    with pytest.raises(ValueError):
        validate_quandle([[0, 5], [1, 1]])
    with pytest.raises(ValueError):
        validate_quandle([[0, 0], [1, 1]], labels=["a", "a"])


def test_from_operation_matches_family():
    Q = from_operation(range(5), lambda a, b: (2 * b - a) % 5, name="R_5")
    assert Q == dihedral(5)


def test_conjugation_quandle_closure():
    with pytest.raises(NotClosed):
        conjugation_quandle(["(12)", "(23)"])
    Q = conjugation_quandle(["(12)", "(13)", "(23)"])
    assert len(Q) == 3
    assert Q.op("(12)", "(23)") == "(13)"


def test_isomorphism_search(r3):
    iso = find_isomorphism(r3, transpositions(3))
    assert iso is not None and iso.is_bijective()
    assert are_isomorphic(dihedral(5), alexander_quandle(make_ring(5, "T + 1")))
    assert are_isomorphic(qs4(), alexander_quandle(make_ring(2, "T^2 + T + 1")))
    assert not are_isomorphic(dihedral(4), trivial_quandle(4))
    assert find_isomorphism(dihedral(3), dihedral(5)) is None


def test_endomorphisms_of_r3(r3):
    # three constants plus the six automorphisms
    homs = find_homomorphisms(r3, r3)
    assert len(homs) == 9
    assert sum(1 for h in homs if h.is_bijective()) == 6


def test_quandle_hom():
    proj = QuandleHom(dihedral(6), dihedral(3), tuple(i % 3 for i in range(6)))
    assert proj.fiber_sizes() == (2, 2, 2)
    assert proj("4") == "1"
    with pytest.raises(NotAHomomorphism):
        QuandleHom(dihedral(3), dihedral(3), (0, 0, 1))


@pytest.mark.parametrize("suffix", [".csv", ".json"])
def test_table_files(tmp_path, suffix):
    Q = qs4()
    path = tmp_path / f"qs4{suffix}"
    write_table(Q, path)
    back = read_table(path)
    assert back.labels == Q.labels
    assert np.array_equal(back.table, Q.table)


def test_table_text_formats(r3):
    csv_text = table_to_csv(r3)
    assert csv_text.splitlines()[0] == "*,0,1,2"
    assert csv_text.splitlines()[2] == "1,2,1,0"
    assert np.array_equal(table_from_csv(csv_text).table, r3.table)
    assert np.array_equal(table_from_json(table_to_json(r3)).table, r3.table)


def test_table_parse_errors():
    with pytest.raises(ParseError):
        table_from_csv("")
    with pytest.raises(ParseError):
        table_from_csv("*,a,b\nb,a,b\na,b,a\n")
    with pytest.raises(ParseError):
        table_from_csv("*,a,b\na,a,c\nb,b,b\n")
    with pytest.raises(ParseError):
        table_from_json('{"labels": ["a"]}')
    with pytest.raises(AxiomIViolation):
        table_from_csv("*,a,b\na,b,a\nb,a,b\n")
