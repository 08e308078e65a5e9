import logging

import pytest

from qf.core.errors import UnknownExample
from qf.services.reproduce import (
    ALIASES,
    REPRODUCERS,
    borromean_sweep,
    conway_checks,
    reproduce,
    twist_spin_sweep,
    whitehead_matrix_checks,
    whitehead_sweep,
)


def _assert_passes(report):
    failed = [line for line in report.lines() if line.startswith("FAIL")]
    assert not failed, "\n".join(failed)


def test_whitehead_matrix_report():
    report = whitehead_matrix_checks(ms=(3,))
    _assert_passes(report)
    assert report.example == "whitehead-matrix"


def test_small_sweeps():
    _assert_passes(whitehead_sweep(qs=(2,), ms=(1, 3), families=("W",)))
    _assert_passes(twist_spin_sweep(vs=(1, 2), us=(1,), r5_vs=(1,)))


def test_small_u_family_sweep():
    report = whitehead_sweep(qs=(2,), ms=(1,), families=("U",))
    _assert_passes(report)
    assert report.lines() == ["PASS  whitehead-vector  whitehead U q=2 m=1  vector=(4, 4)"]


def test_borromean_warns_about_the_closed_form(caplog):
    with caplog.at_level(logging.WARNING, logger="qf.services.reproduce"):
        report = borromean_sweep(qs=(2,), ms=(1, 2))
    _assert_passes(report)
    assert any("borromean W q=2 m=2" in r.getMessage() for r in caplog.records)


def test_borromean_report_explains_the_component_sums():
    report = borromean_sweep(qs=(2,), ms=(2,))
    (line,) = report.lines()
    assert line.startswith("PASS")
    assert "4 family vectors x 16 colorings each" in line
    assert "q^(m+3)(1+...+t^(q-1)) = 32(1+...+t^1)" in line


def test_example_ids_and_aliases():
    assert set(REPRODUCERS) == {"ex7.2", "ex7.3", "ex6.1", "sec8-whitehead", "prop8.3"}
    assert set(ALIASES.values()) == set(REPRODUCERS)


@pytest.mark.parametrize("example", ["ex7.2", "whitehead-vector"])
def test_example_ids_resolve(monkeypatch, example):
    monkeypatch.setitem(REPRODUCERS, "ex7.2", lambda: whitehead_sweep(qs=(2,), ms=(1,), families=("W",)))
    (report,) = reproduce(example)
    _assert_passes(report)
    assert report.example == "whitehead-vector"


def test_unknown_example():
    with pytest.raises(UnknownExample) as err:
        reproduce("nope")
    assert err.value.witness == ("nope",)
    assert "ex7.2" in str(err.value)


@pytest.mark.slow
def test_conway_bound():
    _assert_passes(conway_checks())


@pytest.mark.slow
@pytest.mark.parametrize("example", sorted(REPRODUCERS))
def test_full_sweeps(example):
    (report,) = reproduce(example)
    _assert_passes(report)
