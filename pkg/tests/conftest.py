import pytest

from qf.links.builtins import builtin
from qf.links.diagram import Crossing, build_diagram
from qf.quandles.families import dihedral


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance sweeps that take more than a few seconds")


@pytest.fixture
def trefoil():
    return builtin("trefoil")


@pytest.fixture
def figure8():
    return builtin("figure8")


@pytest.fixture
def hopf():
    return builtin("hopf")


@pytest.fixture
def whitehead():
    return builtin("whitehead")


@pytest.fixture
def borromean():
    return builtin("borromean")


@pytest.fixture
def kinked_trefoil():
    """Trefoil with a positive Reidemeister-I kink between a1 and a4."""
    crossings = [
        Crossing("t1", 1, "a2", "a3", "a1"),
        Crossing("k", 1, "a4", "a1", "a4"),
        Crossing("t2", 1, "a3", "a4", "a2"),
        Crossing("t3", 1, "a1", "a2", "a3"),
    ]
    return build_diagram(crossings, [("K1", "a1", ["a1", "a4", "a2", "a3"])], "kinked-trefoil")


@pytest.fixture
def clasp():
    """Two-component unlink after a Reidemeister-II move: b1 passes over c1/c2 twice."""
    crossings = [
        Crossing("s1", 1, "b1", "c1", "c2"),
        Crossing("s2", -1, "b1", "c2", "c1"),
    ]
    return build_diagram(crossings, [("K1", "b1", ["b1"]), ("K2", "c1", ["c1", "c2"])], "clasp")


@pytest.fixture
def r3():
    return dihedral(3)
