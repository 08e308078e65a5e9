import json

import pytest

from qf.algebra.ring import w_ring
from qf.main import dispatch
from qf.quandles import alexander_quandle, are_isomorphic, dihedral
from qf.links.builtins import builtin
from qf.links.parser import format_link
from qf.quandles.io import maps_path, read_extension_maps, read_table


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def split_text(out):
    first, _, rest = out.partition("\n")
    return first, json.loads(rest)


def test_unknot_over_r3_with_zero_cocycle(capsys):
    code, out, _ = run(capsys, "invariant", "--link", "unknot", "--quandle", "dihedral:3", "--cocycle", "zero")
    assert code == 0
    value, block = split_text(out)
    assert value == "3"
    assert block["colorings"] == 3


def test_whitehead_vector(capsys):
    code, out, _ = run(capsys, "invariant", "--link", "whitehead", "--cocycle", "section:w:2:3", "--shape", "vector")
    assert code == 0
    value, block = split_text(out)
    assert value == "(32 + 32t, 32 + 32t)"
    assert block["colorings"] == 64
    assert block["family"] == [{"vector": [0, 0], "multiplicity": 32}, {"vector": [1, 1], "multiplicity": 32}]
    assert [v["coeffs"] for v in block["vector"]] == [{"0": 32, "1": 32}] * 2


def test_coboundary_check_passes(capsys):
    code, out, _ = run(capsys, "--seed", "5", "invariant", "--link", "whitehead", "--cocycle", "section:w:2:3",
                       "--shape", "family", "--check-coboundary", "3")
    assert code == 0
    assert split_text(out)[0] == "{32 x (1, 1), 32 x (t, t)}"


def test_json_output(capsys):
    code, out, _ = run(capsys, "--format", "json", "invariant", "--link", "trefoil", "--quandle", "dihedral:3")
    assert code == 0
    data = json.loads(out)
    assert data["invariant"]["colorings"] == 9
    assert data["shape"] == "scalar"


def test_third_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "--quandle", "dihedral:3", "--degree", "3", "--prime", "3")
    assert code == 0
    assert out == "dim = 1"


def test_quandle_make_and_validate(capsys, tmp_path):
    path = tmp_path / "r5.csv"
    code, out, _ = run(capsys, "quandle", "make", "dihedral:5", "--out", str(path))
    assert code == 0
    assert read_table(path) == dihedral(5)
    code, out, _ = run(capsys, "quandle", "validate", str(path))
    assert code == 0
    assert out.startswith("ok:")
    assert "connected=True" in out


def test_wreath_extension_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "extend", "wreath", "--base", "r3", "--v", "2")
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 12
    assert data["fiber_sizes"] == [4, 4, 4]
    assert len(data["section"]) == 3
    assert all(data["projection"][e] == x for x, e in data["section"].items())



def test_abelian_extension_writes_table_and_maps(capsys, tmp_path):
    path = tmp_path / "e.csv"
    code, out, _ = run(capsys, "extend", "abelian", "--q", "2", "--cocycle", "section:w:2:1", "--out", str(path))
    assert code == 0
    E = read_table(path)
    assert are_isomorphic(E, alexander_quandle(w_ring(2, 2)))
    maps = read_extension_maps(maps_path(path))
    assert maps_path(path).name == "e.maps.json"
    assert len(maps.section) == 2
    assert sorted(maps.projection) == sorted(E.labels)
    assert all(maps.projection[e] == x for x, e in maps.section.items())


def test_abelian_extension_of_r3_by_zero_cocycle(capsys):
    code, out, _ = run(capsys, "extend", "abelian", "--base", "dihedral:3", "--q", "3", "--cocycle", "zero")
    assert code == 0
    assert out.splitlines()[0] == "*," + ",".join(f"({a},{x})" for x in "012" for a in "012")
    assert "section:" in out
    assert "  0 -> (0,0)" in out


def test_abelian_extension_checks_the_modulus(capsys):
    code, _, err = run(capsys, "extend", "abelian", "--q", "3", "--cocycle", "section:w:2:1")
    assert code == 1
    assert "--q must match" in err

def test_alexander_subcommand(capsys):
    code, out, _ = run(capsys, "alexander", "--link", "trefoil", "--inoue", "3:T+1", "--conway", "--ring", "3:T+1")
    assert code == 0
    assert "colorings by Lambda_3/(T+1): 9" in out
    assert "nabla = 1 + z^2" in out
    assert "min-deg = 0" in out


def test_twistspin_subcommand(capsys):
    code, out, _ = run(capsys, "twistspin", "--knot", "trefoil", "--quandle", "dihedral:3", "--k", "2")
    assert code == 0
    assert "9 fixed colorings" in out
    assert "non-trivially colorable" in out



def test_twistspin_reads_a_knot_file(capsys, tmp_path):
    path = tmp_path / "trefoil.txt"
    path.write_text(format_link(builtin("trefoil")), encoding="utf-8")
    code, out, _ = run(capsys, "twistspin", "--knot", str(path), "--quandle", "dihedral:3", "--k", "2")
    assert code == 0
    assert "9 fixed colorings" in out
    code, out, _ = run(capsys, "twistspin", "--knot", str(path), "--axis", "a2", "--quandle", "dihedral:3", "--k", "1")
    assert code == 0
    assert "only trivial colorings" in out

@pytest.mark.parametrize(
    "argv",
    [
        ("quandle", "validate", "dihedral:x"),
        ("extend", "wreath", "--base", "r4", "--v", "2"),
        ("invariant", "--link", "trefoil", "--link-file", "k.txt", "--quandle", "dihedral:3"),
        ("reproduce", "no-such-example"),
    ],
)
def test_computation_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("error:")


def test_json_error_object(capsys):
    code, out, _ = run(capsys, "--format", "json", "quandle", "validate", "bogus")
    assert code == 1
    data = json.loads(out)
    assert data["type"] == "UnknownName"
    assert data["witness"] == ["bogus"]


def test_usage_errors_exit_2(capsys):
    assert dispatch([]) == 2
    assert dispatch(["quandle"]) == 2
    assert dispatch(["--format", "xml", "quandle", "validate", "qs4"]) == 2
    capsys.readouterr()
