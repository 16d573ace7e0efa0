import json
import subprocess
import sys

import pytest

from toricflow.cli import jsonable, parse_instance, run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_bare_keys():
    assert parse_instance("{d:3, b:[4,5,-9], c:[3,1,2]}") == {"d": 3, "b": [4, 5, -9], "c": [3, 1, 2]}


def test_jsonable():
    from fractions import Fraction

    assert jsonable({"a": [Fraction(3), Fraction(1, 2)]}) == {"a": [3, "1/2"]}


def test_solve(capsys):
    code, out, _ = _run(capsys, "solve", "{d:3, b:[4,5,-9], c:[3,1,2]}")
    assert code == 0
    data = json.loads(out)
    assert data["x"] == [0, 4, 5] and data["objective"] == 14 and data["method"] == "ct"


@pytest.mark.parametrize("method", ["ct", "pairs", "oracle"])
def test_solve_methods(capsys, method):
    code, out, _ = _run(capsys, "solve", "{d:3, b:[4,5,-9], c:[3,1,2]}", "--method", method)
    assert code == 0 and json.loads(out)["x"] == [0, 4, 5]


def test_solve_infeasible(capsys):
    code, out, _ = _run(capsys, "solve", '{"d":3, "b":[-1,0,1], "c":[1,1,1]}')
    assert code == 1
    data = json.loads(out)
    assert data["infeasible"] and data["prefix"] == 1


def test_solve_from_file(tmp_path, capsys):
    f = tmp_path / "inst.json"
    f.write_text('{"d": 3, "b": [4, 5, -9], "c": [3, 1, 2]}')
    out_file = tmp_path / "res.json"
    code, _, _ = _run(capsys, "solve", str(f), "--out", str(out_file))
    assert code == 0 and json.loads(out_file.read_text())["x"] == [0, 4, 5]


@pytest.mark.parametrize("text,needle", [
    ("{d:3, b:[4,5,-9", "line 1"),
    ("{d:3, b:[4,5,-9], c:[1,2]}", "3 arc entries"),
    ("{d:3, b:[4,5], c:[1,2,3]}", "b needs 3"),
    ("{d:1, b:[0], c:[]}", "d >= 2"),
    ("{d:3, b:[1.5,0,-1.5], c:[1,2,3]}", "integers"),
])
def test_usage_errors(capsys, text, needle):
    code, _, err = _run(capsys, "solve", text)
    assert code == 2 and needle in err


def test_gb_primal(capsys):
    code, out, _ = _run(capsys, "gb", "{d:3, c:[3,1,2]}")
    data = json.loads(out)
    assert code == 0 and data["size"] == 1
    assert data["basis"] == [{"plus": {"1,2": 1, "2,3": 1}, "minus": {"1,3": 1}}]


def test_gb_dual(capsys):
    code, out, _ = _run(capsys, "gb", "{d:3, btilde:[4,0,9]}", "--method", "buchberger")
    data = json.loads(out)
    assert code == 0 and data["side"] == "dual"
    assert {"plus": {"2,3": 1}, "minus": {"1,2": 1}} in data["basis"]
    assert {"plus": {"1,2": 1, "1,3": 1}, "minus": {}} in data["basis"]


def test_gb_invalid_dual_cost(capsys):
    code, _, err = _run(capsys, "gb", "{d:3, btilde:[-1,0,5]}")
    assert code == 1 and "no term order" in err


def test_pairs(capsys):
    code, out, _ = _run(capsys, "pairs", "{d:3, c:[3,1,2]}")
    data = json.loads(out)
    assert code == 0 and data["arithmetic_degree"] == 2
    assert [p["sigma"] for p in data["pairs"]] == [["1,2", "1,3"], ["1,3", "2,3"]]
    code, out, _ = _run(capsys, "pairs", "{d:3, btilde:[4,0,9]}")
    assert [p["sigma"] for p in json.loads(out)["pairs"]] == [["1,2"], ["1,3"]]


def test_fan(capsys, tmp_path):
    out_file = tmp_path / "fan.json"
    code, out, _ = _run(capsys, "fan", "--d", "4", "--side", "dual", "--out", str(out_file))
    data = json.loads(out)
    assert code == 0 and (data["count"], data["max"], data["min"]) == (7, 5, 3)
    assert len(json.loads(out_file.read_text())["bases"]) == 7


def test_fan_needs_d(capsys):
    assert _run(capsys, "fan")[0] == 2


def test_catalog(capsys):
    code, out, _ = _run(capsys, "catalog", "--d", "4", "--which", "type3")
    assert code == 0 and json.loads(out)["size"] == 3
    code, out, _ = _run(capsys, "catalog", "--d", "4", "--which", "dual", "--cost")
    assert json.loads(out)["cost"] == [6, 0, 0, 4, 0, 2]


def test_volume(capsys):
    code, out, _ = _run(capsys, "volume", "--d", "4")
    data = json.loads(out)
    assert code == 0 and data["catalan"] == 5 and data["normalized_volume"] == 5


def test_verify(capsys):
    code, out, _ = _run(capsys, "verify", "--d", "4")
    assert code == 0
    assert "FAIL" not in out and "checks passed" in out


def test_tables(capsys):
    code, out, _ = _run(capsys, "tables", "--side", "primal", "--d", "4")
    data = json.loads(out)
    assert code == 0 and data["matches_table"] and data["count"] == 10


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "toricflow", "solve", "{d:3, b:[4,5,-9], c:[3,1,2]}"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["x"] == [0, 4, 5]
