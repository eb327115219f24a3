import json

import pytest

from crossprods.cli import main
from crossprods.crossprod import builtin
from crossprods.gradings import cartan_grading


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_builtin(capsys):
    code, out, _ = run(capsys, "verify", "--builtin", "x1")
    assert code == 0 and "PASS" in out and "FAIL" not in out


def test_verify_json_output(capsys):
    code, out, _ = run(capsys, "verify", "--builtin", "c0", "--field", "Fp:5", "--json")
    data = json.loads(out)
    assert code == 0 and data["field"] == "Fp:5"


def test_verify_input_file(tmp_path, capsys):
    X = builtin("x1")
    path = tmp_path / "x1.json"
    path.write_text(json.dumps(X.to_json()))
    code, out, _ = run(capsys, "verify", "--input", str(path))
    assert code == 0


def test_verify_failing_structure_exits_1(tmp_path, capsys):
    data = builtin("c0").to_json()
    data["gram"] = [["2" if i == j else "0" for j in range(7)] for i in range(7)]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--input", str(path))
    assert code == 1 and "FAIL" in out


def test_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "field": "Q",\n  oops\n}')
    code, _, err = run(capsys, "verify", "--input", str(path))
    assert code == 2
    assert "line 3" in err and "column" in err


@pytest.mark.parametrize("args", [
    ("verify", "--builtin", "nope"),
    ("verify", "--builtin", "x1", "--field", "Fp:4"),
    ("spin", "witness", "--n", "5", "--r", "-1"),
    ("grading", "weyl", "--id", "bogus"),
    ("verify",),
    ("no-such-command",),
])
def test_input_errors_exit_2(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 2


def test_grading_classify_input(tmp_path, capsys):
    path = tmp_path / "cartan.json"
    path.write_text(json.dumps(cartan_grading().to_json()))
    code, out, _ = run(capsys, "grading", "classify", "--input", str(path), "--json")
    assert code == 0 and json.loads(out)["classification"]["family"] == 1


def test_grading_commands(capsys):
    assert run(capsys, "grading", "verify", "--builtin", "cd")[0] == 0
    code, out, _ = run(capsys, "grading", "finelist", "--n", "4")
    assert code == 0 and "Z x Z/4" in out
    code, out, _ = run(capsys, "grading", "weyl", "--id", "cartan")
    assert code == 0 and "48" in out


def test_spin_commands(capsys):
    assert run(capsys, "spin", "triple", "--vectors", "w1,w1")[0] == 0
    assert run(capsys, "spin", "lie", "--n", "5", "--field", "Fp:3")[0] == 0
    code, out, _ = run(capsys, "spin", "witness", "--n", "4", "--r", "-1")
    assert code == 0 and "extension: Q(i)" in out


def test_timings_only_on_request(capsys):
    _, out, _ = run(capsys, "verify", "--builtin", "c0")
    assert "timings" not in out
    _, out, _ = run(capsys, "verify", "--builtin", "c0", "--timings")
    assert "timings" in out


def test_same_seed_same_report(capsys):
    a = run(capsys, "spin", "triple", "--random", "1", "--seed", "11")[1]
    b = run(capsys, "spin", "triple", "--random", "1", "--seed", "11")[1]
    c = run(capsys, "spin", "triple", "--random", "1", "--seed", "12")[1]
    assert a == b and a != c
