import json
import subprocess
import sys

import pytest

from capelli import cases, cli
from capelli.weyl import WeylOp
from capelli.poly import xv


def _json(capsys, argv):
    code = cli.run(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def _strip(report):
    report = dict(report)
    report.pop("elapsed")
    return report


def test_verify_capelli_json(capsys):
    code, rep = _json(capsys, ["verify-capelli", "--case", "R", "--k", "2", "--n", "2"])
    assert code == 0
    assert set(rep) == {"subcommand", "params", "checks", "elapsed"}
    assert rep["subcommand"] == "verify-capelli"
    names = [c["name"] for c in rep["checks"]]
    assert "identity[case=R,k=2,n=2,d=1]" in names
    assert "identity[case=R,k=2,n=2,d=2]" in names
    assert all(c["holds"] for c in rep["checks"])
    assert all(set(c) <= {"name", "holds", "witness"} for c in rep["checks"])


def test_verify_capelli_single_d(capsys):
    code, rep = _json(capsys, ["verify-capelli", "--case", "C", "--p", "1", "--q", "2", "--n", "2", "--d", "1"])
    assert code == 0 and rep["params"]["d"] == 1


def test_lr_prints_coefficient(capsys):
    assert cli.run(["lr", "--mu", "1", "--nu", "1,1", "--lambda", "2,1"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_lr_table(capsys):
    assert cli.run(["lr", "--mu", "1", "--nu", "1"]) == 0
    assert capsys.readouterr().out.split("\n")[:2] == ["2: 1", "1,1: 1"]


def test_harmonics_example(capsys):
    code, rep = _json(capsys, ["harmonics", "--lambda", "2", "--n", "2", "--k", "1"])
    assert code == 0
    dec = rep["checks"][0]
    assert dec["witness"] == "computed_dim=9 predicted_dim=9"


def test_ta_example(capsys):
    code, rep = _json(capsys, ["ta", "--mu", "1", "--nu", "1", "--lambda", "2", "--n", "4", "--k", "2"])
    assert code == 0
    assert rep["checks"][0]["witness"] == "dim=1 c=1"


def test_verify_lemmas_small(capsys):
    code, rep = _json(capsys, ["verify-lemmas", "--instances", "5"])
    assert code == 0
    assert any(c["name"].startswith("cauchy-binet") for c in rep["checks"])


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-capelli", "--case", "R", "--n", "2"],
        ["verify-capelli", "--case", "R", "--k", "1", "--n", "1", "--d", "2"],
        ["verify-capelli", "--case", "C", "--k", "1", "--n", "1"],
        ["verify-capelli", "--case", "H", "--k", "0", "--n", "1"],
        ["lr", "--mu", "1,2", "--nu", "1"],
        ["lr", "--mu", "a", "--nu", "1"],
        ["harmonics", "--lambda", "1", "--n", "1", "--k", "2"],
        ["ta", "--mu", "1", "--nu", "1", "--lambda", "2", "--n", "3", "--k", "2"],
        ["nonsense"],
        ["lr", "--workers", "0", "--mu", "1", "--nu", "1"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert cli.run(argv) == 2


def test_failed_check_exits_1_with_witness(monkeypatch, capsys):
    bad = WeylOp.mult(xv(1, 1))

    def fake(ctx, d):
        return {"holds": False, "lhs": bad, "rhs": WeylOp.zero(), "diff": bad}

    monkeypatch.setattr(cases, "verify_identity", fake)
    code = cli.run(["verify-capelli", "--case", "R", "--k", "1", "--n", "1"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL identity[case=R,k=1,n=1,d=1]: first differing term: x[1,1]" in out


def test_json_independent_of_workers(capsys):
    argv = ["verify-capelli", "--case", "C", "--grid"]
    _, one = _json(capsys, argv + ["--workers", "1"])
    _, many = _json(capsys, argv + ["--workers", "3"])
    assert json.dumps(_strip(one), sort_keys=True) == json.dumps(_strip(many), sort_keys=True)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    assert cli.run(["lr", "--mu", "2", "--nu", "1", "--lambda", "3", "--out", str(target)]) == 0
    assert target.read_text() == "1\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "capelli", "lr", "--mu", "1", "--nu", "1", "--lambda", "1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
