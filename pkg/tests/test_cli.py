import json
import subprocess
import sys

import pytest

from hopfkernel.bounds import load_category_data
from hopfkernel.cli import main


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "hopfkernel.cli", *args], capture_output=True, text=True)


def test_verify_text(capsys):
    assert main(["verify", "--family", "taft", "--n", "3"]) == 0
    assert "status: PASS" in capsys.readouterr().out


def test_analyze_json(capsys):
    assert main(["analyze", "--family", "bigd", "--n", "2", "--q", "t", "--format", "json", "--no-timing"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["passed"] and rep["results"]["finite_type"]["finite_type"] is False
    assert "timing" not in rep


def test_config_file_and_out(tmp_path, capsys):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"command": "fusion", "family": {"kind": "bigd", "n": 2, "q": "t"},
                               "window": {"support": 1, "max_exp": 1}}))
    out = tmp_path / "r.json"
    assert main(["fusion", "--config", str(cfg), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["results"]["pairs"] > 0


def test_failing_check_exits_1(tmp_path):
    obj = load_category_data().to_json()
    obj["dimE1"] = 5
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(obj))
    assert main(["bounds", "--category-data", str(p)]) == 1


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "bigd", "--n", "3", "--q", "1/0"],
    ["verify", "--family", "bigd", "--n", "3", "--conductor", "4"],
    ["verify", "--family", "taft", "--n", "1"],
])
def test_bad_parameters_exit_2(argv):
    assert main(argv) == 2


def test_malformed_config_exit_2(tmp_path):
    p = tmp_path / "job.json"
    p.write_text('{"family": {"kind": "bigd", "colour": 3}}')
    assert main(["verify", "--config", str(p)]) == 2
    p.write_text("{not json")
    assert main(["verify", "--config", str(p)]) == 2


def test_dump_lists_structure(capsys):
    assert main(["dump", "--family", "taft", "--n", "2", "--format", "json"]) == 0
    table = json.loads(capsys.readouterr().out)["results"]["table"]
    assert len(table) == 4 and table[0]["epsilon"] == "1"


def test_repeat_runs_identical():
    args = ["analyze", "--family", "bigd", "--n", "3", "--q", "t", "--format", "json", "--no-timing"]
    a, b = run_cli(*args), run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
