import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from rectbilliard.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json_golden(capsys):
    code, out, _ = run(capsys, "classify", "--p0", "3/20", "--slope", "3/2", "--json")
    assert code == 0
    path = GOLDEN / "classify_3_20_3_2.json"
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(out, newline="\n")
    assert out == path.read_text()
    obj = json.loads(out)
    assert {"kind", "K", "p", "q", "class", "collisions", "singular_starts"} <= set(obj)
    assert (obj["K"], obj["p"], obj["q"], obj["class"]) == (10, 6, 4, "C_10(6)")
    assert obj["singular_starts"] == ["0", "1/3", "2/3"]


def test_classify_singular_and_irrational(capsys):
    _, out, _ = run(capsys, "classify", "--p0", "1/3", "--slope", "3/2", "--json")
    obj = json.loads(out)
    assert obj["kind"] == "singular" and obj["K"] is None and obj["collisions"][-1] == {"vertex": "C"}
    _, out, _ = run(capsys, "classify", "--p0", "1/3", "--slope-approx", "1.41421356", "--json")
    assert json.loads(out)["kind"] == "nonperiodic"


def test_classify_rectangle(capsys):
    _, out, _ = run(capsys, "classify", "--p0", "7/10", "--slope", "3/4", "--rho", "3/2")
    assert "K=6 type (2,4)" in out


def test_totient_all(capsys):
    code, out, _ = run(capsys, "totient", "5", "--method", "all")
    assert code == 0 and out.split() == ["product:", "4", "dft:", "4", "brute:", "4"]


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-denominator", "8", "--max-sum", "8")
    assert code == 0 and "0 disagreements" in out


def test_verify_report(tmp_path, capsys):
    report = tmp_path / "r.csv"
    code, out, _ = run(capsys, "verify", "--max-denominator", "3", "--max-sum", "3",
                       "--rho", "1", "--report", str(report), "--json")
    lines = report.read_text().splitlines()
    assert code == 0 and lines[0] == "p0,slope,rho,kind,K,p,q,agreement"
    assert json.loads(out)["disagreements"] == 0


def test_odd_period_exit_one(capsys):
    code, _, err = run(capsys, "enumerate", "--period", "9")
    assert code == 1 and "even" in err


def test_malformed_rational_names_flag(capsys):
    code, _, err = run(capsys, "classify", "--p0", "0.15", "--slope", "3/2")
    assert code == 1 and "--p0" in err
    code, _, err = run(capsys, "simulate", "--p0", "1/5", "--slope", "x/2")
    assert code == 1 and "--slope" in err


def test_argparse_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--slope", "1"])
    assert exc.value.code == 1


def test_simulate_table(capsys):
    code, out, _ = run(capsys, "simulate", "--p0", "1/5", "--slope", "2")
    assert code == 0 and "closed after 6 collisions, type (4,2)" in out
    code, out, _ = run(capsys, "simulate", "--p0", "1/5", "--slope", "2", "--reverse", "--json")
    assert json.loads(out)["reversed"] is True


def test_diagonal_and_singular_starts(capsys):
    _, out, _ = run(capsys, "diagonal", "--m", "1", "--n", "4")
    assert out.startswith("A -> D: length 3")
    _, out, _ = run(capsys, "singular-starts", "--p", "6", "--q", "4")
    assert out.split() == ["0", "1/3", "2/3"]


def test_render_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for path in (a, b):
        assert run(capsys, "render", "--p0", "3/20", "--slope", "3/2", "--unfold", "10",
                   "--overlay-singular", "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rectbilliard", "totient", "12"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "product: 4"
