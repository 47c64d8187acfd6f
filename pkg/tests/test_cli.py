"""CLI surface: exit codes, JSON report shape, file handling.

Oracle facts used:
  * pi=<0,10>, sigma=<0,5,10>, delta=1: one deletion (vertex 2) fixes the
    discrete distance, and the continuous distance is already 0;
  * pi=<0,10>, sigma=<0,50,10>, delta=1: continuous deletion cost 1;
  * the v=1 single-clause deletion blueprint rows are frozen in
    test_hardness.py; satisfiable means some deletion subset works.
"""

import json
import subprocess
import sys

import pytest

from frechet_edit.cli import main


@pytest.fixture
def curves(tmp_path):
    paths = {}
    for name, rows in {
        "pi2": [0.0, 10.0],
        "sig3": [0.0, 5.0, 10.0],
        "detour": [0.0, 50.0, 10.0],
        "outlier": [0.0, 9.0, 2.0],
        "flat": [0.0, 2.0],
    }.items():
        p = tmp_path / f"{name}.csv"
        p.write_text("".join(f"{r}\n" for r in rows))
        paths[name] = str(p)
    plane = tmp_path / "plane.json"
    plane.write_text(json.dumps({"dim": 2, "vertices": [[0, 0], [10, 0]]}))
    paths["plane"] = str(plane)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_decide_frozen_deletion_example(capsys, curves):
    code, doc = run(capsys, "decide", curves["pi2"], curves["sig3"],
                    "--delta", "1", "--ops", "delete")
    assert code == 0
    assert doc["answer"] is True
    assert doc["cost"] == 1
    assert doc["script"] == [{"op": "delete", "index": 2}]
    assert doc["variant"] == "discrete" and doc["mode"] == "strong"
    assert doc["delta"] == 1.0 and doc["k"] is None


def test_decide_infeasible_exit_code(capsys, curves):
    # insertions never move existing vertices, so the 50 stays fatal
    code, doc = run(capsys, "decide", curves["pi2"], curves["detour"],
                    "--delta", "1", "--ops", "insert")
    assert code == 1
    assert doc["answer"] is False
    assert "cost" not in doc and "script" not in doc


def test_decide_budget_threshold(capsys, curves):
    code, doc = run(capsys, "decide", curves["pi2"], curves["sig3"],
                    "--delta", "1", "--ops", "delete", "--k", "0")
    assert code == 1
    assert doc["answer"] is False
    assert doc["cost"] == 1  # the optimum is still reported


def test_weak_without_oracle_is_usage_error(capsys, curves):
    code = main(["decide", curves["pi2"], curves["sig3"],
                 "--delta", "1", "--mode", "weak"])
    assert code == 2


def test_weak_oracle_deletion_cost(capsys, curves):
    code, doc = run(capsys, "decide", curves["flat"], curves["outlier"],
                    "--delta", "1", "--mode", "weak", "--oracle")
    assert code == 0
    assert doc["cost"] == 1


def test_weak_insertion_needs_budget(capsys, curves):
    code = main(["decide", curves["pi2"], curves["sig3"], "--delta", "1",
                 "--mode", "weak", "--oracle", "--ops", "insert"])
    assert code == 2  # budget required for insertion enumeration


def test_shortcut_feasible_no_cost_field(capsys, curves):
    code, doc = run(capsys, "decide", curves["pi2"], curves["sig3"],
                    "--delta", "1", "--variant", "continuous", "--ops", "shortcut")
    assert code == 0
    assert doc["answer"] is True
    assert "cost" not in doc and "script" not in doc


def test_shortcut_requires_continuous(capsys, curves):
    code = main(["decide", curves["pi2"], curves["sig3"], "--delta", "1",
                 "--ops", "shortcut"])
    assert code == 2


def test_continuous_deletion_witness_replays(capsys, curves):
    code, doc = run(capsys, "decide", curves["pi2"], curves["detour"],
                    "--delta", "1", "--variant", "continuous", "--ops", "delete")
    assert code == 0
    assert doc["cost"] == 1
    assert doc["script"]["edited_sigma"] == [[0.0], [10.0]]


def test_continuous_insert_requires_plane(capsys, curves):
    code = main(["decide", curves["pi2"], curves["sig3"], "--delta", "1",
                 "--variant", "continuous", "--ops", "insert"])
    assert code == 2


def test_continuous_insert_runs_in_plane(capsys, curves, tmp_path):
    sigma = tmp_path / "s2.json"
    sigma.write_text(json.dumps({"dim": 2, "vertices": [[0, 0], [10, 0]]}))
    code, doc = run(capsys, "decide", curves["plane"], str(sigma),
                    "--delta", "1", "--variant", "continuous", "--ops", "both")
    assert code == 0
    assert doc["cost"] == 0


def test_dimension_mismatch(capsys, curves):
    code = main(["decide", curves["plane"], curves["sig3"], "--delta", "1"])
    assert code == 2


def test_missing_file(capsys, curves):
    code = main(["decide", "does/not/exist.csv", curves["sig3"], "--delta", "1"])
    assert code == 2


def test_report_out_file(capsys, curves, tmp_path):
    out = tmp_path / "report.json"
    code, doc = run(capsys, "decide", curves["pi2"], curves["sig3"],
                    "--delta", "1", "--out", str(out))
    assert code == 0
    assert json.loads(out.read_text()) == doc


def test_two_sided_flag(capsys, curves, tmp_path):
    # both curves carry one outlier; a shared budget of 2 fixes them
    pi = tmp_path / "p.csv"
    pi.write_text("0.0\n30.0\n10.0\n")
    code, doc = run(capsys, "decide", str(pi), curves["detour"], "--delta", "1",
                    "--variant", "continuous", "--ops", "delete", "--two-sided")
    assert code == 0
    assert doc["cost"] == 2
    assert doc["script"]["edited_pi"] == [[0.0], [10.0]]
    assert doc["script"]["edited_sigma"] == [[0.0], [10.0]]


def test_gen_hardness_frozen_sigma(capsys, tmp_path):
    cnf = tmp_path / "one.cnf"
    cnf.write_text("p cnf 1 1\n1 1 1 0\n")
    out = tmp_path / "bp"
    code, doc = run(capsys, "gen-hardness", str(cnf), "--out", str(out))
    assert code == 0
    rows = [float(line) for line in (out / "sigma.csv").read_text().splitlines()]
    assert rows == [0, 9, 15, 20, 16, 14, 11, 15, 20, 30]
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["kind"] == "delete-unlimited"


def test_gen_hardness_deterministic_reruns(capsys, tmp_path):
    cnf = tmp_path / "one.cnf"
    cnf.write_text("p cnf 1 2\n1 -1 1 0\n-1 -1 -1 0\n")
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["gen-hardness", str(cnf), "--kind", "insert-budget-k", "--out", str(a)]) == 0
    assert main(["gen-hardness", str(cnf), "--kind", "insert-budget-k", "--out", str(b)]) == 0
    capsys.readouterr()
    for name in ("pi.csv", "sigma.csv", "manifest.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_gen_hardness_lift(capsys, tmp_path):
    cnf = tmp_path / "one.cnf"
    cnf.write_text("p cnf 1 1\n1 1 1 0\n")
    out = tmp_path / "bp"
    code, doc = run(capsys, "gen-hardness", str(cnf), "--lift", "--out", str(out))
    assert code == 0 and doc["lifted"] is True
    first = (out / "pi.csv").read_text().splitlines()
    assert first[0].split(",")[1] == "0.0"  # dim 2
    assert any(line.split(",")[1] == "1000000.0" for line in first)  # BIG rows


def test_gen_hardness_malformed_cnf(capsys, tmp_path):
    cnf = tmp_path / "bad.cnf"
    cnf.write_text("p cnf 1 1\n1 1 0\n")
    assert main(["gen-hardness", str(cnf)]) == 2


def test_weak_continuous_oracle_on_lifted_blueprint(capsys, tmp_path):
    # satisfiable instance: some deletion set fixes the lifted curves too
    cnf = tmp_path / "one.cnf"
    cnf.write_text("p cnf 1 1\n1 1 1 0\n")
    out = tmp_path / "bp"
    assert main(["gen-hardness", str(cnf), "--lift", "--out", str(out)]) == 0
    capsys.readouterr()
    code, doc = run(capsys, "decide", str(out / "pi.csv"), str(out / "sigma.csv"),
                    "--delta", "1", "--variant", "continuous", "--mode", "weak",
                    "--oracle", "--ops", "delete", "--k", "3")
    assert code == 0
    assert doc["cost"] >= 1


def test_weak_continuous_insert_unsupported(capsys, curves):
    code = main(["decide", curves["pi2"], curves["sig3"], "--delta", "1",
                 "--variant", "continuous", "--mode", "weak", "--oracle",
                 "--ops", "insert", "--k", "1"])
    assert code == 2


def test_render_svg(capsys, curves, tmp_path):
    out = tmp_path / "fs.svg"
    code, doc = run(capsys, "render", curves["pi2"], curves["sig3"],
                    "--delta", "1", "--out", str(out))
    assert code == 0
    assert out.read_text().startswith("<svg")
    # weak mode maps onto the weak render variant
    code, doc = run(capsys, "render", curves["pi2"], curves["sig3"], "--delta", "1",
                    "--mode", "weak", "--variant", "discrete", "--out", str(out))
    assert code == 0 and doc["variant"] == "weak-discrete"


def test_console_entry_point(curves):
    proc = subprocess.run(
        [sys.executable, "-m", "frechet_edit.cli", "decide", curves["pi2"],
         curves["sig3"], "--delta", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["answer"] is True
