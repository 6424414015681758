import json

import pytest

from klsums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_lp_worked_example(capsys):
    code, out = run(capsys, "lp", "--p", "5", "--N", "3", "--chi", "quad3", "--s", "0", "--levels", "3")
    assert code == 0
    d = json.loads(out)
    assert d["ok"]
    ref = int(d["reference"]["coeffs"][0])
    assert ref % 25 == 16
    assert [lv["guaranteed"] for lv in d["levels"]] == [2, 4, 6]


def test_lp_pruned_zeta(capsys):
    code, out = run(capsys, "lp", "--p", "5", "--N", "3", "--psi", "omega", "--s", "-1",
                    "--form", "pruned-zeta", "--levels", "1")
    assert code == 0
    assert json.loads(out)["levels"][0]["partial"]["coeffs"] == ["511"]


def test_lp_value_flag(capsys):
    code, out = run(capsys, "lp", "--p", "5", "--N", "3", "--chi", "quad3", "--levels", "1", "--value", "5")
    assert code == 0
    assert json.loads(out)["lp_value"]["precision"] >= 5


@pytest.mark.parametrize("argv", [
    ["lp", "--p", "6", "--N", "3", "--chi", "quad3"],
    ["lp", "--p", "5", "--N", "5", "--chi", "quad5"],
    ["lp", "--p", "5", "--chi", "bogus"],
    ["lp", "--p", "5", "--N", "3", "--chi", "quad3", "--form", "nope"],
    ["nosuchcommand"],
])
def test_config_errors(capsys, argv):
    assert main(argv) == 2


def test_precision_exhausted(capsys):
    assert main(["experiment", "dn", "--p", "5", "--n-max", "5", "--W-exp", "8"]) == 3
    assert main(["lp", "--p", "5", "--W", "6", "--N", "3", "--chi", "quad3", "--value", "9"]) == 3


def test_experiment(capsys):
    code, out = run(capsys, "experiment", "dn", "--p", "3", "--n-max", "5")
    assert code == 0
    d = json.loads(out)
    assert d["all_at_least_2n_minus_1"]
    assert [r["n"] for r in d["rows"]] == [1, 2, 3, 4, 5]
    code, out = run(capsys, "experiment", "--p", "5", "--n-max", "0")
    assert code == 0 and json.loads(out)["rows"] == []


def test_csv_output(capsys):
    code, out = run(capsys, "experiment", "--p", "5", "--n-max", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,d,bound,capped"


def test_fg_table_text(capsys):
    code, out = run(capsys, "fg-table", "--p", "5", "--N", "3", "--format", "text")
    assert code == 0
    lines = out.split("\n\n")
    assert lines[1].splitlines()[0].split() == ["17", "18", "19", "21", "22", "23", "24"]


def test_periods_and_stickelberger(capsys):
    code, out = run(capsys, "periods", "--p", "5", "--chi", "quad3", "--levels", "1")
    assert code == 0
    assert len(json.loads(out)["periods"]) == 5
    code, out = run(capsys, "stickelberger", "--kind", "eta", "--p", "5", "--c", "2", "--n", "0")
    assert code == 0
    assert json.loads(out)["coeffs"][0]["coeffs"] == ["2"]


def test_deriv(capsys):
    code, out = run(capsys, "deriv", "--p", "5", "--W", "8", "--chi", "quad3")
    assert code == 0
    assert json.loads(out)["precision"] == 6


def test_verify_suite(capsys):
    code, out = run(capsys, "verify", "fg")
    assert code == 0
    d = json.loads(out)
    assert d["ok"] and d["suites"][0]["checks"][0]["ok"]


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"p": 5, "N": 3, "chi": {"modulus": 3, "gens": {"2": "-1"}}, "levels": [1, 2]}))
    code, out = run(capsys, "lp", "--config", str(cfg))
    assert code == 0
    assert [lv["n"] for lv in json.loads(out)["levels"]] == [1, 2]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"prime": 5}))
    assert main(["lp", "--config", str(bad)]) == 2


def test_deterministic_and_worker_independent(capsys, monkeypatch):
    argv = ["lp", "--p", "7", "--N", "3", "--chi", "quad3", "--psi", "omega^2", "--s", "3", "--levels", "4"]
    _, a = run(capsys, *argv)
    _, b = run(capsys, *argv)
    monkeypatch.setenv("KLSUMS_WORKERS", "4")
    _, c = run(capsys, *argv, "--workers", "3")
    assert a == b == c


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert main(["experiment", "--p", "5", "--n-max", "2", "--output", str(target)]) == 0
    assert json.loads(target.read_text())["rows"][1]["d"] >= 3


def test_failed_certificate_exit_code(capsys, monkeypatch):
    from klsums import cli
    from klsums.verify import Check, SuiteResult

    def broken(name):
        return [SuiteResult("fake", [Check("always fails", False, counterexample=(1, 2))])]

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out = run(capsys, "verify", "fg")
    assert code == 4
    assert json.loads(out)["suites"][0]["checks"][0]["counterexample"] == "(1, 2)"
