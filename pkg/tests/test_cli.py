import json

import pytest

from degdowling.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_table_csv(capsys):
    code, out = run(capsys, "table", "--kind", "S2", "--nmax", "3")
    assert code == 0
    lines = out.out.strip().splitlines()
    assert lines[0] == "n,k=0,k=1,k=2,k=3"
    assert lines[4] == "3,0,1,3,1"


def test_table_json_degenerate(capsys):
    code, out = run(capsys, "table", "--kind", "S2deg", "--lambda", "1/2", "--nmax", "2", "--format", "json")
    assert code == 0
    assert json.loads(out.out) == [["1", "0", "0"], ["0", "1", "0"], ["0", "1/2", "1"]]


def test_whitney_table(capsys):
    code, out = run(capsys, "table", "--kind", "W_r_deg", "--m", "2", "--r", "1", "--lambda", "1/2",
                    "--nmax", "2", "--format", "json")
    assert code == 0
    assert json.loads(out.out)[2] == ["1/2", "7/2", "1"]


def test_series(capsys):
    code, out = run(capsys, "series", "--kind", "S2DEG", "--k", "2", "--order", "4")
    assert code == 0 and json.loads(out.out) == ["0", "0", "1", "3", "7"]
    code, out = run(capsys, "series", "--kind", "DEG_DOWLING", "--m", "2", "--lambda", "1/2", "--order", "2")
    assert json.loads(out.out) == [["1"], ["1", "1"], ["1/2", "7/2", "1"]]


def test_mc(capsys):
    code, out = run(capsys, "mc", "--m", "2", "--r", "1", "--lambda", "1/2", "--alpha", "2",
                    "--n", "3", "--samples", "200000", "--seed", "42")
    payload = json.loads(out.out)
    assert set(payload) == {"mean", "std_error", "target_exact", "pass"}
    assert payload["target_exact"] == 53.0 and payload["pass"] is True and code == 0


def test_mc_failure_exit(capsys):
    code, out = run(capsys, "mc", "--alpha", "1", "--n", "2", "--samples", "1000", "--tolerance", "0")
    assert code == 1 and json.loads(out.out)["pass"] is False


def test_verify(capsys):
    code, out = run(capsys, "verify", "--check", "T8", "--nmax", "4", "--lambdas", "0,1/2,-1/3")
    assert code == 0
    rows = json.loads(out.out)
    assert rows[0]["check_id"] == "T8" and rows[0]["cells_failed"] == 0


def test_verify_markdown_to_file(tmp_path, capsys):
    target = tmp_path / "report.md"
    code, _ = run(capsys, "verify", "--check", "C3", "--nmax", "3", "--format", "markdown",
                  "--output", str(target))
    assert code == 0 and "| C3 |" in target.read_text()


def test_bad_arguments(capsys):
    code, out = run(capsys, "table", "--kind", "W_deg", "--m", "0")
    assert code == 2 and "m must be" in out.err
    with pytest.raises(SystemExit):
        main(["table", "--kind", "S2", "--lambda", "abc"])
