import json
import subprocess
import sys

import jsonschema
import pytest

from pascalsums.cli import main
from pascalsums.verifier import REPORT_SCHEMA

MUTATED = "sum j [ C(n-2*j, k-j) ] == sum j [ (-1)^j * C(n+1-j, k+1+j) ] - eps(n-2*k)"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_row_formats(capsys):
    assert run(capsys, "row", "5", "--format", "csv")[:2] == (0, "1,5,10,10,5,1\n")
    assert run(capsys, "row", "0")[:2] == (0, "1\n")
    assert run(capsys, "row", "4", "--format", "json")[:2] == (0, '["1", "4", "6", "4", "1"]\n')


def test_row_csv_field_count_and_exact_digits(capsys):
    code, out, _ = run(capsys, "row", "120", "--format", "csv")
    fields = out.strip().split(",")
    assert code == 0 and len(fields) == 121
    assert all(f.isdigit() for f in fields)


def test_bad_row_argument(capsys):
    assert run(capsys, "row", "-1")[0] == 2
    assert run(capsys, "row", "x")[0] == 2
    assert run(capsys, "row", "3", "--format", "xml")[0] == 2


def test_eval(capsys):
    assert run(capsys, "eval", "sum j [ C(n-2*j, k-j) ]", "-n", "6", "-k", "2")[:2] == (0, "20\n")
    assert run(capsys, "eval", "pow2(n)", "-n", "5")[:2] == (0, "32\n")
    code, _, err = run(capsys, "eval", "sum j [ pow2(j) ]", "-n", "1", "-k", "0")
    assert code == 2 and "does not terminate" in err


def test_eval_errors(capsys):
    assert run(capsys, "eval", "C(n,?)", "-n", "1")[0] == 2
    assert run(capsys, "eval", "C(n,k)", "-n", "1")[0] == 2
    assert run(capsys, "eval", "sum j [ C(m, j) ]", "-n", "1")[0] == 2


def test_eval_identity(capsys):
    assert run(capsys, "eval", "C(n,k) == C(n,n-k)", "-n", "7", "-k", "3")[:2] == (0, "35 == 35\n")
    assert run(capsys, "eval", "C(n,k) == 0", "-n", "7", "-k", "3")[0] == 1


def test_verify_builtins(capsys):
    assert run(capsys, "verify", "eq2", "--n-max", "200")[0] == 0
    assert run(capsys, "verify", "eq1", "--n-max", "40")[0] == 0
    assert run(capsys, "verify", "eq3", "--n-max", "40")[0] == 0


def test_verify_file(tmp_path, capsys):
    src = tmp_path / "ids.txt"
    src.write_text("# comment\n\nC(n,k) == C(n,n-k)\nC(n,k) == C(n,k) + 1\n")
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", str(src), "--n-max", "5", "--report", str(report))
    assert code == 1
    payload = json.loads(report.read_text())
    assert [r["verdict"] for r in payload] == ["VERIFIED", "FAILED"]
    for r in payload:
        jsonschema.validate(r, REPORT_SCHEMA)
    assert out.splitlines()[0].startswith("VERIFIED")


def test_verify_errors(tmp_path, capsys):
    assert run(capsys, "verify", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("C(n,k) ==\n")
    assert run(capsys, "verify", str(bad))[0] == 2
    assert run(capsys, "verify", "theorem", "--n-max", "-3")[0] == 2
    assert run(capsys, "verify", "theorem", "--jobs", "0")[0] == 2
    assert run(capsys, "verify", "theorem", "--correction-table", "1,2")[0] == 2
    nonterm = tmp_path / "nt.txt"
    nonterm.write_text("sum j [ pow2(j) ] == 1\n")
    assert run(capsys, "verify", str(nonterm), "--n-max", "2")[0] == 2


def test_verify_formats(capsys):
    code, out, _ = run(capsys, "verify", "theorem", "--n-max", "10", "--format", "json")
    assert code == 0 and json.loads(out)[0]["cells_checked"] == 66
    code, out, _ = run(capsys, "verify", "theorem", "--n-max", "10", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("identity,") and ",10,66,VERIFIED,0," in lines[1]


def test_recurrence(capsys):
    assert run(capsys, "recurrence", "--target", "vertical", "--n-max", "100")[0] == 0
    assert run(capsys, "recurrence", "--target", "theorem-rhs", "--n-max", "100")[0] == 0
    code, out, _ = run(capsys, "recurrence", "--target", "vertical", "--n-max", "10",
                       "--no-line-correction", "--format", "json")
    first = json.loads(out)[0]["counterexamples"][0]
    assert code == 1 and (first["n"], first["k"]) == (2, 1)
    assert run(capsys, "recurrence", "--target", "nope")[0] == 2


def test_prove(tmp_path, capsys):
    assert run(capsys, "prove", "theorem", "--n-max", "60")[0] == 0
    code, _, err = run(capsys, "prove", "eq1", "--n-max", "100")
    assert code == 2 and "both n and k" in err
    src = tmp_path / "f"
    src.write_text(MUTATED + "\n")
    assert run(capsys, "prove", str(src), "--n-max", "50")[0] == 1


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--rows", "50", "--n-max", "20")
    assert code == 0
    assert "cells/second" in out and "VERIFIED" in out


def test_cache_env_var(monkeypatch, capsys):
    monkeypatch.setenv("PASCAL_CACHE_ROWS", "64")
    assert run(capsys, "row", "3")[0] == 0
    monkeypatch.setenv("PASCAL_CACHE_ROWS", "lots")
    assert run(capsys, "row", "3")[0] == 2


def test_no_arguments(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pascalsums", "row", "5", "--format", "csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "1,5,10,10,5,1\n"


@pytest.mark.parametrize("argv", [["eval", ""], ["eval", "((((("], ["eval", "sum"], ["eval", "C(1,2"]])
def test_malformed_input_never_crashes(capsys, argv):
    assert run(capsys, *argv)[0] == 2
