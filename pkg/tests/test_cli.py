import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest
from numpy.testing import assert_allclose

from colhopf.cli import main, parse_complex, read_report, write_report
from colhopf.verify import CheckReport, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def matrix_from_json(text):
    doc = json.loads(text)
    n = doc["dimension"]
    return doc, np.array([complex(re, im) for re, im in doc["entries"]]).reshape(n, n)


def matrix_from_csv(text):
    rows = list(csv.DictReader(io.StringIO(text)))
    n = int(max(int(r["row"]) for r in rows)) + 1
    m = np.zeros((n, n), dtype=complex)
    for r in rows:
        m[int(r["row"]), int(r["col"])] = complex(float(r["re"]), float(r["im"]))
    return m


@pytest.mark.parametrize("text,value", [("2", 2), ("-0.3", -0.3), ("1+2i", 1 + 2j), ("-1-0.5i", -1 - 0.5j),
                                        ("0.2j", 0.2j), (" 3 ", 3)])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


def test_list_algebras(capsys):
    code, out, _ = run(capsys, "list-algebras")
    assert code == 0
    assert len(out.strip().splitlines()) == 9
    code, out, _ = run(capsys, "list-algebras", "--format", "json")
    rows = json.loads(out)
    assert {r["id"] for r in rows} >= {"uq_sl2", "uz_iso31"}
    assert next(r for r in rows if r["id"] == "uz_iso31")["dimension"] == 5


def test_gl2_rmatrix(capsys):
    code, out, _ = run(capsys, "rmatrix", "--algebra", "uqs_gl2", "--param", "eta=0.6931", "s=1.2",
                       "--colour", "lambda=0.5", "mu=-0.3")
    assert code == 0
    doc, m = matrix_from_json(out)
    lam, mu, eta = 0.5, -0.3, 0.6931
    want = [np.exp(eta * e) for e in (1 - lam + mu, lam + mu, -lam - mu, 1 + lam - mu)]
    assert_allclose(np.diag(m), want, rtol=1e-12)
    assert doc["colouring"] == "gl1" and doc["dimension"] == 4
    assert doc["colours"] == {"lambda": [[0.5, 0.0]], "mu": [[-0.3, 0.0]]}


@pytest.mark.parametrize("argv", [
    ("--algebra", "uq_sl2", "--colouring", "s2", "--colour", "lambda=1", "mu=-1"),
    ("--algebra", "uq_sl2", "--colouring", "semidirect", "--colour", "lambda=0.5+0.5i,-1", "mu=2,1"),
    ("--algebra", "uz_h4_std", "--colour", "lambda1=0.5", "lambda2=2", "mu=1+1i,0.7"),
    ("--algebra", "uz_iso31", "--param", "z=0.2", "--colour", "lambda=0.5,-1.5"),
    ("--algebra", "uh_sl2", "--convention", "leg-parameter", "--colour", "lambda=1.5"),
])
def test_json_and_csv_agree(capsys, tmp_path, argv):
    code, out, _ = run(capsys, "rmatrix", *argv)
    assert code == 0
    _, from_json = matrix_from_json(out)
    path = tmp_path / "r.csv"
    code, out, _ = run(capsys, "rmatrix", *argv, "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    from_csv = matrix_from_csv(path.read_text())
    assert np.array_equal(from_json, from_csv)


def test_pair_colour_forms_are_equivalent(capsys):
    _, a, _ = run(capsys, "rmatrix", "--algebra", "uz_h4_std", "--colour", "lambda=0.5,2")
    _, b, _ = run(capsys, "rmatrix", "--algebra", "uz_h4_std", "--colour", "lambda1=0.5", "lambda2=2")
    assert a == b


@pytest.mark.parametrize("argv", [
    ("rmatrix", "--algebra", "bogus"),
    ("rmatrix",),
    ("rmatrix", "--algebra", "uq_sl2", "--param", "z=0.3"),
    ("rmatrix", "--algebra", "uq_sl2", "--param", "q"),
    ("rmatrix", "--algebra", "uq_sl2", "--param", "eta=abc"),
    ("rmatrix", "--algebra", "uq_sl2", "--param", "eta=0"),
    ("rmatrix", "--algebra", "uq_sl2", "--colouring", "s2", "--colour", "lambda=0.5"),
    ("rmatrix", "--algebra", "uq_sl2", "--colouring", "gl1", "--colour", "lambda=0"),
    ("rmatrix", "--algebra", "uq_sl2", "--colour", "kappa=2"),
    ("rmatrix", "--algebra", "uw_e3", "--colour", "lambda=1+1i"),
    ("rmatrix", "--algebra", "uz_h4_std", "--colour", "lambda=1,2,3"),
    ("rmatrix", "--algebra", "uq_sl2", "--colouring", "nope"),
    ("verify", "--algebra", "bogus", "--samples", "1"),
    ("verify", "--samples", "-1"),
    ("verify", "--tol", "0"),
    ("--frobnicate",),
    (),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_malformed_flag_prints_usage(capsys):
    code, _, err = run(capsys, "rmatrix", "--algebra")
    assert code == 2 and "usage:" in err


def test_verify_single_family(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--algebra", "uq_sl2", "--colouring", "s2", "--report", str(path))
    assert code == 0 and out.strip().endswith("PASS")
    doc = read_report(str(path))
    assert list(doc)[0] == "summary"
    assert doc["summary"]["passed"] and doc["seed"] == 42


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--algebra", "uq_sl2", "--colouring", "gl1", "--samples", "1",
                       "--tol", "1e-300")
    assert code == 1 and out.strip().endswith("FAIL")


def test_report_round_trip_is_exact(tmp_path):
    report = run_suite("uqs_gl2", samples=2, seed=7)
    path = tmp_path / "report.json"
    write_report(report, str(path))
    doc = read_report(str(path))
    assert [e["residual"] for e in doc["entries"]] == [e.residual for e in report.entries]
    assert doc["summary"]["max_residual"] == max(e.residual for e in report.entries)
    assert doc["summary"]["max_residual"] == max(e["residual"] for e in doc["entries"])


def test_empty_report(tmp_path):
    path = tmp_path / "empty.json"
    write_report(CheckReport(seed=123, tol=1e-9, samples=0, convention="paper-fixed"), str(path))
    doc = read_report(str(path))
    assert doc["entries"] == [] and doc["seed"] == 123 and doc["summary"]["entries"] == 0


def test_unwritable_report_path(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--algebra", "uq_sl2", "--colouring", "s2", "--samples", "0",
                       "--report", str(tmp_path / "missing" / "r.json"))
    assert code == 2 and "error" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "colhopf", "rmatrix", "--algebra", "bogus"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "colhopf", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip()
