import csv
import io
import json
import math
import subprocess
import sys

import jsonschema
import pytest

from minda_radii.cli import load_schema, main

SCHEMA = load_schema()


def run(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    report = json.loads(out) if code == 0 else None
    if report is not None:
        jsonschema.validate(report, SCHEMA)
    return code, report


def test_radius_examples(capsys):
    _, rep = run(capsys, "radius", "--class", "sine", "--kind", "majorize-starlike")
    assert rep["results"]["root"] == pytest.approx(0.312478, abs=1e-6)
    assert rep["results"]["tolerance"] > 0
    _, rep = run(capsys, "radius", "--class", "janowski", "--D", "1", "--E", "-1", "--kind", "majorize-convex")
    assert rep["results"]["root"] == pytest.approx(1 / 3, abs=1e-10)
    _, rep = run(capsys, "radius", "--class", "booth", "--alpha", "0.5", "--kind", "booth")
    assert rep["results"]["root"] == pytest.approx(0.30698084, abs=1e-7)
    assert rep["results"]["capped"] is False


def test_radius_products(capsys):
    _, rep = run(capsys, "radius", "--class", "order-alpha", "--alpha", "0.5", "--class2", "order-alpha",
                 "--params2", "alpha=0.5", "--kind", "product-mbeta", "--target", "2")
    assert rep["results"]["root"] == pytest.approx(1 / 3, abs=1e-10)
    _, rep = run(capsys, "radius", "--class", "exp", "--class2", "exp", "--kind", "product-order", "--target", "0.3")
    assert rep["results"]["root"] == pytest.approx(math.log(2 / 1.3), abs=1e-10)


def test_bohr_examples(capsys):
    _, rep = run(capsys, "bohr", "--class", "order-alpha", "--alpha", "0")
    assert rep["results"]["bohr_radius"] == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-10)
    _, rep = run(capsys, "bohr", "--class", "cardioid")
    assert rep["results"]["root_r0"] == pytest.approx(0.349681, abs=1e-5)
    assert rep["results"]["bohr_radius"] == pytest.approx(1 / 3, abs=1e-12)
    _, rep = run(capsys, "bohr", "--class", "order-alpha", "--alpha", "0.5")
    assert rep["results"]["root_r0"] == pytest.approx(1 / 3, abs=1e-10)
    _, rep = run(capsys, "bohr", "--class", "janowski", "--D", "1", "--E", "0", "--janowski-special")
    assert rep["results"]["root"] == pytest.approx(0.2784645428, abs=1e-9)


def test_distort(capsys):
    _, rep = run(capsys, "distort", "--class", "cardioid", "--table1")
    rows = rep["results"]["rows"]
    assert [r["lower"] for r in rows[:4]] == pytest.approx([0.197923, 0.304374, 0.375966, 0.467769], abs=5e-5)
    _, rep = run(capsys, "distort", "--class", "cardioid", "--r", "0.3")
    assert rep["results"]["rows"][0]["theta1"] == pytest.approx(math.pi)
    _, rep = run(capsys, "distort", "--class", "janowski", "--D", "1", "--E", "-1", "--r", "0.5")
    row = rep["results"]["rows"][0]
    # f0 = z/(1-z)^2, f0' = (1+z)/(1-z)^3
    assert row["lower"] == pytest.approx(0.5 / 1.5**3, abs=1e-9)
    assert row["upper"] == pytest.approx(1.5 / 0.5**3, abs=1e-9)


def test_curve_outputs(capsys, tmp_path):
    out, svg = tmp_path / "c.csv", tmp_path / "c.svg"
    _, rep = run(capsys, "curve", "--class", "crescent", "--object", "psi-boundary", "--r", "1",
                 "--n", "4096", "--out", str(out), "--svg", str(svg))
    assert rep["results"]["min_modulus"] == pytest.approx(math.sqrt(2) - 1, abs=1e-9)
    rows = list(csv.DictReader(open(out)))
    assert len(rows) == 4096 and svg.read_text().startswith("<svg")
    _, rep = run(capsys, "curve", "--class", "cardioid", "--n", "4096")
    assert rep["results"]["min_modulus"] == pytest.approx(0.372412, abs=5e-6)
    assert len(rep["results"]["samples"]) == 4096


def test_curve_csv_on_stdout(capsys):
    assert main(["curve", "--class", "exp", "--n", "64"]) == 0
    cap = capsys.readouterr()
    rows = list(csv.reader(io.StringIO(cap.out)))
    assert rows[0] == ["theta", "x", "y"] and len(rows) == 65
    assert "curve: ok" in cap.err


def test_verify_examples(capsys):
    _, rep = run(capsys, "verify", "--probe", "sharpness", "--class", "janowski", "--D", "1", "--E", "-1", "--eps", "0.01")
    assert rep["status"] == "true"
    _, rep = run(capsys, "verify", "--probe", "bohr-coeff", "--class", "cardioid", "--r", "0.3333")
    assert rep["status"] == "true"
    _, rep = run(capsys, "verify", "--probe", "subordination", "--g", "f0(z/2)", "--class", "order-alpha", "--alpha", "0")
    assert rep["status"] == "true"
    _, rep = run(capsys, "verify", "--probe", "bulboaca", "--h", "3*z", "--class", "janowski", "--D", "1", "--E", "-1")
    assert rep["status"] == "false"


def test_inconclusive_exits_zero(capsys):
    code, rep = run(capsys, "verify", "--probe", "subordination", "--g", "f0(z)", "--r", "1", "--class", "cardioid")
    assert code == 0 and rep["status"] == "inconclusive"


def test_catalog(capsys):
    _, rep = run(capsys, "catalog")
    ids = [e["id"] for e in rep["results"]["entries"]]
    assert len(ids) == 15 and "sine" in ids
    _, rep = run(capsys, "catalog", "--id", "booth")
    entry = rep["results"]["entries"][0]
    assert entry["domain_radius"] == pytest.approx(math.sqrt(3) - 1, abs=1e-11)
    _, rep = run(capsys, "catalog", "--id", "sqrt_minus")
    assert rep["results"]["entries"][0]["orientation"] == "-"


@pytest.mark.parametrize("argv,code", [
    (["radius", "--class", "nosuch", "--kind", "majorize-starlike"], 2),
    (["radius", "--class", "janowski", "--D", "2", "--kind", "majorize-starlike"], 2),
    (["radius", "--class", "sqrt_minus", "--class2", "exp", "--kind", "product-mbeta", "--target", "1.5"], 2),
    (["radius", "--class", "sine", "--kind", "majorize-convex"], 2),
    (["curve", "--class", "exp", "--n", "32"], 2),
    (["curve", "--class", "exp", "--r", "0"], 2),
    (["verify", "--probe", "subordination", "--g", "import os", "--class", "exp"], 2),
    (["bohr", "--class", "janowski", "--D", "0.5", "--E", "0", "--janowski-special"], 2),
    (["curve", "--class", "exp", "--out", "/nonexistent/dir/c.csv"], 4),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    err = capsys.readouterr().err
    assert err.strip()


def test_solver_failure_exit_code(capsys, monkeypatch):
    from minda_radii import cli
    from minda_radii.radius import RootNotFound

    def boom(*a, **k):
        raise RootNotFound("no root in (0,1]")

    monkeypatch.setattr(cli, "majorization_radius_starlike", boom)
    assert main(["radius", "--class", "sine", "--kind", "majorize-starlike"]) == 3
    assert "no root" in capsys.readouterr().err


def test_timing_flag(capsys):
    _, rep = run(capsys, "radius", "--class", "exp", "--kind", "majorize-starlike")
    assert rep["timing_ms"] is None
    code = main(["radius", "--class", "exp", "--kind", "majorize-starlike", "--json", "--timing"])
    assert code == 0 and json.loads(capsys.readouterr().out)["timing_ms"] > 0


def test_console_script_deterministic():
    argv = [sys.executable, "-m", "minda_radii.cli", "verify", "--probe", "bohr-coeff", "--class",
            "cardioid", "--samples", "20", "--json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
    rep = json.loads(a)
    jsonschema.validate(rep, SCHEMA)
    assert rep["inputs"]["seed"] == 20240601
