import json
import subprocess
import sys

import pytest

from dimcalc.cli import main
from dimcalc.dsl import parse_problem
from dimcalc.report import build_report, emit_json

from conftest import GALLERY, ROOT

GOLDEN = ROOT / "tests" / "golden"
PROBLEMS = sorted(p.stem for p in GALLERY.glob("*.dim"))


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "dimcalc", *args], capture_output=True, text=True, encoding="utf-8"
    )


def test_every_gallery_problem_has_a_golden():
    assert PROBLEMS and PROBLEMS == sorted(p.stem for p in GOLDEN.glob("*.json"))


@pytest.mark.parametrize("name", PROBLEMS)
def test_golden_reports(name, capsys):
    code = main(["analyze", str(GALLERY / f"{name}.dim"), "--json"])
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{name}.json").read_text(encoding="utf-8")
    assert code == (0 if json.loads(out)["models"] else 2)


def test_json_is_byte_stable():
    problem = parse_problem((GALLERY / "matrix3.dim").read_text())
    assert emit_json(build_report(problem)) == emit_json(build_report(problem))
    first = run("analyze", str(GALLERY / "kepler.dim"), "--json")
    second = run("analyze", str(GALLERY / "kepler.dim"), "--json")
    assert first.stdout == second.stdout and first.returncode == 0


def test_json_schema():
    report = json.loads(run("analyze", str(GALLERY / "circle.dim"), "--json").stdout)
    assert list(report) == ["bases", "variables", "dependent", "rank", "models", "diagnostics"]
    (model,) = report["models"]
    assert list(model) == [
        "independents", "dependents", "k", "k_j", "rows", "pi_groups",
        "relation_power", "relation_root", "relation_scalar",
    ]
    assert model["relation_power"] == "a^1 = d^2 * Phi()"


def test_empty_model_report():
    res = run("analyze", str(GALLERY / "kepler_no_g.dim"), "--json")
    assert res.returncode == 2
    report = json.loads(res.stdout)
    assert report["models"] == []
    assert "no covariant representation" in report["diagnostics"][0]


def test_text_report():
    res = run("analyze", str(GALLERY / "pendulum.dim"))
    assert res.returncode == 0
    assert "t² = l·g⁻¹·Φ(theta)" in res.stdout
    assert "[t]^2 = [l]^1 [m]^0 [g]^-1" in res.stdout
    assert "t does not depend on m" in res.stdout
    res = run("analyze", str(GALLERY / "matrix1.dim"))
    assert res.returncode == 2 and "no covariant representation" in res.stdout


def test_check_command():
    p = str(GALLERY / "pendulum.dim")
    res = run("check", p, "--eq", "t^2 = l/g")
    assert res.returncode == 0 and res.stdout.strip().endswith("homogeneous")
    res = run("check", p, "--eq", "t = l + m")
    assert res.returncode == 2 and "2 violations" in res.stdout
    res = run("check", p, "--eq", "t = l + m", "--json")
    data = json.loads(res.stdout)
    assert data["homogeneous"] is False and len(data["violations"]) == 2
    res = run("check", p, "--eq", "t = q")
    assert res.returncode == 1 and "UnknownVariable" in res.stderr


def test_rank_command():
    assert run("rank", str(GALLERY / "pendulum.dim")).stdout == "3\n"
    assert run("rank", str(GALLERY / "matrix3.dim")).stdout == "2\n"


def test_convert_command():
    units = str(GALLERY / "si.units")
    res = run("convert", "--units", units, "200 cm", "--to", "m")
    assert res.returncode == 0 and res.stdout.split()[:2] == ["2", "m"]
    assert run("convert", "--units", units, "1 m", "--to", "m").stdout.split()[0] == "1"
    res = run("convert", "--units", units, "1 m", "--to", "kg")
    assert res.returncode == 1 and "NotEquidimensional" in res.stderr
    res = run("convert", "--units", units, "1 m", "--to", "cm/s")
    assert res.returncode == 1
    res = run("convert", "--units", units, "1 N", "--to", "kg*m/s^2")
    assert res.stdout.startswith("1 kg*m*s^-2")
    res = run("convert", "--units", units, "1 km", "--to", "mm")
    assert res.stdout.split()[0] == "1000000"
    res = run("convert", "--units", units, "1 cm", "--to", "km")
    assert res.stdout.split()[0] == "1/100000" and "(~1e-05)" in res.stdout


def test_errors_exit_1(tmp_path):
    bad = tmp_path / "bad.dim"
    bad.write_text("base L\nvar x : Q\ndependent x\n")
    res = run("analyze", str(bad))
    assert res.returncode == 1
    assert "line 2, column 9" in res.stderr
    res = run("analyze", str(tmp_path / "missing.dim"))
    assert res.returncode == 1


def test_console_script_help():
    res = run("--help")
    assert res.returncode == 0
    for cmd in ("analyze", "check", "rank", "convert"):
        assert cmd in res.stdout
