from importlib.resources import files
import json
import subprocess
import sys

import jsonschema
import pytest

from wps.cli import main


def schema(name):
    return json.loads(files("wps").joinpath(f"schemas/{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_amatrix_csv(capsys):
    code, out, _ = run(capsys, "amatrix", "-w", "1,1,2", "-d", "4")
    assert code == 0
    assert out == "4,3,2,1,0,2,1,0,0\n0,1,2,3,4,0,1,2,0\n0,0,0,0,0,1,1,1,2\n"


def test_amatrix_json(capsys):
    out = run_json(capsys, "amatrix", "-w", "1,1,2", "-d", "4", "--format", "json")
    assert out["matrix"][2] == [0, 0, 0, 0, 0, 1, 1, 1, 2]


def test_cstar(capsys):
    out = run_json(capsys, "cstar", "-w", "1,2,3")
    assert out["holds"] is False
    assert out["witness"] == "x^2 direction on weight-2 variable"
    assert out["oracle_agrees"] is True
    out = run_json(capsys, "cstar", "-w", "2,2,3,3,5")
    assert out["holds"] is True and out["oracle_agrees"] is True


def test_stability(capsys):
    out = run_json(capsys, "stability", "-w", "1,1,2", "-d", "4", "-f", "x*y^3+x^2*z+y^2*z+z^2")
    assert out["torus_status"] == "Stable"
    assert out["certificate"]["kind"] == "QuasismoothCertificate"
    jsonschema.validate(out, schema("stability_report"))


def test_stability_batch_with_workers(capsys, tmp_path):
    polys = tmp_path / "polys.txt"
    polys.write_text("# sextics\nz^2 + x^6 + y^6\nz^2\nx^3*y^3 + z^2\n")
    serial = run_json(capsys, "stability", "-w", "1,1,3", "-d", "6", "--poly-file", str(polys))
    parallel = run_json(capsys, "stability", "-w", "1,1,3", "-d", "6", "--poly-file", str(polys), "--jobs", "2")
    assert serial == parallel
    assert [r["torus_status"] for r in serial] == ["Stable", "Unstable", "StrictlySemistable"]
    for r in serial:
        jsonschema.validate(r, schema("stability_report"))


def test_space_and_monomials(capsys):
    out = run_json(capsys, "space", "-w", "2,1,1", "-d", "4")
    assert out["weights"] == [1, 1, 2] and out["cartier"] is True and out["graded_dimension"] == 9
    out = run_json(capsys, "monomials", "-w", "1,1,2", "-d", "2")
    assert out["monomials"] == ["x^2", "x*y", "y^2", "z"]
    code, text, _ = run(capsys, "monomials", "-w", "1,1,2", "-d", "2", "--format", "csv")
    assert text.splitlines() == ["x,y,z", "2,0,0", "1,1,0", "0,2,0", "0,0,1"]


def test_names_option(capsys):
    out = run_json(capsys, "monomials", "-w", "1,1,2", "-d", "2", "--names", "a,b,c")
    assert out["monomials"][-1] == "c"


def test_aut_and_zmin(capsys):
    out = run_json(capsys, "aut", "-w", "1,1,2", "-d", "4")
    assert out["dim_aut"] == 8 and out["dim_unipotent"] == 3
    assert out["omega_min"] == [-2, 1] and out["N"] == 5
    out = run_json(capsys, "zmin", "-w", "1,1,2", "-d", "4", "-N", "7")
    assert out["basis"] == ["z^2"] and out["is_point"] is True and out["N"] == 7
    assert out["next_weight"] > -2


def test_polytope_and_newton(capsys, tmp_path):
    out = run_json(capsys, "polytope", "-w", "1,1,2", "-d", "4")
    assert sorted(out["vertices"]) == sorted([[[4, 1], [0, 1]], [[0, 1], [4, 1]], [[-1, 1], [-1, 1]]])
    assert out["origin"] == "Interior"
    jsonschema.validate(out["points"], schema("hpointset"))
    svg = tmp_path / "p.svg"
    code, _, _ = run(capsys, "polytope", "-w", "1,1,2", "-d", "4", "--format", "svg", "-o", str(svg))
    assert code == 0 and svg.read_text().startswith("<?xml")
    out = run_json(capsys, "newton", "-w", "1,1,2", "-d", "4", "-f", "x*y^3+x^2*z+y^2*z+z^2")
    assert out["origin"] == "Interior" and len(out["mu_certificate"]) == 4


def test_qs_fletcher_nabla(capsys):
    assert run_json(capsys, "qs", "-w", "1,1,2", "-d", "4", "-f", "x^4+y^4+z^2")["quasismooth"] is True
    out = run_json(capsys, "fletcher", "-w", "2,3", "-d", "7", "--samples", "5", "--seed", "3")
    assert out["general_quasismooth"] is False and out["failing_subset"] == ["y"]
    assert out["samples"] == {"seed": 3, "count": 5, "quasismooth": 0}
    assert run_json(capsys, "nabla", "-w", "1,1,2", "-d", "4", "-f", "x^4-2*x^2*z+z^2")["in_nabla_open"] is True


def test_fletcher_default_seed_is_reported(capsys):
    out = run_json(capsys, "fletcher", "-w", "1,1,2", "-d", "4", "--samples", "3")
    assert out["samples"]["seed"] == 0
    again = run_json(capsys, "fletcher", "-w", "1,1,2", "-d", "4", "--samples", "3")
    assert out == again


@pytest.mark.parametrize(
    "argv,code",
    [
        (["qs", "-w", "1,1,2", "-d", "4", "-f", "x^3"], "DegreeMismatch"),
        (["qs", "-w", "1,1,2", "-d", "4", "-f", "x^4 +* y"], "SyntaxError"),
        (["space", "-w", "2,2,4"], "NotWellFormed"),
        (["stability", "-w", "1,2,3", "-d", "5", "-f", "x^5"], "NotCartierDegree"),
        (["zmin", "-w", "1,1,2", "-d", "3"], "NotCartierDegree"),
        (["polytope", "-w", "1,1,3", "-d", "6", "--format", "svg", "-o", "/nonexistent/dir/x.svg"], "FileNotFoundError"),
        (["stability", "-w", "1,1,2", "-d", "4", "--poly-file", "/nonexistent.txt"], "FileNotFoundError"),
        (["newton", "-w", "1,1,1,2", "-d", "4", "-f", "w^4"], "UnknownVariable"),
        (["polytope", "-w", "1,1,1,2", "-d", "4", "--format", "svg"], "DimensionNot2"),
    ],
)
def test_domain_errors_exit_1(capsys, argv, code):
    rc, out, err = run(capsys, *argv)
    assert rc == 1 and out == ""
    payload = json.loads(err)
    jsonschema.validate(payload, schema("error"))
    assert payload["error"] == code


@pytest.mark.parametrize(
    "argv",
    [
        ["amatrix", "-w", "1,x", "-d", "4"],
        ["amatrix", "-w", "1", "-d", "4"],
        ["amatrix", "-w", "1,1,2"],
        ["frobnicate", "-w", "1,1"],
        ["qs", "-w", "1,1,2", "-d", "4"],
        ["qs", "-w", "1,1,2", "-d", "0", "-f", "x"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_format_mismatch_exit_2(capsys):
    rc, _, err = run(capsys, "cstar", "-w", "1,2,3", "--format", "csv")
    assert rc == 2 and json.loads(err)["error"] == "UnsupportedFormat"


def test_limit_steps_flag_and_env(capsys, monkeypatch):
    rc, _, err = run(capsys, "qs", "-w", "1,1,2", "-d", "4", "-f", "x*y^3+x^2*z+y^2*z+z^2", "--limit-steps", "1")
    assert rc == 1 and json.loads(err)["error"] == "ResourceLimit"
    monkeypatch.setenv("WPS_LIMIT_STEPS", "1")
    rc, _, err = run(capsys, "qs", "-w", "1,1,2", "-d", "4", "-f", "x*y^3+x^2*z+y^2*z+z^2")
    assert rc == 1 and json.loads(err)["error"] == "ResourceLimit"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wps.cli", "amatrix", "-w", "1,1", "-d", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1,0\n0,1\n"


def test_output_is_deterministic(capsys):
    argv = ["stability", "-w", "1,1,1,2", "-d", "4", "-f", "x0^4 + x1^4 + x2^4 + x3^2 + x0*x1*x3"]
    assert run_json(capsys, *argv) == run_json(capsys, *argv)
