import json
import subprocess
import sys

import pytest

from legendrian import curve_io
from legendrian.cli import run_command
from legendrian.curves import bryant_curve
from legendrian.exact import RationalFunction as R

z = R.z()


def run(capsys, *argv):
    code = run_command(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def curve_file(tmp_path):
    path = tmp_path / "b.json"
    curve_io.save(bryant_curve(z**2, z**3), path)
    return str(path)


def test_bryant_and_verify(capsys, tmp_path):
    path = str(tmp_path / "c.json")
    code, out, _ = run(capsys, "bryant", "--f", "z^2", "--g", "(z + 1/2)^2", "-o", path)
    assert code == 0 and out == ""
    assert curve_io.load(path) == bryant_curve(z**2, (z + R.const(1) / 2) ** 2)
    code, out, _ = run(capsys, "verify", path)
    assert code == 0 and json.loads(out)["legendrian"] is True


def test_verify_refutes(capsys, tmp_path):
    path = tmp_path / "cubic.json"
    path.write_text(json.dumps({"components": [[["1", "0"]], [["0", "0"], ["1", "0"]],
                                               [["0", "0"], ["0", "0"], ["1", "0"]],
                                               [["0", "0"], ["0", "0"], ["0", "0"], ["1", "0"]]]}))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert json.loads(out) == {"legendrian": False, "pullback": "z^4 + 1"}


def test_fcurve_and_residues(capsys):
    code, out, _ = run(capsys, "fcurve", "--h=-2*z", "--g", "z")
    assert code == 0 and json.loads(out)["provenance"]["kind"] == "fcurve"
    code, _, err = run(capsys, "fcurve", "--h", "1/z", "--g", "z")
    assert code == 1
    assert err.strip() == "ExactnessViolation: {pole 0, residue 1}, {pole ∞, residue -1}"
    code, out, _ = run(capsys, "residues", "--h", "1/z", "--g", "z")
    assert code == 1 and json.loads(out)["passed"] is False
    code, out, _ = run(capsys, "residues", "--h", "z + 1/z", "--g", "z + 1/z")
    assert code == 0


def test_exceptional_and_invert(capsys, tmp_path, curve_file):
    path = str(tmp_path / "l.json")
    assert run(capsys, "exceptional", "--a", "1", "--b", "2", "-o", path)[0] == 0
    code, _, err = run(capsys, "invert", path)
    assert code == 1 and err.startswith("NotRepresentable:")
    code, out, _ = run(capsys, "invert", curve_file)
    assert code == 0 and json.loads(out) == {"f": "z^2", "g": "z^3"}


def test_analyze(capsys, curve_file):
    code, out, _ = run(capsys, "analyze", curve_file)
    doc = json.loads(out)
    assert code == 0
    assert doc["orders"]["0"] == [1, 3, 4, 0]
    assert doc["immersed"] is True


def test_chart(capsys, curve_file):
    code, out, _ = run(capsys, "chart", "--a1", "1", "--a2", "0", "--a3", "i", "--apply", curve_file)
    assert code == 0
    assert json.loads(out)["provenance"]["kind"] == "chart"


def test_project_report_radius(capsys, curve_file, tmp_path):
    obj = str(tmp_path / "m.obj")
    code, out, _ = run(capsys, "project", curve_file, "--domain", "rect:0.3,0.5,0.2,0.4", "--h", "0.02", "-o", obj)
    assert code == 0 and json.loads(out)["format"] == "obj"
    assert open(obj).read().startswith("v ")
    code, out, _ = run(capsys, "report", curve_file, "--domain", "rect:0.3,0.5,0.2,0.4", "--h", "0.002")
    doc = json.loads(out)
    assert code == 0 and doc["spin_sign"] == 1
    assert 1.5 < doc["rates"]["minimality_max"] < 2.5
    code, out, _ = run(capsys, "radius", curve_file, "--domain", "rect:0.3,0.5,0.2,0.4", "--h", "0.01", "--center", "0.4,0.3")
    assert code == 0 and json.loads(out)["estimate"] > 0


def test_precision_env(capsys, curve_file, monkeypatch):
    monkeypatch.setenv("PRECISION_BITS", "abc")
    code, _, err = run(capsys, "report", curve_file, "--domain", "rect:0.3,0.5,0.2,0.4", "--h", "0.02")
    assert code == 1 and err.startswith("InvalidInput:")


def test_usage_and_domain_errors(capsys, curve_file):
    assert run(capsys, "bryant", "--f", "z")[0] == 2
    code, _, err = run(capsys, "bryant", "--f", "z", "--g", "2i")
    assert code == 1 and err.startswith("ParseError:")
    code, _, err = run(capsys, "bryant", "--f", "z", "--g", "3")
    assert code == 1 and err.startswith("ConstantG:")
    code, _, err = run(capsys, "verify", "/nonexistent.json")
    assert code == 1
    code, _, err = run(capsys, "radius", curve_file, "--domain", "rect:0.3,0.5,0.2,0.4", "--h", "0.01", "--center", "5,5")
    assert code == 1 and err.startswith("InvalidInput:")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "legendrian", "residues", "--h", "z", "--g", "z"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["passed"] is True
