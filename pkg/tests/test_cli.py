import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from supercartan.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def spec(name):
    return GOLDEN / f"{name}.spec"


def test_reflect_sl12():
    code, out, _ = run("reflect", spec("sl12"), 1)
    assert code == 0
    assert "parity: 10\nentries:\n0 1\n-1 2" in out


def test_reflect_twice_is_identity():
    code, out, _ = run("--format", "json", "reflect", spec("sl12"), 1, 1)
    data = json.loads(out)
    assert code == 0
    assert data["R"] == [[1, 0], [0, 1]]
    assert data["spec"]["entries"] == [["0", "1"], ["1", "0"]]


def test_reflect_singular_reported():
    _, out, _ = run("reflect", spec("d210"), 2)
    assert "singular" in out


def test_reflect_even_vertex_is_data_error():
    code, _, err = run("reflect", spec("osp32"), 2)
    assert code == 65 and "not isotropic" in err


def test_orbit(tmp_path):
    code, out, _ = run("orbit", spec("sl12"), "--dot", tmp_path)
    assert code == 0 and "status: complete" in out and "matrices: 2" in out
    assert (tmp_path / "orbit.dot").exists()
    assert (tmp_path / "node1.dot").exists() and (tmp_path / "node2.dot").exists()


def test_orbit_truncated():
    code, out, _ = run("--max-depth", "3", "orbit", spec("s12_half"))
    assert code == 2 and "truncated(depth)" in out


def test_classify_yes():
    code, out, _ = run("classify", spec("sl12"))
    assert code == 0
    assert "regular_kac_moody: yes" in out


def test_classify_no():
    code, out, _ = run("--format", "json", "classify", spec("d210"))
    data = json.loads(out)
    assert code == 1
    assert data["admissible"]["answer"] == "yes"
    assert data["regular_kac_moody"]["answer"] == "no"
    assert data["gcm"] is False


def test_classify_truncated():
    code, _, _ = run("--max-depth", "4", "classify", spec("s12_half"))
    assert code == 2


def test_identify():
    assert run("identify", spec("s12_half"))[1].strip() == "S12(1/2)"
    assert run("identify", spec("d210"))[1].strip() == "D210"
    assert run("identify", spec("qminus"))[1].strip() == "Qminus(-1, -1, -2)"


def test_qsolve():
    code, out, _ = run("--format", "json", "qsolve", -1, -1, -2)
    data = json.loads(out)
    assert code == 0 and data["irrational"] is True
    assert data["minus"]["residuals"] == ["0", "0", "0"]


def test_qsolve_invalid():
    code, _, err = run("qsolve", -1, -1, -1)
    assert code == 65 and err


def test_dims():
    code, out, _ = run("dims", spec("sl12"), 4)
    assert code == 0 and "total dimension: 8" in out


def test_growth():
    assert run("growth", spec("qminus"))[0] == 1
    code, out, _ = run("growth", spec("q2_3"), "--N", 8)
    assert code == 0 and "consistent_with_finite_growth" in out


def test_scan2():
    code, out, _ = run("--format", "json", "scan2", -4, -1)
    data = json.loads(out)
    assert code == 0
    assert [r["a"] for r in data["scan"] if r["positive"]] == [-2, -1]


def test_dot():
    code, out, _ = run("dot", spec("sl2"))
    assert code == 0 and "digraph" in out and "->" not in out


@pytest.mark.parametrize("argv", [[], ["nope"], ["reflect"], ["scan2", "0", "-1"], ["reflect", "x", "1", "--bogus"],
                                  ["--max-depth", "-1", "dot", "x"]])
def test_usage_errors(argv):
    assert run(*argv)[0] == 64


def test_vertex_out_of_range():
    assert run("reflect", spec("sl12"), 3)[0] == 64


def test_missing_file():
    code, _, err = run("classify", "/nonexistent/x.spec")
    assert code == 65 and "cannot read" in err


def test_malformed_file(tmp_path):
    p = tmp_path / "bad.spec"
    p.write_text("cartan-spec v1\nn: 2\nparity: 1\nentries:\n0 1\n1 0\n")
    assert run("classify", p)[0] == 65


def test_deterministic():
    assert run("orbit", spec("d210"), "--allow-singular") == run("orbit", spec("d210"), "--allow-singular")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "supercartan", "dims", str(spec("sl2")), "3"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "total dimension: 3" in r.stdout
