import json

import pytest

from secsing.cli import main
from secsing.exact import ExactMatrix

F2 = "x0^2*x1 + x2^3 + x3^3"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_text_and_exit(capsys):
    code, out, _ = run(capsys, "classify", "--k", "4", "--d", "3", "--m", "2", "--n", "3")
    assert code == 0
    assert out.startswith("NontrivialSingular: ")
    assert "B=10/3" in out


def test_classify_unsupported_exits_2(capsys):
    code, out, _ = run(capsys, "classify", "--k", "3", "--d", "4", "--m", "2", "--n", "4")
    assert code == 2 and out.startswith("Unsupported")


def test_domain_error_exits_1(capsys):
    code, _, err = run(capsys, "classify", "--k", "3", "--d", "4", "--m", "3", "--n", "4")
    assert code == 1 and err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["classify", "--k", "4"],
        ["classify", "--k", "four", "--d", "3", "--m", "2", "--n", "3"],
        ["cat", "--a", "1"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert "usage" in err


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_parse_error_exits_1(capsys):
    code, _, err = run(capsys, "cat", "--poly", "x0^3 + x1^2", "--a", "1")
    assert code == 1 and "not homogeneous" in err


def test_certify_json(capsys):
    code, out, _ = run(capsys, "certify", "--poly", F2, "--k", "4", "--strategy", "young:1,1,1", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "Smooth"
    assert rep["command"] == "certify"
    assert [s["op"] for s in rep["evidence"]][-1] == "verdict"


def test_certify_inconclusive_exits_2(capsys):
    code, out, _ = run(capsys, "certify", "--poly", "x0*x1*x2", "--k", "3")
    assert out.startswith("verdict: Inconclusive")
    assert code == 2


def test_bad_strategy_exits_1(capsys):
    code, _, err = run(capsys, "certify", "--poly", F2, "--k", "4", "--strategy", "sym:")
    assert code == 1 and err.startswith("error:")


def test_cat_dump_roundtrip(capsys, tmp_path):
    path = tmp_path / "m.txt"
    code, out, _ = run(capsys, "cat", "--poly", F2, "--a", "1", "--dump", str(path))
    assert code == 0 and "rank 4" in out
    m = ExactMatrix.from_text(path.read_text())
    assert m.shape == (10, 4)


def test_dump_to_stdout(capsys):
    code, out, _ = run(capsys, "young", "--poly", F2, "--dump", "-")
    assert code == 0
    header, rest = out.split("\n", 1)
    assert "rank 12" in header
    assert ExactMatrix.from_text(rest).shape == (24, 16)


def test_apolar_json(capsys):
    code, out, _ = run(capsys, "apolar", "--poly", "x0^3 + x1^3", "--degree", "2", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["dim"] == 1 and rep["basis"] == ["y0*y1"]


def test_young_partial_params_rejected(capsys):
    code, _, err = run(capsys, "young", "--poly", F2, "--d1", "1")
    assert code == 1 and "--d1" in err


def test_normal_forms_listing(capsys):
    code, out, _ = run(capsys, "normal-forms", "--d", "3")
    assert code == 0 and out.count(" = ") == 5


def test_normal_forms_verify(capsys):
    code, out, _ = run(capsys, "normal-forms", "--d", "5", "--verify")
    assert code == 0
    assert out.strip().splitlines()[-1] == "4/4 conormal dims = 40: PASS"


def test_tangent_span_verdict(capsys):
    code, out, _ = run(capsys, "tangent-span", "--family", "1,t,0,0", "--d", "4", "--point", "0,0,1,0", "--k", "4")
    assert code == 0
    assert "total: affine 17, projective 16" in out
    assert out.rstrip().endswith("verdict Singular")


def test_tangent_span_point_mismatch(capsys):
    code, _, err = run(capsys, "tangent-span", "--family", "1,t,0,0", "--d", "4", "--point", "0,1,0")
    assert code == 1 and "coordinates" in err


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run(
        [sys.executable, "-m", "secsing", "classify", "--k", "4", "--d", "3", "--m", "2", "--n", "3", "--json"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert json.loads(r.stdout)["tag"] == "NontrivialSingular"
