import json
import os

import pytest

from alia.cli import LAWS, example_names, main
from alia.core import LawId
from alia.fileformat import load
from alia.fixtures import fix_nl


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_every_law_is_wired():
    assert set(LAWS) == {law.value for law in LawId}


def test_bialgebra_example_passes(capsys):
    code, out, _ = run(capsys, "check", "examples/ex217.alia", "--law", "nijenhuis-bialgebra")
    assert code == 0
    assert "nijenhuis-bialgebra: PASS" in out and out.endswith("exit 0\n")


def test_identity_override_still_passes(capsys):
    # S = identity satisfies every item here; the zero map is the failing control
    code, _, _ = run(capsys, "check", "examples/ex217.alia", "--law", "nijenhuis-bialgebra",
                     "--override", "S=identity")
    assert code == 0


def test_zero_override_is_localized(capsys):
    code, out, _ = run(capsys, "check", "examples/ex217.alia", "--law", "nijenhuis-bialgebra",
                       "--override", "S=zero")
    assert code == 1
    assert "nijenhuis-bialgebra: FAIL (2 nonzero)" in out
    assert "coadjoint-admissible/first (3,1,1) = -1" in out
    assert "coadjoint-admissible/first (4,3,1) = -1" in out


def test_term_override(capsys):
    code, out, _ = run(capsys, "check", "examples/ex217.alia", "--law", "adjoint-admissible",
                       "--override", "S=(1<-1)")
    assert code == 1 and "adjoint-admissible: FAIL" in out


def test_missing_file(capsys):
    code, out, _ = run(capsys, "check", "missing.alia", "--law", "left-alia")
    assert code == 2 and "left-alia: ERROR IO_ERROR" in out


def test_several_files_and_laws(capsys):
    code, out, _ = run(capsys, "check", "examples/ex314.alia", "examples/sl2.alia",
                       "--law", "left-alia", "--law", "nijenhuis")
    assert code == 2  # sl2 carries no N
    assert out.count("left-alia: PASS") == 2
    assert "nijenhuis-algebra: ERROR MISSING_DATA" in out


def test_delta_r_construction(capsys, tmp_path):
    out_path = str(tmp_path / "out.alia")
    code, out, _ = run(capsys, "construct", "delta-r", "examples/ex314.alia", "-o", out_path)
    assert code == 0 and out == f"wrote {out_path}\n"
    for law in ("left-alia-coalgebra", "ybe", "s-admissible", "r-nijenhuis-coproduct"):
        assert run(capsys, "check", out_path, "--law", law)[0] == 0


def test_nijenhuis_from_symplectic(capsys, tmp_path):
    out_path = str(tmp_path / "n.alia")
    code, _, _ = run(capsys, "construct", "nijenhuis-from-symplectic", "examples/ex511.alia",
                     "--set", "lambda=3", "-o", out_path)
    assert code == 0
    assert "map N = -3*(3<-4)\n" in open(out_path).read()
    assert load(out_path).maps["N"] == fix_nl(3)


def test_double_construction(capsys, tmp_path):
    out_path = str(tmp_path / "d.alia")
    assert run(capsys, "construct", "double", "examples/ex217.alia", "-o", out_path)[0] == 0
    b = load(out_path)
    assert b.dim == 8
    code, _, _ = run(capsys, "check", out_path, "--law", "quadratic", "--law", "nijenhuis",
                     "--law", "left-alia")
    assert code == 0


def test_double_of_unmatched_data_fails(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "double", "examples/ex217.alia",
                       "--override", "S=zero")
    assert code == 1
    assert "matched-pair: FAIL" in out and "HYPOTHESIS_FAILED" in out


def test_construct_to_stdout(capsys):
    code, out, _ = run(capsys, "construct", "bracket-omega", "examples/ex511.alia",
                       "--set", "lambda=1")
    assert code == 0
    assert "bracket 4 1 = -1*1" in out


def test_construct_hypothesis_failure(capsys):
    code, out, _ = run(capsys, "construct", "special", "examples/sl2.alia",
                       "--override", "f=identity", "--override", "g=zero")
    assert code == 1 and "FAIL" in out


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "examples/ex511.alia", "--law", "nijenhuis-algebra")
    assert code == 0
    assert "nijenhuis-algebra: CERTIFIED_ALL_PARAMS" in out
    assert "degree bound: 4" in out and "points: 0 1 2 3 5" in out


@pytest.mark.parametrize("argv", [
    ["check", "examples/ex217.alia", "--law", "no-such-law"],
    ["check", "examples/ex511.alia", "--law", "symplectic", "--set", "lambda=x"],
    ["check", "examples/ex511.alia", "--law", "symplectic", "--set", "lambda"],
    ["check", "examples/ex217.alia"],
    ["frobnicate"],
    ["construct", "special", "examples/ex314.alia"],
    ["examples", "nope"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_unbound_parameter_is_an_error(capsys):
    code, out, _ = run(capsys, "check", "examples/ex511.alia", "--law", "symplectic")
    assert code == 2 and "UNBOUND_PARAM" in out


def test_tsv_and_json(capsys):
    argv = ["check", "examples/ex217.alia", "--law", "nijenhuis-bialgebra", "--override", "S=zero"]
    code, out, _ = run(capsys, *argv, "--format", "tsv")
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 1 and rows[0][0] == "record"
    assert ["entry", "examples/ex217.alia", "", "nijenhuis-bialgebra", "FAIL",
            "coadjoint-admissible/first", "(3,1,1)", "-1"] in rows
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    assert doc["exit"] == 1
    entries = doc["runs"][0]["verdicts"][0]["entries"]
    assert {"part": "coadjoint-admissible/first", "index": [4, 3, 1], "value": "-1"} in entries


def test_certify_tsv(capsys):
    code, out, _ = run(capsys, "certify", "examples/ex511.alia", "--law", "symplectic",
                       "--format", "tsv")
    rows = [line.split("\t") for line in out.splitlines()]
    assert sum(r[0] == "point" for r in rows) == 5
    assert rows[-1][:5] == ["certification", "examples/ex511.alia", "", "symplectic",
                            "CERTIFIED_ALL_PARAMS"]


def test_output_file_and_plots(capsys, tmp_path):
    report, figs = tmp_path / "r.txt", tmp_path / "figs"
    code, out, _ = run(capsys, "check", "examples/ex217.alia", "examples/ex314.alia",
                       "--law", "left-alia", "--law", "nijenhuis", "-o", str(report),
                       "--plot", str(figs))
    assert code == 0 and out == ""
    assert report.read_text().startswith("alia check\n")
    assert sorted(os.listdir(figs)) == ["00-ex217.alia.png", "01-ex314.alia.png"]
    code, _, _ = run(capsys, "certify", "examples/ex511.alia", "--law", "symplectic",
                     "--plot", str(figs))
    assert "cert-00-ex511.alia-symplectic.png" in os.listdir(figs)
    assert (figs / "00-ex217.alia.png").read_bytes()[:4] == b"\x89PNG"


def test_examples_command(capsys, tmp_path):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    assert [line.split("\t")[0] for line in out.splitlines()] == example_names()
    code, out, _ = run(capsys, "examples", "ex217")
    assert "map S" in out
    code, out, _ = run(capsys, "examples", "--export", str(tmp_path))
    assert sorted(os.listdir(tmp_path)) == sorted(n + ".alia" for n in example_names())
    # exported copies load from disk
    assert load(str(tmp_path / "ex217.alia")).dim == 4
