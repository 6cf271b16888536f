from fractions import Fraction

import pytest

from alia.certify import (
    CERTIFIED, FAILED, LAW_FACTORS, SAMPLE_POINTS, certify, degree_bound, grid, sample_points,
)
from alia.cli import cmd_certify
from alia.core import LawId, Residual

# coefficient vanishes at 0, 1, 3 and 5 but not at 2
ONLY_AT_TWO = """dim 2
param lambda
bracket 1 2 = lambda*(lambda-1)*(lambda-3)*(lambda-5)*1
"""


def test_every_law_has_a_factor_count():
    assert set(LAW_FACTORS) == set(LawId)


def test_degree_bound():
    assert degree_bound(LawId.SYMPLECTIC, 1) == 4
    assert degree_bound(LawId.NIJENHUIS_ALGEBRA, 2) == 6
    assert degree_bound(LawId.COMMUTATIVE, 0) == 4


def test_sample_points():
    assert sample_points(4) == SAMPLE_POINTS
    assert sample_points(6) == (0, 1, 2, 3, 5, 7, 11)
    assert sample_points(2) == SAMPLE_POINTS


def test_grid_is_lexicographic_and_respects_fixed():
    g = grid(["a", "b"], (0, 1))
    assert [(x["a"], x["b"]) for x in g] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    g = grid(["a", "b"], (0, 1, 2), {"a": Fraction(7)})
    assert [(x["a"], x["b"]) for x in g] == [(7, 0), (7, 1), (7, 2)]


def test_certify_reports_first_witness():
    def evaluate(b):
        lam = b["x"]
        return Residual.from_parts(LawId.COMMUTATIVE, [("", [[lam * (lam - 3)]])])

    c = certify(evaluate, ["x"], "commutative")
    assert c.status == FAILED
    assert c.witness.binding == (("x", 1),)
    assert [r.residual.passed for r in c.runs] == [True, False, False, True, False]


def _write(tmp_path, text, name="s.alia"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_failure_at_a_single_point(tmp_path):
    rep = cmd_certify(_write(tmp_path, ONLY_AT_TWO), ["commutative"])
    (_, c), = rep.certifications
    assert c.status == FAILED
    assert c.witness.binding == (("lambda", 2),)
    assert rep.exit_code == 1
    text = rep.to_text()
    assert "witness: lambda=2" in text and "commutative: FAILED" in text


def test_parameterized_example_is_certified():
    rep = cmd_certify("examples/ex511.alia", ["symplectic", "nijenhuis-algebra", "co-ybe"])
    assert [c.status for _, c in rep.certifications] == [CERTIFIED] * 3
    assert all(c.bound == 4 and c.points == SAMPLE_POINTS for _, c in rep.certifications)
    assert rep.exit_code == 0


def test_quadratic_coefficients_raise_the_bound(tmp_path):
    text = "dim 1\nparam a\nmap N = a^2*(1<-1)\nbracket 1 1 = 1*1\n"
    rep = cmd_certify(_write(tmp_path, text), ["nijenhuis-algebra"])
    (_, c), = rep.certifications
    assert c.bound == 6 and len(c.points) == 7
    # a scalar multiple of the identity is always Nijenhuis
    assert c.status == CERTIFIED


def test_parameter_free_file_is_a_check():
    rep = cmd_certify("examples/ex217.alia", ["nijenhuis-bialgebra"])
    assert rep.command == "certify" and not rep.certifications
    assert rep.runs[0].verdicts[0].status == "PASS"


def test_two_parameters_and_fixed_values(tmp_path):
    text = "dim 2\nparam a\nparam b\nbracket 1 2 = a*1\nbracket 2 1 = b*1\n"
    path = _write(tmp_path, text)
    rep = cmd_certify(path, ["commutative"])
    (_, c), = rep.certifications
    assert len(c.runs) == 25 and c.status == FAILED
    assert c.witness.binding == (("a", 0), ("b", 1))
    assert sum(r.residual.passed for r in c.runs) == 5
    rep = cmd_certify(path, ["commutative"], fixed={"b": Fraction(2)})
    (_, c), = rep.certifications
    assert len(c.runs) == 5
    assert [dict(r.binding)["a"] for r in c.runs if r.residual.passed] == [2]


def test_evaluation_errors_are_usage_errors(tmp_path):
    from alia.cli import UsageError
    with pytest.raises(UsageError):
        cmd_certify(_write(tmp_path, "dim 2\nparam a\nbracket 1 1 = a*1\n"), ["nijenhuis-algebra"])


def test_override_degree_raises_the_bound():
    rep = cmd_certify("examples/ex511.alia", ["nijenhuis-algebra"],
                      overrides={"N": "lambda^2*(3<-4)"})
    (_, c), = rep.certifications
    assert c.bound == 6 and c.status == CERTIFIED
    rep = cmd_certify("examples/ex511.alia", ["nijenhuis-algebra"],
                      overrides={"N": "(lambda-2)*(1<-3)"})
    (_, c), = rep.certifications
    assert c.status == FAILED and c.witness.binding == (("lambda", 0),)
    assert [r.residual.passed for r in c.runs] == [False, False, True, False, False]
