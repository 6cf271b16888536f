import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from alia import generators as gen
from alia.cli import example_text
from alia.core import LinearMap
from alia.fileformat import Bundle, FileError, emit_structure, fmt_rational, parse_structure
from alia.fixtures import fix_a4, fix_d4, fix_d5, fix_n4, fix_nl, fix_r12, fix_r23, fix_s4, fix_w4


def _err(text, bindings=None):
    with pytest.raises(FileError) as exc:
        parse_structure(text, bindings)
    return exc.value


def test_bialgebra_example_file():
    b = parse_structure(example_text("ex217"))
    assert (b.algebra, b.coalgebra, b.maps["N"], b.maps["S"]) == (fix_a4(), fix_d4(), fix_n4(), fix_s4())


def test_parameterized_example_file():
    b = parse_structure(example_text("ex511"), {"lambda": 2})
    assert b.forms["omega"] == fix_w4(2)
    assert b.maps["N"] == fix_nl(2)
    assert b.coalgebra == fix_d5() and b.tensors["r"] == fix_r23()
    assert b.degree == 1
    half = parse_structure(example_text("ex511"), {"lambda": Fraction(1, 2)})
    assert half.forms["omega"] == fix_w4(Fraction(1, 2))


def test_triangular_example_file():
    b = parse_structure(example_text("ex314"))
    assert b.tensors["r"] == fix_r12()


def test_index_out_of_range():
    e = _err("dim 4\nbracket 5 1 = 1*1\n")
    assert e.code == "INDEX_OUT_OF_RANGE"
    assert _err("dim 2\nmap N = 1*(3<-1)\n").code == "INDEX_OUT_OF_RANGE"


def test_unbound_and_undeclared_params():
    assert _err(example_text("ex511")).code == "UNBOUND_PARAM"
    assert _err("dim 2\nmap N = mu*(1<-1)\n").code == "UNBOUND_PARAM"


def test_unknown_section():
    assert _err("dim 2\nproduct 1 1 = 1*1\n").code == "UNKNOWN_SECTION"


@pytest.mark.parametrize("text, line, col", [
    ("dim 2\nbracket 1 1 = 1*\n", 2, 17),
    ("dim 2\nbracket 1 1 1*1\n", 2, 16),
    ("dim two\n", 1, 4),
    ("dim 2\nmap N = 2*(1<2)\n", 2, 11),
    ("dim 2\ncomul 1 = (1,1\n", 2, 11),
    ("bracket 1 1 = 1*1\n", 1, 1),
])
def test_syntax_errors_carry_position(text, line, col):
    e = _err(text)
    assert e.code == "SYNTAX"
    assert str(e).startswith(f"SYNTAX({line},{col})")


def test_coefficient_expressions():
    b = parse_structure("dim 2\nparam a\nparam b\nmap M = (a+1)*b/2*(1<-1) - a^2*(2<-2) + (1<-2)\n",
                        {"a": 3, "b": Fraction(1, 3)})
    assert b.maps["M"].m.tolist() == [[Fraction(2, 3), 1], [0, -9]]
    assert b.degree == 2
    b = parse_structure("dim 2\ntensor r = -(1,2) + 3/4*(2,1) # note\n")
    assert b.tensors["r"].t.tolist() == [[0, -1], [Fraction(3, 4), 0]]
    assert _err("dim 1\nparam a\nmap M = 1/a*(1<-1)\n", {"a": 1}).code == "SYNTAX"
    assert _err("dim 1\nmap M = 1/0*(1<-1)\n").code == "SYNTAX"


def test_repeated_entries_accumulate():
    b = parse_structure("dim 1\nbracket 1 1 = 1*1\nbracket 1 1 = 2*1\n")
    assert b.algebra.c[0, 0, 0] == 3


def test_comments_and_blank_lines():
    b = parse_structure("# header\n\ndim 1   # trailing\n  bracket 1 1 = 1*1\n")
    assert b.algebra.c[0, 0, 0] == 1


def test_emitter_is_canonical():
    b = parse_structure(example_text("ex511"), {"lambda": Fraction(-3, 2)})
    text = emit_structure(b)
    assert "form omega = -3/2*(2,4) + 3/2*(4,2)" in text
    assert "map N = 3/2*(3<-4)" in text
    assert emit_structure(parse_structure(text)) == text


def test_fmt_rational():
    assert fmt_rational(Fraction(6, -4)) == "-3/2"
    assert fmt_rational(4) == "4"


def _random_bundle(rng):
    n = rng.randint(1, 3)
    return Bundle(
        n, algebra=gen.algebra(rng, n), coalgebra=gen.coalgebra(rng, n),
        maps={"N": gen.linear_map(rng, n), "alpha": gen.linear_map(rng, n, density=0)},
        tensors={"r": gen.two_tensor(rng, n)},
        forms={"omega": gen.bilinear_form(rng, n, skew=True)},
    )


@given(st.integers(0, 2 ** 32 - 1))
def test_round_trip(seed):
    b = _random_bundle(random.Random(seed))
    assert parse_structure(emit_structure(b)) == b


def test_empty_dimension():
    b = parse_structure("dim 0\n")
    assert b.dim == 0 and parse_structure(emit_structure(b)) == b
