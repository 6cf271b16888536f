from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from alia.core import (
    AliaError, Algebra, BilinearForm, Coalgebra, DimensionError, LinearMap, Representation,
    Residual, LawId, TwoTensor, as_scalar, bracket_eval, contract, dual_map, dualize_algebra,
    dualize_coalgebra, flip, identity, inverse, left_right_operators, nullspace, parallel_map,
    qarray, rank, tensor_entries, zeros,
)
from alia.fixtures import fixture, fixture_names, fix_a4, fix_d4, fix_n4, fix_r12, fix_sl2
from alia import generators as gen

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10 ** 6)


@given(rationals, rationals, rationals)
def test_scalar_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a / b) * b == a


def test_as_scalar_normalizes():
    assert as_scalar(Fraction(6, 3)) == 2 and type(as_scalar(Fraction(6, 3))) is int
    assert as_scalar("-3/6") == Fraction(-1, 2)
    assert as_scalar(np.int64(4)) == 4
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)


def test_qarray_rejects_floats():
    with pytest.raises(TypeError):
        qarray([1.5])


def test_contract_demotes_integral_fractions():
    a = qarray([Fraction(1, 2), Fraction(3, 2)])
    out = contract("i,i->", a, qarray([2, 2]))
    assert out == 4 and type(out) is int


def test_shapes_are_validated():
    with pytest.raises(DimensionError):
        Algebra(zeros((2, 2, 3)))
    with pytest.raises(DimensionError):
        TwoTensor(zeros((2, 3)))
    with pytest.raises(DimensionError):
        Representation(zeros((2, 2, 2)), zeros((3, 2, 2)))


def test_values_are_immutable():
    A = fix_a4()
    with pytest.raises(ValueError):
        A.c[0, 0, 0] = 1


def test_flip():
    e12 = TwoTensor.from_terms(2, {(1, 2): 1})
    assert flip(e12) == TwoTensor.from_terms(2, {(2, 1): 1})
    r = fix_r12()
    assert flip(r) == TwoTensor(-r.t)


@given(st.integers(0, 10 ** 6))
def test_flip_involution(seed):
    import random
    t = gen.two_tensor(random.Random(seed), 3)
    assert flip(flip(t)) == t


def test_bracket_eval_on_a4():
    A = fix_a4()
    e = identity(4)
    assert list(bracket_eval(A, e[2], e[0])) == [1, 0, 0, 0]
    assert not bracket_eval(A, e[0], e[2]).any()
    assert list(bracket_eval(A, e[3], e[0])) == [0, 0, 1, 0]


def test_left_right_operators():
    R = left_right_operators(fix_a4())
    L3 = R.left(identity(4)[2])
    assert L3[0, 0] == 1 and sum(1 for v in L3.flat if v) == 1
    assert not left_right_operators(Algebra.zero(3)).ell.any()


def test_left_equals_right_on_sl2(rng):
    A = fix_sl2()
    R = left_right_operators(A)
    for _ in range(100):
        x = qarray([gen.scalar(rng) for _ in range(3)])
        y = qarray([gen.scalar(rng) for _ in range(3)])
        lhs = contract("ij,j->i", R.left(x), y)
        assert np.array_equal(lhs, contract("ij,j->i", R.right(y), x))
        assert np.array_equal(lhs, bracket_eval(A, x, y))


def test_dual_map(rng):
    assert dual_map(LinearMap.identity(3)) == LinearMap.identity(3)
    assert dual_map(fix_n4()).m.tolist() == fix_n4().m.T.tolist()
    for _ in range(20):
        M, P = gen.linear_map(rng, 3), gen.linear_map(rng, 3)
        a = qarray([gen.scalar(rng) for _ in range(3)])
        v = qarray([gen.scalar(rng) for _ in range(3)])
        assert contract("i,i->", dual_map(M)(a), v) == contract("i,i->", a, M(v))
        assert dual_map(M @ P) == dual_map(P) @ dual_map(M)


def test_dualize_coalgebra_of_d4():
    B = dualize_coalgebra(fix_d4())
    expected = Algebra.from_table(4, {(1, 2): {3: -1}, (3, 2): {4: -1}})
    assert B == expected
    assert dualize_coalgebra(Coalgebra.zero(3)) == Algebra.zero(3)


def test_dualize_round_trip(rng):
    for _ in range(10):
        A = gen.algebra(rng, 3)
        assert dualize_coalgebra(dualize_algebra(A)) == A


def test_exact_linear_algebra(rng):
    for _ in range(20):
        m = gen.matrix(rng, 3, density=0.8)
        k = rank(m)
        assert len(nullspace(m)) == 3 - k
        for v in nullspace(m):
            assert not contract("ij,j->i", m, v).any()
        if k == 3:
            assert np.array_equal(contract("ij,jk->ik", m, inverse(m)), identity(3))
    with pytest.raises(AliaError):
        inverse(zeros((2, 2)))


def test_residual_entries_are_nonzero_and_localized():
    res = Residual.from_parts(LawId.COMMUTATIVE, [("", qarray([[0, 2], [Fraction(1, 3), 0]]))])
    assert not res.passed
    assert [(e.index, e.value) for e in res.entries] == [((0, 1), 2), ((1, 0), Fraction(1, 3))]
    assert tensor_entries("x", zeros((0, 3))) == []


def test_parallel_map_preserves_order(monkeypatch):
    monkeypatch.setenv("ALIA_THREADS", "4")
    assert parallel_map(lambda x: x * x, range(20)) == [x * x for x in range(20)]


def test_fixture_catalog():
    assert fixture("FIX_A4") == fix_a4()
    assert fixture("FIX_W4", 2).w[1, 3] == 2
    with pytest.raises(AliaError) as exc:
        fixture("FIX_NOPE")
    assert exc.value.code == "UNKNOWN_FIXTURE"
    with pytest.raises(AliaError):
        fixture("FIX_W4")
    assert len(fixture_names()) == 12


def test_form_predicates():
    w = BilinearForm.from_terms(2, {(1, 2): 1, (2, 1): -1})
    assert w.is_skew() and not w.is_symmetric() and w.is_nondegenerate()
    assert not BilinearForm(zeros((2, 2))).is_nondegenerate()
