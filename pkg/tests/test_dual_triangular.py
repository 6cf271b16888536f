import pytest

from alia import generators as gen
from alia.core import (
    AliaError, Algebra, BilinearForm, Coalgebra, HypothesisError, LinearMap, TwoTensor,
    contract, identity, zeros,
)
from alia.dual_triangular import (
    bracket_omega, check_prop53, co_ybe_residual, nijenhuis_coalgebra_from_cosymplectic,
    nijenhuis_from_symplectic, omega_from_r,
)
from alia.fixtures import fix_a4, fix_ab2, fix_d5, fix_nl, fix_r12, fix_r23, fix_w4
from alia.laws import check_cosymplectic, check_left_alia_coalgebra, check_nijenhuis_coalgebra, check_symplectic
from alia.yang_baxter import alia_ybe_residual, delta_r, r_sharp

LAMBDAS = (0, 1, 2, 3, 5)
ZERO_FORM = BilinearForm(zeros((4, 4)))


def test_co_ybe():
    for lam in LAMBDAS:
        assert co_ybe_residual(fix_d5(), fix_w4(lam)).passed
    assert co_ybe_residual(fix_d5(), ZERO_FORM).passed
    assert co_ybe_residual(Coalgebra.zero(4), fix_w4(1)).passed


def test_co_ybe_negative():
    w = BilinearForm.from_terms(4, {(1, 2): 1, (2, 1): -1})
    assert not co_ybe_residual(fix_d5(), w).passed


def test_bracket_omega():
    assert bracket_omega(fix_d5(), ZERO_FORM) == Algebra.zero(4)
    assert bracket_omega(Coalgebra.zero(4), fix_w4(1)) == Algebra.zero(4)
    B = bracket_omega(fix_d5(), fix_w4(1))
    # single product [e4, e1] = -e1
    assert B == Algebra.from_table(4, {(4, 1): {1: -1}})


def test_bracket_omega_hypotheses():
    with pytest.raises(AliaError) as exc:
        bracket_omega(fix_d5(), BilinearForm(identity(4)))
    assert exc.value.code == "NOT_SKEW"
    w = BilinearForm.from_terms(4, {(1, 2): 1, (2, 1): -1})
    with pytest.raises(HypothesisError) as exc:
        bracket_omega(fix_d5(), w)
    assert exc.value.code == "NOT_CO_YBE_SOLUTION"


def test_pairing_forms():
    assert check_prop53(fix_d5(), fix_w4(1)).passed
    assert check_prop53(fix_d5(), ZERO_FORM).passed


def test_pairing_form_equivalence(rng):
    seen = set()
    for _ in range(50):
        n = rng.randint(1, 3)
        C = gen.coalgebra(rng, n)
        w = gen.bilinear_form(rng, n, skew=True, density=0.3)
        verdict = co_ybe_residual(C, w).passed
        res = check_prop53(C, w)
        assert res.part("left").passed == verdict
        assert res.part("right").passed == verdict
        seen.add(verdict)
    assert seen == {True, False}


def test_dual_triangular_gives_symplectic(rng):
    checked = 0
    for lam in LAMBDAS:
        assert check_symplectic(bracket_omega(fix_d5(), fix_w4(lam)), fix_w4(lam)).passed
    for _ in range(60):
        n = rng.randint(1, 3)
        C = gen.coalgebra(rng, n, density=0.2)
        w = gen.bilinear_form(rng, n, skew=True, density=0.3)
        if not check_left_alia_coalgebra(C).passed or not co_ybe_residual(C, w).passed:
            continue
        assert check_symplectic(bracket_omega(C, w), w).passed
        checked += 1
    assert checked >= 10


def test_triangular_gives_cosymplectic(rng):
    checked = 0
    for _ in range(60):
        A = gen.left_alia(rng, 3)
        r = gen.sparse_antisymmetric(rng, A.dim)
        if not alia_ybe_residual(A, r).passed:
            continue
        assert check_cosymplectic(delta_r(A, r), r).passed
        checked += 1
    assert checked >= 10


def test_omega_from_r():
    _, r = fix_ab2()
    w = omega_from_r(r)
    assert w.w.tolist() == [[0, -1], [1, 0]]
    # x -> w(x, .) has matrix w^T; composing with r# gives the identity
    assert contract("ij,kj->ik", r_sharp(r).m, w.w).tolist() == [[1, 0], [0, 1]]
    with pytest.raises(AliaError) as exc:
        omega_from_r(fix_r12())
    assert exc.value.code == "DEGENERATE_R"


def test_nijenhuis_from_symplectic_example():
    for lam in (1, 2, 3, 5):
        assert nijenhuis_from_symplectic(fix_a4(), fix_w4(lam), fix_r23()) == fix_nl(lam)
    assert nijenhuis_from_symplectic(fix_a4(), ZERO_FORM, fix_r23()) == LinearMap.zero(4)


def test_nijenhuis_from_symplectic_nondegenerate_is_identity():
    A, r = fix_ab2()
    assert nijenhuis_from_symplectic(A, omega_from_r(r), r) == LinearMap.identity(2)


def test_nijenhuis_from_symplectic_names_failing_hypothesis():
    bad_form = BilinearForm.from_terms(4, {(1, 2): 1, (2, 1): -1})
    with pytest.raises(HypothesisError) as exc:
        nijenhuis_from_symplectic(fix_a4(), bad_form, fix_r23())
    assert (exc.value.code, exc.value.law) == ("HYPOTHESIS_FAILED", "symplectic")
    with pytest.raises(HypothesisError) as exc:
        nijenhuis_from_symplectic(fix_a4(), fix_w4(1), TwoTensor.from_terms(4, {(2, 3): 1}))
    assert exc.value.law == "antisymmetric"
    r13 = TwoTensor.from_terms(4, {(1, 3): 1, (3, 1): -1})
    with pytest.raises(HypothesisError) as exc:
        nijenhuis_from_symplectic(fix_a4(), fix_w4(1), r13)
    assert exc.value.law == "ybe"


def test_nijenhuis_coalgebra_from_cosymplectic():
    S = nijenhuis_coalgebra_from_cosymplectic(fix_d5(), fix_r23(), fix_w4(1))
    assert S == LinearMap.from_images(4, {4: {3: -1}})
    assert check_nijenhuis_coalgebra(fix_d5(), S).passed
    assert nijenhuis_coalgebra_from_cosymplectic(fix_d5(), fix_r23(), ZERO_FORM) == LinearMap.zero(4)
    zero_r = TwoTensor(zeros((4, 4)))
    assert nijenhuis_coalgebra_from_cosymplectic(fix_d5(), zero_r, fix_w4(1)) == LinearMap.zero(4)


def test_nijenhuis_coalgebra_from_cosymplectic_hypotheses():
    with pytest.raises(HypothesisError) as exc:
        nijenhuis_coalgebra_from_cosymplectic(fix_d5(), fix_r23(), BilinearForm(identity(4)))
    assert exc.value.law == "skew"
    with pytest.raises(HypothesisError) as exc:
        nijenhuis_coalgebra_from_cosymplectic(fix_d5(), TwoTensor.from_terms(4, {(2, 3): 1}),
                                              fix_w4(1))
    assert exc.value.law == "antisymmetric"
