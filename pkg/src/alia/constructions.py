"""Structure-building operations: special brackets, semidirect and matched-pair sums, doubles."""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .core import (
    AliaError, Algebra, BilinearForm, Coalgebra, HypothesisError, LinearMap,
    Representation, Residual, LawId, TwoTensor, _check_dims, contract, dualize_coalgebra,
    identity, inverse, left_right_operators, rank, zeros,
)
from .laws import (
    check_associative, check_coassociative, check_cocommutative, check_commutative,
    check_left_alia, check_nijenhuis_algebra, check_nijenhuis_representation,
    check_representation,
)

E = contract


def _require(code: str, law: str, res: Residual) -> None:
    if not res.passed:
        raise HypothesisError(code, law, res)


def special_left_alia(A: Algebra, f: LinearMap, g: LinearMap) -> Algebra:
    """Bracket [x, y] = x . f(y) + g(x . y) over a commutative associative product."""
    _check_dims(("algebra", A.dim), ("f", f.dim), ("g", g.dim))
    _require("NOT_COMM_ASSOC", "associative", check_associative(A))
    _require("NOT_COMM_ASSOC", "commutative", check_commutative(A))
    c = A.c
    return Algebra(E("bj,ibl->ijl", f.m, c) + E("ijk,lk->ijl", c, g.m))


def special_left_alia_coalgebra(C: Coalgebra, F: LinearMap, G: LinearMap) -> Coalgebra:
    """Delta(x) = x_[1] (x) F(x_[2]) + G(x)_[1] (x) G(x)_[2]."""
    _check_dims(("coalgebra", C.dim), ("F", F.dim), ("G", G.dim))
    _require("NOT_COCOMM_COASSOC", "coassociative", check_coassociative(C))
    _require("NOT_COCOMM_COASSOC", "cocommutative", check_cocommutative(C))
    d = C.d
    return Coalgebra(E("ipb,qb->ipq", d, F.m) + E("ki,kpq->ipq", G.m, d))


def dual_representation(R: Representation) -> Representation:
    """(V*, l*, l* - r*) where rho*(x) acts by minus the transpose."""
    ell_t = -R.ell.transpose(0, 2, 1)
    return Representation(ell_t, ell_t + R.arr.transpose(0, 2, 1))


def _direct_sum(*blocks: np.ndarray) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = zeros((n, n))
    at = 0
    for b in blocks:
        k = b.shape[0]
        out[at:at + k, at:at + k] = b
        at += k
    return out


def block_map(*maps: LinearMap) -> LinearMap:
    """Block-diagonal sum of square maps."""
    return LinearMap(_direct_sum(*(m.m for m in maps)))


def semidirect_bracket(A: Algebra, R: Representation) -> Algebra:
    n, m = A.dim, R.rep_dim
    c = zeros((n + m,) * 3)
    c[:n, :n, :n] = A.c
    # [e_i, v] = l(e_i) v ; [u, e_j] = r(e_j) u
    c[:n, n:, n:] = R.ell.transpose(0, 2, 1)
    c[n:, :n, n:] = R.arr.transpose(2, 0, 1)
    return Algebra(c)


def semidirect_product(A: Algebra, R: Representation, N: Optional[LinearMap] = None,
                       alpha: Optional[LinearMap] = None):
    """Algebra on A + V; with N and alpha also returns the block map N + alpha."""
    if R.alg_dim != A.dim:
        raise AliaError("representation does not match the algebra", "DIMENSION_MISMATCH")
    _require("REP_INVALID", "representation", check_representation(A, R))
    big = semidirect_bracket(A, R)
    if N is None and alpha is None:
        return big
    if N is None or alpha is None:
        raise AliaError("N and alpha must be given together", "DIMENSION_MISMATCH")
    _require("REP_INVALID", "nijenhuis-representation",
             check_nijenhuis_representation(A, N, R, alpha))
    return big, block_map(N, alpha)


class MatchedPairData(NamedTuple):
    algA: Algebra
    algB: Algebra
    repAB: Representation
    repBA: Representation
    nijA: Optional[LinearMap] = None
    nijB: Optional[LinearMap] = None


class MatchedPairResult(NamedTuple):
    algebra: Algebra
    nij: Optional[LinearMap]
    residual: Residual
    matched: bool


def matched_pair_bracket(M: MatchedPairData) -> Algebra:
    A, B = M.algA, M.algB
    n, m = A.dim, B.dim
    if (M.repAB.alg_dim, M.repAB.rep_dim, M.repBA.alg_dim, M.repBA.rep_dim) != (n, m, m, n):
        raise AliaError("matched-pair representations have inconsistent dimensions",
                        "DIMENSION_MISMATCH")
    c = zeros((n + m,) * 3)
    c[:n, :n, :n] = A.c
    c[n:, n:, n:] = B.c
    ellA, arrA = M.repAB.ell, M.repAB.arr
    ellB, arrB = M.repBA.ell, M.repBA.arr
    c[:n, n:, :n] = arrB.transpose(2, 0, 1)   # r_B(b) x
    c[:n, n:, n:] = ellA.transpose(0, 2, 1)   # l_A(x) b
    c[n:, :n, :n] = ellB.transpose(0, 2, 1)   # l_B(a) y
    c[n:, :n, n:] = arrA.transpose(2, 0, 1)   # r_A(y) a
    return Algebra(c)


def matched_pair_sum(M: MatchedPairData) -> MatchedPairResult:
    """Build A + B and decide the matched-pair property by checking the sum."""
    big = matched_pair_bracket(M)
    subs = [("left-alia", check_left_alia(big))]
    nij = None
    if (M.nijA is None) != (M.nijB is None):
        raise AliaError("nijA and nijB must be given together", "DIMENSION_MISMATCH")
    if M.nijA is not None:
        nij = block_map(M.nijA, M.nijB)
        subs.append(("nijenhuis-algebra", check_nijenhuis_algebra(big, nij)))
    residual = Residual.combine(LawId.MATCHED_PAIR, subs)
    return MatchedPairResult(big, nij, residual, residual.passed)


class DoubleBundle(NamedTuple):
    big: Algebra
    form: BilinearForm
    nij: Optional[LinearMap]
    pair: MatchedPairResult


def natural_form(n: int) -> BilinearForm:
    w = zeros((2 * n, 2 * n))
    w[:n, n:] = identity(n)
    w[n:, :n] = identity(n)
    return BilinearForm(w)


def drinfeld_double(A: Algebra, C: Coalgebra, N: Optional[LinearMap] = None,
                    S: Optional[LinearMap] = None) -> DoubleBundle:
    """A + A* with both coadjoint actions; laws are left to the caller."""
    _check_dims(("algebra", A.dim), ("coalgebra", C.dim))
    Astar = dualize_coalgebra(C)
    data = MatchedPairData(
        A, Astar,
        dual_representation(left_right_operators(A)),
        dual_representation(left_right_operators(Astar)),
        N, None if S is None else LinearMap(S.m.T.copy()),
    )
    pair = matched_pair_sum(data)
    return DoubleBundle(pair.algebra, natural_form(A.dim), pair.nij, pair)


def adjoint_wrt_form(N: LinearMap, B: BilinearForm) -> LinearMap:
    """The map M with B(N x, y) = B(x, M y)."""
    _check_dims(("map", N.dim), ("form", B.dim))
    if rank(B.w) != B.dim:
        raise AliaError("bilinear form is degenerate", "DEGENERATE_FORM")
    return LinearMap(E("ij,kj,kl->il", inverse(B.w), N.m, B.w))


def transport_algebra(A: Algebra, P: np.ndarray) -> Algebra:
    """Structure constants in the basis given by the columns of P."""
    Pi = inverse(P)
    return Algebra(E("ai,bj,abk,lk->ijl", P, P, A.c, Pi))


def transport_coalgebra(C: Coalgebra, P: np.ndarray) -> Coalgebra:
    Pi = inverse(P)
    return Coalgebra(E("ak,abc,ib,jc->kij", P, C.d, Pi, Pi))


def transport_map(M: LinearMap, P: np.ndarray) -> LinearMap:
    return LinearMap(E("ij,jk,kl->il", inverse(P), M.m, P))


def transport_tensor(r: TwoTensor, P: np.ndarray) -> TwoTensor:
    Pi = inverse(P)
    return TwoTensor(E("ia,ab,jb->ij", Pi, r.t, Pi))


def transport_form(w: BilinearForm, P: np.ndarray) -> BilinearForm:
    return BilinearForm(E("ai,ab,bj->ij", P, w.w, P))
