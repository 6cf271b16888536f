"""Yang-Baxter residuals, the coproduct induced by a two-tensor, and Rota-Baxter type operators.

A two-tensor r is read through its coefficient matrix t, r = sum t[a, b] e_a (x) e_b,
and an operator P (x) Q acts on it as P t Q^T.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .core import (
    AliaError, Algebra, Coalgebra, DimensionError, HypothesisError, LawId, LinearMap,
    Representation, Residual, TwoTensor, _check_dims, contract, zeros,
)
from .constructions import block_map, dual_representation, semidirect_bracket
from .laws import check_adjoint_admissible, check_representation

E = contract


def _ybe_tensor(c: np.ndarray, t: np.ndarray) -> np.ndarray:
    # indices (p, q, s) of the three tensor legs
    return (E("aq,cs,acp->pqs", t, t, c)
            + E("pb,cs,cbq->pqs", t, t, c) - E("pb,cs,bcq->pqs", t, t, c)
            - E("pb,qd,dbs->pqs", t, t, c))


def alia_ybe_residual(A: Algebra, r: TwoTensor) -> Residual:
    _check_dims(("algebra", A.dim), ("r", r.dim))
    return Residual.from_parts(LawId.ALIA_YBE, [("", _ybe_tensor(A.c, r.t))])


def delta_r(A: Algebra, r: TwoTensor) -> Coalgebra:
    """Delta(x) = sum ([a, x] - [x, a]) (x) b - a (x) [b, x] over r = sum a (x) b."""
    _check_dims(("algebra", A.dim), ("r", r.dim))
    c, t = A.c, r.t
    d = E("aq,akp->kpq", t, c) - E("aq,kap->kpq", t, c) - E("pb,bkq->kpq", t, c)
    return Coalgebra(d)


class YbeReport(NamedTuple):
    al_residual: Residual
    s_adm_residual: Optional[Residual]
    antisymmetric: bool

    @property
    def solution(self) -> bool:
        return self.al_residual.passed

    @property
    def s_admissible_solution(self) -> bool:
        return self.solution and self.s_adm_residual is not None and self.s_adm_residual.passed


def ybe_report(A: Algebra, r: TwoTensor, N: Optional[LinearMap] = None,
               S: Optional[LinearMap] = None) -> YbeReport:
    adm = None if N is None or S is None else s_admissibility_residual(r, N, S)
    return YbeReport(alia_ybe_residual(A, r), adm, r.is_antisymmetric())


def check_prop33(A: Algebra, r: TwoTensor) -> Residual:
    """Coproduct form of the YBE: part ``id-delta`` always, ``delta-id`` for antisymmetric r."""
    _check_dims(("algebra", A.dim), ("r", r.dim))
    c, t = A.c, r.t
    d = delta_r(A, r).d
    parts = [("id-delta", E("pb,bqs->pqs", t, d) + E("aq,cs,acp->pqs", t, t, c))]
    if r.is_antisymmetric():
        parts.append(("delta-id", E("as,apq->pqs", t, d) - E("pb,qd,bds->pqs", t, t, c)))
    return Residual.from_parts(LawId.PROP33, parts)


def s_admissibility_residual(r: TwoTensor, N: LinearMap, S: LinearMap) -> Residual:
    """(S (x) id - id (x) N)(r)."""
    _check_dims(("r", r.dim), ("N", N.dim), ("S", S.dim))
    res = E("pa,aq->pq", S.m, r.t) - E("pb,qb->pq", r.t, N.m)
    return Residual.from_parts(LawId.S_ADMISSIBLE, [("", res)])


def _stack_mat(X, M):          # X(x) M for every x
    return E("xpa,aq->xpq", X, M)


def _mat_stack(M, X):          # M X(x)
    return E("pa,xaq->xpq", M, X)


def _mat_stack_t(M, X):        # M X(x)^T, i.e. (id (x) X(x)) applied to M
    return E("pb,xqb->xpq", M, X)


def _prop37_parts(c, n, s, t):
    L = c.transpose(0, 2, 1)   # L(e_k)[l, j] = [e_k, e_j]_l
    R = c.transpose(1, 2, 0)   # R(e_k)[l, j] = [e_j, e_k]_l
    at = lambda m, op: E("kx,kpq->xpq", m, op)   # op(M e_x)
    n2, s2 = E("ij,jk->ik", n, n), E("ij,jk->ik", s, s)
    u1 = E("pa,aq->pq", n, t) - E("pb,qb->pq", t, s)
    u2 = E("pa,aq->pq", s, t) - E("pb,qb->pq", t, n)
    K = R - L
    RS, LS, RN, LN = at(s, R), at(s, L), at(n, R), at(n, L)
    eq41 = (_stack_mat(RS - LS - _mat_stack(s, K), u1)
            + _mat_stack_t(u2, RS - _mat_stack(s, R)))
    eq42 = (_mat_stack_t(u2, _mat_stack(n, R) - RN)
            + _stack_mat(RN - LN + _mat_stack(s, K), u2)
            - _stack_mat(K, E("pa,aq->pq", s2, t))
            + E("xpb,qb->xpq", _stack_mat(K, t), n2))
    eq43 = (_stack_mat(_mat_stack(n, K) - at(n, K), u1)
            + _mat_stack_t(u1, RN + _mat_stack(s, R))
            + _mat_stack_t(t, _stack_mat(R, s2))
            - _mat_stack_t(E("pa,aq->pq", n2, t), R))
    return eq41, eq42, eq43


def check_prop37(A: Algebra, N: LinearMap, S: LinearMap, r: TwoTensor) -> Residual:
    """Three residuals per basis x, indexed (x, p, q), tagged ``coalgebra``, ``first``, ``second``."""
    _check_dims(("algebra", A.dim), ("N", N.dim), ("S", S.dim), ("r", r.dim))
    adm = check_adjoint_admissible(A, N, S)
    if not adm.passed:
        raise HypothesisError("NOT_ADJOINT_ADMISSIBLE", "adjoint-admissible", adm)
    eq41, eq42, eq43 = _prop37_parts(A.c, N.m, S.m, r.t)
    return Residual.from_parts(LawId.PROP37, [
        ("coalgebra", eq41), ("first", eq42), ("second", eq43),
    ])


def r_sharp(r: TwoTensor) -> LinearMap:
    """r as a map from the dual space: e_j* goes to sum_i t[j, i] e_i."""
    return LinearMap(np.array(r.t.T))


def _rrb_parts(A: Algebra, R: Representation, T: LinearMap) -> np.ndarray:
    if R.alg_dim != A.dim:
        raise DimensionError(f"representation is over a {R.alg_dim}-dim algebra, expected {A.dim}")
    if T.shape != (A.dim, R.rep_dim):
        raise DimensionError(f"T must map a {R.rep_dim}-dim module into a {A.dim}-dim algebra")
    res = check_representation(A, R)
    if not res.passed:
        raise HypothesisError("REP_INVALID", "representation", res)
    tm = T.m
    lt = E("au,apq->upq", tm, R.ell)     # l(T e_u)
    rt = E("au,apq->upq", tm, R.arr)     # r(T e_u)
    inner = E("upv->uvp", lt) + E("vpu->uvp", rt)
    return E("au,bv,abl->uvl", tm, tm, A.c) - E("lp,uvp->uvl", tm, inner)


def check_relative_rota_baxter(A: Algebra, R: Representation, T: LinearMap) -> Residual:
    return Residual.from_parts(LawId.RELATIVE_ROTA_BAXTER, [("", _rrb_parts(A, R, T))])


def check_weak_rrb(A: Algebra, N: LinearMap, R: Representation, alpha: LinearMap,
                   T: LinearMap) -> Residual:
    _check_dims(("algebra", A.dim), ("N", N.dim))
    _check_dims(("module", R.rep_dim), ("alpha", alpha.dim))
    rrb = _rrb_parts(A, R, T)
    comm = E("ab,bu->au", N.m, T.m) - E("ab,bu->au", T.m, alpha.m)
    return Residual.from_parts(LawId.WEAK_RRB, [("bracket", rrb), ("intertwine", comm)])


class LiftResult(NamedTuple):
    algebra: Algebra
    r: TwoTensor
    nij: Optional[LinearMap]
    adm: Optional[LinearMap]


def t_sharp_lift(A: Algebra, R: Representation, T: LinearMap, S: Optional[LinearMap] = None,
                 alpha: Optional[LinearMap] = None, beta: Optional[LinearMap] = None,
                 N: Optional[LinearMap] = None) -> LiftResult:
    """Antisymmetrized T on the semidirect sum of A with the dual module.

    With N and beta the lift carries N + beta^T; with S and alpha it carries S + alpha^T.
    """
    n, m = A.dim, R.rep_dim
    if R.alg_dim != n or T.shape != (n, m):
        raise DimensionError("T, the representation and the algebra disagree on dimensions")
    res = check_representation(A, R)
    if not res.passed:
        raise HypothesisError("REP_INVALID", "representation", res)
    big = semidirect_bracket(A, dual_representation(R))
    tt = zeros((n + m, n + m))
    tt[n:, :n] = T.m.T
    r = TwoTensor(tt - tt.T)
    nij = adm = None
    if N is not None and beta is not None:
        nij = block_map(N, LinearMap(np.array(beta.m.T)))
    if S is not None and alpha is not None:
        adm = block_map(S, LinearMap(np.array(alpha.m.T)))
    return LiftResult(big, r, nij, adm)


def _bn_part(op, s, a, b):
    sop = E("kx,kpq->xpq", s, op)
    s2op = E("kx,kpq->xpq", E("ij,jk->ik", s, s), op)
    return (E("pa,xab,bv->xpv", b, op, a) + s2op
            - E("xpb,bv->xpv", sop, a) - E("pa,xav->xpv", b, sop))


def check_thm_bn_conditions(A: Algebra, N: LinearMap, R: Representation, S: LinearMap,
                            alpha: LinearMap, beta: LinearMap) -> Residual:
    """Mixed conditions on (x, v), indexed (x, p, v), parts ``arr`` and ``ell``."""
    if R.alg_dim != A.dim:
        raise DimensionError(f"representation is over a {R.alg_dim}-dim algebra, expected {A.dim}")
    _check_dims(("algebra", A.dim), ("N", N.dim), ("S", S.dim))
    _check_dims(("module", R.rep_dim), ("alpha", alpha.dim), ("beta", beta.dim))
    return Residual.from_parts(LawId.SEMIDIRECT_ADMISSIBLE, [
        ("arr", _bn_part(R.arr, S.m, alpha.m, beta.m)),
        ("ell", _bn_part(R.ell, S.m, alpha.m, beta.m)),
    ])
