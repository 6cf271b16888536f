"""Exact residuals of the algebraic identities.

Each ``check_*`` function returns a :class:`~alia.core.Residual` holding every
nonzero coordinate of LHS - RHS, with 0-based basis indices.  Multi-part laws
tag each entry with the sub-identity it came from.
"""

from __future__ import annotations

import numpy as np

from .core import (
    Algebra, BilinearForm, Coalgebra, DimensionError, HypothesisError, LawId,
    LinearMap, Representation, Residual, TwoTensor, Entry,
    _check_dims, contract, parallel_map, rank,
)

E = contract


def _sq(m: LinearMap) -> np.ndarray:
    return E("ij,jk->ik", m.m, m.m)


# ------------------------------------------------------------ algebras

def check_left_alia(A: Algebra) -> Residual:
    c = A.c
    lhs = E("ijm,mkl->ijkl", c, c) + E("jkm,mil->ijkl", c, c) + E("kim,mjl->ijkl", c, c)
    rhs = E("jim,mkl->ijkl", c, c) + E("kjm,mil->ijkl", c, c) + E("ikm,mjl->ijkl", c, c)
    return Residual.from_parts(LawId.LEFT_ALIA, [("", lhs - rhs)])


def check_associative(A: Algebra) -> Residual:
    c = A.c
    res = E("ijm,mkl->ijkl", c, c) - E("jkm,iml->ijkl", c, c)
    return Residual.from_parts(LawId.ASSOCIATIVE, [("", res)])


def check_commutative(A: Algebra) -> Residual:
    return Residual.from_parts(LawId.COMMUTATIVE, [("", A.c - A.c.transpose(1, 0, 2))])


def check_coassociative(C: Coalgebra) -> Residual:
    d = C.d
    res = E("ims,mpq->ipqs", d, d) - E("ipm,mqs->ipqs", d, d)
    return Residual.from_parts(LawId.COASSOCIATIVE, [("", res)])


def check_cocommutative(C: Coalgebra) -> Residual:
    return Residual.from_parts(LawId.COCOMMUTATIVE, [("", C.d - C.d.transpose(0, 2, 1))])


def _nijenhuis_tensor(c: np.ndarray, n: np.ndarray) -> np.ndarray:
    n2 = E("ij,jk->ik", n, n)
    return (E("ai,bj,abl->ijl", n, n, c) + E("ijk,lk->ijl", c, n2)
            - E("ai,ajk,lk->ijl", n, c, n) - E("bj,ibk,lk->ijl", n, c, n))


def check_nijenhuis_algebra(A: Algebra, N: LinearMap) -> Residual:
    _check_dims(("algebra", A.dim), ("N", N.dim))
    return Residual.from_parts(LawId.NIJENHUIS_ALGEBRA, [("", _nijenhuis_tensor(A.c, N.m))])


# ---------------------------------------------------------- coalgebras

def check_left_alia_coalgebra(C: Coalgebra) -> Residual:
    d = C.d
    # D[i, p, q, s]: coefficient of e_p (x) e_q (x) e_s in x_(1)(1) (x) x_(1)(2) (x) x_(2)
    D = E("ijs,jpq->ipqs", d, d)
    lhs = (np.einsum("ivuw->iuvw", D) + np.einsum("iuwv->iuvw", D)
           + np.einsum("iwvu->iuvw", D))
    rhs = D + np.einsum("iwuv->iuvw", D) + np.einsum("ivwu->iuvw", D)
    return Residual.from_parts(LawId.LEFT_ALIA_COALGEBRA, [("", lhs - rhs)])


def check_nijenhuis_coalgebra(C: Coalgebra, S: LinearMap) -> Residual:
    _check_dims(("coalgebra", C.dim), ("S", S.dim))
    d, s = C.d, S.m
    res = (E("iab,pa,qb->ipq", d, s, s) + E("ki,kpq->ipq", _sq(S), d)
           - E("ki,kaq,pa->ipq", s, d, s) - E("ki,kpb,qb->ipq", s, d, s))
    return Residual.from_parts(LawId.NIJENHUIS_COALGEBRA, [("", res)])


# ----------------------------------------------------- representations

def _rep_dims(A: Algebra, R: Representation):
    if R.alg_dim != A.dim:
        raise DimensionError(f"representation is over a {R.alg_dim}-dim algebra, expected {A.dim}")


def check_representation(A: Algebra, R: Representation) -> Residual:
    _rep_dims(A, R)
    c, ell, arr = A.c, R.ell, R.arr
    diff = arr - ell
    res = (E("xyk,kpq->xypq", c, ell) - E("yxk,kpq->xypq", c, ell)
           - E("xpa,yaq->xypq", arr, diff) + E("ypa,xaq->xypq", arr, diff))
    return Residual.from_parts(LawId.REPRESENTATION, [("", res)])


def _require_rep(A: Algebra, R: Representation) -> None:
    res = check_representation(A, R)
    if not res.passed:
        raise HypothesisError("REP_INVALID", "representation", res)


def _moved(op: np.ndarray, n: np.ndarray) -> np.ndarray:
    """op(N x) for every basis x: sum_k N[k, x] op[k]."""
    return E("kx,kpq->xpq", n, op)


def _nij_rep_part(op, n, a):
    a2 = E("ij,jk->ik", a, a)
    opn = _moved(op, n)
    return (E("xpq,qv->xvp", opn, a) + E("pq,xqv->xvp", a2, op)
            - E("pq,xqv->xvp", a, opn) - E("pq,xqs,sv->xvp", a, op, a))


def check_nijenhuis_representation(A: Algebra, N: LinearMap, R: Representation,
                                   alpha: LinearMap) -> Residual:
    _rep_dims(A, R)
    _check_dims(("algebra", A.dim), ("N", N.dim))
    _check_dims(("module", R.rep_dim), ("alpha", alpha.dim))
    _require_rep(A, R)
    return Residual.from_parts(LawId.NIJENHUIS_REPRESENTATION, [
        ("ell", _nij_rep_part(R.ell, N.m, alpha.m)),
        ("arr", _nij_rep_part(R.arr, N.m, alpha.m)),
    ])


def _admissible_part(op, n, b):
    b2 = E("ij,jk->ik", b, b)
    opn = _moved(op, n)
    return (E("pq,xqv->xvp", b, opn) + E("xpq,qv->xvp", op, b2)
            - E("xpq,qv->xvp", opn, b) - E("pq,xqs,sv->xvp", b, op, b))


def check_admissible(A: Algebra, N: LinearMap, R: Representation, beta: LinearMap) -> Residual:
    _rep_dims(A, R)
    _check_dims(("algebra", A.dim), ("N", N.dim))
    _check_dims(("module", R.rep_dim), ("beta", beta.dim))
    return Residual.from_parts(LawId.ADMISSIBLE, [
        ("ell", _admissible_part(R.ell, N.m, beta.m)),
        ("arr", _admissible_part(R.arr, N.m, beta.m)),
    ])


def check_adjoint_admissible(A: Algebra, N: LinearMap, S: LinearMap) -> Residual:
    _check_dims(("algebra", A.dim), ("N", N.dim), ("S", S.dim))
    c, n, s = A.c, N.m, S.m
    s2 = _sq(S)
    left = (E("ax,ayk,lk->xyl", n, c, s) + E("by,xbl->xyl", s2, c)
            - E("by,xbk,lk->xyl", s, c, s) - E("ax,by,abl->xyl", n, s, c))
    right = (E("by,xbk,lk->xyl", n, c, s) + E("ax,ayl->xyl", s2, c)
             - E("ax,ayk,lk->xyl", s, c, s) - E("ax,by,abl->xyl", s, n, c))
    return Residual.from_parts(LawId.ADJOINT_ADMISSIBLE, [("left", left), ("right", right)])


def check_coadjoint_admissible(C: Coalgebra, S: LinearMap, N: LinearMap) -> Residual:
    _check_dims(("coalgebra", C.dim), ("S", S.dim), ("N", N.dim))
    d, s, n = C.d, S.m, N.m
    n2 = _sq(N)
    first = (E("ki,kaq,pa->ipq", n, d, s) + E("ipb,qb->ipq", d, n2)
             - E("iab,pa,qb->ipq", d, s, n) - E("ki,kpb,qb->ipq", n, d, n))
    second = (E("ki,kpb,qb->ipq", n, d, s) + E("iaq,pa->ipq", d, n2)
              - E("iab,pa,qb->ipq", d, n, s) - E("ki,kaq,pa->ipq", n, d, n))
    return Residual.from_parts(LawId.COADJOINT_ADMISSIBLE, [("first", first), ("second", second)])


# ----------------------------------------------------------- bialgebras

def check_bialgebra_compat(A: Algebra, C: Coalgebra) -> Residual:
    _check_dims(("algebra", A.dim), ("coalgebra", C.dim))
    c, d = A.c, C.d
    u = (E("xyk,kpq->xypq", c - c.transpose(1, 0, 2), d)
         - E("xaq,ayp->xypq", d, c) + E("yaq,axp->xypq", d, c))
    res = u.transpose(0, 1, 3, 2) - u
    return Residual.from_parts(LawId.BIALGEBRA_COMPAT, [("", res)])


def check_nijenhuis_left_alia_bialgebra(A: Algebra, C: Coalgebra, N: LinearMap,
                                        S: LinearMap) -> Residual:
    """All five defining items, evaluated even after a failure."""
    _check_dims(("algebra", A.dim), ("coalgebra", C.dim), ("N", N.dim), ("S", S.dim))
    jobs = [
        ("left-alia", lambda: check_left_alia(A)),
        ("left-alia-coalgebra", lambda: check_left_alia_coalgebra(C)),
        ("bialgebra", lambda: check_bialgebra_compat(A, C)),
        ("nijenhuis-algebra", lambda: check_nijenhuis_algebra(A, N)),
        ("nijenhuis-coalgebra", lambda: check_nijenhuis_coalgebra(C, S)),
        ("adjoint-admissible", lambda: check_adjoint_admissible(A, N, S)),
        ("coadjoint-admissible", lambda: check_coadjoint_admissible(C, S, N)),
    ]
    results = parallel_map(lambda job: job[1](), jobs)
    return Residual.combine(LawId.NIJ_LEFT_ALIA_BIALGEBRA,
                            [(tag, res) for (tag, _), res in zip(jobs, results)])


# ---------------------------------------------------------------- forms

def _rank_entry(part: str, matrix: np.ndarray) -> list[Entry]:
    deficit = matrix.shape[0] - rank(matrix)
    return [Entry(part, (), deficit)] if deficit else []


def check_quadratic(A: Algebra, B: BilinearForm) -> Residual:
    """Symmetry, nondegeneracy (entry = rank deficit), and invariance."""
    _check_dims(("algebra", A.dim), ("form", B.dim))
    c, w = A.c, B.w
    inv = (E("xyk,kz->xyz", c, w) - E("xa,zya->xyz", w, c) + E("xa,yza->xyz", w, c))
    base = Residual.from_parts(LawId.QUADRATIC, [("symmetric", w - w.T)])
    entries = base.entries + tuple(_rank_entry("nondegenerate", w))
    inv_res = Residual.from_parts(LawId.QUADRATIC, [("invariant", inv)])
    return Residual(LawId.QUADRATIC, entries + inv_res.entries)


def check_symplectic(A: Algebra, w: BilinearForm) -> Residual:
    _check_dims(("algebra", A.dim), ("form", w.dim))
    c, m = A.c, w.w
    res = (E("yzk,kx->xyz", c, m) - E("zyk,kx->xyz", c, m)
           - E("xyk,kz->xyz", c, m) + E("xzk,ky->xyz", c, m))
    return Residual.from_parts(LawId.SYMPLECTIC, [("skew", m + m.T), ("closed", res)])


def check_cosymplectic(C: Coalgebra, r: TwoTensor) -> Residual:
    _check_dims(("coalgebra", C.dim), ("tensor", r.dim))
    if not r.is_antisymmetric():
        raise HypothesisError("NOT_ANTISYMMETRIC", "antisymmetric",
                              Residual.from_parts(LawId.COSYMPLECTIC, [("antisymmetric", r.t + r.t.T)]))
    K = E("aw,auv->uvw", r.t, C.d)
    res = (K - np.einsum("vuw->uvw", K) - np.einsum("wuv->uvw", K)
           + np.einsum("wvu->uvw", K))
    return Residual.from_parts(LawId.COSYMPLECTIC, [("", res)])


# ------------------------------------------------ associative D-bialgebras

def check_D_bialgebra(A: Algebra, C: Coalgebra) -> Residual:
    _check_dims(("algebra", A.dim), ("coalgebra", C.dim))
    c, d = A.c, C.d
    compat = (E("xyk,kpq->xypq", c, d) - E("xaq,ayp->xypq", d, c)
              - E("ypb,xbq->xypq", d, c))
    subs = [
        ("commutative", check_commutative(A)),
        ("cocommutative", check_cocommutative(C)),
        ("associative", check_associative(A)),
        ("coassociative", check_coassociative(C)),
        ("compatible", Residual.from_parts(LawId.D_BIALGEBRA, [("", compat)])),
    ]
    return Residual.combine(LawId.D_BIALGEBRA, subs)


def check_nijenhuis_D_compat(A: Algebra, C: Coalgebra, f: LinearMap, F: LinearMap) -> Residual:
    _check_dims(("algebra", A.dim), ("coalgebra", C.dim), ("f", f.dim), ("F", F.dim))
    c, d, fm, Fm = A.c, C.d, f.m, F.m
    prod = (E("ax,ayk,lk->xyl", fm, c, Fm) + E("by,xbl->xyl", _sq(F), c)
            - E("ax,by,abl->xyl", fm, Fm, c) - E("by,xbk,lk->xyl", Fm, c, Fm))
    coprod = (E("kx,kaq,pa->xpq", fm, d, Fm) + E("xpb,qb->xpq", d, _sq(f))
              - E("xab,pa,qb->xpq", d, Fm, fm) - E("kx,kpb,qb->xpq", fm, d, fm))
    return Residual.from_parts(LawId.NIJENHUIS_D_COMPAT, [("product", prod), ("coproduct", coprod)])


def special_bialgebra_tensor(A: Algebra, C: Coalgebra, f: LinearMap, g: LinearMap,
                             F: LinearMap, G: LinearMap) -> np.ndarray:
    """The sixteen-term two-tensor expression, indexed (x, y, p, q).

    Half of the terms are the flips of the other half, and the second eight
    are the first eight with x and y exchanged, so the sum is
    (id - flip)(U(x, y) - U(y, x)).
    """
    c, d = A.c, C.d
    u = (E("ky,kpb,xbm,qm->xypq", f.m, d, c, F.m)
         + E("xab,pb,aym,qm->xypq", d, F.m, c, g.m)
         + E("kx,kap,ajq,jy->xypq", G.m, d, c, f.m)
         + E("kx,kap,aym,qm->xypq", G.m, d, c, g.m))
    v = u - u.transpose(0, 1, 3, 2)
    return v - v.transpose(1, 0, 2, 3)


def check_special_bialgebra_condition(A: Algebra, C: Coalgebra, f: LinearMap, g: LinearMap,
                                      F: LinearMap, G: LinearMap) -> Residual:
    _check_dims(("algebra", A.dim), ("coalgebra", C.dim), ("f", f.dim), ("g", g.dim),
                ("F", F.dim), ("G", G.dim))
    base = check_D_bialgebra(A, C)
    if not base.passed:
        raise HypothesisError("D_BIALGEBRA_INVALID", "d-bialgebra", base)
    return Residual.from_parts(LawId.SPECIAL_BIALGEBRA,
                               [("", special_bialgebra_tensor(A, C, f, g, F, G))])
