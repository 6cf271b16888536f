"""Bilinear-form side: the co-Yang-Baxter equation, the bracket a form induces on a
coalgebra, and Nijenhuis operators built from symplectic and cosymplectic data."""

from __future__ import annotations

import numpy as np

from .core import (
    AliaError, Algebra, BilinearForm, Coalgebra, HypothesisError, LawId, LinearMap,
    Residual, TwoTensor, _check_dims, contract, inverse, rank,
)
from .laws import (
    check_cosymplectic, check_left_alia_coalgebra, check_nijenhuis_algebra,
    check_nijenhuis_coalgebra, check_symplectic,
)
from .yang_baxter import alia_ybe_residual, delta_r

E = contract


def _co_ybe_tensor(d: np.ndarray, w: np.ndarray) -> np.ndarray:
    return (E("xpq,py,qz->xyz", d, w, w) + E("ypq,xq,pz->xyz", d, w, w)
            - E("ypq,xp,qz->xyz", d, w, w) - E("zpq,xq,yp->xyz", d, w, w))


def co_ybe_residual(C: Coalgebra, w: BilinearForm) -> Residual:
    _check_dims(("coalgebra", C.dim), ("form", w.dim))
    return Residual.from_parts(LawId.CO_YBE, [("", _co_ybe_tensor(C.d, w.w))])


def _bracket_tensor(d: np.ndarray, w: np.ndarray) -> np.ndarray:
    # [x, y] = x_(2) w(x_(1), y) - x_(1) w(x_(2), y) - y_(2) w(x, y_(1))
    return (E("ips,pj->ijs", d, w) - E("isq,qj->ijs", d, w) - E("jps,ip->ijs", d, w))


def bracket_omega(C: Coalgebra, w: BilinearForm) -> Algebra:
    _check_dims(("coalgebra", C.dim), ("form", w.dim))
    if not w.is_skew():
        raise AliaError("form is not skew-symmetric", "NOT_SKEW")
    res = co_ybe_residual(C, w)
    if not res.passed:
        raise HypothesisError("NOT_CO_YBE_SOLUTION", "co-ybe", res)
    return Algebra(_bracket_tensor(C.d, w.w))


def check_prop53(C: Coalgebra, w: BilinearForm) -> Residual:
    """Pairing forms of the co-YBE; the ``right`` part only for skew forms."""
    _check_dims(("coalgebra", C.dim), ("form", w.dim))
    d, wm = C.d, w.w
    cw = _bracket_tensor(d, wm)
    parts = [("left", E("xs,yzs->xyz", wm, cw) + E("xpq,py,qz->xyz", d, wm, wm))]
    if w.is_skew():
        parts.append(("right", E("xys,sz->xyz", cw, wm) - E("zpq,xp,yq->xyz", d, wm, wm)))
    return Residual.from_parts(LawId.PROP53, parts)


def omega_from_r(r: TwoTensor) -> BilinearForm:
    """w(x, y) = <(r#)^-1 x, y>, which is the inverse of the coefficient matrix."""
    if rank(r.t) != r.dim:
        raise AliaError("two-tensor is degenerate", "DEGENERATE_R")
    return BilinearForm(inverse(r.t))


def _hypothesis(which: str, res: Residual) -> None:
    if not res.passed:
        raise HypothesisError("HYPOTHESIS_FAILED", which, res)


def _antisymmetric(r: TwoTensor) -> None:
    if not r.is_antisymmetric():
        raise HypothesisError("HYPOTHESIS_FAILED", "antisymmetric")


def nijenhuis_from_symplectic(A: Algebra, w: BilinearForm, r: TwoTensor) -> LinearMap:
    """N(x) = sum w(x, a) b over r = sum a (x) b, after checking every hypothesis in turn."""
    _check_dims(("algebra", A.dim), ("form", w.dim), ("r", r.dim))
    _hypothesis("symplectic", check_symplectic(A, w))
    _antisymmetric(r)
    _hypothesis("ybe", alia_ybe_residual(A, r))
    _hypothesis("co-ybe", co_ybe_residual(delta_r(A, r), w))
    N = LinearMap(np.array(E("xa,ab->xb", w.w, r.t).T))
    res = check_nijenhuis_algebra(A, N)
    if not res.passed:
        raise HypothesisError("CONCLUSION_FAILED", "nijenhuis-algebra", res)
    return N


def nijenhuis_coalgebra_from_cosymplectic(C: Coalgebra, r: TwoTensor,
                                          w: BilinearForm) -> LinearMap:
    """S(x) = sum a w(b, x) over r = sum a (x) b."""
    _check_dims(("coalgebra", C.dim), ("form", w.dim), ("r", r.dim))
    _antisymmetric(r)
    _hypothesis("left-alia-coalgebra", check_left_alia_coalgebra(C))
    _hypothesis("cosymplectic", check_cosymplectic(C, r))
    if not w.is_skew():
        raise HypothesisError("HYPOTHESIS_FAILED", "skew")
    _hypothesis("co-ybe", co_ybe_residual(C, w))
    _hypothesis("ybe", alia_ybe_residual(Algebra(_bracket_tensor(C.d, w.w)), r))
    S = LinearMap(E("ab,bx->ax", r.t, w.w))
    res = check_nijenhuis_coalgebra(C, S)
    if not res.passed:
        raise HypothesisError("CONCLUSION_FAILED", "nijenhuis-coalgebra", res)
    return S
