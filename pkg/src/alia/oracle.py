"""Brute-force reference evaluator.

Every law is re-derived here with plain loops over basis vectors, working on
Python lists of ints and Fractions and never touching the einsum kernel.  Results are
dicts {(part, index): value} of the nonzero coordinates, directly comparable
with :func:`entries_of` applied to a kernel Residual.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .core import Algebra, BilinearForm, Coalgebra, LinearMap, Representation, Residual, TwoTensor


def entries_of(res: Residual) -> dict:
    return {(e.part, tuple(int(i) for i in e.index)): Fraction(e.value) for e in res.entries}


# ------------------------------------------------------------- primitives

def _lst(a):
    """numpy object array -> nested lists of exact scalars (int where integral, for speed)."""
    if hasattr(a, "tolist"):
        a = a.tolist()
    if isinstance(a, list):
        return [_lst(x) for x in a]
    q = Fraction(a)
    return q.numerator if q.denominator == 1 else q


class _Space:
    """Vectors are lists of exact scalars of length n."""

    def __init__(self, n):
        self.n = n

    def basis(self, i):
        v = [0] * self.n
        v[i] = 1
        return v

    def zero(self):
        return [0] * self.n


def add(*vs):
    out = [0] * len(vs[0])
    for v in vs:
        for i, x in enumerate(v):
            out[i] += x
    return out


def scale(k, v):
    return [k * x for x in v]


def sub(u, v):
    return add(u, scale(-1, v))


def apply(m, v):
    """Column convention: (M v)_i = sum_j m[i][j] v_j."""
    rows = len(m)
    return [sum((m[i][j] * v[j] for j in range(len(v))), 0) for i in range(rows)]


def compose(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), 0)
             for j in range(len(b[0]))] for i in range(len(a))]


def transpose(m):
    return [list(r) for r in zip(*m)]


def bracket(c, u, v):
    n = len(c)
    out = [0] * n
    for i in range(n):
        if not u[i]:
            continue
        for j in range(n):
            if not v[j]:
                continue
            for k in range(n):
                out[k] += u[i] * v[j] * c[i][j][k]
    return out


def coproduct(d, x):
    """Delta(x) as an n x n coefficient matrix."""
    n = len(d)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        if x[i]:
            for p in range(n):
                for q in range(n):
                    out[p][q] += x[i] * d[i][p][q]
    return out


def madd(*ms):
    return [[sum((m[i][j] for m in ms), 0) for j in range(len(ms[0][0]))]
            for i in range(len(ms[0]))]


def mscale(k, m):
    return [[k * x for x in row] for row in m]


def msub(a, b):
    return madd(a, mscale(-1, b))


def on_tensor(P, Q, t):
    """(P (x) Q) applied to sum t[a][b] e_a (x) e_b."""
    n, m = len(P), len(Q)
    out = [[0] * m for _ in range(n)]
    for a in range(len(t)):
        for b in range(len(t[0])):
            if t[a][b]:
                for p in range(n):
                    if P[p][a]:
                        for q in range(m):
                            out[p][q] += t[a][b] * P[p][a] * Q[q][b]
    return out


def eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def form(w, u, v):
    return sum((u[i] * w[i][j] * v[j] for i in range(len(u)) for j in range(len(v))), 0)


def outer(u, v):
    return [[a * b for b in v] for a in u]


def _collect(out, part, index, vec):
    for k, x in enumerate(vec):
        if x:
            out[(part, index + (k,))] = x


def _collect2(out, part, index, mat):
    for p, row in enumerate(mat):
        for q, x in enumerate(row):
            if x:
                out[(part, index + (p, q))] = x


def _op_left(c, x):
    """Matrix of y -> [x, y]."""
    n = len(c)
    cols = [bracket(c, x, _Space(n).basis(j)) for j in range(n)]
    return transpose(cols)


def _op_right(c, x):
    """Matrix of y -> [y, x]."""
    n = len(c)
    cols = [bracket(c, _Space(n).basis(j), x) for j in range(n)]
    return transpose(cols)


def _rep_op(ops, x):
    """rho(x) = sum_i x_i rho(e_i) for a stack of matrices."""
    m = len(ops[0])
    out = [[0] * m for _ in range(m)]
    for i, xi in enumerate(x):
        if xi:
            out = madd(out, mscale(xi, ops[i]))
    return out


# -------------------------------------------------------------- algebras

def left_alia(A: Algebra) -> dict:
    c = _lst(A.c)
    n = len(c)
    B = _Space(n).basis
    out = {}
    for i, j, k in product(range(n), repeat=3):
        x, y, z = B(i), B(j), B(k)
        br = lambda u, v: bracket(c, u, v)
        lhs = add(br(br(x, y), z), br(br(y, z), x), br(br(z, x), y))
        rhs = add(br(br(y, x), z), br(br(z, y), x), br(br(x, z), y))
        _collect(out, "", (i, j, k), sub(lhs, rhs))
    return out


def associative(A: Algebra) -> dict:
    c = _lst(A.c)
    n = len(c)
    B = _Space(n).basis
    out = {}
    for i, j, k in product(range(n), repeat=3):
        br = lambda u, v: bracket(c, u, v)
        _collect(out, "", (i, j, k), sub(br(br(B(i), B(j)), B(k)), br(B(i), br(B(j), B(k)))))
    return out


def commutative(A: Algebra) -> dict:
    c = _lst(A.c)
    n = len(c)
    B = _Space(n).basis
    out = {}
    for i, j in product(range(n), repeat=2):
        _collect(out, "", (i, j), sub(bracket(c, B(i), B(j)), bracket(c, B(j), B(i))))
    return out


def nijenhuis(A: Algebra, N: LinearMap) -> dict:
    c, m = _lst(A.c), _lst(N.m)
    n = len(c)
    B = _Space(n).basis
    Nv = lambda v: apply(m, v)
    out = {}
    for i, j in product(range(n), repeat=2):
        x, y = B(i), B(j)
        lhs = add(bracket(c, Nv(x), Nv(y)), Nv(Nv(bracket(c, x, y))))
        rhs = Nv(add(bracket(c, Nv(x), y), bracket(c, x, Nv(y))))
        _collect(out, "", (i, j), sub(lhs, rhs))
    return out


# ------------------------------------------------------------ coalgebras

def _triple(d, x):
    """x_(1)(1) (x) x_(1)(2) (x) x_(2) as a dict {(p, q, s): coeff}."""
    n = len(d)
    first = coproduct(d, x)
    out = {}
    for a in range(n):
        for s in range(n):
            if first[a][s]:
                inner = coproduct(d, _Space(n).basis(a))
                for p in range(n):
                    for q in range(n):
                        if inner[p][q]:
                            out[(p, q, s)] = out.get((p, q, s), 0) + first[a][s] * inner[p][q]
    return out


def _permute(t, perm):
    """Rearrange legs: leg k of the result is leg perm[k] of t."""
    out = {}
    for idx, v in t.items():
        key = tuple(idx[perm[k]] for k in range(3))
        out[key] = out.get(key, 0) + v
    return out


def _dict_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return out


def _dict_add(*ts):
    out = {}
    for t in ts:
        for k, v in t.items():
            out[k] = out.get(k, 0) + v
    return out


def left_alia_coalgebra(C: Coalgebra) -> dict:
    d = _lst(C.d)
    n = len(d)
    out = {}
    for i in range(n):
        T = _triple(d, _Space(n).basis(i))   # legs (11, 12, 2)
        lhs = _dict_add(_permute(T, (1, 0, 2)), _permute(T, (0, 2, 1)), _permute(T, (2, 1, 0)))
        rhs = _dict_add(T, _permute(T, (1, 2, 0)), _permute(T, (2, 0, 1)))
        for k, v in _dict_sub(lhs, rhs).items():
            if v:
                out[("", (i,) + k)] = Fraction(v)
    return out


def coassociative(C: Coalgebra) -> dict:
    d = _lst(C.d)
    n = len(d)
    out = {}
    for i in range(n):
        left = _triple(d, _Space(n).basis(i))
        right = {}
        first = coproduct(d, _Space(n).basis(i))
        for p in range(n):
            for b in range(n):
                if first[p][b]:
                    inner = coproduct(d, _Space(n).basis(b))
                    for q in range(n):
                        for s in range(n):
                            right[(p, q, s)] = right.get((p, q, s), 0) + first[p][b] * inner[q][s]
        for k, v in _dict_sub(left, right).items():
            if v:
                out[("", (i,) + k)] = Fraction(v)
    return out


def cocommutative(C: Coalgebra) -> dict:
    d = _lst(C.d)
    n = len(d)
    out = {}
    for i in range(n):
        m = coproduct(d, _Space(n).basis(i))
        _collect2(out, "", (i,), msub(m, transpose(m)))
    return out


def nijenhuis_coalgebra(C: Coalgebra, S: LinearMap) -> dict:
    d, s = _lst(C.d), _lst(S.m)
    n = len(d)
    I = eye(n)
    out = {}
    for i in range(n):
        x = _Space(n).basis(i)
        Sx = apply(s, x)
        lhs = madd(on_tensor(s, s, coproduct(d, x)), coproduct(d, apply(s, Sx)))
        rhs = madd(on_tensor(s, I, coproduct(d, Sx)), on_tensor(I, s, coproduct(d, Sx)))
        _collect2(out, "", (i,), msub(lhs, rhs))
    return out


# ------------------------------------------------------- representations

def representation(A: Algebra, R: Representation) -> dict:
    c, ell, arr = _lst(A.c), _lst(R.ell), _lst(R.arr)
    n = len(c)
    B = _Space(n).basis
    out = {}
    for i, j in product(range(n), repeat=2):
        x, y = B(i), B(j)
        lhs = msub(_rep_op(ell, bracket(c, x, y)), _rep_op(ell, bracket(c, y, x)))
        rx, ry, lx, ly = _rep_op(arr, x), _rep_op(arr, y), _rep_op(ell, x), _rep_op(ell, y)
        rhs = msub(compose(rx, msub(ry, ly)), compose(ry, msub(rx, lx)))
        _collect2(out, "", (i, j), msub(lhs, rhs))
    return out


def nijenhuis_representation(A: Algebra, N: LinearMap, R: Representation, alpha: LinearMap) -> dict:
    n_m, a = _lst(N.m), _lst(alpha.m)
    n, m = len(n_m), len(a)
    out = {}
    for part, ops in (("ell", _lst(R.ell)), ("arr", _lst(R.arr))):
        for i, v_ in product(range(n), range(m)):
            x, v = _Space(n).basis(i), _Space(m).basis(v_)
            rho = lambda y: _rep_op(ops, y)
            Nx = apply(n_m, x)
            lhs = add(apply(rho(Nx), apply(a, v)), apply(a, apply(a, apply(rho(x), v))))
            rhs = add(apply(a, apply(rho(Nx), v)), apply(a, apply(rho(x), apply(a, v))))
            _collect(out, part, (i, v_), sub(lhs, rhs))
    return out


def admissible(A: Algebra, N: LinearMap, R: Representation, beta: LinearMap) -> dict:
    n_m, b = _lst(N.m), _lst(beta.m)
    n, m = len(n_m), len(b)
    out = {}
    for part, ops in (("ell", _lst(R.ell)), ("arr", _lst(R.arr))):
        for i, v_ in product(range(n), range(m)):
            x, v = _Space(n).basis(i), _Space(m).basis(v_)
            rho = lambda y: _rep_op(ops, y)
            Nx = apply(n_m, x)
            lhs = add(apply(b, apply(rho(Nx), v)), apply(rho(x), apply(b, apply(b, v))))
            rhs = add(apply(rho(Nx), apply(b, v)), apply(b, apply(rho(x), apply(b, v))))
            _collect(out, part, (i, v_), sub(lhs, rhs))
    return out


def adjoint_admissible(A: Algebra, N: LinearMap, S: LinearMap) -> dict:
    c, nm, s = _lst(A.c), _lst(N.m), _lst(S.m)
    n = len(c)
    B = _Space(n).basis
    br = lambda u, v: bracket(c, u, v)
    Nv, Sv = (lambda v: apply(nm, v)), (lambda v: apply(s, v))
    out = {}
    for i, j in product(range(n), repeat=2):
        x, y = B(i), B(j)
        left = sub(add(Sv(br(Nv(x), y)), br(x, Sv(Sv(y)))), add(Sv(br(x, Sv(y))), br(Nv(x), Sv(y))))
        right = sub(add(Sv(br(x, Nv(y))), br(Sv(Sv(x)), y)), add(Sv(br(Sv(x), y)), br(Sv(x), Nv(y))))
        _collect(out, "left", (i, j), left)
        _collect(out, "right", (i, j), right)
    return out


def coadjoint_admissible(C: Coalgebra, S: LinearMap, N: LinearMap) -> dict:
    d, s, nm = _lst(C.d), _lst(S.m), _lst(N.m)
    n = len(d)
    I = eye(n)
    n2 = compose(nm, nm)
    out = {}
    for i in range(n):
        x = _Space(n).basis(i)
        dx, dNx = coproduct(d, x), coproduct(d, apply(nm, x))
        first = msub(madd(on_tensor(s, I, dNx), on_tensor(I, n2, dx)),
                     madd(on_tensor(s, nm, dx), on_tensor(I, nm, dNx)))
        second = msub(madd(on_tensor(I, s, dNx), on_tensor(n2, I, dx)),
                      madd(on_tensor(nm, s, dx), on_tensor(nm, I, dNx)))
        _collect2(out, "first", (i,), first)
        _collect2(out, "second", (i,), second)
    return out


def bialgebra_compat(A: Algebra, C: Coalgebra) -> dict:
    c, d = _lst(A.c), _lst(C.d)
    n = len(c)
    B = _Space(n).basis
    I = eye(n)
    out = {}
    tau_minus = lambda m: msub(transpose(m), m)
    for i, j in product(range(n), repeat=2):
        x, y = B(i), B(j)
        lhs = tau_minus(coproduct(d, sub(bracket(c, x, y), bracket(c, y, x))))
        rhs = tau_minus(msub(on_tensor(_op_right(c, y), I, coproduct(d, x)),
                             on_tensor(_op_right(c, x), I, coproduct(d, y))))
        _collect2(out, "", (i, j), msub(lhs, rhs))
    return out


def nijenhuis_left_alia_bialgebra(A, C, N, S) -> dict:
    out = {}
    subs = [("left-alia", left_alia(A)), ("left-alia-coalgebra", left_alia_coalgebra(C)),
            ("bialgebra", bialgebra_compat(A, C)), ("nijenhuis-algebra", nijenhuis(A, N)),
            ("nijenhuis-coalgebra", nijenhuis_coalgebra(C, S)),
            ("adjoint-admissible", adjoint_admissible(A, N, S)),
            ("coadjoint-admissible", coadjoint_admissible(C, S, N))]
    for tag, res in subs:
        for (part, idx), v in res.items():
            out[(f"{tag}/{part}" if part else tag, idx)] = v
    return out


# ----------------------------------------------------------------- forms

def quadratic(A: Algebra, Bf: BilinearForm) -> dict:
    c, w = _lst(A.c), _lst(Bf.w)
    n = len(c)
    B = _Space(n).basis
    out = {}
    for i, j in product(range(n), repeat=2):
        v = w[i][j] - w[j][i]
        if v:
            out[("symmetric", (i, j))] = v
    deficit = n - _rank(w)
    if deficit:
        out[("nondegenerate", ())] = Fraction(deficit)
    for i, j, k in product(range(n), repeat=3):
        x, y, z = B(i), B(j), B(k)
        v = form(w, bracket(c, x, y), z) - form(w, x, sub(bracket(c, z, y), bracket(c, y, z)))
        if v:
            out[("invariant", (i, j, k))] = v
    return out


def _rank(m):
    rows = [list(r) for r in m]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = Fraction(rows[r][col]) / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def symplectic(A: Algebra, wf: BilinearForm) -> dict:
    c, w = _lst(A.c), _lst(wf.w)
    n = len(c)
    B = _Space(n).basis
    out = {}
    for i, j in product(range(n), repeat=2):
        if w[i][j] + w[j][i]:
            out[("skew", (i, j))] = w[i][j] + w[j][i]
    for i, j, k in product(range(n), repeat=3):
        x, y, z = B(i), B(j), B(k)
        v = (form(w, sub(bracket(c, y, z), bracket(c, z, y)), x)
             - form(w, bracket(c, x, y), z) + form(w, bracket(c, x, z), y))
        if v:
            out[("closed", (i, j, k))] = v
    return out


def cosymplectic(C: Coalgebra, r: TwoTensor) -> dict:
    d, t = _lst(C.d), _lst(r.t)
    n = len(d)
    acc = {}
    for a, b in product(range(n), repeat=2):
        if not t[a][b]:
            continue
        da = coproduct(d, _Space(n).basis(a))
        for p, q in product(range(n), repeat=2):
            k = t[a][b] * da[p][q]       # a_(1) = e_p, a_(2) = e_q, b = e_b
            if not k:
                continue
            for key, sgn in (((p, q, b), 1), ((q, p, b), -1), ((q, b, p), -1), ((b, q, p), 1)):
                acc[key] = acc.get(key, 0) + sgn * k
    return {("", key): Fraction(v) for key, v in acc.items() if v}


# ------------------------------------------------------- D-bialgebras

def d_compatible(A: Algebra, C: Coalgebra) -> dict:
    c, d = _lst(A.c), _lst(C.d)
    n = len(c)
    B = _Space(n).basis
    I = eye(n)
    out = {}
    for i, j in product(range(n), repeat=2):
        x, y = B(i), B(j)
        lhs = coproduct(d, bracket(c, x, y))
        rhs = madd(on_tensor(_op_right(c, y), I, coproduct(d, x)),
                   on_tensor(I, _op_left(c, x), coproduct(d, y)))
        _collect2(out, "compatible", (i, j), msub(lhs, rhs))
    return out


def nijenhuis_d_compat(A: Algebra, C: Coalgebra, f: LinearMap, F: LinearMap) -> dict:
    c, d, fm, Fm = _lst(A.c), _lst(C.d), _lst(f.m), _lst(F.m)
    n = len(c)
    B = _Space(n).basis
    I = eye(n)
    mul = lambda u, v: bracket(c, u, v)
    Fv, fv = (lambda v: apply(Fm, v)), (lambda v: apply(fm, v))
    out = {}
    for i, j in product(range(n), repeat=2):
        x, y = B(i), B(j)
        v = sub(add(Fv(mul(fv(x), y)), mul(x, Fv(Fv(y)))), add(mul(fv(x), Fv(y)), Fv(mul(x, Fv(y)))))
        _collect(out, "product", (i, j), v)
    f2 = compose(fm, fm)
    for i in range(n):
        x = B(i)
        dfx, dx = coproduct(d, fv(x)), coproduct(d, x)
        v = msub(madd(on_tensor(Fm, I, dfx), on_tensor(I, f2, dx)),
                 madd(on_tensor(Fm, fm, dx), on_tensor(I, fm, dfx)))
        _collect2(out, "coproduct", (i,), v)
    return out


def special_bialgebra(A: Algebra, C: Coalgebra, f, g, F, G) -> dict:
    """The sixteen displayed two-tensor terms, each written out."""
    c, d = _lst(A.c), _lst(C.d)
    fm, gm, Fm, Gm = (_lst(m.m) for m in (f, g, F, G))
    n = len(c)
    B = _Space(n).basis
    mul = lambda u, v: bracket(c, u, v)
    ap = lambda m: (lambda v: apply(m, v))
    fv, gv, Fv, Gv = ap(fm), ap(gm), ap(Fm), ap(Gm)

    def sweep(z, term):
        """sum over delta(z) = z_[1] (x) z_[2] of term(z_[1], z_[2]) (a matrix)."""
        acc = [[0] * n for _ in range(n)]
        dz = coproduct(d, z)
        for p, q in product(range(n), repeat=2):
            if dz[p][q]:
                acc = madd(acc, mscale(dz[p][q], term(B(p), B(q))))
        return acc

    out = {}
    for i, j in product(range(n), repeat=2):
        x, y = B(i), B(j)
        terms = [
            sweep(fv(y), lambda a, b: outer(a, Fv(mul(x, b)))),
            mscale(-1, sweep(fv(y), lambda a, b: outer(Fv(mul(x, b)), a))),
            sweep(x, lambda a, b: outer(Fv(b), gv(mul(a, y)))),
            mscale(-1, sweep(x, lambda a, b: outer(gv(mul(a, y)), Fv(b)))),
            sweep(Gv(x), lambda a, b: outer(b, mul(a, fv(y)))),
            mscale(-1, sweep(Gv(x), lambda a, b: outer(mul(a, fv(y)), b))),
            sweep(Gv(x), lambda a, b: outer(b, gv(mul(a, y)))),
            mscale(-1, sweep(Gv(x), lambda a, b: outer(gv(mul(a, y)), b))),
            sweep(fv(x), lambda a, b: outer(Fv(mul(y, b)), a)),
            mscale(-1, sweep(fv(x), lambda a, b: outer(a, Fv(mul(y, b))))),
            mscale(-1, sweep(y, lambda a, b: outer(Fv(b), gv(mul(a, x))))),
            sweep(y, lambda a, b: outer(gv(mul(a, x)), Fv(b))),
            mscale(-1, sweep(Gv(y), lambda a, b: outer(b, mul(a, fv(x))))),
            sweep(Gv(y), lambda a, b: outer(mul(a, fv(x)), b)),
            mscale(-1, sweep(Gv(y), lambda a, b: outer(b, gv(mul(a, x))))),
            sweep(Gv(y), lambda a, b: outer(gv(mul(a, x)), b)),
        ]
        _collect2(out, "", (i, j), madd(*terms))
    return out


# --------------------------------------------------------- Yang-Baxter

def _pairs(t):
    """Canonical decomposition r = sum coeff * a (x) b with basis vectors."""
    n = len(t)
    for a, b in product(range(n), repeat=2):
        if t[a][b]:
            yield t[a][b], _Space(n).basis(a), _Space(n).basis(b)


def _add3(acc, k, u, v, w):
    n = len(u)
    for p, q, s in product(range(n), repeat=3):
        x = k * u[p] * v[q] * w[s]
        if x:
            acc[(p, q, s)] = acc.get((p, q, s), 0) + x


def ybe(A: Algebra, r: TwoTensor) -> dict:
    c, t = _lst(A.c), _lst(r.t)
    br = lambda u, v: bracket(c, u, v)
    acc = {}
    for ki, ai, bi in _pairs(t):
        for kj, aj, bj in _pairs(t):
            k = ki * kj
            _add3(acc, k, br(ai, aj), bi, bj)
            _add3(acc, k, ai, sub(br(aj, bi), br(bi, aj)), bj)
            _add3(acc, -k, ai, aj, br(bj, bi))
    return {("", key): Fraction(v) for key, v in acc.items() if v}


def delta_r(A: Algebra, r: TwoTensor) -> list:
    """Comultiplication tensor d[k][p][q] as nested lists."""
    c, t = _lst(A.c), _lst(r.t)
    n = len(c)
    out = []
    for k in range(n):
        x = _Space(n).basis(k)
        m = [[0] * n for _ in range(n)]
        for coef, a, b in _pairs(t):
            m = madd(m, mscale(coef, outer(sub(bracket(c, a, x), bracket(c, x, a)), b)))
            m = msub(m, mscale(coef, outer(a, bracket(c, b, x))))
        out.append(m)
    return out


def prop33(A: Algebra, r: TwoTensor) -> dict:
    c, t = _lst(A.c), _lst(r.t)
    n = len(c)
    d = delta_r(A, r)
    br = lambda u, v: bracket(c, u, v)
    lhs, rhs = {}, {}
    for k, a, b in _pairs(t):
        db = coproduct(d, b)
        for q, s in product(range(n), repeat=2):
            if db[q][s]:
                _add3(lhs, k * db[q][s], a, _Space(n).basis(q), _Space(n).basis(s))
    for ki, ai, bi in _pairs(t):
        for kj, aj, bj in _pairs(t):
            _add3(rhs, -ki * kj, br(ai, aj), bi, bj)
    out = {("id-delta", key): Fraction(v) for key, v in _dict_sub(lhs, rhs).items() if v}
    anti = all(t[i][j] == -t[j][i] for i in range(n) for j in range(n))
    if anti:
        lhs, rhs = {}, {}
        for k, a, b in _pairs(t):
            da = coproduct(d, a)
            for p, q in product(range(n), repeat=2):
                if da[p][q]:
                    _add3(lhs, k * da[p][q], _Space(n).basis(p), _Space(n).basis(q), b)
        for ki, ai, bi in _pairs(t):
            for kj, aj, bj in _pairs(t):
                _add3(rhs, ki * kj, ai, aj, br(bi, bj))
        out.update({("delta-id", key): Fraction(v) for key, v in _dict_sub(lhs, rhs).items() if v})
    return out


def s_admissible(r: TwoTensor, N: LinearMap, S: LinearMap) -> dict:
    t, nm, s = _lst(r.t), _lst(N.m), _lst(S.m)
    I = eye(len(t))
    out = {}
    _collect2(out, "", (), msub(on_tensor(s, I, t), on_tensor(I, nm, t)))
    return out


def prop37(A: Algebra, N: LinearMap, S: LinearMap, r: TwoTensor) -> dict:
    """The three displays, built from operator tensor products acting on r."""
    c, nm, s, t = _lst(A.c), _lst(N.m), _lst(S.m), _lst(r.t)
    n = len(c)
    I = eye(n)
    L = lambda x: _op_left(c, x)
    R = lambda x: _op_right(c, x)
    u1 = msub(on_tensor(nm, I, t), on_tensor(I, s, t))     # (N (x) id - id (x) S)(r)
    u2 = msub(on_tensor(s, I, t), on_tensor(I, nm, t))     # (S (x) id - id (x) N)(r)
    n2, s2 = compose(nm, nm), compose(s, s)
    out = {}
    for k in range(n):
        x = _Space(n).basis(k)
        Sx, Nx = apply(s, x), apply(nm, x)
        e41 = madd(on_tensor(msub(msub(R(Sx), L(Sx)), compose(s, msub(R(x), L(x)))), I, u1),
                   on_tensor(I, msub(R(Sx), compose(s, R(x))), u2))
        e42 = madd(on_tensor(I, msub(compose(nm, R(x)), R(Nx)), u2),
                   on_tensor(msub(R(Nx), L(Nx)), I, u2),
                   on_tensor(compose(s, msub(R(x), L(x))), I, u2),
                   on_tensor(compose(msub(L(x), R(x)), s2), I, t),
                   on_tensor(msub(R(x), L(x)), n2, t))
        e43 = madd(on_tensor(compose(nm, msub(R(x), L(x))), I, u1),
                   mscale(-1, on_tensor(msub(R(Nx), L(Nx)), I, u1)),
                   on_tensor(I, madd(R(Nx), compose(s, R(x))), u1),
                   on_tensor(I, compose(R(x), s2), t),
                   mscale(-1, on_tensor(n2, R(x), t)))
        _collect2(out, "coalgebra", (k,), e41)
        _collect2(out, "first", (k,), e42)
        _collect2(out, "second", (k,), e43)
    return out


def relative_rota_baxter(A: Algebra, R: Representation, T: LinearMap) -> dict:
    c, ell, arr, tm = _lst(A.c), _lst(R.ell), _lst(R.arr), _lst(T.m)
    m = len(ell[0])
    out = {}
    for u_, v_ in product(range(m), repeat=2):
        u, v = _Space(m).basis(u_), _Space(m).basis(v_)
        Tu, Tv = apply(tm, u), apply(tm, v)
        inner = add(apply(_rep_op(ell, Tu), v), apply(_rep_op(arr, Tv), u))
        _collect(out, "", (u_, v_), sub(bracket(c, Tu, Tv), apply(tm, inner)))
    return out


def weak_rrb(A, N, R, alpha, T) -> dict:
    out = {("bracket", k[1]): v for k, v in relative_rota_baxter(A, R, T).items()}
    diff = msub(compose(_lst(N.m), _lst(T.m)), compose(_lst(T.m), _lst(alpha.m)))
    _collect2(out, "intertwine", (), diff)
    return out


def thm_bn(A, N, R, S, alpha, beta) -> dict:
    s, a, b = _lst(S.m), _lst(alpha.m), _lst(beta.m)
    n, m = len(s), len(a)
    out = {}
    for part, ops in (("arr", _lst(R.arr)), ("ell", _lst(R.ell))):
        rho = lambda y: _rep_op(ops, y)
        for k, v_ in product(range(n), range(m)):
            x, v = _Space(n).basis(k), _Space(m).basis(v_)
            Sx = apply(s, x)
            val = sub(add(apply(b, apply(rho(x), apply(a, v))), apply(rho(apply(s, Sx)), v)),
                      add(apply(rho(Sx), apply(a, v)), apply(b, apply(rho(Sx), v))))
            _collect(out, part, (k, v_), val)
    # kernel order is (x, output coordinate, v)
    return {(part, (i[0], i[2], i[1])): val for (part, i), val in out.items()}


# ------------------------------------------------------ form-side laws

def _sweedler(d, x):
    n = len(d)
    m = coproduct(d, x)
    for p, q in product(range(n), repeat=2):
        if m[p][q]:
            yield m[p][q], _Space(n).basis(p), _Space(n).basis(q)


def co_ybe(C: Coalgebra, wf: BilinearForm) -> dict:
    d, w = _lst(C.d), _lst(wf.w)
    n = len(d)
    B = _Space(n).basis
    W = lambda u, v: form(w, u, v)
    out = {}
    for i, j, k in product(range(n), repeat=3):
        x, y, z = B(i), B(j), B(k)
        v = 0
        for co, x1, x2 in _sweedler(d, x):
            v += co * W(x1, y) * W(x2, z)
        for co, y1, y2 in _sweedler(d, y):
            v += co * (W(x, y2) * W(y1, z) - W(x, y1) * W(y2, z))
        for co, z1, z2 in _sweedler(d, z):
            v -= co * W(x, z2) * W(y, z1)
        if v:
            out[("", (i, j, k))] = v
    return out


def bracket_omega(C: Coalgebra, wf: BilinearForm) -> list:
    """[x, y]_w structure constants c[i][j][s], no hypothesis checks."""
    d, w = _lst(C.d), _lst(wf.w)
    n = len(d)
    B = _Space(n).basis
    c = []
    for i in range(n):
        row = []
        for j in range(n):
            x, y = B(i), B(j)
            v = _Space(n).zero()
            for co, x1, x2 in _sweedler(d, x):
                v = add(v, scale(co * form(w, x1, y), x2), scale(-co * form(w, x2, y), x1))
            for co, y1, y2 in _sweedler(d, y):
                v = add(v, scale(-co * form(w, x, y1), y2))
            row.append(v)
        c.append(row)
    return c


def prop53(C: Coalgebra, wf: BilinearForm) -> dict:
    d, w = _lst(C.d), _lst(wf.w)
    n = len(d)
    B = _Space(n).basis
    cw = bracket_omega(C, wf)
    W = lambda u, v: form(w, u, v)
    skew = all(w[i][j] == -w[j][i] for i in range(n) for j in range(n))
    out = {}
    for i, j, k in product(range(n), repeat=3):
        x, y, z = B(i), B(j), B(k)
        left = W(x, bracket(cw, y, z))
        for co, x1, x2 in _sweedler(d, x):
            left += co * W(x1, y) * W(x2, z)
        if left:
            out[("left", (i, j, k))] = left
        if skew:
            right = W(bracket(cw, x, y), z)
            for co, z1, z2 in _sweedler(d, z):
                right -= co * W(x, z1) * W(y, z2)
            if right:
                out[("right", (i, j, k))] = right
    return out


# ------------------------------------------------------ constructions

def special_left_alia(A: Algebra, f: LinearMap, g: LinearMap) -> list:
    c, fm, gm = _lst(A.c), _lst(f.m), _lst(g.m)
    n = len(c)
    B = _Space(n).basis
    return [[add(bracket(c, B(i), apply(fm, B(j))), apply(gm, bracket(c, B(i), B(j))))
             for j in range(n)] for i in range(n)]


def special_left_alia_coalgebra(C: Coalgebra, F: LinearMap, G: LinearMap) -> list:
    d, Fm, Gm = _lst(C.d), _lst(F.m), _lst(G.m)
    n = len(d)
    I = eye(n)
    out = []
    for i in range(n):
        x = _Space(n).basis(i)
        out.append(madd(on_tensor(I, Fm, coproduct(d, x)), coproduct(d, apply(Gm, x))))
    return out
