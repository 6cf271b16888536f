"""Exact scalars, structure-constant containers and elementary multilinear maps.

Every tensor is a numpy ``object`` array whose entries are exact rationals.
Integral entries are stored as plain ``int`` and everything else as
:class:`fractions.Fraction`; contractions over ints run roughly a hundred
times faster than over Fractions, so :func:`contract` demotes its output.

Conventions (1-based in reports, 0-based here):

* ``Algebra.c[i, j, k]``   -- coefficient of e_k in [e_i, e_j]
* ``Coalgebra.d[i, j, k]`` -- coefficient of e_j (x) e_k in Delta(e_i)
* ``LinearMap.m[i, j]``    -- coefficient of e_i in M(e_j)  (column convention)
* ``TwoTensor.t[i, j]``    -- coefficient of e_i (x) e_j
* ``BilinearForm.w[i, j]`` -- w(e_i, e_j)
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "AliaError", "DimensionError", "HypothesisError",
    "Algebra", "Coalgebra", "LinearMap", "TwoTensor", "BilinearForm",
    "Representation", "Residual", "Entry", "LawId",
    "as_scalar", "qarray", "zeros", "identity", "contract",
    "flip", "bracket_eval", "left_right_operators", "dual_map",
    "dualize_coalgebra", "dualize_algebra",
    "rank", "inverse", "nullspace", "thread_count", "parallel_map",
]


class AliaError(Exception):
    """Base error; ``code`` is a stable machine-readable tag."""

    code = "ALIA_ERROR"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class DimensionError(AliaError, ValueError):
    code = "DIMENSION_MISMATCH"


class HypothesisError(AliaError):
    """A construction or check was called outside its hypotheses.

    ``law`` names the first failing hypothesis and ``residual`` (when
    available) carries its nonzero coordinates.
    """

    def __init__(self, code: str, law: str, residual: "Residual | None" = None):
        super().__init__(f"{code}: hypothesis '{law}' fails", code)
        self.law = law
        self.residual = residual


# ---------------------------------------------------------------- scalars

def as_scalar(x) -> int | Fraction:
    """Exact rational from an int, Fraction, or string like ``'-3/4'``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_scalar(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return as_scalar(Fraction(x.strip()))
    if isinstance(x, np.integer):
        return int(x)
    raise TypeError(f"not an exact rational: {x!r}")


_demote = np.frompyfunc(as_scalar, 1, 1)


def qarray(data, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Object array of exact scalars; floats are rejected."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    if arr.size:
        arr = _demote(arr).astype(object)
    return arr


def zeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(0)
    return arr


def identity(n: int) -> np.ndarray:
    arr = zeros((n, n))
    for i in range(n):
        arr[i, i] = 1
    return arr


def contract(subscripts: str, *operands: np.ndarray) -> np.ndarray:
    """``einsum`` over exact entries, contracted pairwise, demoted after."""
    out = np.einsum(subscripts, *operands, optimize=len(operands) > 2)
    if isinstance(out, np.ndarray):
        return qarray(out) if out.size else zeros(out.shape)
    return as_scalar(out)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _square(m: np.ndarray, what: str) -> int:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"{what} must be square, got shape {m.shape}")
    return m.shape[0]


def _check_dims(*pairs: tuple[str, int]) -> int:
    dims = {d for _, d in pairs}
    if len(dims) > 1:
        desc = ", ".join(f"{n}={d}" for n, d in pairs)
        raise DimensionError(f"dimension mismatch: {desc}")
    return pairs[0][1]


# ------------------------------------------------------------------ types

@dataclass(frozen=True, eq=False)
class _Tensor:
    def _data(self) -> np.ndarray:
        raise NotImplementedError

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        a, b = self._data(), other._data()
        return a.shape == b.shape and bool(np.all(a == b))

    def __hash__(self):
        a = self._data()
        return hash((type(self).__name__, a.shape, tuple(a.flat)))


@dataclass(frozen=True, eq=False)
class Algebra(_Tensor):
    """Bilinear product given by structure constants; no law assumed."""

    c: np.ndarray

    def __post_init__(self):
        c = qarray(self.c)
        if c.ndim != 3 or len(set(c.shape)) > 1:
            raise DimensionError(f"structure constants must be n x n x n, got {c.shape}")
        object.__setattr__(self, "c", _frozen(c))

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @classmethod
    def zero(cls, n: int) -> "Algebra":
        return cls(zeros((n, n, n)))

    @classmethod
    def from_table(cls, n: int, table: dict) -> "Algebra":
        """``table[(i, j)] = {k: coeff}`` with 1-based indices."""
        c = zeros((n, n, n))
        for (i, j), img in table.items():
            for k, v in img.items():
                c[i - 1, j - 1, k - 1] = as_scalar(v)
        return cls(c)

    def _data(self):
        return self.c


@dataclass(frozen=True, eq=False)
class Coalgebra(_Tensor):
    """Comultiplication given by structure constants; no law assumed."""

    d: np.ndarray

    def __post_init__(self):
        d = qarray(self.d)
        if d.ndim != 3 or len(set(d.shape)) > 1:
            raise DimensionError(f"comultiplication must be n x n x n, got {d.shape}")
        object.__setattr__(self, "d", _frozen(d))

    @property
    def dim(self) -> int:
        return self.d.shape[0]

    @classmethod
    def zero(cls, n: int) -> "Coalgebra":
        return cls(zeros((n, n, n)))

    @classmethod
    def from_table(cls, n: int, table: dict) -> "Coalgebra":
        """``table[i] = {(j, k): coeff}`` with 1-based indices."""
        d = zeros((n, n, n))
        for i, img in table.items():
            for (j, k), v in img.items():
                d[i - 1, j - 1, k - 1] = as_scalar(v)
        return cls(d)

    def apply(self, x) -> np.ndarray:
        """Delta(x) as an n x n matrix of tensor coefficients."""
        return contract("i,ijk->jk", qarray(x), self.d)

    def _data(self):
        return self.d


@dataclass(frozen=True, eq=False)
class LinearMap(_Tensor):
    """Matrix in the column convention; may be rectangular (V -> A)."""

    m: np.ndarray

    def __post_init__(self):
        m = qarray(self.m)
        if m.ndim != 2:
            raise DimensionError(f"linear map must be a matrix, got {m.shape}")
        object.__setattr__(self, "m", _frozen(m))

    @property
    def dim(self) -> int:
        return _square(self.m, "linear map")

    @property
    def shape(self) -> tuple[int, int]:
        return self.m.shape

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(identity(n))

    @classmethod
    def zero(cls, n: int, cols: int | None = None) -> "LinearMap":
        return cls(zeros((n, n if cols is None else cols)))

    @classmethod
    def from_images(cls, n: int, images: dict, cols: int | None = None) -> "LinearMap":
        """``images[j] = {i: coeff}`` meaning M(e_j) = sum coeff e_i, 1-based."""
        m = zeros((n, n if cols is None else cols))
        for j, img in images.items():
            for i, v in img.items():
                m[i - 1, j - 1] = as_scalar(v)
        return cls(m)

    def __call__(self, x) -> np.ndarray:
        return contract("ij,j->i", self.m, qarray(x))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(contract("ij,jk->ik", self.m, other.m))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.m + other.m)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.m - other.m)

    def scale(self, k) -> "LinearMap":
        return LinearMap(self.m * as_scalar(k))

    def _data(self):
        return self.m


@dataclass(frozen=True, eq=False)
class TwoTensor(_Tensor):
    """Element r = sum t[i, j] e_i (x) e_j of A (x) A."""

    t: np.ndarray

    def __post_init__(self):
        t = qarray(self.t)
        _square(t, "two-tensor")
        object.__setattr__(self, "t", _frozen(t))

    @property
    def dim(self) -> int:
        return self.t.shape[0]

    @classmethod
    def from_terms(cls, n: int, terms: dict) -> "TwoTensor":
        """``terms[(i, j)] = coeff`` with 1-based indices."""
        t = zeros((n, n))
        for (i, j), v in terms.items():
            t[i - 1, j - 1] = as_scalar(v)
        return cls(t)

    def is_antisymmetric(self) -> bool:
        return bool(np.all(self.t + self.t.T == 0))

    def _data(self):
        return self.t


@dataclass(frozen=True, eq=False)
class BilinearForm(_Tensor):
    w: np.ndarray

    def __post_init__(self):
        w = qarray(self.w)
        _square(w, "bilinear form")
        object.__setattr__(self, "w", _frozen(w))

    @property
    def dim(self) -> int:
        return self.w.shape[0]

    @classmethod
    def from_terms(cls, n: int, terms: dict) -> "BilinearForm":
        w = zeros((n, n))
        for (i, j), v in terms.items():
            w[i - 1, j - 1] = as_scalar(v)
        return cls(w)

    def __call__(self, x, y):
        return contract("i,ij,j->", qarray(x), self.w, qarray(y))

    def is_skew(self) -> bool:
        return bool(np.all(self.w + self.w.T == 0))

    def is_symmetric(self) -> bool:
        return bool(np.all(self.w == self.w.T))

    def is_nondegenerate(self) -> bool:
        return rank(self.w) == self.dim

    def _data(self):
        return self.w


@dataclass(frozen=True, eq=False)
class Representation(_Tensor):
    """Pair of action maps; ``ell[i]``/``arr[i]`` are the m x m matrices of e_i.

    ``arr`` stands for the right action so it never collides with an
    element r of A (x) A.
    """

    ell: np.ndarray
    arr: np.ndarray

    def __post_init__(self):
        ell, arr = qarray(self.ell), qarray(self.arr)
        if ell.ndim != 3 or ell.shape != arr.shape or ell.shape[1] != ell.shape[2]:
            raise DimensionError(f"representation blocks must be n x m x m, got {ell.shape} / {arr.shape}")
        object.__setattr__(self, "ell", _frozen(ell))
        object.__setattr__(self, "arr", _frozen(arr))

    @property
    def alg_dim(self) -> int:
        return self.ell.shape[0]

    @property
    def rep_dim(self) -> int:
        return self.ell.shape[1]

    @classmethod
    def zero(cls, n: int, m: int) -> "Representation":
        return cls(zeros((n, m, m)), zeros((n, m, m)))

    def left(self, x) -> np.ndarray:
        """Matrix of ell(x) for a vector x of A."""
        return contract("i,ipq->pq", qarray(x), self.ell)

    def right(self, x) -> np.ndarray:
        return contract("i,ipq->pq", qarray(x), self.arr)

    def _data(self):
        return np.stack([self.ell, self.arr]) if self.ell.size else self.ell


# -------------------------------------------------------------- residuals

class LawId(str, enum.Enum):
    LEFT_ALIA = "left-alia"
    ASSOCIATIVE = "associative"
    COMMUTATIVE = "commutative"
    COASSOCIATIVE = "coassociative"
    COCOMMUTATIVE = "cocommutative"
    NIJENHUIS_ALGEBRA = "nijenhuis-algebra"
    LEFT_ALIA_COALGEBRA = "left-alia-coalgebra"
    NIJENHUIS_COALGEBRA = "nijenhuis-coalgebra"
    REPRESENTATION = "representation"
    NIJENHUIS_REPRESENTATION = "nijenhuis-representation"
    ADMISSIBLE = "admissible"
    ADJOINT_ADMISSIBLE = "adjoint-admissible"
    COADJOINT_ADMISSIBLE = "coadjoint-admissible"
    BIALGEBRA_COMPAT = "bialgebra"
    NIJ_LEFT_ALIA_BIALGEBRA = "nijenhuis-bialgebra"
    QUADRATIC = "quadratic"
    SYMPLECTIC = "symplectic"
    COSYMPLECTIC = "cosymplectic"
    D_BIALGEBRA = "d-bialgebra"
    NIJENHUIS_D_COMPAT = "nijenhuis-d-compat"
    SPECIAL_BIALGEBRA = "special-bialgebra"
    MATCHED_PAIR = "matched-pair"
    ALIA_YBE = "ybe"
    PROP33 = "ybe-coproduct"
    S_ADMISSIBLE = "s-admissible"
    PROP37 = "r-nijenhuis-coproduct"
    RELATIVE_ROTA_BAXTER = "rota-baxter"
    WEAK_RRB = "weak-rota-baxter"
    SEMIDIRECT_ADMISSIBLE = "semidirect-admissible"
    CO_YBE = "co-ybe"
    PROP53 = "co-ybe-bracket"

    def __str__(self):
        return self.value


class Entry(NamedTuple):
    part: str
    index: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class Residual:
    """Nonzero coordinates of LHS - RHS of a law; empty means the law holds."""

    law: LawId
    entries: tuple[Entry, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.entries

    def __bool__(self):
        return self.passed

    def parts(self) -> list[str]:
        return sorted({e.part for e in self.entries})

    def part(self, name: str) -> "Residual":
        return Residual(self.law, tuple(e for e in self.entries if e.part == name))

    @classmethod
    def from_parts(cls, law: LawId, parts: Iterable[tuple[str, np.ndarray]]) -> "Residual":
        entries: list[Entry] = []
        for name, tensor in parts:
            entries.extend(tensor_entries(name, tensor))
        return cls(law, tuple(entries))

    @classmethod
    def combine(cls, law: LawId, subs: Iterable[tuple[str, "Residual"]]) -> "Residual":
        entries = []
        for tag, res in subs:
            for e in res.entries:
                entries.append(Entry(f"{tag}/{e.part}" if e.part else tag, e.index, e.value))
        return cls(law, tuple(entries))


def tensor_entries(part: str, tensor) -> list[Entry]:
    tensor = np.asarray(tensor, dtype=object)
    if tensor.ndim == 0:
        v = tensor.item()
        return [] if v == 0 else [Entry(part, (), Fraction(v))]
    if tensor.size == 0:
        return []
    mask = (tensor != 0).astype(bool)
    return [Entry(part, tuple(int(i) for i in idx), Fraction(tensor[tuple(idx)]))
            for idx in np.argwhere(mask)]


# ---------------------------------------------------------------- threads

def thread_count() -> int:
    """Worker cap from ``ALIA_THREADS`` (default 1)."""
    raw = os.environ.get("ALIA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Order-preserving map; threaded when ``ALIA_THREADS`` > 1."""
    items = list(items)
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ------------------------------------------------------- exact lin. alg.

def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[Fraction(v) for v in r] for r in rows]
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                k = rows[i][col]
                rows[i] = [a - k * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m) -> int:
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return 0
    return len(_rref(m.tolist())[1])


def inverse(m) -> np.ndarray:
    m = np.asarray(m, dtype=object)
    n = _square(m, "matrix")
    aug = [list(m[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    red, piv = _rref(aug)
    if piv[:n] != list(range(n)):
        raise AliaError("matrix is singular", "SINGULAR")
    return qarray([row[n:] for row in red], (n, n))


def nullspace(m) -> list[np.ndarray]:
    """Basis of {x : m x = 0}."""
    m = np.asarray(m, dtype=object)
    ncols = m.shape[1]
    red, piv = _rref(m.tolist()) if m.shape[0] else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(qarray(v))
    return basis


# ------------------------------------------------------------- operations

def flip(r: TwoTensor) -> TwoTensor:
    """The flip tau on A (x) A."""
    return TwoTensor(r.t.T.copy())


def bracket_eval(A: Algebra, x, y) -> np.ndarray:
    x, y = qarray(x), qarray(y)
    if x.shape != (A.dim,) or y.shape != (A.dim,):
        raise DimensionError(f"vectors must have length {A.dim}")
    return contract("i,j,ijk->k", x, y, A.c)


def left_right_operators(A: Algebra) -> Representation:
    """Adjoint representation: L(e_i) e_j = [e_i, e_j] = R(e_j) e_i."""
    ell = np.transpose(A.c, (0, 2, 1)).copy()
    arr = np.transpose(A.c, (1, 2, 0)).copy()
    return Representation(ell, arr)


def dual_map(M: LinearMap) -> LinearMap:
    """Plain dual <M*(a), v> = <a, M v>: the transpose."""
    return LinearMap(M.m.T.copy())


def dualize_coalgebra(C: Coalgebra) -> Algebra:
    """Bracket on A* with <[a, b], x> = <a (x) b, Delta(x)>."""
    return Algebra(np.transpose(C.d, (1, 2, 0)).copy())


def dualize_algebra(A: Algebra) -> Coalgebra:
    return Coalgebra(np.transpose(A.c, (2, 0, 1)).copy())
