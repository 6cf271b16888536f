"""Seeded random instances for property tests and the equivalence suites.

Everything is driven by an explicit ``random.Random`` so a seed reproduces an instance.
Entries are small integers with the occasional half, keeping exact arithmetic cheap.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .core import (
    Algebra, BilinearForm, Coalgebra, LinearMap, TwoTensor, contract, identity, nullspace,
    qarray, zeros,
)
from .constructions import special_left_alia, transport_algebra, transport_coalgebra

E = contract


def scalar(rng: random.Random, lo: int = -2, hi: int = 2, frac: float = 0.1):
    v = rng.randint(lo, hi)
    if rng.random() < frac:
        return Fraction(v, 2)
    return v


def matrix(rng: random.Random, n: int, m: int | None = None, density: float = 0.5) -> np.ndarray:
    m = n if m is None else m
    return qarray([[scalar(rng) if rng.random() < density else 0 for _ in range(m)]
                   for _ in range(n)], (n, m))


def linear_map(rng: random.Random, n: int, density: float = 0.5) -> LinearMap:
    return LinearMap(matrix(rng, n, density=density))


def two_tensor(rng: random.Random, n: int, antisymmetric: bool = False,
               density: float = 0.4) -> TwoTensor:
    t = matrix(rng, n, density=density)
    return TwoTensor(t - t.T if antisymmetric else t)


def bilinear_form(rng: random.Random, n: int, skew: bool = False, density: float = 0.4) -> BilinearForm:
    w = matrix(rng, n, density=density)
    return BilinearForm(w - w.T if skew else w)


def tensor3(rng: random.Random, n: int, density: float = 0.25) -> np.ndarray:
    return qarray([[[scalar(rng) if rng.random() < density else 0 for _ in range(n)]
                    for _ in range(n)] for _ in range(n)], (n, n, n))


def algebra(rng: random.Random, n: int, density: float = 0.25) -> Algebra:
    """Arbitrary structure constants; no law is expected to hold."""
    return Algebra(tensor3(rng, n, density))


def coalgebra(rng: random.Random, n: int, density: float = 0.25) -> Coalgebra:
    return Coalgebra(tensor3(rng, n, density))


def unimodular(rng: random.Random, n: int, steps: int = 4) -> np.ndarray:
    """Integer basis change with integer inverse: a product of elementary shears."""
    p = identity(n)
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        k = rng.choice((-1, 1))
        p[:, j] = p[:, j] + k * p[:, i]
    return p


# ---------------------------------------------------- commutative associative

def _truncated_poly(k: int, unital: bool) -> np.ndarray:
    """K[x]/(x^(k+1)) on 1, x, .., x^k, or its maximal ideal x, .., x^k."""
    lo = 0 if unital else 1
    powers = list(range(lo, k + 1))
    c = zeros((len(powers),) * 3)
    for a, pa in enumerate(powers):
        for b, pb in enumerate(powers):
            if pa + pb <= k:
                c[a, b, powers.index(pa + pb)] = 1
    return c


def _block_sum(blocks: list[np.ndarray]) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    c = zeros((n, n, n))
    at = 0
    for b in blocks:
        k = b.shape[0]
        c[at:at + k, at:at + k, at:at + k] = b
        at += k
    return c


def comm_assoc(rng: random.Random, max_dim: int = 4, mix: bool = True) -> Algebra:
    """Sums of truncated polynomial algebras, optionally in a shuffled basis."""
    target = rng.randint(1, max_dim)
    blocks = []
    left = target
    while left:
        unital = rng.random() < 0.5
        size = rng.randint(1, left)
        k = size - 1 if unital else size
        blocks.append(_truncated_poly(k, unital))
        left -= size
    A = Algebra(_block_sum(blocks))
    if mix:
        A = transport_algebra(A, unimodular(rng, A.dim))
    return A


def multiplication(A: Algebra, a: np.ndarray) -> np.ndarray:
    """Matrix of y -> a . y."""
    return E("i,ijk->kj", a, A.c)


def comm_assoc_nijenhuis(rng: random.Random, A: Algebra) -> LinearMap:
    """Multiplication by a random element plus a scalar, Nijenhuis for a commutative associative product."""
    a = qarray([scalar(rng) for _ in range(A.dim)])
    return LinearMap(multiplication(A, a) + scalar(rng) * identity(A.dim))


def commuting_map(rng: random.Random, f: LinearMap) -> LinearMap:
    """Random element of the commutant of f."""
    n = f.dim
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            # (f X - X f)[i, j] in the unknowns X[a, b] stored at a * n + b
            for a in range(n):
                row[a * n + j] += f.m[i, a]
                row[i * n + a] -= f.m[a, j]
            rows.append(row)
    basis = nullspace(qarray(rows))
    x = zeros(n * n)
    for v in basis:
        x = x + scalar(rng) * v
    return LinearMap(x.reshape(n, n))


class SpecialData(NamedTuple):
    base: Algebra
    f: LinearMap
    g: LinearMap


def special_data(rng: random.Random, max_dim: int = 4) -> SpecialData:
    A = comm_assoc(rng, max_dim)
    f = comm_assoc_nijenhuis(rng, A)
    return SpecialData(A, f, commuting_map(rng, f))


# ------------------------------------------------------------ left Alia

def _sl2() -> Algebra:
    c = zeros((3, 3, 3))
    c[0, 1, 1], c[1, 0, 1] = 2, -2
    c[0, 2, 2], c[2, 0, 2] = -2, 2
    c[1, 2, 0], c[2, 1, 0] = 1, -1
    return Algebra(c)


def left_alia(rng: random.Random, max_dim: int = 4) -> Algebra:
    """A left Alia algebra: special ones, sl2, abelian ones, all in a shuffled basis."""
    kind = rng.random()
    if kind < 0.7:
        A = comm_assoc(rng, max_dim, mix=False)
        A = special_left_alia(A, linear_map(rng, A.dim), linear_map(rng, A.dim))
    elif kind < 0.85 and max_dim >= 3:
        A = _sl2()
    else:
        A = Algebra.zero(rng.randint(1, max_dim))
    return transport_algebra(A, unimodular(rng, A.dim))


def sparse_antisymmetric(rng: random.Random, n: int, terms: int = 2) -> TwoTensor:
    """A few e_a ^ e_b terms; small supports solve the Yang-Baxter equation fairly often."""
    t = zeros((n, n))
    if n < 2:
        return TwoTensor(t)
    for _ in range(rng.randint(1, terms)):
        a, b = rng.sample(range(n), 2)
        k = scalar(rng, -1, 1, 0)
        t[a, b] += k
        t[b, a] -= k
    return TwoTensor(t)


# ------------------------------------------------------------ D-bialgebras

def _d_block(rng: random.Random):
    kind = rng.randrange(4)
    if kind == 0:          # truncated polynomial, zero coproduct
        c = _truncated_poly(rng.randint(0, 2), True)
        return c, zeros(c.shape)
    if kind == 1:          # zero product, coproduct dual to a truncated polynomial
        c = _truncated_poly(rng.randint(0, 2), True)
        return zeros(c.shape), c.transpose(2, 0, 1).copy()
    a = scalar(rng)
    c, d = zeros((2, 2, 2)), zeros((2, 2, 2))
    if kind == 2:          # e1 e1 = e2, delta(e1) = a e2 (x) e2
        c[0, 0, 1] = 1
        d[0, 1, 1] = a
    else:                  # e1 unit, e2 e2 = 0, delta(e2) = a e2 (x) e2
        c[0, 0, 0], c[0, 1, 1], c[1, 0, 1] = 1, 1, 1
        d[1, 1, 1] = a
    return c, d


def d_bialgebra(rng: random.Random, max_dim: int = 4) -> tuple[Algebra, Coalgebra]:
    """Commutative cocommutative D-bialgebras assembled from small blocks."""
    cs, ds, size = [], [], 0
    while True:
        c, d = _d_block(rng)
        if size + c.shape[0] > max_dim:
            if cs:
                break
            continue
        cs.append(c)
        ds.append(d)
        size += c.shape[0]
        if rng.random() < 0.5:
            break
    p = unimodular(rng, size)
    return (transport_algebra(Algebra(_block_sum(cs)), p),
            transport_coalgebra(Coalgebra(_block_sum(ds)), p))
