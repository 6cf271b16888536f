"""Certifying that a residual vanishes for every parameter value.

Residual coordinates are polynomials in the file parameters.  A polynomial in
k variables whose degree in each variable is at most D vanishes identically
once it vanishes on a grid of D + 1 distinct values per variable, so the check
needs no symbolic arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .core import LawId, Residual, parallel_map

SAMPLE_POINTS = (0, 1, 2, 3, 5)
DEFAULT_BOUND = len(SAMPLE_POINTS) - 1

CERTIFIED = "CERTIFIED_ALL_PARAMS"
FAILED = "FAILED"

# Largest number of file-supplied factors multiplied together in one term of each law.
LAW_FACTORS: dict[LawId, int] = {
    LawId.LEFT_ALIA: 2, LawId.ASSOCIATIVE: 2, LawId.COMMUTATIVE: 1,
    LawId.COASSOCIATIVE: 2, LawId.COCOMMUTATIVE: 1,
    LawId.NIJENHUIS_ALGEBRA: 3, LawId.LEFT_ALIA_COALGEBRA: 2, LawId.NIJENHUIS_COALGEBRA: 3,
    LawId.REPRESENTATION: 2, LawId.NIJENHUIS_REPRESENTATION: 3, LawId.ADMISSIBLE: 3,
    LawId.ADJOINT_ADMISSIBLE: 3, LawId.COADJOINT_ADMISSIBLE: 3,
    LawId.BIALGEBRA_COMPAT: 2, LawId.NIJ_LEFT_ALIA_BIALGEBRA: 3,
    LawId.QUADRATIC: 2, LawId.SYMPLECTIC: 2, LawId.COSYMPLECTIC: 2,
    LawId.D_BIALGEBRA: 2, LawId.NIJENHUIS_D_COMPAT: 3, LawId.SPECIAL_BIALGEBRA: 4,
    LawId.MATCHED_PAIR: 3,
    LawId.ALIA_YBE: 3, LawId.PROP33: 3, LawId.S_ADMISSIBLE: 2, LawId.PROP37: 4,
    LawId.RELATIVE_ROTA_BAXTER: 3, LawId.WEAK_RRB: 3, LawId.SEMIDIRECT_ADMISSIBLE: 3,
    LawId.CO_YBE: 3, LawId.PROP53: 3,
}


def degree_bound(law: LawId, coefficient_degree: int) -> int:
    """Bound on the per-parameter degree of every residual coordinate, never below 4."""
    return max(DEFAULT_BOUND, LAW_FACTORS[law] * coefficient_degree)


def sample_points(bound: int) -> tuple[int, ...]:
    """The five standard points, extended by primes when the bound exceeds 4."""
    pts = list(SAMPLE_POINTS)
    k = pts[-1]
    while len(pts) < bound + 1:
        k += 1
        if all(k % p for p in range(2, int(k ** 0.5) + 1)):
            pts.append(k)
    return tuple(pts)


@dataclass(frozen=True)
class PointResult:
    binding: tuple[tuple[str, Fraction], ...]
    residual: Residual


@dataclass(frozen=True)
class Certification:
    law: str
    params: tuple[str, ...]
    bound: int
    points: tuple[int, ...]
    runs: tuple[PointResult, ...]

    @property
    def passed(self) -> bool:
        return all(run.residual.passed for run in self.runs)

    @property
    def status(self) -> str:
        return CERTIFIED if self.passed else FAILED

    @property
    def witness(self) -> PointResult | None:
        return next((run for run in self.runs if not run.residual.passed), None)


def grid(params: Sequence[str], points: Sequence[int],
         fixed: Mapping[str, Fraction] | None = None) -> list[dict[str, Fraction]]:
    """Every assignment of sample points to the free parameters, in lexicographic order."""
    fixed = dict(fixed or {})
    free = [p for p in params if p not in fixed]
    out = []
    for combo in itertools.product(points, repeat=len(free)):
        b = dict(fixed)
        b.update({p: Fraction(v) for p, v in zip(free, combo)})
        out.append(b)
    return out


def certify(evaluate: Callable[[dict[str, Fraction]], Residual], params: Sequence[str],
            law: str, bound: int = DEFAULT_BOUND,
            fixed: Mapping[str, Fraction] | None = None) -> Certification:
    """Evaluate at every grid point; parameters in ``fixed`` are held at their given value."""
    pts = sample_points(bound)
    bindings = grid(params, pts, fixed)
    residuals = parallel_map(evaluate, bindings)
    runs = tuple(PointResult(tuple((p, b[p]) for p in params), res)
                 for b, res in zip(bindings, residuals))
    return Certification(law, tuple(params), bound, pts, runs)
