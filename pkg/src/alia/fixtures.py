"""Named structures from the worked examples, plus a few standard test algebras."""

from __future__ import annotations

from typing import Callable

from .core import AliaError, Algebra, BilinearForm, Coalgebra, LinearMap, TwoTensor, as_scalar


def fix_a4() -> Algebra:
    return Algebra.from_table(4, {(3, 1): {1: 1}, (4, 1): {3: 1}})


def fix_n4() -> LinearMap:
    return LinearMap.from_images(4, {1: {1: 1}, 2: {1: 1, 2: 1}, 3: {3: 1}, 4: {4: 1}})


def fix_d4() -> Coalgebra:
    return Coalgebra.from_table(4, {3: {(1, 2): -1}, 4: {(3, 2): -1}})


def fix_s4() -> LinearMap:
    return LinearMap.from_images(4, {1: {1: 1}, 2: {2: 1, 1: -1}, 3: {3: 1}, 4: {4: 1, 1: -1}})


def fix_r12() -> TwoTensor:
    return TwoTensor.from_terms(4, {(1, 2): 1, (2, 1): -1})


def fix_r23() -> TwoTensor:
    return TwoTensor.from_terms(4, {(2, 3): 1, (3, 2): -1})


def fix_d5() -> Coalgebra:
    return Coalgebra.from_table(4, {1: {(1, 2): -1, (2, 1): -1}})


def fix_w4(lam) -> BilinearForm:
    lam = as_scalar(lam)
    return BilinearForm.from_terms(4, {(2, 4): lam, (4, 2): -lam})


def fix_nl(lam) -> LinearMap:
    return LinearMap.from_images(4, {4: {3: -as_scalar(lam)}})


def fix_dual2() -> Algebra:
    """K[t]/(t^2) on the basis 1, t."""
    return Algebra.from_table(2, {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}})


def fix_ab2() -> tuple[Algebra, TwoTensor]:
    return Algebra.zero(2), TwoTensor.from_terms(2, {(1, 2): 1, (2, 1): -1})


def fix_sl2() -> Algebra:
    """Basis (h, e, f)."""
    return Algebra.from_table(3, {
        (1, 2): {2: 2}, (2, 1): {2: -2},
        (1, 3): {3: -2}, (3, 1): {3: 2},
        (2, 3): {1: 1}, (3, 2): {1: -1},
    })


_CATALOG: dict[str, Callable[..., object]] = {
    "FIX_A4": fix_a4,
    "FIX_N4": fix_n4,
    "FIX_D4": fix_d4,
    "FIX_S4": fix_s4,
    "FIX_r12": fix_r12,
    "FIX_r23": fix_r23,
    "FIX_D5": fix_d5,
    "FIX_W4": fix_w4,
    "FIX_NL": fix_nl,
    "FIX_DUAL2": fix_dual2,
    "FIX_AB2": fix_ab2,
    "FIX_SL2": fix_sl2,
}

PARAMETRIZED = frozenset({"FIX_W4", "FIX_NL"})


def fixture_names() -> list[str]:
    return list(_CATALOG)


def fixture(name: str, *params):
    """Look up a fixture by catalog name; ``FIX_W4`` and ``FIX_NL`` take lambda."""
    try:
        build = _CATALOG[name]
    except KeyError:
        raise AliaError(f"unknown fixture {name!r}", "UNKNOWN_FIXTURE") from None
    if name in PARAMETRIZED:
        if len(params) != 1:
            raise AliaError(f"{name} takes exactly one parameter", "UNKNOWN_FIXTURE")
        return build(params[0])
    if params:
        raise AliaError(f"{name} takes no parameters", "UNKNOWN_FIXTURE")
    return build()
