"""Exact structure-constant toolkit for left Alia algebras, coalgebras and bialgebras."""

from .core import (
    AliaError, Algebra, BilinearForm, Coalgebra, DimensionError, HypothesisError, LawId,
    LinearMap, Representation, Residual, TwoTensor,
)

__all__ = [
    "AliaError", "Algebra", "BilinearForm", "Coalgebra", "DimensionError", "HypothesisError",
    "LawId", "LinearMap", "Representation", "Residual", "TwoTensor",
]
__version__ = "0.1.0"
