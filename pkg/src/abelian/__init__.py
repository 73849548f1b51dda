"""Abelian group algebra module."""

from src.abelian.fg_abelian import (
    INFINITE,
    CentralVector,
    CyclicOrder,
    Factor,
    FgAbelian,
    abelian_iso,
    adapted_basis,
    central_order,
    invariant_factors,
    primary_split,
)
from src.abelian.smith_form import SmithNormalForm, smith_normal_form

__all__ = [
    "INFINITE",
    "CentralVector",
    "CyclicOrder",
    "Factor",
    "FgAbelian",
    "SmithNormalForm",
    "abelian_iso",
    "adapted_basis",
    "central_order",
    "invariant_factors",
    "primary_split",
    "smith_normal_form",
]
