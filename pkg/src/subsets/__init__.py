"""Subconjuntos como bitsets e os predicados definidores."""

from .bits import SubsetBits, difference_set, half_set, shift, shift_bits
from .literals import format_subset, parse_subset
from .predicates import (
    PredicateResult,
    Witness,
    WitnessKind,
    doubling_closed,
    half_masks,
    is_affine,
    is_midconvex,
    is_semiaffine,
    midconvex_in_masks,
    witness_reproduces,
)

__all__ = [
    "PredicateResult",
    "SubsetBits",
    "Witness",
    "WitnessKind",
    "difference_set",
    "doubling_closed",
    "format_subset",
    "half_masks",
    "half_set",
    "is_affine",
    "is_midconvex",
    "is_semiaffine",
    "midconvex_in_masks",
    "parse_subset",
    "shift",
    "shift_bits",
    "witness_reproduces",
]
