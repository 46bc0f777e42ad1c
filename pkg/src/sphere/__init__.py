"""Correspondência métrica: 1-esfericidade de pontos racionais na reta."""

from .line import (
    LatticeNormalization,
    LinePointSet,
    LineResult,
    LineWitness,
    SphereSweepReport,
    equivalence_sweep_integers,
    equivalence_sweep_random,
    format_point,
    is_1_spherical,
    max_spherical_size,
    parse_points,
    semiaffine_on_line,
    to_integer_lattice,
)

__all__ = [
    "LatticeNormalization",
    "LinePointSet",
    "LineResult",
    "LineWitness",
    "SphereSweepReport",
    "equivalence_sweep_integers",
    "equivalence_sweep_random",
    "format_point",
    "is_1_spherical",
    "max_spherical_size",
    "parse_points",
    "semiaffine_on_line",
    "to_integer_lattice",
]
