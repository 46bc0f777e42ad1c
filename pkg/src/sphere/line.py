"""Conjuntos finitos de pontos racionais na reta: 1-esfericidade e semiafinidade.

Um espaço métrico é 1-esférico se para quaisquer a, b, c existe x com
``d(c, x) = d(a, b)``; na reta isso equivale a ser semiafim no grupo aditivo.
Toda a aritmética é exata (``fractions.Fraction``).

Consequência do teorema principal, aqui apenas validada exaustivamente: um
subconjunto finito 1-esférico da reta tem no máximo 2 pontos. No caso de duas
classes laterais, H finito em R é trivial; no caso ``(H - C) + g`` com X finito
e não vazio, H = X - X é infinito e C é cofinito em H, mas um subconjunto
cofinito próprio de uma cópia de Z não é midconvexo (tome m ausente e m ± t
presentes para t grande).
"""

import logging
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple, TypeVar, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..utils.errors import ParseError

logger = logging.getLogger(__name__)

Number = TypeVar("Number", int, Fraction)


class LinePointSet(BaseModel):
    """Conjunto finito de racionais, ordenado e sem repetições."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: Tuple[Fraction, ...] = Field(
        default=(), description="Pontos em ordem crescente")

    @field_validator("points", mode="before")
    @classmethod
    def _canonical(
        cls, value: Iterable[Union[int, str, Fraction]]
    ) -> Tuple[Fraction, ...]:
        return tuple(sorted({Fraction(v) for v in value}))

    @classmethod
    def of(cls, *points: Union[int, str, Fraction]) -> "LinePointSet":
        return cls(points=points)

    def __len__(self) -> int:
        return len(self.points)


class LineWitness(BaseModel):
    """Tripla violadora (a, b, c) ou (x, y, z)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    elements: Tuple[Fraction, Fraction, Fraction] = Field(
        ..., description="Tripla violadora")


class LineResult(BaseModel):
    """Veredito de um predicado na reta, com testemunha quando falso."""

    model_config = ConfigDict(frozen=True)

    holds: bool = Field(..., description="Se o predicado vale")
    witness: Optional[LineWitness] = Field(default=None, description="Violação")

    def __bool__(self) -> bool:
        return self.holds


class LatticeNormalization(BaseModel):
    """Mapa afim ``p -> (p - offset) * scale`` levando P a inteiros >= 0."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: Tuple[int, ...] = Field(..., description="S, com min S = 0")
    scale: Fraction = Field(..., description="mmc dos denominadores")
    offset: Fraction = Field(..., description="min P")

    def invert(self, s: int) -> Fraction:
        return Fraction(s) / self.scale + self.offset


class SphereSweepReport(BaseModel):
    """Resultado de uma varredura de equivalência na reta."""

    checked: int = Field(default=0, description="Conjuntos verificados")
    disagreements: List[List[str]] = Field(
        default_factory=list, description="Conjuntos em que os predicados diferem")
    largest_spherical: int = Field(
        default=0, description="Maior conjunto 1-esférico encontrado")

    @property
    def passed(self) -> bool:
        return not self.disagreements


def parse_points(text: str) -> LinePointSet:
    """Lê racionais separados por vírgula, como ``0,1/2,3``.

    Raises:
        ParseError: Se algum token não é racional
    """
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(Fraction(token))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Ponto inválido: '{token}'", token=token) from e
    return LinePointSet(points=values)


def format_point(p: Fraction) -> Union[int, str]:
    """Inteiro quando possível, senão ``"n/d"``."""
    return p.numerator if p.denominator == 1 else str(p)


def _spherical_violation(points: Sequence[Number]) -> Optional[Tuple[Number, ...]]:
    members = set(points)
    for a in points:
        for b in points:
            distance = abs(a - b)
            for c in points:
                if c + distance not in members and c - distance not in members:
                    return (a, b, c)
    return None


def _semiaffine_violation(points: Sequence[Number]) -> Optional[Tuple[Number, ...]]:
    members = set(points)
    for z in points:
        for x in points:
            for y in points:
                if x + y - z not in members and x - y + z not in members:
                    return (x, y, z)
    return None


def _result(violation: Optional[Tuple[Fraction, ...]]) -> LineResult:
    if violation is None:
        return LineResult(holds=True)
    a, b, c = violation
    return LineResult(holds=False, witness=LineWitness(elements=(a, b, c)))


def is_1_spherical(P: LinePointSet) -> LineResult:
    """Para todos a, b, c em P existe x em P com ``|c - x| = |a - b|``.

    A testemunha é a primeira tripla (a, b, c) em ordem lexicográfica sobre os
    pontos em ordem crescente.
    """
    return _result(_spherical_violation(P.points))


def semiaffine_on_line(P: LinePointSet) -> LineResult:
    """Para todos x, y, z em P, ``x+y-z`` ou ``x-y+z`` pertence a P.

    Varredura com z externo, depois x e y, como nos subconjuntos de grupos.
    """
    return _result(_semiaffine_violation(P.points))


def to_integer_lattice(P: LinePointSet) -> LatticeNormalization:
    """Normaliza P para inteiros não negativos com mínimo 0.

    Raises:
        ValueError: Se P é vazio
    """
    if not P.points:
        raise ValueError("Conjunto vazio não pode ser normalizado")
    scale = reduce(lcm, (p.denominator for p in P.points), 1)
    offset = P.points[0]
    points = tuple(int((p - offset) * scale) for p in P.points)
    return LatticeNormalization(points=points, scale=Fraction(scale), offset=offset)


def _compare(points: Sequence[Number]) -> Tuple[bool, bool]:
    return (_spherical_violation(points) is None,
            _semiaffine_violation(points) is None)


def equivalence_sweep_integers(lo: int, hi: int, max_size: int) -> SphereSweepReport:
    """Compara os dois predicados em todo subconjunto de ``[lo, hi]`` com até
    ``max_size`` pontos."""
    report = SphereSweepReport()
    window = range(lo, hi + 1)
    for size in range(0, max_size + 1):
        for points in combinations(window, size):
            spherical, semiaffine = _compare(points)
            report.checked += 1
            if spherical != semiaffine:
                report.disagreements.append([str(p) for p in points])
            elif spherical:
                report.largest_spherical = max(report.largest_spherical, size)
    logger.info(f"Varredura inteira [{lo}, {hi}]: {report.checked} conjuntos")
    return report


def equivalence_sweep_random(
    samples: int,
    seed: int,
    max_size: int = 6,
    max_denominator: int = 12,
    numerator_bound: int = 24,
) -> SphereSweepReport:
    """Compara os predicados em conjuntos racionais aleatórios reprodutíveis.

    O gerador é ``numpy.random.default_rng(seed)`` (PCG64). Cada amostra tem
    tamanho uniforme em ``[1, max_size]``, numeradores uniformes em
    ``[-numerator_bound, numerator_bound]`` e denominadores em
    ``[1, max_denominator]``.
    """
    rng = np.random.default_rng(seed)
    report = SphereSweepReport()
    for _ in range(samples):
        size = int(rng.integers(1, max_size + 1))
        numerators = rng.integers(-numerator_bound, numerator_bound + 1, size=size)
        denominators = rng.integers(1, max_denominator + 1, size=size)
        P = LinePointSet(points=[Fraction(int(n), int(d))
                                 for n, d in zip(numerators, denominators)])
        spherical, semiaffine = _compare(P.points)
        report.checked += 1
        if spherical != semiaffine:
            report.disagreements.append([str(p) for p in P.points])
        elif spherical:
            report.largest_spherical = max(report.largest_spherical, len(P))
    logger.info(f"Varredura aleatória (seed={seed}): {report.checked} conjuntos")
    return report


def max_spherical_size(lo: int, hi: int) -> int:
    """Maior subconjunto 1-esférico de ``[lo, hi]`` (busca exaustiva)."""
    best = 0
    window = list(range(lo, hi + 1))
    for size in range(1, len(window) + 1):
        found = any(_spherical_violation(points) is None
                    for points in combinations(window, size))
        if found:
            best = size
    return best
