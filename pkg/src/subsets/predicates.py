"""Predicados afim, semiafim e midconvexo, com extração de testemunhas.

Os laços percorrem apenas membros de X. A testemunha devolvida é a primeira
violação na ordem de varredura fixa: para triplas, ``z`` é o laço externo,
seguido de ``x`` e ``y``; para pares, ``x <= y`` em ordem lexicográfica. Todos
os elementos são referidos pelo índice misto.
"""

import logging
from enum import Enum
from typing import TYPE_CHECKING, Dict, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..group_core import group_table
from ..utils.errors import AmbientMismatchError
from .bits import SubsetBits, difference_set

if TYPE_CHECKING:
    from ..structure.models import Subgroup

logger = logging.getLogger(__name__)


class WitnessKind(str, Enum):
    """Tipo de violação registrada numa testemunha."""

    AFFINE = "affine-violation"
    SEMIAFFINE = "semiaffine-violation"
    MIDCONVEX = "midconvex-violation"
    DOUBLING = "doubling-violation"


class Witness(BaseModel):
    """Contraexemplo reprodutível para um predicado."""

    model_config = ConfigDict(frozen=True)

    kind: WitnessKind = Field(..., description="Predicado violado")
    elements: Tuple[int, ...] = Field(
        ..., description="Tupla violadora (x,y,z), (x,y) ou (a,)")
    missing: Tuple[int, ...] = Field(
        ..., description="Alvos ausentes do conjunto")

    def to_payload(self) -> Dict[str, object]:
        return {
            "kind": self.kind.value,
            "elements": list(self.elements),
            "missing": list(self.missing),
        }


class PredicateResult(BaseModel):
    """Resultado de um predicado: veredito e, se falso, a testemunha."""

    model_config = ConfigDict(frozen=True)

    holds: bool = Field(..., description="Se o predicado vale")
    witness: Optional[Witness] = Field(
        default=None, description="Primeira violação encontrada")

    def __bool__(self) -> bool:
        return self.holds

    def to_payload(self) -> Dict[str, object]:
        return {
            "holds": self.holds,
            "witness": self.witness.to_payload() if self.witness else None,
        }


_HOLDS = PredicateResult(holds=True)


def is_affine(X: SubsetBits) -> PredicateResult:
    """Verifica ``x + y - z`` em X para todos ``x, y, z`` em X."""
    table = group_table(X.group)
    bits = X.bits
    members = X.members()
    for z in members:
        for x in members:
            row = table.add[x]
            for y in members:
                target = row[table.sub[y][z]]
                if not (bits >> target) & 1:
                    return PredicateResult(holds=False, witness=Witness(
                        kind=WitnessKind.AFFINE,
                        elements=(x, y, z), missing=(target,)))
    return _HOLDS


def is_semiaffine(X: SubsetBits) -> PredicateResult:
    """Verifica que ``{x+y-z, x-y+z}`` intersecta X para todos ``x, y, z`` em X."""
    table = group_table(X.group)
    bits = X.bits
    members = X.members()
    for z in members:
        for x in members:
            plus = table.add[x]
            minus = table.sub[x]
            for y in members:
                d = table.sub[y][z]
                first = plus[d]
                if (bits >> first) & 1:
                    continue
                second = minus[d]
                if not (bits >> second) & 1:
                    return PredicateResult(holds=False, witness=Witness(
                        kind=WitnessKind.SEMIAFFINE,
                        elements=(x, y, z), missing=(first, second)))
    return _HOLDS


def half_masks(ambient: SubsetBits) -> Dict[int, int]:
    """Mapa ``s -> bitset de {z no ambiente : 2z = s}``."""
    table = group_table(ambient.group)
    masks: Dict[int, int] = {}
    for z in ambient.members():
        s = table.double[z]
        masks[s] = masks.get(s, 0) | (1 << z)
    return masks


def is_midconvex(
    X: SubsetBits, ambient: Optional[Union[SubsetBits, "Subgroup"]] = None
) -> PredicateResult:
    """Verifica que ``(x+y)/2``, calculado no ambiente, está contido em X.

    Args:
        X: Conjunto a testar, contido no ambiente
        ambient: Subgrupo H onde os meios-conjuntos são calculados;
            ``None`` significa o grupo inteiro

    Raises:
        AmbientMismatchError: Se X não está contido no ambiente
    """
    if ambient is None:
        ambient_bits = SubsetBits.full(X.group)
    elif isinstance(ambient, SubsetBits):
        ambient_bits = ambient
    else:
        ambient_bits = ambient.bits
    if ambient_bits.group != X.group or X.bits & ~ambient_bits.bits:
        raise AmbientMismatchError(
            f"Conjunto {X.members()} não está contido no ambiente "
            f"{ambient_bits.members()}")
    return midconvex_in_masks(X, half_masks(ambient_bits))


def midconvex_in_masks(X: SubsetBits, masks: Dict[int, int]) -> PredicateResult:
    """Núcleo de :func:`is_midconvex` com meios-conjuntos pré-calculados."""
    table = group_table(X.group)
    bits = X.bits
    members = X.members()
    for i, x in enumerate(members):
        row = table.add[x]
        for y in members[i:]:
            outside = masks.get(row[y], 0) & ~bits
            if outside:
                midpoint = (outside & -outside).bit_length() - 1
                return PredicateResult(holds=False, witness=Witness(
                    kind=WitnessKind.MIDCONVEX,
                    elements=(x, y), missing=(midpoint,)))
    return _HOLDS


def doubling_closed(X: SubsetBits) -> PredicateResult:
    """Verifica ``2a`` em X-X para todo ``a`` em X-X; a testemunha traz o violador."""
    table = group_table(X.group)
    diff = difference_set(X).bits
    for a in SubsetBits(group=X.group, bits=diff).members():
        doubled = table.double[a]
        if not (diff >> doubled) & 1:
            return PredicateResult(holds=False, witness=Witness(
                kind=WitnessKind.DOUBLING, elements=(a,), missing=(doubled,)))
    return _HOLDS


def witness_reproduces(X: SubsetBits, witness: Witness) -> bool:
    """Reavalia a condição definidora sobre a testemunha.

    Returns:
        True se a violação descrita pela testemunha ocorre de fato em X
    """
    table = group_table(X.group)
    bits = X.bits

    def inside(i: int) -> bool:
        return bool((bits >> i) & 1)

    if witness.kind == WitnessKind.DOUBLING:
        (a,) = witness.elements
        diff = difference_set(X).bits
        return bool((diff >> a) & 1) and not (diff >> table.double[a]) & 1
    if not all(inside(e) for e in witness.elements):
        return False
    if witness.kind == WitnessKind.MIDCONVEX:
        x, y = witness.elements
        (m,) = witness.missing
        return table.double[m] == table.add[x][y] and not inside(m)
    x, y, z = witness.elements
    d = table.sub[y][z]
    if witness.kind == WitnessKind.AFFINE:
        return not inside(table.add[x][d])
    return not inside(table.add[x][d]) and not inside(table.sub[x][d])
