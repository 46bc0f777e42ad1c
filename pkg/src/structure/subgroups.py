"""Subgrupos: geração, enumeração e o critério de quociente sem ordem par."""

import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional

from ..group_core import (
    Element,
    GroupSpec,
    check_cap,
    element_at,
    group_table,
    index_of,
    validate_element,
)
from ..subsets import SubsetBits
from ..utils.errors import AmbientMismatchError
from .models import Subgroup

logger = logging.getLogger(__name__)


def _closure(G: GroupSpec, start: int, generators: List[int]) -> int:
    """Fecho por somas (work-list); em grupo finito isso já é o subgrupo gerado."""
    table = group_table(G)
    bits = start | 1
    pending = SubsetBits(group=G, bits=bits).members()
    while pending:
        h = pending.pop()
        row = table.add[h]
        for s in generators:
            t = row[s]
            if not (bits >> t) & 1:
                bits |= 1 << t
                pending.append(t)
    return bits


def cyclic_subgroup(G: GroupSpec, a: Element) -> Subgroup:
    """Subgrupo cíclico ``{n*a : 0 <= n < ord(a)}``."""
    validate_element(G, a)
    return Subgroup(
        bits=SubsetBits(group=G, bits=_closure(G, 1, [index_of(G, a)])),
        generators=(a,))


def subgroup_generated(G: GroupSpec, S: Iterable[Element]) -> Subgroup:
    """Menor subgrupo que contém S."""
    generators = list(S)
    for s in generators:
        validate_element(G, s)
    indices = [index_of(G, s) for s in generators]
    return Subgroup(bits=SubsetBits(group=G, bits=_closure(G, 1, indices)),
                    generators=tuple(generators))


def all_subgroups(G: GroupSpec, cap: Optional[int] = None) -> List[Subgroup]:
    """Todos os subgrupos de G, cada um uma vez, ordenados por (ordem, bitset).

    Raises:
        CapExceededError: Se ``|G|`` excede o limite exaustivo
    """
    check_cap(G, cap)
    return [Subgroup(bits=SubsetBits(group=G, bits=bits))
            for bits in _subgroup_bitsets(G)]


@lru_cache(maxsize=64)
def _subgroup_bitsets(G: GroupSpec) -> List[int]:
    # Cresce cada subgrupo conhecido por um gerador novo, deduplicando por bitset.
    found: Dict[int, None] = {1: None}
    frontier = [1]
    N = G.total_order
    while frontier:
        next_frontier = []
        for bits in frontier:
            for g in range(N):
                if (bits >> g) & 1:
                    continue
                grown = _closure(G, bits, [g])
                if grown not in found:
                    found[grown] = None
                    next_frontier.append(grown)
        frontier = next_frontier
    ordered = sorted(found, key=lambda b: (bin(b).count("1"), b))
    logger.debug(f"{G.label}: {len(ordered)} subgrupos")
    return ordered


def quotient_has_even_order_element(H: Subgroup, P: Subgroup) -> bool:
    """Decide se H/P tem elemento de ordem par.

    Usa o critério ``existe h em H - P com 2h em P``. Só vale para H finito: um
    grupo abeliano finito tem elemento de ordem par sse tem elemento de ordem 2
    (múltiplo ímpar apropriado), e os elementos de ordem 2 de H/P são
    exatamente as classes de tais h.

    Raises:
        AmbientMismatchError: Se P não está contido em H
    """
    if not P.is_subgroup_of(H):
        raise AmbientMismatchError(
            f"P = {P.members()} não está contido em H = {H.members()}")
    table = group_table(H.group)
    inner = P.bits.bits
    for h in H.members():
        if (inner >> h) & 1:
            continue
        if (inner >> table.double[h]) & 1:
            logger.debug(f"Elemento {element_at(H.group, h).coords} tem ordem 2 em H/P")
            return True
    return False
