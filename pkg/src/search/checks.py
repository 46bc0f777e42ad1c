"""Verificações por subconjunto executadas dentro de cada bloco da varredura.

As funções deste módulo rodam em processos filhos; recebem apenas tipos
serializáveis (ordens, sequências de bitsets, nomes de verificações).
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..group_core import GroupSpec, group_table
from ..structure import (
    check_lemma_one,
    check_lemma_two,
    check_periodic_classification,
    check_periodic_midconvex,
    verify_theorem,
)
from ..subsets import SubsetBits, is_affine, is_midconvex, is_semiaffine, shift_bits
from ..utils.errors import SemiaffineError
from ..zline import check_trace_equivalence
from .models import BlockResult, CheckName, ClassCounts, SweepFailure

logger = logging.getLogger(__name__)


def _theorem(X: SubsetBits, converse_cap: Optional[int]) -> List[str]:
    report = verify_theorem(X, converse_cap=converse_cap)
    return [f"{check.name}: {check.detail}" for check in report.failures()]


def _periodic(X: SubsetBits, converse_cap: Optional[int]) -> List[str]:
    return check_periodic_midconvex(X) + check_periodic_classification(X)


CHECK_RUNNERS: Dict[CheckName, Callable[[SubsetBits, Optional[int]], List[str]]] = {
    CheckName.THEOREM: _theorem,
    CheckName.LEMMA1: lambda X, _: check_lemma_one(X),
    CheckName.LEMMA2: lambda X, _: check_lemma_two(X),
    CheckName.T2: _periodic,
    CheckName.T1: lambda X, _: check_trace_equivalence(X),
}


def shift_orbit(bits: int, group: GroupSpec) -> Tuple[int, int]:
    """Representante canônico (menor bitset) e tamanho da órbita de translações."""
    table = group_table(group)
    orbit = {shift_bits(bits, row) for row in table.add}
    return min(orbit), len(orbit)


def classify_counts(X: SubsetBits, weight: int = 1) -> ClassCounts:
    """Contagens de um subconjunto, ponderadas pelo tamanho da órbita."""
    return ClassCounts(
        total=weight,
        affine=weight if is_affine(X) else 0,
        semiaffine=weight if is_semiaffine(X) else 0,
        midconvex=weight if is_midconvex(X) else 0,
    )


def check_subset(
    X: SubsetBits, checks: Sequence[CheckName], converse_cap: Optional[int]
) -> List[SweepFailure]:
    """Executa as verificações habilitadas num subconjunto."""
    failures = []
    for name in checks:
        try:
            problems = CHECK_RUNNERS[name](X, converse_cap)
        except SemiaffineError as e:
            problems = [f"erro: {e}"]
        for detail in problems:
            failures.append(SweepFailure(subset=X.bits, check=name.value, detail=detail))
    return failures


def evaluate_block(
    orders: Tuple[int, ...],
    subsets: Sequence[int],
    checks: Tuple[str, ...],
    converse_cap: Optional[int] = None,
    dedupe_shifts: bool = False,
) -> BlockResult:
    """Avalia um bloco de bitsets; com deduplicação, só os representantes contam.

    Args:
        orders: Ordens cíclicas do grupo
        subsets: Bitsets do bloco, em ordem
        checks: Nomes das verificações habilitadas
        converse_cap: Limite da busca exaustiva de decomposições
        dedupe_shifts: Pular bitsets que não são o menor da sua órbita

    Returns:
        BlockResult com contagens e falhas na ordem dos bitsets
    """
    group = GroupSpec(orders=orders)
    enabled = [CheckName(name) for name in checks]
    result = BlockResult()
    for bits in subsets:
        weight = 1
        if dedupe_shifts:
            representative, weight = shift_orbit(bits, group)
            if representative != bits:
                continue
        X = SubsetBits(group=group, bits=bits)
        result.checked += 1
        result.counts.merge(classify_counts(X, weight))
        result.failures.extend(check_subset(X, enabled, converse_cap))
    if result.failures:
        logger.warning(f"{len(result.failures)} falha(s) no bloco de {group.label}")
    return result
