"""Pontos de entrada síncronos das varreduras e do atlas."""

import asyncio
import csv
import json
import logging
from typing import Iterable, Optional, Sequence, TextIO

from ..config import Settings
from ..group_core import GroupSpec
from .models import (
    AtlasSummary,
    CheckName,
    ClassCounts,
    OutputFormat,
    SweepConfig,
    SweepMode,
    SweepReport,
)
from .orchestrator import SweepOrchestrator

logger = logging.getLogger(__name__)

ATLAS_COLUMNS = ("group", "N", "total", "affine", "semiaffine", "midconvex",
                 "failures", "seconds")


def _run(config: SweepConfig, settings: Optional[Settings]) -> SweepReport:
    return asyncio.run(SweepOrchestrator(settings).run(config))


def exhaustive_verify(
    config: SweepConfig, settings: Optional[Settings] = None
) -> SweepReport:
    """Verifica todos os subconjuntos do intervalo ``[lo, hi)`` de ``config``.

    Raises:
        ValueError: Se ``config`` não está no modo exaustivo
        CapExceededError: Se ``|G|`` excede o limite exaustivo
    """
    if config.mode != SweepMode.EXHAUSTIVE:
        raise ValueError("exhaustive_verify exige modo exaustivo")
    return _run(config, settings)


def random_verify(config: SweepConfig, settings: Optional[Settings] = None) -> SweepReport:
    """Verifica ``samples`` bitsets uniformes, determinísticos pela semente."""
    if config.mode != SweepMode.RANDOM:
        raise ValueError("random_verify exige modo aleatório")
    return _run(config, settings)


def count_classes(
    group: GroupSpec,
    workers: int = 1,
    dedupe_shifts: bool = False,
    settings: Optional[Settings] = None,
) -> ClassCounts:
    """Conta subconjuntos afins, semiafins e midconvexos (em G) de ``group``."""
    config = SweepConfig(group=group, workers=workers, checks=(),
                         dedupe_shifts=dedupe_shifts)
    return exhaustive_verify(config, settings).counts


def atlas_emit(
    groups: Iterable[GroupSpec],
    sink: TextIO,
    fmt: OutputFormat = OutputFormat.CSV,
    checks: Sequence[CheckName] = (CheckName.THEOREM,),
    workers: int = 1,
    include_timing: bool = True,
    settings: Optional[Settings] = None,
) -> AtlasSummary:
    """Varre cada grupo exaustivamente e escreve uma linha por grupo.

    Args:
        groups: Grupos na ordem de emissão
        sink: Destino de texto (arquivo ou stdout)
        fmt: ``csv`` com cabeçalho, ou ``json`` com um objeto por linha
        checks: Verificações aplicadas a cada subconjunto
        workers: Processos por varredura
        include_timing: Emitir a coluna ``seconds``

    Returns:
        AtlasSummary com linhas escritas e falhas somadas
    """
    writer = None
    if fmt == OutputFormat.CSV:
        writer = csv.DictWriter(sink, fieldnames=ATLAS_COLUMNS, lineterminator="\n")
        writer.writeheader()
    elif fmt != OutputFormat.JSON:
        raise ValueError(f"Formato de atlas não suportado: {fmt.value}")

    summary = AtlasSummary()
    for group in groups:
        config = SweepConfig(group=group, workers=workers, checks=tuple(checks))
        report = exhaustive_verify(config, settings)
        summary.rows += 1
        summary.failures += len(report.failures)
        row = report.atlas_row(include_timing)
        if writer is not None:
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
        else:
            sink.write(json.dumps(row) + "\n")
        sink.flush()
        logger.info(f"Atlas: {group.label} emitido")
    return summary
