"""
Orquestrador das varreduras exaustivas e aleatórias de subconjuntos.
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from typing import List, Optional, Sequence

import numpy as np

from ..config import Settings, get_settings
from ..utils.errors import CapExceededError
from .checks import evaluate_block
from .models import BlockResult, CheckName, SweepConfig, SweepMode, SweepReport

logger = logging.getLogger(__name__)

BLOCKS_PER_WORKER = 4


class SweepOrchestrator:
    """
    Divide o intervalo de subconjuntos em blocos contíguos e os avalia,
    em paralelo quando há mais de um processo, consolidando os resultados
    na ordem dos blocos.
    """

    def __init__(self, settings: Optional[Settings] = None):
        """
        Inicializa o orquestrador.

        Args:
            settings: Limites da busca; usa as configurações globais por padrão
        """
        self.settings = settings or get_settings()

    async def run(self, config: SweepConfig) -> SweepReport:
        """
        Executa a varredura descrita por ``config``.

        Args:
            config: Grupo, intervalo, modo e verificações

        Returns:
            Relatório com contagens, falhas e tempo de parede

        Raises:
            CapExceededError: Se o grupo excede o limite do modo escolhido
        """
        start_time = datetime.now()
        group = config.group
        logger.info(f"Iniciando varredura {config.mode.value} em {group.label}")

        subsets = self._plan(config)
        try:
            blocks = self._split(subsets, config.workers)
            results = await self._execute(config, blocks)
            report = SweepReport(group=group.label, order=group.total_order,
                                 mode=config.mode)
            for result in results:
                report.checked += result.checked
                report.counts.merge(result.counts)
                report.failures.extend(result.failures)
            report.seconds = (datetime.now() - start_time).total_seconds()
            logger.info(
                f"Varredura de {group.label} concluída em {report.seconds:.2f}s: "
                f"{report.checked} verificados, {len(report.failures)} falhas")
            return report

        except Exception as e:
            logger.error(f"Erro na varredura de {group.label}: {str(e)}")
            raise

    def _plan(self, config: SweepConfig) -> Sequence[int]:
        """Bitsets a verificar, na ordem em que são relatados."""
        order = config.group.total_order
        if config.mode == SweepMode.EXHAUSTIVE:
            if order > self.settings.exhaustive_cap:
                raise CapExceededError(
                    f"Varredura exaustiva limitada a |G| <= "
                    f"{self.settings.exhaustive_cap}, recebido {order}")
            return range(config.lo, config.upper)

        if order > self.settings.random_max_order:
            raise CapExceededError(
                f"Modo aleatório limitado a |G| <= {self.settings.random_max_order}, "
                f"recebido {order}")
        if config.samples == 0 or config.lo == config.upper:
            return []
        rng = np.random.default_rng(config.seed)
        drawn = rng.integers(config.lo, config.upper, size=config.samples,
                             dtype=np.uint64)
        return [int(bits) for bits in drawn.tolist()]

    def _split(self, subsets: Sequence[int], workers: int) -> List[Sequence[int]]:
        """Blocos contíguos; o número de blocos não altera o resultado."""
        count = len(subsets)
        if workers == 1 or count == 0:
            return [subsets]
        n_blocks = min(count, workers * BLOCKS_PER_WORKER)
        step, extra = divmod(count, n_blocks)
        blocks = []
        start = 0
        for i in range(n_blocks):
            end = start + step + (1 if i < extra else 0)
            blocks.append(subsets[start:end])
            start = end
        return blocks

    async def _execute(
        self, config: SweepConfig, blocks: List[Sequence[int]]
    ) -> List[BlockResult]:
        """Avalia os blocos, no processo atual ou num pool de processos."""
        converse_cap = (config.converse_cap if config.converse_cap is not None
                        else self.settings.converse_cap)
        if (CheckName.THEOREM in config.checks
                and config.group.total_order > converse_cap):
            logger.warning(
                f"Busca exaustiva da recíproca desativada para |G| > {converse_cap}")
        args = (config.group.orders, tuple(c.value for c in config.checks),
                converse_cap, config.dedupe_shifts)

        if config.workers == 1:
            return [evaluate_block(args[0], block, *args[1:]) for block in blocks]

        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            tasks = [
                loop.run_in_executor(pool, evaluate_block, args[0], block, *args[1:])
                for block in blocks
            ]
            return list(await asyncio.gather(*tasks))
