"""Modelos de dados para as varreduras de verificação."""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from ..group_core import GroupSpec


class CheckName(str, Enum):
    """Verificações habilitáveis por subconjunto."""

    THEOREM = "theorem"
    LEMMA1 = "lemma1"
    LEMMA2 = "lemma2"
    T2 = "t2"
    T1 = "t1"


class SweepMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TSV = "tsv"
    TEXT = "text"


class SweepConfig(BaseModel):
    """Configuração de uma varredura sobre subconjuntos de um grupo."""

    group: GroupSpec = Field(..., description="Grupo varrido")
    lo: int = Field(default=0, ge=0, description="Primeiro índice de subconjunto")
    hi: Optional[int] = Field(
        default=None, description="Fim exclusivo do intervalo (padrão 2^N)")
    mode: SweepMode = Field(default=SweepMode.EXHAUSTIVE, description="Modo")
    samples: int = Field(default=0, ge=0, description="Amostras no modo aleatório")
    seed: Optional[int] = Field(default=None, ge=0, description="Semente PCG64")
    workers: int = Field(default=1, ge=1, description="Processos paralelos")
    checks: Tuple[CheckName, ...] = Field(
        default=(CheckName.THEOREM,), description="Verificações habilitadas")
    dedupe_shifts: bool = Field(
        default=False,
        description="Verificar um representante por classe de translação")
    converse_cap: Optional[int] = Field(
        default=None, description="Limite da busca exaustiva de decomposições")

    @model_validator(mode="after")
    def _check_consistency(self) -> "SweepConfig":
        total = 1 << self.group.total_order
        if self.upper > total or self.lo > self.upper:
            raise ValueError(
                f"Intervalo [{self.lo}, {self.upper}) inválido para 2^N = {total}")
        if (self.seed is not None) != (self.mode == SweepMode.RANDOM):
            raise ValueError("Semente é obrigatória no modo aleatório e só nele")
        if self.dedupe_shifts and (
            self.mode != SweepMode.EXHAUSTIVE or self.lo != 0 or self.upper != total
        ):
            raise ValueError("Deduplicação por translação exige varredura exaustiva "
                             "do intervalo completo")
        return self

    @property
    def upper(self) -> int:
        return self.hi if self.hi is not None else 1 << self.group.total_order


class ClassCounts(BaseModel):
    """Contagens por classe de predicado (ambiente G para midconvexos)."""

    total: int = Field(default=0, description="Subconjuntos contados")
    affine: int = Field(default=0, description="Afins")
    semiaffine: int = Field(default=0, description="Semiafins")
    midconvex: int = Field(default=0, description="Midconvexos em G")

    def merge(self, other: "ClassCounts") -> None:
        self.total += other.total
        self.affine += other.affine
        self.semiaffine += other.semiaffine
        self.midconvex += other.midconvex


class SweepFailure(BaseModel):
    """Falha de uma verificação num subconjunto."""

    subset: int = Field(..., description="Bitset do subconjunto")
    check: str = Field(..., description="Verificação que falhou")
    detail: str = Field(default="", description="Detalhe")


class BlockResult(BaseModel):
    """Resultado parcial de um bloco contíguo de subconjuntos."""

    checked: int = Field(default=0)
    counts: ClassCounts = Field(default_factory=ClassCounts)
    failures: List[SweepFailure] = Field(default_factory=list)


class SweepReport(BaseModel):
    """Relatório consolidado de uma varredura."""

    group: str = Field(..., description="Especificação do grupo")
    order: int = Field(..., description="N = |G|")
    mode: SweepMode = Field(..., description="Modo da varredura")
    checked: int = Field(default=0, description="Subconjuntos verificados")
    failures: List[SweepFailure] = Field(default_factory=list)
    counts: ClassCounts = Field(default_factory=ClassCounts)
    seconds: Optional[float] = Field(default=None, description="Tempo de parede")

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_payload(self, include_timing: bool = True) -> Dict[str, Any]:
        return {
            "group": self.group,
            "N": self.order,
            "mode": self.mode.value,
            "checked": self.checked,
            "total": self.counts.total,
            "affine": self.counts.affine,
            "semiaffine": self.counts.semiaffine,
            "midconvex": self.counts.midconvex,
            "failures": [
                {"subset": format(f.subset, "x"), "check": f.check, "detail": f.detail}
                for f in self.failures
            ],
            "seconds": self.seconds if include_timing else None,
        }

    def atlas_row(self, include_timing: bool = True) -> Dict[str, Any]:
        """Linha do atlas, na ordem de colunas estável."""
        seconds: Any = round(self.seconds, 3) if (
            include_timing and self.seconds is not None) else None
        return {
            "group": self.group,
            "N": self.order,
            "total": self.counts.total,
            "affine": self.counts.affine,
            "semiaffine": self.counts.semiaffine,
            "midconvex": self.counts.midconvex,
            "failures": len(self.failures),
            "seconds": seconds,
        }


class AtlasSummary(BaseModel):
    """Resumo da emissão do atlas."""

    rows: int = Field(default=0, description="Linhas escritas")
    failures: int = Field(default=0, description="Falhas somadas sobre os grupos")
