"""Configuração global carregada do ambiente (e de um ``.env`` opcional)."""

import logging
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

ENV_PREFIX = "SEMIAFFINE_"


class Settings(BaseModel):
    """Limites e padrões usados pelas buscas e pela CLI."""

    exhaustive_cap: int = Field(
        default=24, ge=1, le=63,
        description="Ordem máxima do grupo para enumeração exaustiva")
    converse_cap: int = Field(
        default=8, ge=0,
        description="Ordem máxima para a busca exaustiva de decomposições")
    random_max_order: int = Field(
        default=63, ge=1, le=63,
        description="Ordem máxima do grupo no modo aleatório")
    workers: int = Field(
        default=1, ge=1, description="Número padrão de processos de busca")
    log_level: str = Field(default="WARNING", description="Nível de logging")

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        level = value.strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Nível de logging desconhecido: '{value}'")
        return level


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Carrega as configurações uma única vez.

    Returns:
        Settings preenchido a partir de variáveis ``SEMIAFFINE_*``
    """
    load_dotenv()
    values = {}
    for name in Settings.model_fields:
        raw = os.environ.get(f"{ENV_PREFIX}{name.upper()}")
        if raw is not None:
            values[name] = raw
    settings = Settings(**values)
    logger.debug(f"Configurações carregadas: {settings.model_dump()}")
    return settings
