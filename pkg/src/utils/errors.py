"""Tipos de erro compartilhados pelos módulos algébricos.

Todos derivam de ``ValueError`` para que chamadores que já tratam erros de
validação (incluindo ``pydantic.ValidationError``) continuem funcionando.
"""

from typing import Optional


class SemiaffineError(ValueError):
    """Erro base do sistema."""


class ParseError(SemiaffineError):
    """Literal de grupo, elemento, conjunto ou ponto inválido."""

    def __init__(self, message: str, token: Optional[str] = None):
        """Inicializa o erro de parse.

        Args:
            message: Descrição do problema
            token: Trecho da entrada que causou o erro
        """
        super().__init__(message)
        self.token = token


class DimensionMismatchError(SemiaffineError):
    """Elemento com número de coordenadas diferente do grupo."""


class CapExceededError(SemiaffineError):
    """Ordem do grupo acima do limite de busca exaustiva."""


class AmbientMismatchError(SemiaffineError):
    """Conjunto não contido no subgrupo ambiente informado."""


class PreconditionError(SemiaffineError):
    """Pré-condição de uma extração estrutural violada (erro do chamador)."""


class InvalidRangeError(SemiaffineError):
    """Intervalo de índices de subconjuntos inválido."""
