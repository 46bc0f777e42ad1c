"""Utilitários compartilhados: hierarquia de erros."""

from .errors import (
    AmbientMismatchError,
    CapExceededError,
    DimensionMismatchError,
    InvalidRangeError,
    ParseError,
    PreconditionError,
    SemiaffineError,
)

__all__ = [
    "AmbientMismatchError",
    "CapExceededError",
    "DimensionMismatchError",
    "InvalidRangeError",
    "ParseError",
    "PreconditionError",
    "SemiaffineError",
]
