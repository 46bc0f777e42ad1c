"""Modelos de dados para grupos abelianos finitos."""

from math import prod
from typing import Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..utils.errors import DimensionMismatchError

MAX_TOTAL_ORDER = 2**64 - 1


class GroupSpec(BaseModel):
    """Produto de grupos cíclicos Z_{n1} x ... x Z_{nk}.

    A lista vazia representa o grupo trivial. Fatores de ordem 1 são
    descartados na construção.
    """

    model_config = ConfigDict(frozen=True)

    orders: Tuple[int, ...] = Field(
        default=(), description="Ordens dos fatores cíclicos, cada uma >= 2")

    @field_validator("orders")
    @classmethod
    def _normalize_orders(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        for order in value:
            if order < 1:
                raise ValueError(f"Ordem de fator cíclico inválida: {order}")
        kept = tuple(order for order in value if order != 1)
        if prod(kept) > MAX_TOTAL_ORDER:
            raise ValueError("Ordem do grupo não cabe em 64 bits")
        return kept

    @classmethod
    def of(cls, *orders: int) -> "GroupSpec":
        """Atalho para ``GroupSpec(orders=orders)``."""
        return cls(orders=tuple(orders))

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def total_order(self) -> int:
        return prod(self.orders)

    @property
    def label(self) -> str:
        """Representação canônica, por exemplo ``Z4xZ2`` (``Z1`` se trivial)."""
        if not self.orders:
            return "Z1"
        return "x".join(f"Z{order}" for order in self.orders)

    @property
    def zero(self) -> "Element":
        return Element(coords=(0,) * self.rank)

    def element(self, value: Union[int, Sequence[int]]) -> "Element":
        """Constrói um elemento reduzindo cada coordenada módulo sua ordem.

        Args:
            value: Inteiro (grupos de posto 1) ou sequência de coordenadas

        Returns:
            Elemento válido para este grupo
        """
        if isinstance(value, int):
            coords: Tuple[int, ...] = () if self.rank == 0 else (value,)
        else:
            coords = tuple(value)
        if len(coords) != self.rank:
            raise DimensionMismatchError(
                f"Elemento com {len(coords)} coordenadas para grupo {self.label}")
        return Element(coords=tuple(c % n for c, n in zip(coords, self.orders)))

    def __str__(self) -> str:
        return self.label


class Element(BaseModel):
    """Elemento como tupla de resíduos, um por fator cíclico."""

    model_config = ConfigDict(frozen=True)

    coords: Tuple[int, ...] = Field(
        default=(), description="Resíduos 0 <= coords[i] < orders[i]")
