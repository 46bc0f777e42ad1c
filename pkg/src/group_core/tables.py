"""Tabelas de operação por índice, usadas pelos laços das camadas de bitset."""

from functools import lru_cache
from typing import List, Tuple

from .models import GroupSpec


class GroupTable:
    """Tabelas de soma, diferença, negação e dobro indexadas por índice misto.

    Construídas uma vez por ``GroupSpec``; somente leitura depois disso.
    """

    def __init__(self, group: GroupSpec):
        self.group = group
        self.size = group.total_order
        strides = self._strides(group.orders)
        coords = [self._decode(i, group.orders) for i in range(self.size)]

        def encode(values: Tuple[int, ...]) -> int:
            return sum(v * s for v, s in zip(values, strides))

        orders = group.orders
        self.neg: List[int] = [
            encode(tuple((-c) % n for c, n in zip(cs, orders))) for cs in coords]
        self.double: List[int] = [
            encode(tuple((2 * c) % n for c, n in zip(cs, orders))) for cs in coords]
        self.add: List[List[int]] = [
            [encode(tuple((x + y) % n for x, y, n in zip(a, b, orders)))
             for b in coords]
            for a in coords
        ]
        self.sub: List[List[int]] = [
            [row[self.neg[j]] for j in range(self.size)] for row in self.add]

    @staticmethod
    def _strides(orders: Tuple[int, ...]) -> Tuple[int, ...]:
        strides = []
        step = 1
        for order in reversed(orders):
            strides.append(step)
            step *= order
        return tuple(reversed(strides))

    @staticmethod
    def _decode(index: int, orders: Tuple[int, ...]) -> Tuple[int, ...]:
        coords = []
        for order in reversed(orders):
            index, coord = divmod(index, order)
            coords.append(coord)
        return tuple(reversed(coords))

    def multiple(self, m: int, i: int) -> int:
        """Índice de ``m*x`` onde ``x`` tem índice ``i``."""
        result = 0
        base = i if m >= 0 else self.neg[i]
        for _ in range(abs(m) % self.size if self.size else 0):
            result = self.add[result][base]
        return result


@lru_cache(maxsize=64)
def group_table(group: GroupSpec) -> GroupTable:
    """Tabela (em cache) do grupo."""
    return GroupTable(group)
