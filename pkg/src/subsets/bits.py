"""Subconjuntos de um grupo finito como bitsets sobre índices de elementos."""

from typing import Iterable, List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..group_core import (
    Element,
    GroupSpec,
    element_at,
    group_table,
    index_of,
)
from ..utils.errors import DimensionMismatchError, ParseError


class SubsetBits(BaseModel):
    """Subconjunto X de G: o bit i está ligado sse ``element_at(i)`` pertence a X."""

    model_config = ConfigDict(frozen=True)

    group: GroupSpec = Field(..., description="Grupo ambiente")
    bits: int = Field(default=0, ge=0, description="Bitset sobre índices")

    @model_validator(mode="after")
    def _check_length(self) -> "SubsetBits":
        if self.bits >> self.group.total_order:
            raise ValueError(
                f"Bitset com bits além da ordem {self.group.total_order}")
        return self

    @classmethod
    def empty(cls, group: GroupSpec) -> "SubsetBits":
        return cls(group=group, bits=0)

    @classmethod
    def full(cls, group: GroupSpec) -> "SubsetBits":
        return cls(group=group, bits=(1 << group.total_order) - 1)

    @classmethod
    def from_indices(cls, group: GroupSpec, indices: Iterable[int]) -> "SubsetBits":
        bits = 0
        for i in indices:
            if not 0 <= i < group.total_order:
                raise IndexError(f"Índice {i} fora do grupo {group.label}")
            bits |= 1 << i
        return cls(group=group, bits=bits)

    @classmethod
    def from_elements(
        cls, group: GroupSpec, elements: Iterable[Element]
    ) -> "SubsetBits":
        return cls.from_indices(group, (index_of(group, a) for a in elements))

    @classmethod
    def from_hex(cls, group: GroupSpec, text: str) -> "SubsetBits":
        """Lê o bitset em hexadecimal; o bit menos significativo é o índice 0."""
        token = text.strip().lower()
        if token.startswith("0x"):
            token = token[2:]
        try:
            bits = int(token, 16)
        except ValueError as e:
            raise ParseError(f"Bitset hexadecimal inválido: '{text}'",
                             token=text) from e
        if bits >> group.total_order:
            raise ParseError(
                f"Bitset '{text}' excede a ordem {group.total_order}", token=text)
        return cls(group=group, bits=bits)

    def to_hex(self) -> str:
        return format(self.bits, "x")

    def members(self) -> List[int]:
        """Índices dos elementos, em ordem crescente."""
        bits = self.bits
        result = []
        while bits:
            low = bits & -bits
            result.append(low.bit_length() - 1)
            bits ^= low
        return result

    def elements(self) -> List[Element]:
        return [element_at(self.group, i) for i in self.members()]

    def contains_index(self, i: int) -> bool:
        return bool((self.bits >> i) & 1)

    def contains(self, a: Element) -> bool:
        return self.contains_index(index_of(self.group, a))

    @property
    def size(self) -> int:
        return bin(self.bits).count("1")

    def is_empty(self) -> bool:
        return self.bits == 0

    def min_index(self) -> int:
        if not self.bits:
            raise ValueError("Conjunto vazio não tem elemento mínimo")
        return (self.bits & -self.bits).bit_length() - 1

    def issubset(self, other: "SubsetBits") -> bool:
        self._same_group(other)
        return self.bits & ~other.bits == 0

    def _same_group(self, other: "SubsetBits") -> None:
        if self.group != other.group:
            raise DimensionMismatchError(
                f"Conjuntos em grupos distintos: {self.group} e {other.group}")

    def __or__(self, other: "SubsetBits") -> "SubsetBits":
        self._same_group(other)
        return SubsetBits(group=self.group, bits=self.bits | other.bits)

    def __and__(self, other: "SubsetBits") -> "SubsetBits":
        self._same_group(other)
        return SubsetBits(group=self.group, bits=self.bits & other.bits)

    def __sub__(self, other: "SubsetBits") -> "SubsetBits":
        self._same_group(other)
        return SubsetBits(group=self.group, bits=self.bits & ~other.bits)

    def __len__(self) -> int:
        return self.size


def shift(X: SubsetBits, g: Element) -> SubsetBits:
    """Translação ``X + g``: ``x`` pertence ao resultado sse ``x - g`` pertence a X."""
    table = group_table(X.group)
    row = table.add[index_of(X.group, g)]
    return SubsetBits(group=X.group, bits=shift_bits(X.bits, row))


def shift_bits(bits: int, row: List[int]) -> int:
    """Versão em índices de :func:`shift`; ``row`` é a linha ``add[g]`` da tabela."""
    out = 0
    while bits:
        low = bits & -bits
        out |= 1 << row[low.bit_length() - 1]
        bits ^= low
    return out


def difference_set(X: SubsetBits) -> SubsetBits:
    """Conjunto diferença ``X - X = {x - y : x, y em X}``."""
    table = group_table(X.group)
    members = X.members()
    bits = 0
    for x in members:
        row = table.sub[x]
        for y in members:
            bits |= 1 << row[y]
    return SubsetBits(group=X.group, bits=bits)


def half_set(G: GroupSpec, s: Element) -> SubsetBits:
    """``{z em G : 2z = s}``."""
    table = group_table(G)
    target = index_of(G, s)
    bits = 0
    for z, doubled in enumerate(table.double):
        if doubled == target:
            bits |= 1 << z
    return SubsetBits(group=G, bits=bits)
