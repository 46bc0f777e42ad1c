"""Caracterização de midconvexidade por traços em Z, especializada a grupos finitos.

Para g em G e x em X, o traço é ``{n em Z : x + n*g em X}``. No caso geral ele
deve ser ``C ∩ H`` com C order-convexo em Z e H subgrupo de Z tal que Z/H não
tem elementos de ordem par.

Em grupo finito o traço é puramente periódico (período ``ord(g)``) e contém 0,
logo é não vazio e ilimitado nos dois sentidos; um order-convexo de Z que
contém um conjunto ilimitado nos dois sentidos é o próprio Z. Assim a condição
se reduz a "traço = dZ com d ímpar" (d = 0 é impossível por periodicidade, e
Z/dZ não tem ordem par sse d é ímpar). A redução é validada empiricamente
contra :func:`is_midconvex`, não assumida.
"""

import logging
from typing import Iterable, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..group_core import Element, element_at, element_order, group_table, index_of
from ..subsets import SubsetBits, is_midconvex
from ..utils.errors import AmbientMismatchError

logger = logging.getLogger(__name__)


class ZTrace(BaseModel):
    """Subconjunto m-periódico de Z: ``{n : n mod m em residues}``."""

    model_config = ConfigDict(frozen=True)

    modulus: int = Field(..., ge=1, description="Período m = ord(g)")
    residues: int = Field(..., ge=0, description="Bitset de resíduos mod m")

    @model_validator(mode="after")
    def _check_residues(self) -> "ZTrace":
        if self.residues >> self.modulus:
            raise ValueError(f"Resíduos além do módulo {self.modulus}")
        return self

    def contains(self, n: int) -> bool:
        return bool((self.residues >> (n % self.modulus)) & 1)

    def residue_list(self) -> List[int]:
        return [r for r in range(self.modulus) if (self.residues >> r) & 1]


class TraceDecomposition(BaseModel):
    """Traço igual a ``dZ`` (com C = Z), d ímpar dividindo o módulo."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(..., ge=1, description="Índice do subgrupo H = dZ")
    convex_part: str = Field(default="Z", description="C colapsa para Z")


class TraceRow(BaseModel):
    """Linha do relatório de traços: (x, g, m, resíduos, d ou falha)."""

    x: int = Field(..., description="Índice do ponto base")
    g: int = Field(..., description="Índice da direção")
    modulus: int = Field(..., description="ord(g)")
    residues: List[int] = Field(..., description="Resíduos do traço")
    d: Optional[int] = Field(default=None, description="d, ou None em falha")


def trace(X: SubsetBits, x: Element, g: Element) -> ZTrace:
    """Traço de X a partir de x na direção g.

    Raises:
        AmbientMismatchError: Se x não pertence a X
    """
    if not X.contains(x):
        raise AmbientMismatchError(f"Ponto base {x.coords} não pertence a X")
    G = X.group
    return _trace_indices(X, index_of(G, x), index_of(G, g), element_order(G, g))


def _trace_indices(X: SubsetBits, x: int, g: int, modulus: int) -> ZTrace:
    table = group_table(X.group)
    bits = X.bits
    residues = 0
    point = x
    for n in range(modulus):
        if (bits >> point) & 1:
            residues |= 1 << n
        point = table.add[point][g]
    return ZTrace(modulus=modulus, residues=residues)


def decompose_trace(T: ZTrace) -> Optional[TraceDecomposition]:
    """Escreve o traço como dZ com d ímpar, se possível."""
    d = next((n for n in range(1, T.modulus + 1) if T.contains(n)), T.modulus)
    if T.modulus % d or d % 2 == 0:
        return None
    multiples = 0
    for n in range(0, T.modulus, d):
        multiples |= 1 << n
    if multiples != T.residues:
        return None
    return TraceDecomposition(d=d)


def _orders(X: SubsetBits) -> List[int]:
    G = X.group
    return [element_order(G, element_at(G, g)) for g in range(G.total_order)]


def midconvex_via_traces(X: SubsetBits) -> bool:
    """Midconvexidade (ambiente = G inteiro) pelo critério de traços."""
    orders = _orders(X)
    for x in X.members():
        for g, modulus in enumerate(orders):
            if decompose_trace(_trace_indices(X, x, g, modulus)) is None:
                return False
    return True


def trace_rows(X: SubsetBits) -> List[TraceRow]:
    """Todos os traços (x em X, g em G) com sua decomposição."""
    orders = _orders(X)
    rows = []
    for x in X.members():
        for g, modulus in enumerate(orders):
            T = _trace_indices(X, x, g, modulus)
            decomposition = decompose_trace(T)
            rows.append(TraceRow(
                x=x, g=g, modulus=modulus, residues=T.residue_list(),
                d=decomposition.d if decomposition else None))
    return rows


def is_order_convex_window(S: Iterable[int], lo: int, hi: int) -> bool:
    """Verifica se S é um intervalo de inteiros (ou vazio) dentro de ``[lo, hi]``.

    Raises:
        ValueError: Se algum elemento de S está fora da janela
    """
    points = sorted(set(S))
    if any(p < lo or p > hi for p in points):
        raise ValueError(f"Conjunto {points} fora da janela [{lo}, {hi}]")
    if not points:
        return True
    return points[-1] - points[0] + 1 == len(points)


def check_trace_equivalence(X: SubsetBits) -> List[str]:
    """Critério de traços contra a midconvexidade direta (ambiente G)."""
    direct = bool(is_midconvex(X))
    via_traces = midconvex_via_traces(X)
    if direct != via_traces:
        return [f"midconvexo={direct}, critério de traços={via_traces}"]
    return []
