"""Aritmética de grupos abelianos finitos e indexação mista.

A ordem do índice misto é fixa: a última coordenada varia mais rápido. Todas
as camadas de bitset dependem desse layout.
"""

from math import gcd, lcm
from typing import List, Optional

from ..config import get_settings
from ..utils.errors import CapExceededError, DimensionMismatchError
from .models import Element, GroupSpec


def validate_element(G: GroupSpec, a: Element) -> None:
    """Garante que ``a`` pertence a ``G``.

    Raises:
        DimensionMismatchError: Número de coordenadas ou resíduo fora da faixa
    """
    if len(a.coords) != G.rank:
        raise DimensionMismatchError(
            f"Elemento {a.coords} tem {len(a.coords)} coordenadas; "
            f"{G.label} exige {G.rank}")
    for coord, order in zip(a.coords, G.orders):
        if not 0 <= coord < order:
            raise DimensionMismatchError(
                f"Coordenada {coord} fora de [0, {order}) em {G.label}")


def add(G: GroupSpec, a: Element, b: Element) -> Element:
    validate_element(G, a)
    validate_element(G, b)
    return Element(coords=tuple(
        (x + y) % n for x, y, n in zip(a.coords, b.coords, G.orders)))


def neg(G: GroupSpec, a: Element) -> Element:
    validate_element(G, a)
    return Element(coords=tuple((-x) % n for x, n in zip(a.coords, G.orders)))


def sub(G: GroupSpec, a: Element, b: Element) -> Element:
    return add(G, a, neg(G, b))


def scalar_mul(G: GroupSpec, m: int, a: Element) -> Element:
    """Soma ``m`` vezes ``a`` (negativo para ``m < 0``)."""
    validate_element(G, a)
    return Element(coords=tuple((m * x) % n for x, n in zip(a.coords, G.orders)))


def element_order(G: GroupSpec, a: Element) -> int:
    """Menor ``n >= 1`` com ``n*a = 0``: mmc de ``orders[i]/gcd(orders[i], a_i)``."""
    validate_element(G, a)
    return lcm(1, *(n // gcd(n, x) for x, n in zip(a.coords, G.orders)))


def index_of(G: GroupSpec, a: Element) -> int:
    validate_element(G, a)
    index = 0
    for coord, order in zip(a.coords, G.orders):
        index = index * order + coord
    return index


def element_at(G: GroupSpec, i: int) -> Element:
    if not 0 <= i < G.total_order:
        raise IndexError(f"Índice {i} fora de [0, {G.total_order}) em {G.label}")
    coords: List[int] = []
    for order in reversed(G.orders):
        i, coord = divmod(i, order)
        coords.append(coord)
    return Element(coords=tuple(reversed(coords)))


def check_cap(G: GroupSpec, cap: Optional[int] = None) -> None:
    """Recusa grupos acima do limite de enumeração exaustiva.

    Raises:
        CapExceededError: Se ``|G|`` excede o limite
    """
    limit = cap if cap is not None else get_settings().exhaustive_cap
    if G.total_order > limit:
        raise CapExceededError(
            f"{G.label} tem ordem {G.total_order}, acima do limite {limit}")


def enumerate_elements(G: GroupSpec, cap: Optional[int] = None) -> List[Element]:
    """Todos os elementos de ``G`` em ordem de índice."""
    check_cap(G, cap)
    return [element_at(G, i) for i in range(G.total_order)]
