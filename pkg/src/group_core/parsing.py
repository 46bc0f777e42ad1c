"""Gramática textual de grupos e elementos.

Grupos: ``Z<n>`` unidos por ``x`` ou ``×`` (``Z4xZ2``, ``Z2×Z2``), sem
diferenciar maiúsculas; ``Z1`` é o grupo trivial. Elementos: ``(3,1)`` ou
inteiro puro em posto 1.
"""

import re

from ..utils.errors import ParseError
from .arithmetic import validate_element
from .models import Element, GroupSpec

_FACTOR = re.compile(r"z(\d+)")


def parse_group_spec(text: str) -> GroupSpec:
    """Interpreta uma especificação de grupo.

    Args:
        text: Especificação como ``Z4xZ2``

    Returns:
        GroupSpec correspondente

    Raises:
        ParseError: Se algum fator for inválido
    """
    cleaned = text.strip()
    if not cleaned:
        raise ParseError("Especificação de grupo vazia", token=text)
    orders = []
    for token in cleaned.lower().replace("×", "x").split("x"):
        match = _FACTOR.fullmatch(token.strip())
        if match is None or int(match.group(1)) < 1:
            raise ParseError(f"Fator de grupo inválido: '{token}'", token=token)
        orders.append(int(match.group(1)))
    try:
        return GroupSpec(orders=tuple(orders))
    except ValueError as e:
        raise ParseError(f"Grupo inválido '{text}': {e}", token=text) from e


def parse_element(G: GroupSpec, text: str) -> Element:
    """Interpreta um literal de elemento no grupo ``G``.

    Raises:
        ParseError: Literal malformado ou incompatível com ``G``
    """
    token = text.strip()
    if token.startswith("(") and token.endswith(")"):
        inner = token[1:-1].strip()
        parts = [p.strip() for p in inner.split(",")] if inner else []
    else:
        parts = [token]
        if G.rank == 0 and token == "0":
            parts = []
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError as e:
        raise ParseError(f"Elemento inválido: '{text}'", token=text) from e
    element = Element(coords=coords)
    try:
        validate_element(G, element)
    except ValueError as e:
        raise ParseError(f"Elemento '{text}' inválido em {G.label}: {e}",
                         token=text) from e
    return element


def format_element(G: GroupSpec, a: Element) -> str:
    """Literal canônico: inteiro em posto 1, tupla nos demais."""
    if G.rank == 1:
        return str(a.coords[0])
    return "(" + ",".join(str(c) for c in a.coords) + ")"
