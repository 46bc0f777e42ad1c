"""Literais de conjunto: ``{1,2,4,5}`` ou ``{(0,1),(1,0)}``."""

from typing import List

from ..group_core import GroupSpec, element_at, format_element, parse_element
from ..utils.errors import ParseError
from .bits import SubsetBits


def _split_top_level(text: str) -> List[str]:
    """Separa por vírgulas fora de parênteses."""
    parts = []
    depth = 0
    current = []
    for char in text:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"Parêntese sem par em '{text}'", token=text)
        if char == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(char)
    if depth != 0:
        raise ParseError(f"Parêntese sem par em '{text}'", token=text)
    parts.append("".join(current))
    return parts


def parse_subset(G: GroupSpec, text: str) -> SubsetBits:
    """Interpreta um literal de conjunto em ``G``; repetições são ignoradas.

    Raises:
        ParseError: Chaves ausentes ou elemento inválido (o token é o elemento)
    """
    token = text.strip()
    if not (token.startswith("{") and token.endswith("}")):
        raise ParseError(f"Conjunto deve estar entre chaves: '{text}'", token=text)
    inner = token[1:-1].strip()
    if not inner:
        return SubsetBits.empty(G)
    elements = [parse_element(G, part) for part in _split_top_level(inner)]
    return SubsetBits.from_elements(G, elements)


def format_subset(X: SubsetBits) -> str:
    """Literal canônico, elementos em ordem de índice."""
    G = X.group
    return "{" + ",".join(format_element(G, element_at(G, i))
                          for i in X.members()) + "}"
