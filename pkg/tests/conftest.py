"""Configurações globais para testes pytest."""

from typing import Callable, Iterable, Union

import pytest

from src.config import get_settings
from src.group_core import Element, GroupSpec, parse_group_spec
from src.subsets import SubsetBits, parse_subset


@pytest.fixture(autouse=True)
def reset_settings(monkeypatch: pytest.MonkeyPatch) -> Iterable[None]:
    """Isola cada teste das variáveis ``SEMIAFFINE_*`` e do cache de settings.

    Returns:
        None: Limpa o cache antes e depois do teste.
    """
    for name in ("EXHAUSTIVE_CAP", "CONVERSE_CAP", "RANDOM_MAX_ORDER",
                 "WORKERS", "LOG_LEVEL"):
        monkeypatch.delenv(f"SEMIAFFINE_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def group() -> Callable[[str], GroupSpec]:
    """Fixture que interpreta especificações de grupo.

    Returns:
        Callable: ``group("Z4xZ2")`` devolve o GroupSpec.
    """
    return parse_group_spec


@pytest.fixture
def subset() -> Callable[[str, str], SubsetBits]:
    """Fixture que constrói subconjuntos a partir de literais.

    Returns:
        Callable: ``subset("Z6", "{1,2,4,5}")`` devolve o SubsetBits.
    """

    def build(spec: str, literal: str) -> SubsetBits:
        return parse_subset(parse_group_spec(spec), literal)

    return build


@pytest.fixture
def element() -> Callable[[str, Union[int, Iterable[int]]], Element]:
    """Fixture que constrói elementos por resíduos.

    Returns:
        Callable: ``element("Z4xZ2", (3, 1))`` devolve o Element.
    """

    def build(spec: str, value: Union[int, Iterable[int]]) -> Element:
        G = parse_group_spec(spec)
        return G.element(value if isinstance(value, int) else tuple(value))

    return build
