"""Classificação construtiva de conjuntos semiafins.

A ordem dos ramos é fixa: vazio, testemunha de não semiafinidade, ramo de duas
classes laterais (existe a em X-X com 2a fora de X-X), ramo do complemento
midconvexo. Os dois casos do teorema se sobrepõem (uma única classe lateral
cabe em ambos), então o resultado é canônico pelo procedimento, não único.
Todas as escolhas existenciais usam o menor índice.
"""

import logging
from typing import Optional, Tuple

from ..group_core import (
    Element,
    element_at,
    element_order,
    group_table,
    index_of,
    neg,
)
from ..subsets import (
    SubsetBits,
    difference_set,
    doubling_closed,
    is_affine,
    is_midconvex,
    is_semiaffine,
    shift,
)
from ..utils.errors import AmbientMismatchError, PreconditionError
from .models import (
    Classification,
    ClassificationVariant,
    LemmaOneTrace,
    Subgroup,
    is_subgroup,
    reconstruct_parts,
)
from .subgroups import cyclic_subgroup, quotient_has_even_order_element

logger = logging.getLogger(__name__)


def affine_decompose(X: SubsetBits) -> Optional[Tuple[Subgroup, Element]]:
    """Escreve um conjunto afim não vazio como ``H + g``.

    Returns:
        ``(H, g)`` com g o menor elemento de X e ``H = X - g``; ``None`` se X é
        vazio ou não é afim
    """
    if X.is_empty() or not is_affine(X):
        return None
    g = element_at(X.group, X.min_index())
    return Subgroup(bits=shift(X, neg(X.group, g))), g


def _lemma_one_trace(
    X: SubsetBits, a: Element, x: Element, diff: int
) -> LemmaOneTrace:
    G = X.group
    table = group_table(G)
    a_index = index_of(G, a)
    window = []
    multiple = 0
    for n in range(1, element_order(G, a) + 1):
        multiple = table.add[multiple][a_index]
        if (diff >> multiple) & 1:
            window.append(n)
    beyond_one = [n for n in window if n != 1]
    n_min = min(beyond_one) if beyond_one else None
    g = (element_at(G, table.multiple(n_min + 1, a_index))
         if n_min is not None else None)
    return LemmaOneTrace(
        a=a,
        d_window=tuple(window),
        n_min=n_min,
        g=g,
        c_a=cyclic_subgroup(G, a),
        h_a=cyclic_subgroup(G, g) if g is not None else Subgroup.trivial(G),
        x=x,
    )


def two_coset_extract(
    X: SubsetBits, a: Element
) -> Tuple[Subgroup, Element, LemmaOneTrace]:
    """Extrai ``X = (H+x) ∪ (H+x+a)`` quando a está em X-X e 2a não.

    Args:
        X: Conjunto semiafim
        a: Elemento de X-X com 2a fora de X-X

    Returns:
        ``(H, x, trace)`` com x o menor elemento de ``X ∩ (X-a)`` e
        ``H = (X ∩ (X-a)) - x``

    Raises:
        PreconditionError: Se as hipóteses não valem
    """
    G = X.group
    table = group_table(G)
    a_index = index_of(G, a)
    diff = difference_set(X).bits
    if not (diff >> a_index) & 1:
        raise PreconditionError(f"a = {a.coords} não pertence a X-X")
    if (diff >> table.double[a_index]) & 1:
        raise PreconditionError(f"2a = 2*{a.coords} pertence a X-X")

    base = X & shift(X, neg(G, a))
    x = element_at(G, base.min_index())
    try:
        H = Subgroup(bits=shift(base, neg(G, x)))
    except ValueError as e:
        raise PreconditionError(
            f"X ∩ (X-a) - x não é subgrupo; X não é semiafim: {e}") from e
    x_plus_a = element_at(G, table.add[index_of(G, x)][a_index])
    if H.coset(x) | H.coset(x_plus_a) != X:
        raise PreconditionError("(H+x) ∪ (H+x+a) difere de X; X não é semiafim")
    return H, x, _lemma_one_trace(X, a, x, diff)


def midconvex_complement_extract(
    X: SubsetBits,
) -> Tuple[Subgroup, SubsetBits, Element]:
    """Extrai ``X = (H - C) + g`` com ``H = X - X`` e C midconvexo em H.

    Raises:
        PreconditionError: Se X é vazio, não é fechado para dobro ou não é
            semiafim
    """
    G = X.group
    if X.is_empty():
        raise PreconditionError("Conjunto vazio não tem ponto base")
    if not doubling_closed(X):
        raise PreconditionError("X-X não é fechado para dobro")
    try:
        H = Subgroup(bits=difference_set(X))
    except ValueError as e:
        raise PreconditionError(f"X-X não é subgrupo; X não é semiafim: {e}") from e
    g = element_at(G, X.min_index())
    C = H.bits - shift(X, neg(G, g))
    if not is_midconvex(C, H):
        raise PreconditionError("H - (X-g) não é midconvexo; X não é semiafim")
    if shift(H.bits - C, g) != X:
        raise PreconditionError("(H - C) + g difere de X")
    return H, C, g


def classify(X: SubsetBits) -> Classification:
    """Classifica X segundo o teorema principal."""
    G = X.group
    if X.is_empty():
        return Classification(
            variant=ClassificationVariant.COSET_MINUS_MIDCONVEX,
            subset=X,
            affine=True,
            subgroup=Subgroup.whole(G),
            complement=SubsetBits.full(G),
            g=G.zero,
        )

    semiaffine = is_semiaffine(X)
    if not semiaffine:
        logger.debug(f"{X.members()} não é semiafim: {semiaffine.witness}")
        return Classification(
            variant=ClassificationVariant.NOT_SEMIAFFINE,
            subset=X,
            affine=False,
            witness=semiaffine.witness,
        )

    affine = bool(is_affine(X))
    doubling = doubling_closed(X)
    if not doubling:
        assert doubling.witness is not None
        a = element_at(G, doubling.witness.elements[0])
        H, x, trace = two_coset_extract(X, a)
        logger.debug(f"{X.members()}: duas classes laterais com a={a.coords}")
        return Classification(
            variant=ClassificationVariant.TWO_COSETS,
            subset=X,
            affine=affine,
            subgroup=H,
            a=x,
            b=element_at(G, group_table(G).add[index_of(G, x)][index_of(G, a)]),
            lemma_trace=trace,
        )

    H, C, g = midconvex_complement_extract(X)
    logger.debug(f"{X.members()}: complemento midconvexo C={C.members()}")
    return Classification(
        variant=ClassificationVariant.COSET_MINUS_MIDCONVEX,
        subset=X,
        affine=affine,
        subgroup=H,
        complement=C,
        g=g,
    )


def reconstruct(c: Classification) -> SubsetBits:
    """Avalia a forma canônica da classificação.

    Raises:
        PreconditionError: Se chamada numa classificação ``NOT_SEMIAFFINE``
    """
    if c.variant == ClassificationVariant.NOT_SEMIAFFINE:
        raise PreconditionError("Conjunto não semiafim não tem reconstrução")
    return reconstruct_parts(c.variant, {
        "subgroup": c.subgroup, "a": c.a, "b": c.b,
        "complement": c.complement, "g": c.g,
    })


def periodic_midconvex_check(X: SubsetBits, H: Optional[Subgroup] = None) -> bool:
    """Critério periódico: X vazio, ou ``P = X - x`` subgrupo com H/P sem ordem par.

    Args:
        X: Conjunto contido em H
        H: Subgrupo ambiente; ``None`` significa o grupo inteiro

    Raises:
        AmbientMismatchError: Se X não está contido em H
    """
    ambient = H if H is not None else Subgroup.whole(X.group)
    if not X.issubset(ambient.bits):
        raise AmbientMismatchError(
            f"{X.members()} não está contido em {ambient.members()}")
    if X.is_empty():
        return True
    x = element_at(X.group, X.min_index())
    P_bits = shift(X, neg(X.group, x))
    if not is_subgroup(P_bits):
        return False
    return not quotient_has_even_order_element(ambient, Subgroup(bits=P_bits))


def periodic_semiaffine_classify(X: SubsetBits) -> Classification:
    """Classificação na forma periódica ``(H - P) + g`` com H/P sem ordem par.

    No segundo caso o conjunto midconvexo C é uma classe lateral ``P + c``;
    o deslocamento é absorvido em g (``g' = g + c``), de modo que o campo
    ``complement`` passa a ser o próprio P. Se C é vazio, P fica ausente.
    """
    c = classify(X)
    if c.variant != ClassificationVariant.COSET_MINUS_MIDCONVEX:
        return c
    assert c.complement is not None and c.g is not None and c.subgroup is not None
    if c.complement.is_empty():
        return c
    G = X.group
    offset = element_at(G, c.complement.min_index())
    try:
        P = Subgroup(bits=shift(c.complement, neg(G, offset)))
    except ValueError as e:
        raise PreconditionError(
            f"C = {c.complement.members()} não é classe lateral de subgrupo") from e
    g = element_at(G, group_table(G).add[index_of(G, c.g)][index_of(G, offset)])
    return Classification(
        variant=ClassificationVariant.COSET_MINUS_MIDCONVEX,
        subset=X,
        affine=c.affine,
        subgroup=c.subgroup,
        complement=P.bits,
        g=g,
        inner_subgroup=P,
    )
