"""Verificação do teorema principal, dos lemas e dos critérios periódicos.

Falhas nunca são exceções aqui: viram entradas de relatório.
"""

import logging
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional

from ..config import get_settings
from ..group_core import GroupSpec, element_at, group_table, neg
from ..subsets import (
    SubsetBits,
    difference_set,
    doubling_closed,
    half_masks,
    is_affine,
    is_midconvex,
    is_semiaffine,
    midconvex_in_masks,
    shift,
    shift_bits,
    witness_reproduces,
)
from ..utils.errors import SemiaffineError
from .classifier import (
    affine_decompose,
    classify,
    periodic_midconvex_check,
    periodic_semiaffine_classify,
    reconstruct,
)
from .models import (
    Classification,
    ClassificationVariant,
    Subgroup,
    TheoremCheck,
    TheoremReport,
    is_subgroup,
)
from .subgroups import all_subgroups, quotient_has_even_order_element

logger = logging.getLogger(__name__)


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=32)
def decomposable_subsets(G: GroupSpec) -> FrozenSet[int]:
    """Bitsets de todos os conjuntos ``(H+a) ∪ (H+b)`` e ``(H - C) + g``.

    Enumera subgrupos, pares de classes laterais, subconjuntos midconvexos de
    cada H e translações; só é viável para grupos pequenos.
    """
    table = group_table(G)
    N = G.total_order
    found = set()
    for H in all_subgroups(G, cap=N):
        cosets = [coset.bits for coset in H.cosets()]
        for i, first in enumerate(cosets):
            for second in cosets[i:]:
                found.add(first | second)
        masks = half_masks(H.bits)
        for C in _submasks(H.bits.bits):
            if not midconvex_in_masks(SubsetBits(group=G, bits=C), masks):
                continue
            rest = H.bits.bits & ~C
            for g in range(N):
                found.add(shift_bits(rest, table.add[g]))
    logger.debug(f"{G.label}: {len(found)} conjuntos decomponíveis")
    return frozenset(found)


def converse_failures(
    G: GroupSpec, midconvex_cap: Optional[int] = None
) -> List[str]:
    """Direção "se" por construção: toda forma canônica é semiafim.

    Testa todo ``(H+a) ∪ (H+b)`` e, para ``|G| <= midconvex_cap``, todo
    ``(H - C) + g`` com C midconvexo em H.

    Returns:
        Descrições das formas que não passaram (vazia quando tudo confere)
    """
    cap = midconvex_cap if midconvex_cap is not None else get_settings().converse_cap
    table = group_table(G)
    N = G.total_order
    failures = []
    for H in all_subgroups(G, cap=N):
        unions = set()
        for a in range(N):
            for b in range(a, N):
                unions.add(shift_bits(H.bits.bits, table.add[a])
                           | shift_bits(H.bits.bits, table.add[b]))
        for bits in sorted(unions):
            if not is_semiaffine(SubsetBits(group=G, bits=bits)):
                failures.append(
                    f"(H+a) ∪ (H+b) = {SubsetBits(group=G, bits=bits).members()} "
                    f"com H = {H.members()} não é semiafim")
        if N > cap:
            continue
        masks = half_masks(H.bits)
        for C in _submasks(H.bits.bits):
            if not midconvex_in_masks(SubsetBits(group=G, bits=C), masks):
                continue
            rest = H.bits.bits & ~C
            for g in range(N):
                X = SubsetBits(group=G, bits=shift_bits(rest, table.add[g]))
                if not is_semiaffine(X):
                    failures.append(
                        f"(H - C) + g = {X.members()} com H = {H.members()}, "
                        f"C = {SubsetBits(group=G, bits=C).members()}, g = {g} "
                        "não é semiafim")
    return failures


def affine_proposition_holds(X: SubsetBits) -> bool:
    """Confere que afim, ``X - x`` subgrupo para todo x e para algum x coincidem."""
    if X.is_empty():
        return affine_decompose(X) is None
    G = X.group
    per_point = [is_subgroup(shift(X, neg(G, element_at(G, x))))
                 for x in X.members()]
    verdicts = {bool(is_affine(X)), affine_decompose(X) is not None,
                all(per_point), any(per_point)}
    return len(verdicts) == 1


def verify_theorem(
    X: SubsetBits, converse_cap: Optional[int] = None
) -> TheoremReport:
    """Verifica o teorema principal para X, nas duas direções.

    Args:
        X: Conjunto a verificar
        converse_cap: Ordem máxima para provar, por busca exaustiva, que um
            conjunto não semiafim não tem decomposição

    Returns:
        TheoremReport com uma entrada por verificação
    """
    cap = converse_cap if converse_cap is not None else get_settings().converse_cap
    checks: List[TheoremCheck] = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        checks.append(TheoremCheck(name=name, passed=passed,
                                   detail="" if passed else detail))

    try:
        c = classify(X)
    except SemiaffineError as e:
        logger.error(f"Falha ao classificar {X.members()}: {e}")
        record("classify", False, str(e))
        return TheoremReport(subset=X, variant=ClassificationVariant.NOT_SEMIAFFINE,
                             checks=checks)

    semiaffine = bool(is_semiaffine(X))
    record("branch_agrees",
           (c.variant == ClassificationVariant.NOT_SEMIAFFINE) != semiaffine,
           f"ramo {c.variant.value} com semiafim={semiaffine}")
    record("affine_flag", c.affine == bool(is_affine(X)),
           f"flag afim {c.affine} incorreta")
    record("affine_proposition", affine_proposition_holds(X),
           "afim, X-x subgrupo para todo x e para algum x discordam")

    if c.variant == ClassificationVariant.NOT_SEMIAFFINE:
        assert c.witness is not None
        record("witness_valid", witness_reproduces(X, c.witness),
               f"testemunha {c.witness.elements} não reproduz a violação")
        if X.group.total_order <= cap:
            decomposable = X.bits in decomposable_subsets(X.group)
            record("no_decomposition", not decomposable,
                   "conjunto não semiafim admite decomposição")
        else:
            logger.debug(f"Busca da recíproca ignorada para |G| > {cap}")
        return TheoremReport(subset=X, variant=c.variant, checks=checks)

    rebuilt = reconstruct(c)
    record("reconstruction", rebuilt == X,
           f"reconstrução {rebuilt.members()} difere de {X.members()}")
    assert c.subgroup is not None
    record("subgroup", is_subgroup(c.subgroup.bits),
           f"H = {c.subgroup.members()} não é subgrupo")
    if c.variant == ClassificationVariant.TWO_COSETS:
        assert c.a is not None and c.b is not None
        record("representatives_in_set", X.contains(c.a) and X.contains(c.b),
               "a ou b fora de X")
    else:
        assert c.complement is not None
        record("complement_midconvex", bool(is_midconvex(c.complement, c.subgroup)),
               f"C = {c.complement.members()} não é midconvexo em H")
    record("converse", bool(is_semiaffine(rebuilt)),
           "forma canônica reconstruída não é semiafim")
    return TheoremReport(subset=X, variant=c.variant, checks=checks)


def check_lemma_one(X: SubsetBits, c: Optional[Classification] = None) -> List[str]:
    """Invariantes do registro de duas classes laterais (vazio se não se aplica)."""
    c = c if c is not None else classify(X)
    if c.variant != ClassificationVariant.TWO_COSETS:
        return []
    if c.lemma_trace is None:
        return ["classificação de duas classes sem registro diagnóstico"]
    return c.lemma_trace.violations(X)


def check_lemma_two(X: SubsetBits) -> List[str]:
    """Para X não vazio e semiafim: X-X subgrupo sse fechado para dobro."""
    if X.is_empty() or not is_semiaffine(X):
        return []
    group_like = is_subgroup(difference_set(X))
    closed = bool(doubling_closed(X))
    if group_like != closed:
        return [f"X-X subgrupo={group_like} mas fechado para dobro={closed}"]
    return []


def check_periodic_midconvex(X: SubsetBits) -> List[str]:
    """Midconvexidade direta contra o critério periódico, em cada H que contém X."""
    problems = []
    for H in all_subgroups(X.group, cap=X.group.total_order):
        if not X.issubset(H.bits):
            continue
        direct = bool(is_midconvex(X, H))
        periodic = periodic_midconvex_check(X, H)
        if direct != periodic:
            problems.append(
                f"H = {H.members()}: midconvexo={direct}, critério periódico={periodic}")
    return problems


def check_periodic_classification(X: SubsetBits) -> List[str]:
    """A forma ``(H - P) + g`` reconstrói X e tem H/P sem elemento de ordem par."""
    c = periodic_semiaffine_classify(X)
    if c.variant == ClassificationVariant.NOT_SEMIAFFINE:
        return []
    problems = []
    if reconstruct(c) != X:
        problems.append("forma periódica não reconstrói X")
    P: Optional[Subgroup] = c.inner_subgroup
    if P is not None and c.subgroup is not None:
        if not P.is_subgroup_of(c.subgroup):
            problems.append("P não está contido em H")
        elif quotient_has_even_order_element(c.subgroup, P):
            problems.append("H/P tem elemento de ordem par")
    return problems
