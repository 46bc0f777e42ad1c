"""Modelos de dados para subgrupos e classificações de conjuntos semiafins."""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..group_core import Element, GroupSpec, element_at, group_table, index_of
from ..subsets import SubsetBits, Witness, shift
from ..utils.errors import ParseError


def is_subgroup(X: SubsetBits) -> bool:
    """Verifica se X contém 0 e é fechado para diferenças (logo soma e negação)."""
    if not X.bits & 1:
        return False
    table = group_table(X.group)
    bits = X.bits
    members = X.members()
    for x in members:
        row = table.sub[x]
        for y in members:
            if not (bits >> row[y]) & 1:
                return False
    return True


class Subgroup(BaseModel):
    """Subgrupo de G, verificado na construção."""

    model_config = ConfigDict(frozen=True)

    bits: SubsetBits = Field(..., description="Elementos do subgrupo")
    generators: Optional[Tuple[Element, ...]] = Field(
        default=None, description="Geradores, quando conhecidos")

    @model_validator(mode="after")
    def _check_closed(self) -> "Subgroup":
        if not is_subgroup(self.bits):
            raise ValueError(
                f"{self.bits.members()} não é subgrupo de {self.bits.group}")
        return self

    @classmethod
    def trivial(cls, group: GroupSpec) -> "Subgroup":
        return cls(bits=SubsetBits(group=group, bits=1))

    @classmethod
    def whole(cls, group: GroupSpec) -> "Subgroup":
        return cls(bits=SubsetBits.full(group))

    @property
    def group(self) -> GroupSpec:
        return self.bits.group

    @property
    def order(self) -> int:
        return self.bits.size

    @property
    def index(self) -> int:
        """Índice ``[G:H]``."""
        return self.group.total_order // self.order

    def members(self) -> List[int]:
        return self.bits.members()

    def contains(self, a: Element) -> bool:
        return self.bits.contains(a)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.bits.issubset(other.bits)

    def coset(self, g: Element) -> SubsetBits:
        """Classe lateral ``H + g``."""
        return shift(self.bits, g)

    def cosets(self) -> List[SubsetBits]:
        """Classes laterais distintas, ordenadas pelo menor índice."""
        remaining = (1 << self.group.total_order) - 1
        result = []
        while remaining:
            first = (remaining & -remaining).bit_length() - 1
            coset = self.coset(element_at(self.group, first))
            result.append(coset)
            remaining &= ~coset.bits
        return result


class ClassificationVariant(str, Enum):
    """Forma canônica encontrada para o conjunto."""

    TWO_COSETS = "two_cosets"
    COSET_MINUS_MIDCONVEX = "coset_minus_midconvex"
    NOT_SEMIAFFINE = "not_semiaffine"


def reconstruct_parts(
    variant: ClassificationVariant, fields: Dict[str, Any]
) -> SubsetBits:
    """Avalia (H+a) ∪ (H+b) ou (H-C)+g a partir dos campos da classificação."""
    H: Subgroup = fields["subgroup"]
    if variant == ClassificationVariant.TWO_COSETS:
        return H.coset(fields["a"]) | H.coset(fields["b"])
    if variant == ClassificationVariant.COSET_MINUS_MIDCONVEX:
        return shift(H.bits - fields["complement"], fields["g"])
    raise ValueError("Classificação not_semiaffine não tem reconstrução")


class LemmaOneTrace(BaseModel):
    """Registro diagnóstico da extração de duas classes laterais.

    Guarda o grupo cíclico ``C_a``, a janela ``D = {n <= ord(a) : na em X-X}``,
    ``n = min(D - {1})``, o gerador ``g = (n+1)a`` de ``H_a`` e o ponto base x.
    """

    model_config = ConfigDict(frozen=True)

    a: Element = Field(..., description="Violador com 2a fora de X-X")
    d_window: Tuple[int, ...] = Field(..., description="Janela de D")
    n_min: Optional[int] = Field(default=None, description="min(D - {1})")
    g: Optional[Element] = Field(default=None, description="(n+1)a")
    c_a: Subgroup = Field(..., description="Subgrupo cíclico gerado por a")
    h_a: Subgroup = Field(..., description="Subgrupo gerado por g em C_a")
    x: Element = Field(..., description="Ponto base em X ∩ (X-a)")

    def violations(self, X: SubsetBits) -> List[str]:
        """Lista os invariantes quebrados (vazia quando tudo confere)."""
        problems = []
        if 1 not in self.d_window:
            problems.append("1 ausente de D")
        if 2 in self.d_window:
            problems.append("2 pertence a D")
        if self.n_min is not None and self.n_min < 3:
            problems.append(f"n_min = {self.n_min} < 3")
        restricted = X & self.c_a.coset(self.x)
        G = X.group
        a_index = index_of(G, self.a)
        x_index = index_of(G, self.x)
        base = self.h_a.coset(self.x)
        moved = self.h_a.coset(element_at(G, group_table(G).add[x_index][a_index]))
        if restricted != base | moved:
            problems.append(
                f"X ∩ (C_a+x) = {restricted.members()} difere de "
                f"(H_a+x) ∪ (H_a+x+a) = {(base | moved).members()}")
        return problems

    def to_payload(self, G: GroupSpec) -> Dict[str, Any]:
        return {
            "a": index_of(G, self.a),
            "D": list(self.d_window),
            "n": self.n_min,
            "g": index_of(G, self.g) if self.g is not None else None,
            "C_a": self.c_a.members(),
            "H_a": self.h_a.members(),
            "x": index_of(G, self.x),
        }


class Classification(BaseModel):
    """Resultado do teorema principal para um conjunto X.

    ``TWO_COSETS``: X = (H+a) ∪ (H+b). ``COSET_MINUS_MIDCONVEX``: X = (H-C)+g,
    com C midconvexo em H; na forma periódica C é o subgrupo P (ou vazio).
    """

    model_config = ConfigDict(frozen=True)

    variant: ClassificationVariant = Field(..., description="Forma encontrada")
    subset: SubsetBits = Field(..., description="Conjunto original X")
    affine: bool = Field(default=False, description="Se X é afim")
    subgroup: Optional[Subgroup] = Field(default=None, description="H")
    a: Optional[Element] = Field(default=None, description="Representante a")
    b: Optional[Element] = Field(default=None, description="Representante b")
    complement: Optional[SubsetBits] = Field(
        default=None, description="C, midconvexo em H")
    g: Optional[Element] = Field(default=None, description="Translação g")
    inner_subgroup: Optional[Subgroup] = Field(
        default=None, description="P, na forma periódica (H-P)+g")
    witness: Optional[Witness] = Field(
        default=None, description="Testemunha de não semiafinidade")
    lemma_trace: Optional[LemmaOneTrace] = Field(
        default=None, description="Diagnóstico da extração por duas classes")

    @model_validator(mode="after")
    def _check_fields(self) -> "Classification":
        required = {
            ClassificationVariant.TWO_COSETS: ("subgroup", "a", "b"),
            ClassificationVariant.COSET_MINUS_MIDCONVEX: (
                "subgroup", "complement", "g"),
            ClassificationVariant.NOT_SEMIAFFINE: ("witness",),
        }[self.variant]
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ValueError(
                f"Classificação {self.variant.value} sem campos: {missing}")
        return self

    def to_payload(self) -> Dict[str, Any]:
        """Objeto JSON estável; elementos referidos por índice misto."""
        G = self.subset.group
        payload: Dict[str, Any] = {"variant": self.variant.value}
        if self.variant == ClassificationVariant.NOT_SEMIAFFINE:
            assert self.witness is not None
            payload["witness"] = self.witness.to_payload()
        else:
            assert self.subgroup is not None
            payload["H"] = self.subgroup.members()
            if self.variant == ClassificationVariant.TWO_COSETS:
                assert self.a is not None and self.b is not None
                payload["a"] = index_of(G, self.a)
                payload["b"] = index_of(G, self.b)
            else:
                assert self.complement is not None and self.g is not None
                payload["C"] = self.complement.members()
                payload["g"] = index_of(G, self.g)
                if self.inner_subgroup is not None:
                    payload["P"] = self.inner_subgroup.members()
        payload["affine"] = self.affine
        return payload

    @classmethod
    def from_payload(cls, G: GroupSpec, payload: Dict[str, Any]) -> "Classification":
        """Reconstrói uma classificação a partir de :meth:`to_payload`.

        O conjunto original é recalculado pela reconstrução.

        Raises:
            ParseError: Payload incompleto ou incompatível com ``G``
        """
        raw_variant = str(payload.get("variant"))
        try:
            variant = ClassificationVariant(raw_variant)
        except ValueError as e:
            raise ParseError(f"Variante desconhecida: '{raw_variant}'",
                             token=raw_variant) from e
        if variant == ClassificationVariant.NOT_SEMIAFFINE:
            raise ParseError("Classificação not_semiaffine não tem decomposição",
                             token=raw_variant)
        try:
            H = Subgroup(bits=SubsetBits.from_indices(G, payload["H"]))
            fields: Dict[str, Any] = {"subgroup": H,
                                      "affine": bool(payload.get("affine"))}
            if variant == ClassificationVariant.TWO_COSETS:
                fields["a"] = element_at(G, int(payload["a"]))
                fields["b"] = element_at(G, int(payload["b"]))
            else:
                fields["complement"] = SubsetBits.from_indices(G, payload["C"])
                fields["g"] = element_at(G, int(payload["g"]))
                if payload.get("P") is not None:
                    fields["inner_subgroup"] = Subgroup(
                        bits=SubsetBits.from_indices(G, payload["P"]))
        except (KeyError, TypeError, IndexError, ValueError) as e:
            raise ParseError(f"Payload de classificação inválido: {e}",
                             token=raw_variant) from e
        subset = reconstruct_parts(variant, fields)
        return cls(variant=variant, subset=subset, **fields)


class TheoremCheck(BaseModel):
    """Uma verificação individual do relatório do teorema."""

    name: str = Field(..., description="Nome da verificação")
    passed: bool = Field(..., description="Se passou")
    detail: str = Field(default="", description="Detalhe da falha")


class TheoremReport(BaseModel):
    """Relatório de :func:`verify_theorem` para um conjunto."""

    subset: SubsetBits = Field(..., description="Conjunto verificado")
    variant: ClassificationVariant = Field(..., description="Ramo obtido")
    checks: List[TheoremCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[TheoremCheck]:
        return [check for check in self.checks if not check.passed]

    def to_payload(self) -> Dict[str, Any]:
        return {
            "subset": self.subset.members(),
            "variant": self.variant.value,
            "passed": self.passed,
            "checks": [check.model_dump() for check in self.checks],
        }
