"""Subgrupos e a classificação construtiva de conjuntos semiafins."""

from .classifier import (
    affine_decompose,
    classify,
    midconvex_complement_extract,
    periodic_midconvex_check,
    periodic_semiaffine_classify,
    reconstruct,
    two_coset_extract,
)
from .models import (
    Classification,
    ClassificationVariant,
    LemmaOneTrace,
    Subgroup,
    TheoremCheck,
    TheoremReport,
    is_subgroup,
)
from .subgroups import (
    all_subgroups,
    cyclic_subgroup,
    quotient_has_even_order_element,
    subgroup_generated,
)
from .verification import (
    affine_proposition_holds,
    check_lemma_one,
    check_lemma_two,
    check_periodic_classification,
    check_periodic_midconvex,
    converse_failures,
    decomposable_subsets,
    verify_theorem,
)

__all__ = [
    "Classification",
    "ClassificationVariant",
    "LemmaOneTrace",
    "Subgroup",
    "TheoremCheck",
    "TheoremReport",
    "affine_decompose",
    "affine_proposition_holds",
    "all_subgroups",
    "check_lemma_one",
    "check_lemma_two",
    "check_periodic_classification",
    "check_periodic_midconvex",
    "classify",
    "converse_failures",
    "cyclic_subgroup",
    "decomposable_subsets",
    "is_subgroup",
    "midconvex_complement_extract",
    "periodic_midconvex_check",
    "periodic_semiaffine_classify",
    "quotient_has_even_order_element",
    "reconstruct",
    "subgroup_generated",
    "two_coset_extract",
    "verify_theorem",
]
