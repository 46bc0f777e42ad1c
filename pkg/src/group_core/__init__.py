"""Aritmética de grupos abelianos finitos dados como produto de cíclicos."""

from .arithmetic import (
    add,
    check_cap,
    element_at,
    element_order,
    enumerate_elements,
    index_of,
    neg,
    scalar_mul,
    sub,
    validate_element,
)
from .models import Element, GroupSpec
from .parsing import format_element, parse_element, parse_group_spec
from .tables import GroupTable, group_table

__all__ = [
    "Element",
    "GroupSpec",
    "GroupTable",
    "add",
    "check_cap",
    "element_at",
    "element_order",
    "enumerate_elements",
    "format_element",
    "group_table",
    "index_of",
    "neg",
    "parse_element",
    "parse_group_spec",
    "scalar_mul",
    "sub",
    "validate_element",
]
