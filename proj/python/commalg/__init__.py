"""Maximal commutative matrix subalgebras and the lengths of their generating systems."""

from ._core import (
    CommalgError,
    bound_check,
    centralizer_dimension,
    closure_dimension,
    construct,
    dimension_formula,
    is_maximal_commutative,
    length_of_system,
    li_chain,
    verify,
)

__all__ = [
    "CommalgError",
    "bound_check",
    "centralizer_dimension",
    "closure_dimension",
    "construct",
    "dimension_formula",
    "is_maximal_commutative",
    "length_of_system",
    "li_chain",
    "verify",
]
