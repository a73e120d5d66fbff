"""Finite semiring tables: axioms, simplicity, canonical forms, enumeration.

Tables are nested lists of ints; entry [i][j] is the result of i op j.
All functions validate the semiring axioms first and raise SemiringError
on malformed input.
"""

from ._core import (
    SemiringError,
    axiom_violation,
    canonical,
    catalog,
    catalog_names,
    congruence_count,
    digest,
    element_roles,
    enumerate_classes,
    format,
    is_bi_ideal_simple,
    is_congruence_simple,
    is_ideal_simple,
    is_isomorphic,
    is_mult_divisible,
    opposite,
    parse,
    predicates,
    verify,
)

__all__ = [
    "SemiringError",
    "axiom_violation",
    "canonical",
    "catalog",
    "catalog_names",
    "congruence_count",
    "digest",
    "element_roles",
    "enumerate_classes",
    "format",
    "is_bi_ideal_simple",
    "is_congruence_simple",
    "is_ideal_simple",
    "is_isomorphic",
    "is_mult_divisible",
    "opposite",
    "parse",
    "predicates",
    "verify",
]
