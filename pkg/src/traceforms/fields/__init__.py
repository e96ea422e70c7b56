"""Exact arithmetic over the supported field zoo.

Supported descriptors: Q, GF(p^k) for odd p, and Laurent-polynomial towers
over either, e.g. GF(5)((X))((Y)).  Construct with `field_from_json` or the
classes directly; tower layers are stacked innermost-first.
"""

from __future__ import annotations

from ..errors import InputError
from .base import Field, FieldElement
from .galois import GaloisField, embedding
from .laurent import LaurentField, tower_base, tower_variables
from .rational import Rationals, squarefree_part
from .search import find_prime_with_level, prime_power_for_level, two_adic_valuation
from .valuation import mod2_rank, valuation_vector, valuations_independent

__all__ = [
    "Field",
    "FieldElement",
    "GaloisField",
    "LaurentField",
    "Rationals",
    "embedding",
    "field_from_json",
    "find_prime_with_level",
    "laurent_tower",
    "mod2_rank",
    "prime_power_for_level",
    "squarefree_part",
    "tower_base",
    "tower_variables",
    "two_adic_valuation",
    "valuation_vector",
    "valuations_independent",
]


def laurent_tower(base: Field, *variables: str) -> Field:
    """Stack Laurent layers over a base field, innermost variable first."""
    field = base
    for var in variables:
        field = LaurentField(field, var)
    return field


def field_from_json(obj) -> Field:
    """Parse {"base": {...}, "laurent_vars": [...]} into a Field."""
    if not isinstance(obj, dict) or "base" not in obj:
        raise InputError("field descriptor must be an object with a 'base' key")
    base_spec = obj["base"]
    kind = base_spec.get("kind") if isinstance(base_spec, dict) else None
    if kind == "Q":
        base: Field = Rationals()
    elif kind == "GF":
        try:
            base = GaloisField(int(base_spec["p"]), int(base_spec.get("k", 1)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad GF descriptor {base_spec!r}") from exc
    else:
        raise InputError(f"unknown base kind {kind!r}")
    variables = obj.get("laurent_vars", [])
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise InputError("laurent_vars must be a list of strings")
    return laurent_tower(base, *variables)
