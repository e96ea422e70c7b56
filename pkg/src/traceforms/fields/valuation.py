"""Valuation vectors on Laurent towers and their mod-2 independence rank."""

from __future__ import annotations

from ..errors import InputError
from .base import Field, FieldElement
from .laurent import LaurentField, tower_variables


def valuation_vector(x: FieldElement) -> tuple[int, ...]:
    """Exponent vector of x under the tower valuation, innermost variable first.

    The composite valuation F* -> Z^r sends c * X1^e1 * ... * Xr^er * (higher
    order terms) to (e1, ..., er); the tuple is read off layer by layer from
    the leading coefficient.
    """
    field = x.field
    if not isinstance(field, LaurentField):
        raise InputError("valuation vectors need at least one Laurent layer")
    if x.is_zero():
        raise ZeroDivisionError("0 has no valuation")
    exps: list[int] = []
    cur = x
    while isinstance(cur.field, LaurentField):
        layer: LaurentField = cur.field
        exps.append(layer.valuation(cur))
        cur = layer.residue(cur)
    exps.reverse()
    return tuple(exps)


def mod2_rank(vectors: list[tuple[int, ...]]) -> int:
    """Rank over GF(2) of a list of integer vectors."""
    rows = [sum((v & 1) << i for i, v in enumerate(vec)) for vec in vectors]
    basis: dict[int, int] = {}  # top bit -> reduced row
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top in basis:
                row ^= basis[top]
            else:
                basis[top] = row
                break
    return len(basis)


def valuations_independent(field: Field, entries) -> bool:
    """True when the entries' valuation vectors are independent in Gamma/2Gamma."""
    elems = [field.coerce(e) for e in entries]
    vecs = [valuation_vector(e) for e in elems]
    return mod2_rank(vecs) == len(vecs)


def tower_rank(field: Field) -> int:
    return len(tower_variables(field))
