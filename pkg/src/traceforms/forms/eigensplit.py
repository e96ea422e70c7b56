"""Eigenspace splitting of a form under an orthogonal operator of order 4.

Over a field containing a square root of -1 (call it i), an operator M
with M^4 = identity that preserves a nondegenerate symmetric bilinear form
B splits the space as V(1) + V(-1) + V(i) + V(-i).  Distinct eigenvalue
pairs (u, v) with u*v != 1 pair to zero under B, the restrictions to V(1)
and V(-1) stay nondegenerate, and V(i) + V(-i) carries a hyperbolic form.
All three facts are verified, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConsistencyError, InputError
from ..fields.base import Field, FieldElement
from .gram import GramMatrix, diagonalize
from .linalg import coerce_matrix, kernel_basis, mat_mul, mat_transpose, mat_vec
from .qform import QForm
from .witt import WittClass, witt_decompose


@dataclass
class EigensplitResult:
    """Bases and restricted forms of the order-4 splitting."""

    field: Field
    dims: dict  # keys "+1", "-1", "+i", "-i"
    bases: dict
    plus_form: QForm | None
    minus_form: QForm | None
    mixed_gram: GramMatrix | None
    mixed_class: WittClass | None

    def to_json(self) -> dict:
        return {
            "dims": self.dims,
            "plus_form": self.plus_form.to_json() if self.plus_form else None,
            "minus_form": self.minus_form.to_json() if self.minus_form else None,
            "mixed_hyperbolic": (
                self.mixed_class.is_hyperbolic if self.mixed_class else True
            ),
            "mixed_dim": self.mixed_gram.dim if self.mixed_gram else 0,
        }


def _bilinear(gram: GramMatrix, u, v) -> FieldElement:
    return sum(
        (x * e for x, e in zip(u, mat_vec(gram.rows, v))),
        start=gram.field.zero(),
    )


def _restrict(gram: GramMatrix, basis) -> GramMatrix:
    entries = [[_bilinear(gram, u, v) for v in basis] for u in basis]
    return GramMatrix(gram.field, entries)


def order4_eigensplit(gram: GramMatrix, operator) -> EigensplitResult:
    """Split (V, B) under a B-orthogonal operator with operator^4 = id."""
    field = gram.field
    if field.char == 2:
        raise InputError("characteristic 2 is out of scope")
    if field.two_power_root_level() < 2:
        raise InputError("the splitting needs a square root of -1 in the field")
    n = gram.dim
    m = coerce_matrix(field, operator)
    if len(m) != n or len(m[0]) != n:
        raise InputError("operator shape does not match the form")

    # M^4 = 1 and M^T G M = G
    m2 = mat_mul(m, m)
    m4 = mat_mul(m2, m2)
    one, zero = field.one(), field.zero()
    for i in range(n):
        for j in range(n):
            if m4[i][j] != (one if i == j else zero):
                raise InputError("operator does not have order dividing 4")
    preserved = mat_mul(mat_transpose(m), mat_mul(gram.rows, m))
    if preserved != gram.rows:
        raise InputError("operator does not preserve the form")

    i_elem = field.zeta(2)
    eigen = {"+1": one, "-1": -one, "+i": i_elem, "-i": -i_elem}
    bases = {}
    for key, value in eigen.items():
        shifted = [
            [m[r][c] - (value if r == c else zero) for c in range(n)] for r in range(n)
        ]
        bases[key] = kernel_basis(field, shifted)
    dims = {key: len(b) for key, b in bases.items()}
    if sum(dims.values()) != n:
        raise ConsistencyError(
            f"eigenspace dimensions {dims} do not sum to {n}; "
            "x^4 - 1 should split the operator"
        )
    if dims["+i"] != dims["-i"]:
        raise ConsistencyError("the i and -i eigenspaces must have equal dimension")

    # orthogonality: B(V_u, V_v) = 0 unless u*v = 1
    keys = list(eigen)
    for a in range(len(keys)):
        for b in range(a, len(keys)):
            ka, kb = keys[a], keys[b]
            if eigen[ka] * eigen[kb] == one:
                continue
            for u in bases[ka]:
                for v in bases[kb]:
                    if not _bilinear(gram, u, v).is_zero():
                        raise ConsistencyError(
                            f"eigenspaces {ka} and {kb} are not orthogonal"
                        )

    plus_form = minus_form = None
    if bases["+1"]:
        diag, _ = diagonalize(_restrict(gram, bases["+1"]))
        plus_form = QForm(field, diag)
    if bases["-1"]:
        diag, _ = diagonalize(_restrict(gram, bases["-1"]))
        minus_form = QForm(field, diag)

    mixed_gram = mixed_class = None
    if bases["+i"]:
        mixed_gram = _restrict(gram, bases["+i"] + bases["-i"])
        diag, _ = diagonalize(mixed_gram)
        mixed_class = witt_decompose(QForm(field, diag))
        if not mixed_class.is_hyperbolic:
            raise ConsistencyError(
                "the paired i/-i eigenspaces must carry a hyperbolic form"
            )
    return EigensplitResult(
        field=field,
        dims=dims,
        bases=bases,
        plus_form=plus_form,
        minus_form=minus_form,
        mixed_gram=mixed_gram,
        mixed_class=mixed_class,
    )
