"""Symmetric Gram matrices and fraction-free diagonalization.

Diagonalization performs symmetric congruence column/row operations of the
shape  c_j <- p*c_j - g_ij*c_i  (p the current pivot), which never divides
and therefore works verbatim over Laurent layers where division is partial.
The returned change of basis P satisfies  P^T G P = diag  exactly, and is
re-checked before returning.
"""

from __future__ import annotations

from ..errors import ConsistencyError, InputError
from ..fields.base import Field, FieldElement
from .linalg import coerce_matrix, identity_matrix, mat_mul, mat_transpose


class GramMatrix:
    """Symmetric matrix of a bilinear form over a Field."""

    def __init__(self, field: Field, entries):
        self.field = field
        rows = coerce_matrix(field, entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InputError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise InputError(f"Gram matrix not symmetric at ({i},{j})")
        self.rows = rows
        self.dim = n

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return (
            isinstance(other, GramMatrix)
            and other.field == self.field
            and other.rows == self.rows
        )

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "entries": [
                [self.field.element_to_json(x.payload) for x in row]
                for row in self.rows
            ],
        }

    @classmethod
    def from_json(cls, field: Field, obj) -> "GramMatrix":
        entries = [
            [field.element(field.element_from_json(x)) for x in row]
            for row in obj["entries"]
        ]
        return cls(field, entries)

    def __repr__(self):
        return f"GramMatrix(dim={self.dim} over {self.field})"


def _swap(mat, p, i, j):
    mat[i], mat[j] = mat[j], mat[i]
    for row in mat:
        row[i], row[j] = row[j], row[i]
    for row in p:
        row[i], row[j] = row[j], row[i]


def diagonalize(gram: GramMatrix):
    """Fraction-free symmetric diagonalization.

    Returns (diag_entries, P) with P^T G P diagonal, verifying the
    congruence exactly.  Raises InputError on a degenerate form (a zero
    diagonal entry can only arise from a singular Gram matrix here).
    """
    field = gram.field
    n = gram.dim
    mat = [row[:] for row in gram.rows]
    p = identity_matrix(field, n)

    for i in range(n):
        if mat[i][i].is_zero():
            pivot_row = next(
                (j for j in range(i + 1, n) if not mat[j][j].is_zero()), None
            )
            if pivot_row is not None:
                _swap(mat, p, i, pivot_row)
            else:
                pair = next(
                    (
                        (j, k)
                        for j in range(i, n)
                        for k in range(j + 1, n)
                        if not mat[j][k].is_zero()
                    ),
                    None,
                )
                if pair is None:
                    raise InputError("degenerate form: zero block remains")
                j, k = pair
                # c_j <- c_j + c_k makes (j,j) equal 2*B(e_j, e_k) != 0
                for row in mat:
                    row[j] = row[j] + row[k]
                mat[j] = [x + y for x, y in zip(mat[j], mat[k])]
                for row in p:
                    row[j] = row[j] + row[k]
                if mat[j][j].is_zero():
                    raise ConsistencyError("pivot creation failed in char != 2")
                if j != i:
                    _swap(mat, p, i, j)
        pivot = mat[i][i]
        for j in range(i + 1, n):
            f = mat[i][j]
            if f.is_zero():
                continue
            # c_j <- pivot*c_j - f*c_i (columns, then matching rows)
            for row in mat:
                row[j] = pivot * row[j] - f * row[i]
            mat[j] = [pivot * x - f * y for x, y in zip(mat[j], mat[i])]
            for row in p:
                row[j] = pivot * row[j] - f * row[i]

    diag = [mat[i][i] for i in range(n)]
    if any(d.is_zero() for d in diag):
        raise InputError("degenerate form: zero diagonal entry after reduction")
    check = mat_mul(mat_transpose(p), mat_mul(gram.rows, p))
    for i in range(n):
        for j in range(n):
            expect = diag[i] if i == j else field.zero()
            if check[i][j] != expect:
                raise ConsistencyError("congruence check P^T G P failed")
    return diag, p
