"""Small exact matrix helpers over a Field (lists of FieldElement rows)."""

from __future__ import annotations

from ..errors import InputError
from ..fields.base import Field, FieldElement


def identity_matrix(field: Field, n: int) -> list[list[FieldElement]]:
    return [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), start=a[0][0].field.zero()) for j in range(m)]
        for i in range(n)
    ]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_vec(a, v):
    zero = a[0][0].field.zero()
    return [sum((a[i][t] * v[t] for t in range(len(v))), start=zero) for i in range(len(a))]


def coerce_matrix(field: Field, rows) -> list[list[FieldElement]]:
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InputError("matrix rows must be nonempty and equal-length")
    return [[field.coerce(x) for x in row] for row in rows]


def mat_inverse(field: Field, a):
    """Inverse via Gauss-Jordan; raises InputError when singular."""
    n = len(a)
    mat = [row[:] + ident_row for row, ident_row in zip(a, identity_matrix(field, n))]
    col = 0
    for col in range(n):
        sel = next((r for r in range(col, n) if not mat[r][col].is_zero()), None)
        if sel is None:
            raise InputError("matrix is singular")
        mat[col], mat[sel] = mat[sel], mat[col]
        inv = field.one() / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        for r in range(n):
            if r != col and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    return [row[n:] for row in mat]


def determinant(a):
    """Division-free determinant via subset dynamic programming.

    Sums sgn(sigma) * prod a[i][sigma(i)] row by row, keyed on the set of
    used columns, so it never divides and stays valid over Laurent layers
    where division can be non-representable.  O(2^n * n) ring operations.
    """
    n = len(a)
    if n == 0 or any(len(r) != n for r in a):
        raise InputError("determinant needs a nonempty square matrix")
    field = a[0][0].field
    dp = {0: field.one()}
    for i in range(n):
        nxt: dict[int, FieldElement] = {}
        for mask, val in dp.items():
            for c in range(n):
                if (mask >> c) & 1 or a[i][c].is_zero():
                    continue
                term = a[i][c] * val
                if bin(mask >> (c + 1)).count("1") & 1:
                    term = -term
                key = mask | (1 << c)
                acc = nxt.get(key)
                nxt[key] = term if acc is None else acc + term
        dp = {k: v for k, v in nxt.items() if not v.is_zero()}
        if not dp:
            return field.zero()
    return dp.get((1 << n) - 1, field.zero())


def kernel_basis(field: Field, rows) -> list[list[FieldElement]]:
    """Basis of the right kernel, by Gauss elimination with division.

    Over a Laurent layer division may raise NotRepresentable; callers in
    scope only eliminate over true fields (GF, Q).
    """
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    mat = [row[:] for row in rows]
    pivots: list[tuple[int, int]] = []
    rank_row = 0
    for col in range(n):
        sel = None
        for r in range(rank_row, m):
            if not mat[r][col].is_zero():
                sel = r
                break
        if sel is None:
            continue
        mat[rank_row], mat[sel] = mat[sel], mat[rank_row]
        inv = field.one() / mat[rank_row][col]
        mat[rank_row] = [x * inv for x in mat[rank_row]]
        for r in range(m):
            if r != rank_row and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank_row])]
        pivots.append((rank_row, col))
        rank_row += 1
        if rank_row == m:
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        vec = [field.zero()] * n
        vec[free] = field.one()
        for r, c in pivots:
            vec[c] = -mat[r][free]
        basis.append(vec)
    return basis
