"""Trace forms of explicit etale algebras: monogenic and multiquadratic.

trace_form_from_poly builds the Gram matrix of (x, y) -> Tr(xy) on
K[T]/(f) in the power basis, with the power sums Tr(T^k) produced by
Newton's identities from the coefficients -- no root finding, exact over
any coefficient field here.

trace_form_multiquadratic returns the diagonal trace form of
K[sqrt(a_1), ..., sqrt(a_r)] in the square-root monomial basis: the
monomial m_T for a subset T has Tr(m_T^2) = 2^r * prod_{i in T} a_i and
distinct monomials pair to zero.
"""

from __future__ import annotations

from ..errors import InputError
from ..fields.base import Field, FieldElement
from .gram import GramMatrix
from .linalg import determinant
from .qform import QForm


def power_sums(field: Field, coeffs: list[FieldElement], count: int):
    """Tr(T^k) on K[T]/(f) for k = 0..count-1, by Newton's identities.

    `coeffs` is the full monic coefficient list c_0..c_n with c_n = 1,
    so the elementary symmetric functions are e_k = (-1)^k c_{n-k}.
    """
    n = len(coeffs) - 1
    e = [(-field.one()) ** k * coeffs[n - k] for k in range(n + 1)]
    sums = [field.from_int(n)]
    for k in range(1, count):
        acc = field.zero()
        sign = field.one()
        upper = min(k - 1, n) if k <= n else n
        for i in range(1, upper + 1):
            acc = acc + sign * e[i] * sums[k - i]
            sign = -sign
        if k <= n:
            # p_k = sum_{i<k} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k
            tail = field.from_int(k) * e[k]
            acc = acc + (tail if k % 2 else -tail)
        sums.append(acc)
    return sums


def trace_form_from_poly(field: Field, coeffs) -> GramMatrix:
    """Gram matrix of the trace form of K[T]/(f) in the power basis.

    `coeffs` lists f low-to-high including the leading 1.  The algebra
    trace is used directly; f need not be irreducible, but it must be
    separable: the Gram determinant equals disc(f), so a zero determinant
    is rejected.
    """
    coeffs = [field.coerce(c) for c in coeffs]
    if len(coeffs) < 2:
        raise InputError("polynomial must have degree >= 1")
    if coeffs[-1] != field.one():
        raise InputError("polynomial must be monic")
    n = len(coeffs) - 1
    sums = power_sums(field, coeffs, 2 * n - 1)
    entries = [[sums[i + j] for j in range(n)] for i in range(n)]
    gram = GramMatrix(field, entries)
    if determinant(gram.rows).is_zero():
        raise InputError(
            "inseparable polynomial: discriminant 0, trace form degenerate"
        )
    return gram


def trace_form_multiquadratic(field: Field, generators) -> QForm:
    """Diagonal trace form of the multiquadratic algebra K[sqrt(a_i)].

    r = 0 gives the trivial extension with form <1>.  When the field
    contains a primitive 4th root of unity, the result is checked
    Witt-equivalent to <2^r> times the plus-convention Pfister form on
    the generators (the two computations are independent routes).
    """
    gens = [field.coerce(a) for a in generators]
    if any(a.is_zero() for a in gens):
        raise InputError("generators must be nonzero")
    r = len(gens)
    scale = field.from_int(2**r)
    entries = []
    for mask in range(2**r):
        prod = field.one()
        for i in range(r):
            if (mask >> i) & 1:
                prod = prod * gens[i]
        entries.append(scale * prod)
    form = QForm(field, entries)
    if field.kind in ("GF", "laurent") and field.two_power_root_level() >= 2:
        from ..errors import ConsistencyError
        from .qform import scaled_pfister
        from .witt import witt_equivalent

        template = scaled_pfister(field, scale, gens, convention="plus")
        if not witt_equivalent(form, template):
            raise ConsistencyError(
                "multiquadratic trace form is not Witt-equivalent to the "
                "scaled Pfister template"
            )
    return form
