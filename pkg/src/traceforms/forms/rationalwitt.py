"""Witt-ring computations over Q via Hilbert symbols and Hasse invariants.

A diagonal form is reduced to its square-class data (signed squarefree
integers).  Local anisotropic dimensions at a finite place are computed by
stripping hyperbolic planes off the invariant triple (dim, disc, Hasse)
and testing realizability; the global anisotropic dimension is the
maximum of the local ones over the real place and the finitely many
relevant primes (odd primes not dividing any entry can only contribute
the parity minimum, which the maximum already accounts for).
"""

from __future__ import annotations

from fractions import Fraction

from sympy import factorint

from ..errors import InputError
from ..fields.rational import squarefree_part

INF = "inf"


def _class_int(x) -> int:
    """Signed squarefree representative of the square class of x != 0."""
    if isinstance(x, Fraction):
        if x == 0:
            raise InputError("0 has no square class")
        return squarefree_part(x.numerator * x.denominator)
    if x == 0:
        raise InputError("0 has no square class")
    return squarefree_part(int(x))


def _legendre(u: int, p: int) -> int:
    r = pow(u % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def _split(n: int, p: int) -> tuple[int, int]:
    """(valuation, unit part) of a squarefree integer at p."""
    if n % p == 0:
        return 1, n // p
    return 0, n


def hilbert_symbol(a, b, p) -> int:
    """Hilbert symbol (a, b)_p for p an odd prime, 2, or "inf"."""
    a, b = _class_int(a), _class_int(b)
    if p == INF:
        return -1 if (a < 0 and b < 0) else 1
    if not isinstance(p, int) or p < 2:
        raise InputError(f"bad place {p!r}")
    if p == 2:
        alpha, u = _split(a, 2)
        beta, v = _split(b, 2)
        eps_u, eps_v = ((u - 1) // 2) % 2, ((v - 1) // 2) % 2
        omega_u, omega_v = ((u * u - 1) // 8) % 2, ((v * v - 1) // 8) % 2
        exponent = eps_u * eps_v + alpha * omega_v + beta * omega_u
        return -1 if exponent % 2 else 1
    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    sign = 1
    if alpha and beta:
        sign *= _legendre(-1, p)
    if beta:
        sign *= _legendre(u, p)
    if alpha:
        sign *= _legendre(v, p)
    return sign


def hasse_invariant(diag, p) -> int:
    classes = [_class_int(x) for x in diag]
    out = 1
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            out *= hilbert_symbol(classes[i], classes[j], p)
    return out


def signature(diag) -> int:
    return sum(1 if _class_int(x) > 0 else -1 for x in diag)


def discriminant(diag) -> int:
    prod = 1
    for x in diag:
        prod *= _class_int(x)
    return squarefree_part(prod)


def relevant_primes(diag) -> list[int]:
    primes = {2}
    for x in diag:
        primes.update(factorint(abs(_class_int(x))).keys())
    return sorted(primes)


def is_local_square(r: int, p) -> bool:
    """Is the squarefree integer r a square in Q_p (or in R for "inf")?"""
    if p == INF:
        return r > 0
    if p == 2:
        return r % 2 != 0 and r % 8 == 1
    v, u = _split(r, p)
    return v == 0 and _legendre(u, p) == 1


def _classes_equal(r1: int, r2: int, p) -> bool:
    return is_local_square(squarefree_part(r1 * r2), p)


def _remove_plane(disc: int, hasse: int, p) -> tuple[int, int]:
    """Invariants of q given those of q + hyperbolic-plane at p."""
    new_disc = squarefree_part(-disc)
    return new_disc, hasse * hilbert_symbol(new_disc, -1, p)


def local_aniso_dim(diag, p) -> int:
    """Anisotropic dimension of the form over Q_p (p = "inf" gives R)."""
    n = len(diag)
    if p == INF:
        return abs(signature(diag))
    disc = discriminant(diag)
    hasse = hasse_invariant(diag, p)
    if n % 2:
        for _ in range((n - 1) // 2):
            disc, hasse = _remove_plane(disc, hasse, p)
        return 1 if hasse == 1 else 3
    d0, h0 = disc, hasse
    for _ in range(n // 2):
        d0, h0 = _remove_plane(d0, h0, p)
    if is_local_square(d0, p) and h0 == 1:
        return 0
    d2, h2 = disc, hasse
    for _ in range((n - 2) // 2):
        d2, h2 = _remove_plane(d2, h2, p)
    return 2 if not _classes_equal(d2, -1, p) else 4


def global_invariants(diag) -> dict:
    primes = relevant_primes(diag)
    return {
        "dim": len(diag),
        "signature": signature(diag),
        "disc": discriminant(diag),
        "hasse": {p: hasse_invariant(diag, p) for p in primes},
    }


def global_aniso_dim(diag) -> int:
    """Anisotropic dimension over Q.

    By Hasse-Minkowski (applied to the global anisotropic kernel) this is
    the maximum of the local anisotropic dimensions, and places outside
    the real place and the relevant primes never exceed the places listed:
    if every listed place reports 0, the invariants force the class to be
    trivial outright.
    """
    places = [INF] + relevant_primes(diag)
    return max(local_aniso_dim(diag, p) for p in places)
