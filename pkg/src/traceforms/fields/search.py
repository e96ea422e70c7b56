"""Parameter searches for fields with a prescribed 2-adic level.

Both searches target fields whose unit group has 2-part exactly 2^s, i.e.
a primitive 2^s-th root of unity is present but no 2^(s+1)-th.
"""

from __future__ import annotations

import sympy

from ..errors import InputError


def two_adic_valuation(n: int) -> int:
    if n == 0:
        raise ValueError("v_2(0) is infinite")
    v = 0
    while n % 2 == 0:
        v += 1
        n //= 2
    return v


def prime_power_for_level(s: int) -> int:
    """Smallest power of 5 whose unit group has 2-part exactly 2^s.

    5^(2^(s-2)) works: v_2(5^(2^j) - 1) = j + 2 by induction, since each
    squaring step multiplies (q - 1) by (q + 1) with q + 1 = 2 mod 4.
    """
    if s < 2:
        raise InputError("level must be at least 2")
    q = 5 ** (2 ** (s - 2))
    if two_adic_valuation(q - 1) != s:
        raise AssertionError(f"level check failed for s={s}")
    return q


def find_prime_with_level(s: int, bound: int = 10**7) -> int:
    """Smallest prime p with p = 1 + 2^s mod 2^(s+1), i.e. v_2(p-1) = s.

    Exists by Dirichlet's theorem on primes in arithmetic progressions.
    """
    if s < 1:
        raise InputError("level must be at least 1")
    step = 2 ** (s + 1)
    p = 1 + 2**s
    while p < bound:
        if sympy.isprime(p):
            if two_adic_valuation(p - 1) != s:
                raise AssertionError(f"level check failed for p={p}")
            return p
        p += step
    raise InputError(f"no prime with 2-adic level {s} below {bound}")
