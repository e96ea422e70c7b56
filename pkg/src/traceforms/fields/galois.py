"""Galois fields GF(p^k), p odd, as polynomial residues mod a fixed modulus.

The modulus is the lexicographically least monic irreducible of degree k,
ordered by the little-endian integer encoding of its non-leading
coefficients, so two GaloisField(p, k) instances are always identical.
Element payloads are k-tuples of ints in [0, p), little-endian.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import InputError
from .base import Field

# Caps keep brute-force searches (irreducibility, embeddings) at desk scale.
MAX_ORDER = 10**6


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a, b, modulus, p):
    """Product of int-coefficient polys a, b reduced mod (modulus, p)."""
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_reduce(prod, modulus, p)


def _poly_reduce(c, modulus, p):
    c = list(c)
    k = len(modulus) - 1
    for i in range(len(c) - 1, k - 1, -1):
        coef = c[i] % p
        if coef:
            # modulus is monic: subtract coef * x^(i-k) * modulus
            shift = i - k
            for j, mj in enumerate(modulus):
                c[shift + j] = (c[shift + j] - coef * mj) % p
    del c[k:]
    return c


def _poly_divmod(a, b, p):
    """Quotient and remainder of int-coefficient polys over GF(p)."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    r = a
    while len(r) >= len(b):
        coef = (r[-1] * inv_lead) % p
        deg = len(r) - len(b)
        q[deg] = coef
        for j, bj in enumerate(b):
            r[deg + j] = (r[deg + j] - coef * bj) % p
        r = _poly_trim(r)
    return q, r


def _is_irreducible(candidate, p) -> bool:
    """Brute-force: no monic factor of degree 1 .. deg/2."""
    deg = len(candidate) - 1
    for d in range(1, deg // 2 + 1):
        for m in range(p**d):
            divisor = _int_to_digits(m, p, d) + [1]
            _, rem = _poly_divmod(candidate, divisor, p)
            if not rem:
                return False
    return True


def _int_to_digits(m: int, p: int, k: int) -> list[int]:
    digits = []
    for _ in range(k):
        digits.append(m % p)
        m //= p
    return digits


@lru_cache(maxsize=None)
def _find_modulus(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    for m in range(p**k):
        candidate = _int_to_digits(m, p, k) + [1]
        if _is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError("no irreducible polynomial found")


class GaloisField(Field):
    kind = "GF"

    def __init__(self, p: int, k: int = 1):
        import sympy

        if p == 2:
            raise InputError("characteristic 2 is out of scope")
        if not sympy.isprime(p):
            raise InputError(f"{p} is not prime")
        if k < 1 or p**k > MAX_ORDER:
            raise InputError(f"GF({p}^{k}) outside the supported range")
        self.p = p
        self.k = k
        self.q = p**k
        self.char = p
        self.modulus = _find_modulus(p, k)

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("GF", self.p, self.k))

    def __repr__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    # -- encoding ----------------------------------------------------------
    def from_index(self, m: int):
        """m-th element in the canonical enumeration, 0 <= m < q."""
        return self.element(tuple(_int_to_digits(m, self.p, self.k)))

    def to_index(self, x) -> int:
        payload = self.coerce(x).payload
        return sum(c * self.p**i for i, c in enumerate(payload))

    def gen(self):
        """Residue class of x (equals from_int for k = 1)."""
        if self.k == 1:
            return self.one()
        return self.from_index(self.p)

    # -- arithmetic ----------------------------------------------------------
    def _pad(self, c: tuple[int, ...]) -> tuple[int, ...]:
        return c + (0,) * (self.k - len(c)) if len(c) < self.k else c

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    def _mul(self, a, b):
        return self._pad(tuple(_poly_mulmod(list(a), list(b), list(self.modulus), self.p)))

    def _inv(self, a):
        if self._is_zero(a):
            raise ZeroDivisionError("division by zero in " + repr(self))
        # extended Euclid in GF(p)[x]
        r0, r1 = list(self.modulus), _poly_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, r = _poly_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            qs1 = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                for j, sj in enumerate(s1):
                    qs1[i + j] = (qs1[i + j] + qi * sj) % self.p
            new = [( (s0[i] if i < len(s0) else 0) - (qs1[i] if i < len(qs1) else 0) ) % self.p
                   for i in range(max(len(s0), len(qs1)))]
            s0, s1 = s1, _poly_trim(new)
        lead_inv = pow(r0[-1], -1, self.p)
        out = [(c * lead_inv) % self.p for c in s0]
        return self._pad(tuple(_poly_reduce(out, list(self.modulus), self.p)))

    def _div(self, a, b):
        return self._mul(a, self._inv(b))

    def _is_zero(self, a) -> bool:
        return all(c == 0 for c in a)

    def _zero(self):
        return (0,) * self.k

    def _one(self):
        return self._pad((1,))

    def _from_int(self, n: int):
        return self._pad((n % self.p,))

    def _format(self, a) -> str:
        if self.k == 1:
            return str(a[0])
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}g" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) if terms else "0"

    # -- multiplicative structure ---------------------------------------------
    def _pow_payload(self, a, n: int):
        result = self._one()
        base = a
        while n:
            if n & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            n >>= 1
        return result

    def element_order(self, x) -> int:
        a = x.payload if hasattr(x, "payload") else x
        if self._is_zero(a):
            raise ZeroDivisionError("0 has no multiplicative order")
        order = 1
        acc = a
        while acc != self._one():
            acc = self._mul(acc, a)
            order += 1
        return order

    def _is_square(self, a) -> bool:
        if self._is_zero(a):
            return True
        return self._pow_payload(a, (self.q - 1) // 2) == self._one()

    @lru_cache(maxsize=None)
    def _canonical_nonsquare(self):
        for m in range(1, self.q):
            a = tuple(_int_to_digits(m, self.p, self.k))
            if not self._is_square(a):
                return a
        raise AssertionError("no nonsquare found")

    def _square_class(self, a):
        if self._is_zero(a):
            raise ZeroDivisionError("0 has no square class")
        return self._one() if self._is_square(a) else self._canonical_nonsquare()

    def square_class_reps(self):
        return [self.one(), self.element(self._canonical_nonsquare())]

    # -- roots of unity ----------------------------------------------------------
    def two_power_root_level(self) -> int:
        v = 0
        m = self.q - 1
        while m % 2 == 0:
            v += 1
            m //= 2
        return v

    @lru_cache(maxsize=None)
    def _two_sylow_generator(self):
        """First element (canonical order) generating the 2-Sylow of the units."""
        v = self.two_power_root_level()
        target = 2**v
        odd = (self.q - 1) // target
        for m in range(1, self.q):
            a = tuple(_int_to_digits(m, self.p, self.k))
            b = self._pow_payload(a, odd)
            if self.element_order(b) == target:
                return b
        raise AssertionError("2-Sylow generator not found")

    def zeta(self, k: int):
        v = self.two_power_root_level()
        if k > v:
            raise InputError(f"{self!r} has no primitive 2^{k}-th root of unity")
        if k == 0:
            return self.one()
        g = self._two_sylow_generator()
        return self.element(self._pow_payload(g, 2 ** (v - k)))

    # -- JSON -------------------------------------------------------------------
    def element_to_json(self, a):
        if self.k == 1:
            return a[0]
        return list(a)

    def element_from_json(self, obj):
        if isinstance(obj, bool):
            raise InputError("boolean is not a field element")
        if isinstance(obj, int):
            return self._from_int(obj)
        if isinstance(obj, list) and all(isinstance(c, int) for c in obj):
            if len(obj) > self.k:
                raise InputError(f"coefficient list longer than degree {self.k}")
            return self._pad(tuple(c % self.p for c in obj))
        raise InputError(f"bad GF element {obj!r}")

    def to_json(self):
        return {"base": {"kind": "GF", "p": self.p, "k": self.k}, "laurent_vars": []}


@lru_cache(maxsize=None)
def _embedding_root(p: int, src_k: int, dst_k: int) -> int:
    """Index of a root of GF(p, src_k).modulus inside GF(p, dst_k)."""
    src = GaloisField(p, src_k)
    dst = GaloisField(p, dst_k)
    coeffs = [dst._from_int(c) for c in src.modulus]
    for m in range(dst.q):
        x = dst.from_index(m).payload
        acc = dst._zero()
        power = dst._one()
        for c in coeffs:
            acc = dst._add(acc, dst._mul(c, power))
            power = dst._mul(power, x)
        if dst._is_zero(acc):
            return m
    raise AssertionError("no root: embedding impossible")


def embedding(src: GaloisField, dst: GaloisField):
    """Field embedding GF(p^j) -> GF(p^k) for j | k, as a payload map."""
    if src.p != dst.p or dst.k % src.k != 0:
        raise InputError(f"no embedding {src!r} -> {dst!r}")
    root = dst.from_index(_embedding_root(src.p, src.k, dst.k)).payload

    def emb(a):
        acc = dst._zero()
        power = dst._one()
        for c in a:
            acc = dst._add(acc, dst._mul(dst._from_int(c), power))
            power = dst._mul(power, root)
        return acc

    return emb
