"""Group constructors and the JSON presentation dispatch.

Every builder materializes a full multiplication table (GroupTable).  The
dihedral, quaternion, semidihedral, and modular families share one
metacyclic normal form r^i f^j (j < 2); the Iwasawa constructor builds the
normal form a * t^i, 0 <= i < 2^q, for an abelian 2-group A acted on by
a -> a^(1+2^s), with t^(2^q) identified with a chosen a0 in A.
"""

from __future__ import annotations

from math import prod

from ..errors import CapExceeded, InputError, InvalidPresentation
from .table import MAX_BUILD, GroupTable


def _is_two_power(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _log2(n: int) -> int:
    return n.bit_length() - 1


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise InvalidPresentation("cyclic order must be positive")
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [f"a^{i}" if i > 1 else "a" for i in range(1, n)]
    return GroupTable(mult, labels=labels, name=f"Z/{n}")


def direct_product(*factors: GroupTable) -> GroupTable:
    if not factors:
        raise InvalidPresentation("empty direct product")
    if len(factors) == 1:
        return factors[0]
    sizes = [g.n for g in factors]
    n = prod(sizes)
    if n > MAX_BUILD:
        raise CapExceeded(f"direct product order {n} exceeds {MAX_BUILD}")

    def unpack(idx: int) -> list[int]:
        out = []
        for size in reversed(sizes):
            out.append(idx % size)
            idx //= size
        out.reverse()
        return out

    def pack(parts) -> int:
        idx = 0
        for size, p in zip(sizes, parts):
            idx = idx * size + p
        return idx

    mult = []
    for a in range(n):
        pa = unpack(a)
        row = []
        for b in range(n):
            pb = unpack(b)
            row.append(pack([g.mult[x][y] for g, x, y in zip(factors, pa, pb)]))
        mult.append(row)
    labels = [
        "|".join(g.labels[x] for g, x in zip(factors, unpack(a))) for a in range(n)
    ]
    name = " x ".join(g.name or "?" for g in factors)
    return GroupTable(mult, labels=labels, name=name)


def _bicyclic(m: int, conj: int, fsq: int, name: str, rlab="r", flab="f") -> GroupTable:
    """Group <r, f | r^m = e, f^2 = r^fsq, f r f^-1 = r^conj> of order 2m.

    Elements are r^i f^j with j < 2; requires conj^2 = 1 and conj*fsq = fsq
    mod m so that the normal form is consistent.
    """
    if (conj * conj) % m != 1 % m or (conj * fsq) % m != fsq % m:
        raise InvalidPresentation("inconsistent metacyclic parameters")
    n = 2 * m

    def pack(i: int, j: int) -> int:
        return (i % m) * 2 + j

    mult = [[0] * n for _ in range(n)]
    for i in range(m):
        for j in range(2):
            for u in range(m):
                for v in range(2):
                    # (r^i f^j)(r^u f^v) = r^(i + conj^j u) f^(j+v)
                    shift = i + (conj**j) * u
                    if j + v == 2:
                        mult[pack(i, j)][pack(u, v)] = pack(shift + fsq, 0)
                    else:
                        mult[pack(i, j)][pack(u, v)] = pack(shift, j + v)
    labels = []
    for i in range(m):
        for j in range(2):
            ri = "e" if i == 0 else (rlab if i == 1 else f"{rlab}^{i}")
            if j:
                labels.append(flab if i == 0 else f"{ri}*{flab}")
            else:
                labels.append(ri)
    return GroupTable(mult, labels=labels, name=name)


def dihedral_group(order: int) -> GroupTable:
    if order < 8 or not _is_two_power(order):
        raise InvalidPresentation("dihedral 2-group needs order 2^k >= 8")
    return _bicyclic(order // 2, order // 2 - 1, 0, f"D{order}")


def quaternion_group(order: int) -> GroupTable:
    if order < 8 or not _is_two_power(order):
        raise InvalidPresentation("generalized quaternion needs order 2^k >= 8")
    m = order // 2
    return _bicyclic(m, m - 1, m // 2, f"Q{order}")


def semidihedral_group(order: int) -> GroupTable:
    if order < 16 or not _is_two_power(order):
        raise InvalidPresentation("semidihedral needs order 2^k >= 16")
    m = order // 2
    return _bicyclic(m, m // 2 - 1, 0, f"SD{order}")


def modular_group(n: int) -> GroupTable:
    """M(2^n) = <s, t | s^(2^(n-1)), t^2, t s t^-1 = s^(1+2^(n-2))>, n >= 4."""
    if n < 4:
        raise InvalidPresentation("modular 2-group needs n >= 4")
    m = 2 ** (n - 1)
    if 2 * m > MAX_BUILD:
        raise CapExceeded(f"order 2^{n} exceeds {MAX_BUILD}")
    return _bicyclic(m, m // 2 + 1, 0, f"M{2**n}", rlab="s", flab="t")


def iwasawa_group(
    orders: list[int], s: int, q: int, a0: list[int] | None = None
) -> GroupTable:
    """Normal form a * t^i over an abelian 2-group A = prod Z/orders[c].

    Relations: t a t^-1 = a^(1+2^s) and t^(2^q) = a0.  Validity needs
    a0^(2^s) = e and the action order 2^(e-s) dividing 2^q (e = log2 exp A);
    both hold automatically inside any group carrying this structure.
    """
    if not orders or any(o < 2 or not _is_two_power(o) for o in orders):
        raise InvalidPresentation("A must be a nontrivial abelian 2-group")
    if s < 1 or q < 1:
        raise InvalidPresentation("need s >= 1 and q >= 1")
    if a0 is None:
        a0 = [0] * len(orders)
    if len(a0) != len(orders):
        raise InvalidPresentation("a0 has wrong length")
    a0 = [x % o for x, o in zip(a0, orders)]
    e = _log2(max(orders))
    if any((x * 2**s) % o for x, o in zip(a0, orders)):
        raise InvalidPresentation("a0 must satisfy a0^(2^s) = e")
    # conjugation by t^(2^q) must be trivial on A, so the multiplicative
    # order of 1+2^s mod 2^e (a 2-power) must divide 2^q
    x, cnt = (1 + 2**s) % 2**e, 0
    while x != 1 % 2**e:
        x, cnt = (x * x) % 2**e, cnt + 1
    if cnt > q:
        raise InvalidPresentation(
            f"action order 2^{cnt} does not divide 2^{q}; presentation collapses"
        )
    asize = prod(orders)
    n = asize * 2**q
    if n > MAX_BUILD:
        raise CapExceeded(f"order {n} exceeds {MAX_BUILD}")

    def unpack(idx: int) -> list[int]:
        out = []
        for o in reversed(orders):
            out.append(idx % o)
            idx //= o
        out.reverse()
        return out

    def pack(parts) -> int:
        idx = 0
        for o, p in zip(orders, parts):
            idx = idx * o + p % o
        return idx

    tm = 2**q
    # sigma^i multiplies A-exponents by (1+2^s)^i
    sigma_pow = [pow(1 + 2**s, i, 2**e if e else 1) for i in range(tm)]
    a0_idx = pack(a0)

    def idx(ai: int, ti: int) -> int:
        return ai * tm + ti

    mult = [[0] * n for _ in range(n)]
    for ai in range(asize):
        va = unpack(ai)
        for ti in range(tm):
            mul = sigma_pow[ti]
            for bi in range(asize):
                vb = unpack(bi)
                merged = [x + mul * y for x, y in zip(va, vb)]
                base = pack(merged)
                row = mult[idx(ai, ti)]
                for tj in range(tm):
                    k = ti + tj
                    if k >= tm:
                        out_a = pack(
                            [x + y for x, y in zip(unpack(base), unpack(a0_idx))]
                        )
                        row[idx(bi, tj)] = idx(out_a, k - tm)
                    else:
                        row[idx(bi, tj)] = idx(base, k)
    labels = []
    gens = (
        ["a"] if len(orders) == 1 else [f"a{c}" for c in range(len(orders))]
    )
    for ai in range(asize):
        va = unpack(ai)
        parts = [
            g if x == 1 else f"{g}^{x}" for g, x in zip(gens, va) if x
        ]
        for ti in range(tm):
            tpart = [] if ti == 0 else (["t"] if ti == 1 else [f"t^{ti}"])
            all_parts = parts + tpart
            labels.append("*".join(all_parts) if all_parts else "e")
    name = f"iwasawa({'x'.join(str(o) for o in orders)};s={s},q={q})"
    return GroupTable(mult, labels=labels, name=name)


def permutation_group(degree: int, generators: list[list[int]]) -> GroupTable:
    """Closure of 0-based permutations under composition (apply right first)."""
    if degree < 1:
        raise InputError("degree must be positive")
    gens = []
    for g in generators:
        if sorted(g) != list(range(degree)):
            raise InputError(f"not a permutation of 0..{degree - 1}: {g}")
        gens.append(tuple(g))
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            new = tuple(cur[g[x]] for x in range(degree))
            if new not in index:
                if len(elements) >= MAX_BUILD:
                    raise CapExceeded(f"permutation closure exceeds {MAX_BUILD}")
                index[new] = len(elements)
                elements.append(new)
                frontier.append(new)
    n = len(elements)
    mult = [
        [index[tuple(a[b[x]] for x in range(degree))] for b in elements]
        for a in elements
    ]
    labels = ["(" + " ".join(map(str, p)) + ")" for p in elements]
    return GroupTable(mult, labels=labels, name=f"perm<{degree}>")


_BUILDERS = {
    "cyclic": lambda p: cyclic_group(int(p["n"])),
    "dihedral": lambda p: dihedral_group(int(p["order"])),
    "quaternion": lambda p: quaternion_group(int(p["order"])),
    "semidihedral": lambda p: semidihedral_group(int(p["order"])),
    "modular": lambda p: modular_group(int(p["n"])),
    "iwasawa": lambda p: iwasawa_group(
        [int(x) for x in p["abelian_orders"]],
        int(p["s"]),
        int(p["q"]),
        [int(x) for x in p["a0"]] if p.get("a0") is not None else None,
    ),
    "permutation": lambda p: permutation_group(
        int(p["degree"]), [list(map(int, g)) for g in p["generators"]]
    ),
    "table": lambda p: GroupTable(p["mult"], labels=p.get("labels"), name=p.get("name")),
}


def build_group(spec: dict) -> GroupTable:
    """Build a group from a JSON presentation {"kind": ..., ...}."""
    if not isinstance(spec, dict):
        raise InputError("presentation must be a JSON object")
    kind = spec.get("kind")
    if kind == "direct-product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or not factors:
            raise InputError("direct-product needs a nonempty factor list")
        return direct_product(*[build_group(f) for f in factors])
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise InputError(f"unknown presentation kind {kind!r}")
    try:
        return builder(spec)
    except KeyError as exc:
        raise InputError(f"missing presentation parameter {exc}") from exc
