"""Pure-Python subgroup kernels; reference semantics for the compiled core.

Conventions shared with the compiled backend:
  mult     flat multiplication table, mult[a*n + b] = a*b
  members  sorted tuple of element indices forming a subgroup
  mask     Python int bitmask of the member set

The workhorse is `extend`: given a subgroup H (members + a generating set)
and one extra element g, it produces <H, g> by breadth-first search over
right cosets H*x, so each new element costs one table lookup instead of a
full product scan.
"""

from __future__ import annotations

BACKEND = "pure"


def _mask(members) -> int:
    m = 0
    for x in members:
        m |= 1 << x
    return m


def extend(mult, n: int, members, gens, g: int):
    """Members and mask of <H union {g}> for a subgroup H = members."""
    mask = _mask(members)
    if mask >> g & 1:
        return mask, tuple(members)
    out = list(members)
    all_gens = list(gens) + [g]
    frontier = [g]
    while frontier:
        x = frontier.pop()
        if mask >> x & 1:
            continue
        row_base = x  # right coset H*x
        for h in members:
            y = mult[h * n + row_base]
            if not mask >> y & 1:
                mask |= 1 << y
                out.append(y)
        xn = x * n
        for s in all_gens:
            frontier.append(mult[xn + s])
    out.sort()
    return mask, tuple(out)


def closure(mult, n: int, identity: int, gens):
    """Subgroup generated by gens, as (mask, members)."""
    members = (identity,)
    acc: list[int] = []
    mask = 1 << identity
    for g in gens:
        if not mask >> g & 1:
            mask, members = extend(mult, n, members, acc, g)
        acc.append(g)
    return mask, members


def power_elements(mult, n: int, identity: int, members, e: int):
    """Distinct values x^e for x in members."""
    seen = 0
    out = []
    for x in members:
        acc = identity
        base = x
        k = e
        while k:
            if k & 1:
                acc = mult[acc * n + base]
            base = mult[base * n + base]
            k >>= 1
        if not seen >> acc & 1:
            seen |= 1 << acc
            out.append(acc)
    return out


def commutator_elements(mult, inv, n: int, members):
    """Distinct commutators [x, y] = x y x^-1 y^-1 over the member set."""
    seen = 0
    out = []
    for x in members:
        xn = x * n
        for y in members:
            xy = mult[xn + y]
            c = mult[mult[xy * n + inv[x]] * n + inv[y]]
            if not seen >> c & 1:
                seen |= 1 << c
                out.append(c)
    return out


def is_abelian_members(mult, n: int, members) -> bool:
    for i, x in enumerate(members):
        xn = x * n
        for y in members[i + 1 :]:
            if mult[xn + y] != mult[y * n + x]:
                return False
    return True


def is_normal_members(mult, inv, n: int, members, mask: int) -> bool:
    for g in range(n):
        gn = g * n
        ig = inv[g]
        for x in members:
            if not mask >> mult[mult[gn + x] * n + ig] & 1:
                return False
    return True


def conjugate_members(mult, inv, n: int, members, g: int):
    """Sorted members of g H g^-1."""
    gn = g * n
    ig = inv[g]
    out = sorted(mult[mult[gn + x] * n + ig] for x in members)
    return tuple(out)


def centralizes(mult, n: int, t: int, members) -> bool:
    tn = t * n
    return all(mult[tn + x] == mult[x * n + t] for x in members)
