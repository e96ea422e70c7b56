"""Structural subgroups, quotients, and Sylow 2-subgroups."""

from __future__ import annotations

import random

from ..errors import ConsistencyError, InputError
from ._core import kernels
from .table import GroupTable, Subgroup


def _closure_of(group: GroupTable, elements) -> Subgroup:
    mask, members = kernels.closure(
        group._flat, group.n, group.identity, tuple(elements)
    )
    return Subgroup.from_mask(group, mask, members)


def power_subgroup(base: GroupTable | Subgroup, e: int) -> Subgroup:
    """Subgroup generated by the e-th powers of the given (sub)group."""
    if isinstance(base, Subgroup):
        group, members = base.group, base.members
    else:
        group, members = base, tuple(range(base.n))
    powers = kernels.power_elements(group._flat, group.n, group.identity, members, e)
    return _closure_of(group, powers)


def commutator_subgroup(base: GroupTable | Subgroup) -> Subgroup:
    if isinstance(base, Subgroup):
        group, members = base.group, base.members
    else:
        group, members = base, tuple(range(base.n))
    comms = kernels.commutator_elements(group._flat, group._inv_arr, group.n, members)
    return _closure_of(group, comms)


def center(group: GroupTable) -> Subgroup:
    members = [
        z for z in range(group.n) if kernels.centralizes(group._flat, group.n, z, tuple(range(group.n)))
    ]
    return Subgroup.from_mask(
        group, sum(1 << z for z in members), tuple(members)
    )


def normalizer(sub: Subgroup) -> Subgroup:
    group, mask = sub.group, sub.mask
    members = [
        g
        for g in range(group.n)
        if all((mask >> group.conj(g, x)) & 1 for x in sub.members)
    ]
    return Subgroup.from_mask(group, sum(1 << g for g in members), tuple(members))


def centralizer(group: GroupTable, x: int) -> Subgroup:
    members = [g for g in range(group.n) if group.mul(g, x) == group.mul(x, g)]
    return Subgroup.from_mask(group, sum(1 << g for g in members), tuple(members))


def is_two_group(group: GroupTable) -> bool:
    return group.n & (group.n - 1) == 0


def frattini_subgroup(group: GroupTable) -> Subgroup:
    """Intersection of the maximal subgroups.

    For 2-groups this is cross-checked against the subgroup generated by
    squares (Burnside), which must coincide.
    """
    from .subgroups import all_subgroups

    subs = all_subgroups(group)
    proper = [s for s in subs if s.order < group.n]
    if not proper:
        result = group.trivial_subgroup()
    else:
        maximal = [
            s
            for s in proper
            if not any(t is not s and s < t for t in proper)
        ]
        mask = (1 << group.n) - 1
        for s in maximal:
            mask &= s.mask
        members = tuple(i for i in range(group.n) if (mask >> i) & 1)
        result = Subgroup.from_mask(group, mask, members)
    if is_two_group(group):
        squares = power_subgroup(group, 2)
        if squares != result:
            raise ConsistencyError(
                "Frattini subgroup of a 2-group must equal the squares subgroup"
            )
    return result


def frattini_rank(group: GroupTable) -> int:
    """Minimal number of generators of a 2-group (log2 of Frattini index)."""
    if not is_two_group(group):
        raise InputError("frattini_rank is defined here for 2-groups only")
    if group.n == 1:
        return 0
    fr = frattini_subgroup(group)
    index = group.n // fr.order
    return index.bit_length() - 1


def greedy_generating_set(group: GroupTable) -> list[int]:
    """Small generating set found greedily (largest closure growth first)."""
    gens: list[int] = []
    current = _closure_of(group, ())
    while current.order < group.n:
        best_g, best = None, None
        for g in range(group.n):
            if current.contains(g):
                continue
            mask, members = kernels.extend(
                group._flat, group.n, current.members, tuple(gens), g
            )
            if best is None or len(members) > len(best[1]):
                best_g, best = g, (mask, members)
        gens.append(best_g)
        current = Subgroup.from_mask(group, best[0], best[1])
    return gens


def quotient(group: GroupTable, normal: Subgroup) -> GroupTable:
    """Quotient group on cosets of a normal subgroup (min-element reps)."""
    if normal.group is not group:
        raise InputError("subgroup belongs to a different group")
    if not normal.is_normal():
        raise InputError("quotient requires a normal subgroup")
    coset_of = [-1] * group.n
    reps: list[int] = []
    for x in range(group.n):
        if coset_of[x] >= 0:
            continue
        members = sorted(group.mul(h, x) for h in normal.members)
        cid = len(reps)
        reps.append(members[0])
        for y in members:
            coset_of[y] = cid
    k = len(reps)
    mult = [[coset_of[group.mul(reps[i], reps[j])] for j in range(k)] for i in range(k)]
    labels = [group.labels[r] + "N" for r in reps]
    name = f"({group.name or '?'})/N{normal.order}"
    table = GroupTable(mult, labels=labels, name=name)
    table.projection = tuple(coset_of)
    return table


def sylow2(group: GroupTable, seed: int = 0) -> Subgroup:
    """A Sylow 2-subgroup, grown through normalizers from a 2-element."""
    n = group.n
    two_part = n & -n
    if two_part == 1:
        return group.trivial_subgroup()
    rng = random.Random(seed)
    # seed a 2-subgroup with the 2-part of some element
    candidates = list(range(n))
    rng.shuffle(candidates)
    start = group.identity
    for g in candidates:
        order = group.element_order(g)
        odd = order
        while odd % 2 == 0:
            odd //= 2
        if order > odd:
            start = group.power(g, odd)
            break
    current = _closure_of(group, (start,))
    while current.order < two_part:
        norm = normalizer(current)
        outside = [y for y in norm.members if not current.contains(y)]
        rng.shuffle(outside)
        grown = None
        for y in outside:
            # order of the coset y*current in the normalizer quotient
            k, z = 1, y
            while not current.contains(z):
                z = group.mul(z, y)
                k += 1
            if k % 2 == 0:
                grown = group.power(y, k // 2)
                break
        if grown is None:
            raise ConsistencyError("normalizer growth stalled below the 2-part")
        current = _closure_of(group, current.members + (grown,))
    if current.order != two_part:
        raise ConsistencyError("Sylow 2-subgroup has wrong order")
    return current
