"""Strength, Iwasawa-type normal forms, and the 2-group classification.

The *strength* of a finite 2-group G is the largest m >= 1 such that
G/G^(2^m) is abelian, equivalently [G,G] <= G^(2^m); abelian groups get
math.inf.  An *Iwasawa structure* on a non-abelian G is a pair (A, t)
with A a normal abelian subgroup such that G = <A, t> and conjugation by
t raises every element of A to the power 1 + 2^s; its level is the
largest such s.  The classification routine decides, for a given m >= 2,
whether every subgroup T satisfies "T/T^(2^m) abelian", both directly by
scanning all subgroups and via existence of a structure of level >= m,
and insists the two answers agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConsistencyError, InputError
from .groups import GroupTable, Subgroup, all_subgroups, sylow2
from .groups.structure import commutator_subgroup, is_two_group, power_subgroup


def _require_two_group(group: GroupTable, what: str) -> None:
    if not is_two_group(group):
        raise InputError(f"{what} is defined for 2-groups; |G| = {group.n}")


def strength(group: GroupTable) -> int | float:
    """Largest m with [G,G] <= G^(2^m); math.inf when G is abelian."""
    _require_two_group(group, "strength")
    if group.is_abelian:
        return math.inf
    comm = commutator_subgroup(group)
    m = 0
    while True:
        powers = power_subgroup(group, 2 ** (m + 1))
        if comm <= powers:
            m += 1
        else:
            if m == 0:
                raise ConsistencyError(
                    "[G,G] <= squares must hold in any 2-group"
                )
            return m


def is_powerful(group: GroupTable) -> bool:
    """2-group with [G,G] <= G^4, i.e. strength >= 2."""
    _require_two_group(group, "is_powerful")
    return group.is_abelian or strength(group) >= 2


@dataclass(frozen=True)
class IwasawaStructure:
    """Normal abelian A plus t with G = <A, t> and t a t^-1 = a^(1+2^level)."""

    subgroup: Subgroup
    element: int
    level: int | float

    def to_json(self) -> dict:
        return {
            "abelian_normal": self.subgroup.labels(),
            "element": self.subgroup.group.labels[self.element],
            "level": "inf" if self.level == math.inf else self.level,
        }


def _coset_order(group: GroupTable, mask: int, t: int) -> int:
    k, z = 1, t
    while not (mask >> z) & 1:
        z = group.mul(z, t)
        k += 1
    return k


def iwasawa_structures(
    group: GroupTable, min_level: int = 1
) -> list[IwasawaStructure]:
    """All Iwasawa structures of level >= min_level, highest level first.

    For abelian G every choice works at every level, so the single
    representative (A = G, t = identity, level = inf) is returned.
    """
    _require_two_group(group, "iwasawa_structures")
    if group.is_abelian:
        return [IwasawaStructure(group.full_subgroup(), group.identity, math.inf)]
    n = group.n
    comm = commutator_subgroup(group)
    exp_bits = max(group.element_order(x) for x in range(n)).bit_length() - 1
    # pow2[s][x] = x^(2^s)
    pow2 = [list(range(n))]
    for _ in range(exp_bits):
        prev = pow2[-1]
        pow2.append([group.mul(prev[x], prev[x]) for x in range(n)])

    out = []
    for sub in all_subgroups(group):
        if not (comm <= sub and sub.is_abelian() and sub.is_normal()):
            continue
        gens = sub.gens_hint()
        index = n // sub.order
        for t in range(n):
            if sub.contains(t):
                continue
            if _coset_order(group, sub.mask, t) != index:
                continue
            # largest s with conj-by-t = raise-to-(1+2^s) on A; both maps
            # are homomorphisms on abelian A, so generators suffice
            level = None
            for s in range(exp_bits, 0, -1):
                if all(
                    group.conj(t, a) == group.mul(a, pow2[s][a]) for a in gens
                ):
                    level = s
                    break
            if level is not None and level >= min_level:
                out.append(IwasawaStructure(sub, t, level))
    out.sort(key=lambda st: (-st.level, st.subgroup.members, st.element))
    return out


def max_iwasawa_level(
    group: GroupTable, structures: list[IwasawaStructure] | None = None
) -> int | float | None:
    """Largest structure level (inf if abelian, None if no structure).

    When a structure of level >= 2 exists, the maximum provably equals
    the strength, and this is checked.
    """
    _require_two_group(group, "max_iwasawa_level")
    if group.is_abelian:
        return math.inf
    if structures is None:
        structures = iwasawa_structures(group, min_level=1)
    if not structures:
        return None
    best = max(st.level for st in structures)
    if best >= 2 and best != strength(group):
        raise ConsistencyError(
            f"max structure level {best} != strength {strength(group)}"
        )
    return best


def _power_abelian_scan(
    group: GroupTable, m: int
) -> tuple[bool, Subgroup | None]:
    for sub in all_subgroups(group):  # sorted by order: smallest witness first
        comm = commutator_subgroup(sub)
        if comm.order == 1:
            continue
        powers = power_subgroup(sub, 2**m)
        if not comm <= powers:
            return False, sub
    return True, None


def subgroups_power_abelian(
    group: GroupTable, m: int
) -> tuple[bool, Subgroup | None]:
    """Does every subgroup T of the 2-group G have T/T^(2^m) abelian?

    Returns (answer, smallest failing subgroup or None).  The quotient
    T/T^(2^m) is abelian exactly when [T,T] <= T^(2^m), which is how the
    scan decides it.
    """
    _require_two_group(group, "subgroups_power_abelian")
    if m < 1:
        raise InputError("m must be >= 1")
    return _power_abelian_scan(group, m)


def subgroups_power_abelian_general(
    group: GroupTable, m: int
) -> tuple[bool, Subgroup | None]:
    """Same subgroup scan for an arbitrary finite group (any order)."""
    if m < 1:
        raise InputError("m must be >= 1")
    return _power_abelian_scan(group, m)


@dataclass
class TwoGroupReport:
    """Outcome of the two independent classification routes for one (G, m)."""

    group_name: str | None
    order: int
    m: int
    is_abelian: bool
    strength: int | float
    subgroup_condition: bool
    subgroup_witness: Subgroup | None
    structure_condition: bool
    best_structure: IwasawaStructure | None
    max_level: int | float | None
    structure_count: int = 0
    extras: dict = field(default_factory=dict)

    @property
    def answer(self) -> bool:
        return self.subgroup_condition

    def to_json(self) -> dict:
        def token(v):
            return "inf" if v == math.inf else v

        return {
            "group": self.group_name,
            "order": self.order,
            "m": self.m,
            "is_abelian": self.is_abelian,
            "strength": token(self.strength),
            "subgroup_condition": self.subgroup_condition,
            "subgroup_witness": (
                self.subgroup_witness.labels() if self.subgroup_witness else None
            ),
            "structure_condition": self.structure_condition,
            "best_structure": (
                self.best_structure.to_json() if self.best_structure else None
            ),
            "max_level": token(self.max_level) if self.max_level is not None else None,
            "structure_count": self.structure_count,
        }


def classify_two_group(group: GroupTable, m: int) -> TwoGroupReport:
    """Decide the power-abelian subgroup condition for a 2-group, twice.

    Route 1 scans every subgroup T for [T,T] <= T^(2^m).  Route 2 looks
    for an Iwasawa structure of level >= m (abelian groups qualify at
    every level).  The two routes are provably equivalent for m >= 2; a
    disagreement raises ConsistencyError rather than returning an answer.
    """
    _require_two_group(group, "classify_two_group")
    if m < 2:
        raise InputError("the classification requires m >= 2")
    cond_subgroups, witness = subgroups_power_abelian(group, m)
    if group.is_abelian:
        structures = iwasawa_structures(group)
        cond_structure = True
        best = structures[0]
        max_level = math.inf
    else:
        structures = iwasawa_structures(group, min_level=1)
        qualifying = [st for st in structures if st.level >= m]
        cond_structure = bool(qualifying)
        best = qualifying[0] if qualifying else (structures[0] if structures else None)
        max_level = max_iwasawa_level(group, structures)
    if cond_subgroups != cond_structure:
        raise ConsistencyError(
            f"classification routes disagree on {group.name or 'group'} "
            f"(m={m}): subgroup scan {cond_subgroups}, "
            f"structure search {cond_structure}"
        )
    return TwoGroupReport(
        group_name=group.name,
        order=group.n,
        m=m,
        is_abelian=group.is_abelian,
        strength=strength(group),
        subgroup_condition=cond_subgroups,
        subgroup_witness=witness,
        structure_condition=cond_structure,
        best_structure=best,
        max_level=max_level,
        structure_count=len(structures),
    )


def check_structure_power_relations(
    group: GroupTable, structure: IwasawaStructure, m: int
) -> dict:
    """Verify the power-subgroup identities attached to a structure (A, t, s).

    Checks, returning one boolean per identity:
      * commutator_is_A_powers:  [G,G] = A^(2^s)
      * strength_at_least_level: strength(G) >= s
      * powers_split (m >= 0):   G^(2^m) = <A^(2^m), t^(2^m)>
    """
    _require_two_group(group, "check_structure_power_relations")
    if structure.level == math.inf:
        raise InputError("power relations apply to finite-level structures")
    a_sub, t, s = structure.subgroup, structure.element, structure.level
    comm = commutator_subgroup(group)
    a_pow_s = power_subgroup(a_sub, 2**s)
    g_pow_m = power_subgroup(group, 2**m)
    a_pow_m = power_subgroup(a_sub, 2**m)
    t_pow_m = group.power(t, 2**m)
    split = group.closure(a_pow_m.members + (t_pow_m,))
    return {
        "commutator_is_A_powers": comm == a_pow_s,
        "strength_at_least_level": strength(group) >= s,
        "powers_split": g_pow_m == split,
    }


def classify_sylow(group: GroupTable, m: int, seed: int = 0) -> TwoGroupReport:
    """Classification of a Sylow 2-subgroup of an arbitrary finite group."""
    syl = sylow2(group, seed=seed)
    table = syl.as_table()
    report = classify_two_group(table, m)
    report.extras["ambient_order"] = group.n
    return report
