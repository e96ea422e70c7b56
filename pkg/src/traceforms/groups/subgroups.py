"""Complete subgroup enumeration and subgroup-lattice modularity.

Enumeration is a breadth-first closure walk: starting from the trivial
subgroup, every known subgroup H is extended by each element outside it.
Any subgroup K is reached, by induction on a maximal chain of subgroups
below K, because extending the previous chain entry by a suitable element
of K lands strictly higher inside K.

Modularity is decided two independent ways and the answers are required
to agree:
  * interval route -- for every pair (A, B), the map X -> X meet B must be
    a lattice isomorphism [A, A join B] -> [A meet B, B];
  * identity route -- the modular law  (X join A) meet B = X join (A meet B)
    must hold for every triple with X <= B.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CapExceeded, ConsistencyError
from ._core import kernels
from .table import GroupTable, Subgroup

MAX_ENUM_ORDER = 512
MAX_SUBGROUPS = 100_000
LATTICE_CAP = 400


def all_subgroups(group: GroupTable, max_count: int = MAX_SUBGROUPS) -> list[Subgroup]:
    """Every subgroup, sorted by (order, member tuple).  Cached per table."""
    cached = getattr(group, "_subgroups_cache", None)
    if cached is not None:
        return cached
    if group.n > MAX_ENUM_ORDER:
        raise CapExceeded(
            f"subgroup enumeration capped at order {MAX_ENUM_ORDER}, got {group.n}"
        )
    flat, n = group._flat, group.n
    trivial_mask = 1 << group.identity
    seen = {trivial_mask: (group.identity,)}
    frontier = [(trivial_mask, (group.identity,))]
    gens_of = {trivial_mask: ()}
    while frontier:
        mask, members = frontier.pop()
        gens = gens_of[mask]
        for g in range(n):
            if (mask >> g) & 1:
                continue
            new_mask, new_members = kernels.extend(flat, n, members, gens, g)
            if new_mask not in seen:
                if len(seen) >= max_count:
                    raise CapExceeded(f"more than {max_count} subgroups")
                seen[new_mask] = new_members
                gens_of[new_mask] = gens + (g,)
                frontier.append((new_mask, new_members))
    subs = [Subgroup.from_mask(group, m, mem) for m, mem in seen.items()]
    subs.sort(key=lambda s: (s.order, s.members))
    group._subgroups_cache = subs
    return subs


@dataclass
class ModularityReport:
    is_modular: bool
    interval_route: bool
    identity_route: bool
    witness: dict | None

    def to_json(self) -> dict:
        return {
            "is_modular": self.is_modular,
            "interval_route": self.interval_route,
            "identity_route": self.identity_route,
            "witness": self.witness,
        }


class _Lattice:
    """Subgroup lattice with memoized joins (meets are mask intersections)."""

    def __init__(self, group: GroupTable, subs: list[Subgroup]):
        self.group = group
        self.subs = subs
        self.by_mask = {s.mask: i for i, s in enumerate(subs)}
        self._joins: dict[tuple[int, int], int] = {}
        self._gens = [s.gens_hint() for s in subs]

    def meet(self, i: int, j: int) -> int:
        return self.by_mask[self.subs[i].mask & self.subs[j].mask]

    def join(self, i: int, j: int) -> int:
        if i == j:
            return i
        key = (i, j) if i < j else (j, i)
        hit = self._joins.get(key)
        if hit is not None:
            return hit
        a, b = self.subs[key[0]], self.subs[key[1]]
        if a.mask & b.mask == a.mask:
            out = key[1]
        elif a.mask & b.mask == b.mask:
            out = key[0]
        else:
            big, small_gens = (a, self._gens[key[1]]) if a.order >= b.order else (
                b,
                self._gens[key[0]],
            )
            mask, members = big.mask, big.members
            gens = list(self._gens[self.by_mask[big.mask]])
            for g in small_gens:
                if not (mask >> g) & 1:
                    mask, members = kernels.extend(
                        self.group._flat, self.group.n, members, tuple(gens), g
                    )
                    gens.append(g)
            out = self.by_mask[mask]
        self._joins[key] = out
        return out

    def leq(self, i: int, j: int) -> bool:
        return self.subs[i].mask & self.subs[j].mask == self.subs[i].mask

    def interval(self, lo: int, hi: int) -> list[int]:
        return [k for k in range(len(self.subs)) if self.leq(lo, k) and self.leq(k, hi)]


def interval_map_is_isomorphism(lat: _Lattice, ai: int, bi: int) -> bool:
    """Is X -> X meet B a lattice isomorphism [A, A v B] -> [A ^ B, B]?

    Both maps here are monotone, so mutual inverse on the two intervals is
    exactly the lattice-isomorphism condition.
    """
    top = lat.join(ai, bi)
    bottom = lat.meet(ai, bi)
    upper = lat.interval(ai, top)
    lower = lat.interval(bottom, bi)
    if len(upper) != len(lower):
        return False
    for x in upper:
        if lat.join(lat.meet(x, bi), ai) != x:
            return False
    for y in lower:
        if lat.meet(lat.join(y, ai), bi) != y:
            return False
    return True


def is_lattice_modular(
    group: GroupTable, cap: int | None = LATTICE_CAP, with_report: bool = False
):
    """Decide modularity of the subgroup lattice (two routes, must agree)."""
    subs = all_subgroups(group)
    if cap is not None and len(subs) > cap:
        raise CapExceeded(
            f"lattice has {len(subs)} subgroups, over the cap {cap}"
        )
    lat = _Lattice(group, subs)
    size = len(subs)

    interval_ok, interval_witness = True, None
    for ai in range(size):
        for bi in range(size):
            if ai == bi:
                continue
            if not interval_map_is_isomorphism(lat, ai, bi):
                interval_ok = False
                interval_witness = {
                    "A": subs[ai].labels(),
                    "B": subs[bi].labels(),
                }
                break
        if not interval_ok:
            break

    identity_ok, identity_witness = True, None
    for bi in range(size):
        below_b = [x for x in range(size) if lat.leq(x, bi)]
        for ai in range(size):
            a_meet_b = lat.meet(ai, bi)
            for xi in below_b:
                if lat.meet(lat.join(xi, ai), bi) != lat.join(xi, a_meet_b):
                    identity_ok = False
                    identity_witness = {
                        "X": subs[xi].labels(),
                        "A": subs[ai].labels(),
                        "B": subs[bi].labels(),
                    }
                    break
            if not identity_ok:
                break
        if not identity_ok:
            break

    if interval_ok != identity_ok:
        raise ConsistencyError(
            "interval-isomorphism and modular-law routes disagree on "
            f"{group.name or 'group'}"
        )
    report = ModularityReport(
        is_modular=interval_ok,
        interval_route=interval_ok,
        identity_route=identity_ok,
        witness=interval_witness or identity_witness,
    )
    return report if with_report else report.is_modular


def interval_map_test(group: GroupTable, a: Subgroup, b: Subgroup) -> bool:
    """Public single-pair form of the interval route."""
    subs = all_subgroups(group)
    lat = _Lattice(group, subs)
    return interval_map_is_isomorphism(lat, lat.by_mask[a.mask], lat.by_mask[b.mask])
