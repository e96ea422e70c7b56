"""Finite groups as explicit multiplication tables, 0-based indices.

A GroupTable owns the flat table passed to the kernel backend; Subgroup is a
bitmask view tied to its parent table.  Tables up to MAX_BUILD elements can
be constructed; exhaustive subgroup enumeration is capped separately (see
subgroups.py).
"""

from __future__ import annotations

import random
from array import array
from functools import cached_property
from typing import Iterable, Sequence

from ..errors import CapExceeded, InputError
from ._core import kernels

MAX_BUILD = 4096
ASSOC_FULL_LIMIT = 64
ASSOC_SAMPLES = 10_000


class GroupTable:
    def __init__(
        self,
        mult: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        name: str | None = None,
        seed: int = 0,
    ):
        n = len(mult)
        if n == 0:
            raise InputError("empty multiplication table")
        if n > MAX_BUILD:
            raise CapExceeded(f"order {n} exceeds the build cap {MAX_BUILD}")
        rows = []
        for row in mult:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise InputError("multiplication table is not n x n over 0..n-1")
            rows.append(tuple(row))
        self.n = n
        self.mult = tuple(rows)
        self.name = name
        if labels is None:
            labels = tuple(f"g{i}" for i in range(n))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise InputError("label count differs from order")
        self.labels = labels
        self._flat = array("i", [x for row in self.mult for x in row])
        self._validate(seed)
        self._inv_arr = array("i", self.inv)

    # -- validation -----------------------------------------------------
    def _validate(self, seed: int) -> None:
        n, mult = self.n, self.mult
        full = set(range(n))
        for i in range(n):
            if set(mult[i]) != full or {row[i] for row in mult} != full:
                raise InputError("table is not a Latin square")
        identity = None
        for e in range(n):
            if all(mult[e][x] == x for x in range(n)) and all(
                mult[x][e] == x for x in range(n)
            ):
                identity = e
                break
        if identity is None:
            raise InputError("no identity element")
        self.identity = identity
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if mult[a][b] == identity:
                    if mult[b][a] != identity:
                        raise InputError("one-sided inverse")
                    inv[a] = b
                    break
        if any(i < 0 for i in inv):
            raise InputError("missing inverses")
        self.inv = tuple(inv)
        # associativity: full check for small tables, seeded spot-check above
        if n <= ASSOC_FULL_LIMIT:
            triples: Iterable[tuple[int, int, int]] = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(seed)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(ASSOC_SAMPLES)
            )
        for a, b, c in triples:
            if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                raise InputError(f"associativity fails at {(a, b, c)}")

    # -- basic ops ---------------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv_of(self, a: int) -> int:
        return self.inv[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mult[self.mult[g][x]][self.inv[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[a], -k)
        acc = self.identity
        base = a
        while k:
            if k & 1:
                acc = self.mult[acc][base]
            base = self.mult[base][base]
            k >>= 1
        return acc

    def element_order(self, a: int) -> int:
        order = 1
        acc = a
        while acc != self.identity:
            acc = self.mult[acc][a]
            order += 1
        return order

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        out = 1
        for a in range(self.n):
            out = lcm(out, self.element_order(a))
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return kernels.is_abelian_members(self._flat, self.n, range(self.n))

    def commutes(self, a: int, b: int) -> bool:
        return self.mult[a][b] == self.mult[b][a]

    # -- subgroups -------------------------------------------------------------
    def subgroup(self, members: Iterable[int]) -> "Subgroup":
        return Subgroup.from_members(self, members)

    def closure(self, gens: Iterable[int]) -> "Subgroup":
        mask, members = kernels.closure(self._flat, self.n, self.identity, list(gens))
        return Subgroup(self, mask, members)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, 1 << self.identity, (self.identity,))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, (1 << self.n) - 1, tuple(range(self.n)))

    # -- JSON ---------------------------------------------------------------------
    def to_json(self) -> dict:
        out = {"order": self.n, "mult": [list(row) for row in self.mult]}
        if self.name:
            out["name"] = self.name
        out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "GroupTable":
        if not isinstance(obj, dict) or "mult" not in obj:
            raise InputError("group JSON needs a 'mult' table")
        return cls(obj["mult"], labels=obj.get("labels"), name=obj.get("name"))

    def __repr__(self):
        tag = self.name or "group"
        return f"<{tag} of order {self.n}>"


class Subgroup:
    """Bitmask-backed subgroup of a fixed GroupTable."""

    __slots__ = ("group", "mask", "members")

    def __init__(self, group: GroupTable, mask: int, members: tuple[int, ...]):
        self.group = group
        self.mask = mask
        self.members = members

    @classmethod
    def from_members(cls, group: GroupTable, members: Iterable[int]) -> "Subgroup":
        mem = sorted(set(members))
        mask = 0
        for x in mem:
            mask |= 1 << x
        sub = cls(group, mask, tuple(mem))
        if not sub.is_closed():
            raise InputError("member set is not closed under multiplication")
        return sub

    @classmethod
    def from_mask(
        cls, group: GroupTable, mask: int, members: tuple[int, ...] | None = None
    ) -> "Subgroup":
        if members is None:
            members = tuple(i for i in range(group.n) if mask >> i & 1)
        else:
            members = tuple(sorted(members))
        return cls(group, mask, members)

    @property
    def order(self) -> int:
        return len(self.members)

    def is_closed(self) -> bool:
        g = self.group
        if not self.mask >> g.identity & 1:
            return False
        for a in self.members:
            for b in self.members:
                if not self.mask >> g.mult[a][b] & 1:
                    return False
        return True

    def contains(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self.mask != other.mask and self.mask & ~other.mask == 0

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.group is self.group
            and other.mask == self.mask
        )

    def __hash__(self):
        return hash((id(self.group), self.mask))

    def is_abelian(self) -> bool:
        return kernels.is_abelian_members(self.group._flat, self.group.n, self.members)

    def is_normal(self) -> bool:
        return kernels.is_normal_members(
            self.group._flat, self.group._inv_arr, self.group.n, self.members, self.mask
        )

    def conjugate_by(self, g: int) -> "Subgroup":
        members = kernels.conjugate_members(
            self.group._flat, self.group._inv_arr, self.group.n, self.members, g
        )
        mask = 0
        for x in members:
            mask |= 1 << x
        return Subgroup(self.group, mask, members)

    def meet(self, other: "Subgroup") -> "Subgroup":
        return Subgroup.from_mask(self.group, self.mask & other.mask)

    def join(self, other: "Subgroup") -> "Subgroup":
        small, big = sorted((self, other), key=lambda s: s.order)
        mask, members = big.mask, big.members
        gens: list[int] = list(big.gens_hint())
        for g in small.members:
            if not mask >> g & 1:
                mask, members = kernels.extend(
                    self.group._flat, self.group.n, members, gens, g
                )
                gens.append(g)
        return Subgroup(self.group, mask, members)

    def gens_hint(self) -> tuple[int, ...]:
        """A small generating set (greedy); used to speed closure calls."""
        g = self.group
        got = g.trivial_subgroup()
        gens: list[int] = []
        for x in self.members:
            if not got.contains(x):
                mask, members = kernels.extend(g._flat, g.n, got.members, gens, x)
                got = Subgroup(g, mask, members)
                gens.append(x)
                if got.mask == self.mask:
                    break
        return tuple(gens)

    def exponent(self) -> int:
        from math import lcm

        out = 1
        for x in self.members:
            out = lcm(out, self.group.element_order(x))
        return out

    def labels(self) -> list[str]:
        return [self.group.labels[i] for i in self.members]

    def as_table(self) -> "GroupTable":
        """This subgroup as a standalone group on re-indexed elements."""
        pos = {x: i for i, x in enumerate(self.members)}
        mult = [
            [pos[self.group.mult[a][b]] for b in self.members] for a in self.members
        ]
        name = f"sub{self.order}<{self.group.name or '?'}>"
        return GroupTable(mult, labels=self.labels(), name=name)

    def to_json(self) -> list[int]:
        return list(self.members)

    def __repr__(self):
        return f"<subgroup of order {self.order}>"
