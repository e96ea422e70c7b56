"""Deterministic fixture corpus: named groups used across tests and CLI.

Every entry is a (name, presentation-spec) pair; the spec is plain JSON
understood by `build_group`, so the corpus doubles as a serialization
round-trip fixture set.  The selection covers:

  * abelian 2-groups: cyclic up to 256, homocyclic (Z/2^e)^r, mixed types;
  * the classical non-abelian 2-families: dihedral, semidihedral,
    quaternion (orders 8-32) and the modular maximal-cyclic groups
    M(2^n) for n = 4..6;
  * split metacyclic groups (Z/2^e)^r x| <t> where t acts by raising to
    1 + 2^s, for every parameter combination the builder validates with
    resulting order <= 256;
  * "metacyclic-256": the order-256 showcase group generated by an
    order-32 element a and an order-8-mod-<a> element t with
    t a t^-1 = a^9 and t^8 = a^4 (strength 4, structure levels 3 and 4);
  * non-2-groups for Sylow-based checks: S3, A4, S4, A5, PSL(2,7), and
    the mixed direct products S3 x M16 and C3 x Q8.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import InputError
from .groups import GroupTable, build_group
from .groups.structure import is_two_group


@dataclass
class CorpusEntry:
    name: str
    spec: dict
    _group: GroupTable | None = dataclass_field(default=None, repr=False)

    @property
    def group(self) -> GroupTable:
        if self._group is None:
            self._group = build_group(self.spec)
            self._group.name = self.name
        return self._group

    @property
    def is_two_group(self) -> bool:
        order = self.order
        return order & (order - 1) == 0

    @property
    def order(self) -> int:
        return self.group.n


def _cyclic(n: int) -> dict:
    return {"kind": "cyclic", "n": n}


def _product(*factors: dict) -> dict:
    return {"kind": "direct-product", "factors": list(factors)}


def _abelian(orders: tuple[int, ...]) -> tuple[str, dict]:
    name = "x".join(f"C{n}" for n in orders)
    return name, _product(*[_cyclic(n) for n in orders])


def _corpus_specs() -> list[tuple[str, dict]]:
    out: list[tuple[str, dict]] = []

    for k in range(1, 9):  # C2 .. C256
        out.append((f"C{2**k}", _cyclic(2**k)))

    for orders in [
        (2, 2),
        (2, 2, 2),
        (4, 4),
        (4, 4, 4),
        (8, 8),
        (16, 16),
        (2, 4),
        (2, 8),
        (2, 16),
        (4, 8),
        (4, 16),
        (8, 16),
        (2, 4, 8),
        (4, 4, 8),
    ]:
        out.append(_abelian(orders))

    for order in (8, 16, 32):
        out.append((f"D{order}", {"kind": "dihedral", "order": order}))
    for order in (16, 32):
        out.append((f"SD{order}", {"kind": "semidihedral", "order": order}))
    for order in (8, 16, 32):
        out.append((f"Q{order}", {"kind": "quaternion", "order": order}))
    for n in (4, 5, 6):
        out.append((f"M{2**n}", {"kind": "modular", "n": n}))

    out.append(
        (
            "metacyclic-256",
            {"kind": "iwasawa", "abelian_orders": [32], "s": 3, "q": 3, "a0": [4]},
        )
    )

    # split metacyclic family: (Z/2^e)^r x| <t of order 2^q>, action 1+2^s.
    # The builder rejects parameters where the action's order exceeds 2^q
    # (needs e - s <= q); the order cap keeps subgroup enumeration feasible.
    for e in (1, 2, 3, 4):
        for r in (1, 2):
            for s in (2, 3):
                for q in (1, 2):
                    if e - s > q or (2**e) ** r * 2**q > 256:
                        continue
                    out.append(
                        (
                            f"split-e{e}r{r}s{s}q{q}",
                            {
                                "kind": "iwasawa",
                                "abelian_orders": [2**e] * r,
                                "s": s,
                                "q": q,
                                "a0": None,
                            },
                        )
                    )

    perm = {
        "S3": (3, [[1, 2, 0], [1, 0, 2]]),
        "A4": (4, [[1, 2, 0, 3], [1, 0, 3, 2]]),
        "S4": (4, [[1, 2, 3, 0], [1, 0, 2, 3]]),
        "A5": (5, [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]]),
        "PSL(2,7)": (8, [[1, 2, 3, 4, 5, 6, 0, 7], [7, 6, 3, 2, 5, 4, 1, 0]]),
    }
    for name, (degree, gens) in perm.items():
        out.append(
            (name, {"kind": "permutation", "degree": degree, "generators": gens})
        )

    out.append(
        (
            "S3xM16",
            _product(
                {"kind": "permutation", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]},
                {"kind": "modular", "n": 4},
            ),
        )
    )
    out.append(("C3xQ8", _product({"kind": "cyclic", "n": 3}, {"kind": "quaternion", "order": 8})))
    return out


_ENTRIES: list[CorpusEntry] | None = None


def corpus() -> list[CorpusEntry]:
    """The full fixture list, built lazily, in deterministic order."""
    global _ENTRIES
    if _ENTRIES is None:
        specs = _corpus_specs()
        names = [name for name, _ in specs]
        if len(set(names)) != len(names):
            raise InputError("corpus names must be unique")
        _ENTRIES = [CorpusEntry(name, spec) for name, spec in specs]
    return _ENTRIES


def corpus_entry(name: str) -> CorpusEntry:
    for entry in corpus():
        if entry.name == name:
            return entry
    raise InputError(f"no corpus entry named {name!r}")


def two_group_entries() -> list[CorpusEntry]:
    """Corpus members whose order is a power of 2 (built on demand)."""
    return [e for e in corpus() if is_two_group(e.group)]


def mixed_order_entries() -> list[CorpusEntry]:
    return [e for e in corpus() if not is_two_group(e.group)]
