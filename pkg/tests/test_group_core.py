"""Group tables, presentations, subgroup machinery vs brute-force oracles."""

import json
import os
import random
import subprocess
import sys

import pytest

from traceforms import CapExceeded, GroupTable, InputError, build_group
from traceforms.groups import (
    center,
    commutator_subgroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    frattini_rank,
    frattini_subgroup,
    is_two_group,
    modular_group,
    permutation_group,
    quaternion_group,
    quotient,
    semidihedral_group,
    sylow2,
)
from traceforms.groups.subgroups import all_subgroups


def brute_subgroups(group):
    """Oracle: all subsets closed under multiplication and containing e.

    Finite subsets of a finite group closed under the operation are
    automatically subgroups.  Exponential in |G|: keep |G| <= 16.
    """
    n = group.n
    assert n <= 16
    out = []
    for mask in range(1, 1 << n):
        if not (mask >> group.identity) & 1:
            continue
        members = [x for x in range(n) if (mask >> x) & 1]
        if all((mask >> group.mult[a][b]) & 1 for a in members for b in members):
            out.append(mask)
    return sorted(out)


def group_axioms_hold(group, rng):
    n = group.n
    e = group.identity
    for x in range(n):
        assert group.mult[e][x] == x and group.mult[x][e] == x
        inv = group.inv_of(x)
        assert group.mult[x][inv] == e and group.mult[inv][x] == e
    for _ in range(200):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        assert group.mult[group.mult[a][b]][c] == group.mult[a][group.mult[b][c]]
    return True


class TestPresentations:
    def test_axioms_on_standard_families(self):
        rng = random.Random(0)
        groups = [
            cyclic_group(12),
            dihedral_group(16),
            quaternion_group(16),
            semidihedral_group(16),
            modular_group(5),
            permutation_group(4, [[1, 2, 3, 0], [1, 0, 2, 3]]),
            direct_product(cyclic_group(3), quaternion_group(8)),
        ]
        for g in groups:
            assert group_axioms_hold(g, rng)

    def test_family_invariants(self):
        d16 = dihedral_group(16)
        assert d16.n == 16 and not d16.is_abelian and d16.exponent == 8
        q16 = quaternion_group(16)
        # a generalized quaternion group has a unique element of order 2
        assert sum(1 for x in range(16) if q16.element_order(x) == 2) == 1
        sd16 = semidihedral_group(16)
        assert sd16.n == 16 and not sd16.is_abelian
        m16 = modular_group(4)
        assert m16.n == 16 and not m16.is_abelian
        # the modular group of order 16 has a cyclic subgroup of index 2
        assert max(m16.element_order(x) for x in range(16)) == 8

    def test_centers(self):
        assert center(dihedral_group(8)).order == 2
        assert center(quaternion_group(8)).order == 2
        assert center(cyclic_group(9)).order == 9
        # M(2^n) has center of index 4
        assert center(modular_group(4)).order == 4

    def test_s4_structure(self):
        s4 = permutation_group(4, [[1, 2, 3, 0], [1, 0, 2, 3]])
        assert s4.n == 24
        assert not is_two_group(s4)
        syl = sylow2(s4)
        assert syl.order == 8
        assert not syl.is_abelian()  # Sylow 2-subgroup of S4 is dihedral

    def test_direct_product_orders(self):
        g = direct_product(cyclic_group(4), cyclic_group(2), cyclic_group(2))
        assert g.n == 16 and g.is_abelian and g.exponent == 4

    def test_build_group_round_trip(self):
        specs = [
            {"kind": "cyclic", "n": 8},
            {"kind": "dihedral", "order": 16},
            {"kind": "quaternion", "order": 32},
            {"kind": "semidihedral", "order": 32},
            {"kind": "modular", "n": 5},
            {
                "kind": "iwasawa",
                "abelian_orders": [32],
                "s": 3,
                "q": 3,
                "a0": [4],
            },
            {
                "kind": "direct-product",
                "factors": [
                    {"kind": "cyclic", "n": 3},
                    {"kind": "quaternion", "order": 8},
                ],
            },
        ]
        for spec in specs:
            g = build_group(spec)
            again = GroupTable.from_json(g.to_json())
            assert again.mult == g.mult

    def test_build_cap(self):
        with pytest.raises(CapExceeded):
            build_group({"kind": "cyclic", "n": 8192})

    def test_bad_kind(self):
        with pytest.raises(InputError):
            build_group({"kind": "wibble"})

    def test_bad_permutation(self):
        with pytest.raises(InputError):
            permutation_group(3, [[0, 0, 1]])

    def test_iwasawa_relations(self):
        # t conjugates every a in the abelian base to a^(1 + 2^s)
        g = build_group(
            {"kind": "iwasawa", "abelian_orders": [32], "s": 3, "q": 3, "a0": [4]}
        )
        assert g.n == 256
        a_el, t_el = 8, 1  # packing: index = a_index * 2^q + t_exp
        assert g.element_order(t_el) == 64
        conj = g.mult[g.mult[t_el][a_el]][g.inv_of(t_el)]
        expected = a_el
        for _ in range(8):  # a^9 = a * a^8
            expected = g.mult[expected][a_el]
        assert conj == expected


class TestSubgroups:
    @pytest.mark.parametrize(
        "maker",
        [
            lambda: dihedral_group(8),
            lambda: quaternion_group(8),
            lambda: cyclic_group(12),
            lambda: dihedral_group(16),
            lambda: modular_group(4),
            lambda: direct_product(cyclic_group(2), cyclic_group(2)),
        ],
    )
    def test_enumeration_matches_brute_force(self, maker):
        group = maker()
        subs = all_subgroups(group)
        assert sorted(s.mask for s in subs) == brute_subgroups(group)

    def test_lagrange(self):
        group = semidihedral_group(16)
        for sub in all_subgroups(group):
            assert group.n % sub.order == 0

    def test_closure_matches_brute(self):
        group = dihedral_group(16)
        rng = random.Random(1)
        for _ in range(20):
            gens = [rng.randrange(group.n) for _ in range(2)]
            got = group.closure(gens)
            # brute closure: iterate products to a fixed point
            members = {group.identity, *gens}
            while True:
                new = {group.mult[a][b] for a in members for b in members}
                if new <= members:
                    break
                members |= new
            assert set(got.members) == members

    def test_frattini_of_standard_groups(self):
        # Frattini subgroup of a 2-group = squares * commutators
        d8 = dihedral_group(8)
        fr = frattini_subgroup(d8)
        assert fr.order == 2
        assert frattini_rank(d8) == 2
        q8 = quaternion_group(8)
        assert frattini_subgroup(q8).order == 2
        assert frattini_rank(q8) == 2
        c8 = cyclic_group(8)
        assert frattini_subgroup(c8).order == 4
        assert frattini_rank(c8) == 1
        e8 = direct_product(cyclic_group(2), cyclic_group(2), cyclic_group(2))
        assert frattini_subgroup(e8).order == 1
        assert frattini_rank(e8) == 3

    def test_commutator_and_quotient(self):
        d8 = dihedral_group(8)
        comm = commutator_subgroup(d8)
        assert comm.order == 2
        ab = quotient(d8, comm)
        assert ab.n == 4 and ab.is_abelian and ab.exponent == 2

    def test_quotient_by_center(self):
        q8 = quaternion_group(8)
        q = quotient(q8, center(q8))
        assert q.n == 4 and q.is_abelian and q.exponent == 2


class TestBackendParity:
    def test_pure_python_backend_agrees(self):
        script = r"""
import json
import traceforms
from traceforms import build_group, classify_two_group, strength
from traceforms.groups.subgroups import all_subgroups

out = {"backend": traceforms.BACKEND}
for spec, name in [
    ({"kind": "dihedral", "order": 16}, "D16"),
    ({"kind": "semidihedral", "order": 32}, "SD32"),
    ({"kind": "modular", "n": 5}, "M32"),
    ({"kind": "iwasawa", "abelian_orders": [32], "s": 3, "q": 3, "a0": [4]}, "G256"),
]:
    g = build_group(spec)
    row = {
        "order": g.n,
        "strength": str(strength(g)),
        "subgroups": len(all_subgroups(g)) if g.n <= 64 else None,
        "classify": [
            [classify_two_group(g, m).subgroup_condition,
             classify_two_group(g, m).structure_condition]
            for m in (2, 3)
        ],
    }
    out[name] = row
print(json.dumps(out, sort_keys=True))
"""

        def run(env_extra):
            env = dict(os.environ)
            env.update(env_extra)
            proc = subprocess.run(
                [sys.executable, "-c", script],
                capture_output=True,
                text=True,
                env=env,
                timeout=300,
            )
            assert proc.returncode == 0, proc.stderr
            return json.loads(proc.stdout)

        compiled = run({"TRACEFORMS_PURE": "0"})
        pure = run({"TRACEFORMS_PURE": "1"})
        assert pure["backend"] == "pure"
        assert compiled["backend"] == "compiled"
        compiled.pop("backend")
        pure.pop("backend")
        assert compiled == pure
