"""Corpus-wide properties: dual-route agreement, power identities, lattices."""

import pytest

from traceforms import (
    GroupTable,
    check_structure_power_relations,
    classify_sylow,
    classify_two_group,
    corpus,
    corpus_entry,
    iwasawa_structures,
    strength,
)
from traceforms.corpus import mixed_order_entries, two_group_entries
from traceforms.groups.subgroups import is_lattice_modular
from traceforms.iwasawa import subgroups_power_abelian_general


class TestCorpusContents:
    def test_size_and_uniqueness(self):
        entries = corpus()
        names = [e.name for e in entries]
        assert len(names) == len(set(names))
        assert len([e for e in two_group_entries() if e.order <= 256]) >= 30

    def test_required_members(self):
        assert corpus_entry("metacyclic-256").order == 256
        assert corpus_entry("M16").order == 16
        assert corpus_entry("A5").order == 60
        assert corpus_entry("PSL(2,7)").order == 168
        for name in ("D8", "Q8", "SD16", "S3", "S4", "A4"):
            corpus_entry(name)

    def test_a5_sylow_is_klein_four(self):
        rep = classify_sylow(corpus_entry("A5").group, 2)
        assert rep.order == 4
        assert rep.is_abelian

    def test_json_round_trip_all(self):
        for entry in corpus():
            g = entry.group
            again = GroupTable.from_json(g.to_json())
            assert again.mult == g.mult, entry.name

    def test_unknown_name(self):
        with pytest.raises(Exception):
            corpus_entry("does-not-exist")


class TestDualRouteAgreement:
    def test_full_corpus_agreement(self):
        # the central equivalence: subgroup condition iff structure condition
        checked = 0
        for entry in two_group_entries():
            for m in (2, 3, 4, 5):
                report = classify_two_group(entry.group, m)
                assert report.subgroup_condition == report.structure_condition, (
                    entry.name,
                    m,
                )
                checked += 1
        assert checked >= 30 * 4

    def test_level_equals_strength_when_structures_exist(self):
        for entry in two_group_entries():
            g = entry.group
            if g.is_abelian:
                continue
            sts = iwasawa_structures(g)
            if not sts:
                continue
            assert max(st.level for st in sts) == strength(g), entry.name


class TestPowerIdentities:
    def test_all_structures_satisfy_power_relations(self):
        for entry in two_group_entries():
            g = entry.group
            if g.is_abelian or g.n > 128:
                continue
            for st in iwasawa_structures(g):
                for m in (2, 3, 4, 5):
                    rel = check_structure_power_relations(g, st, m)
                    assert all(rel.values()), (entry.name, st.level, m)

    def test_showcase_structures_satisfy_power_relations(self):
        g = corpus_entry("metacyclic-256").group
        for st in iwasawa_structures(g, min_level=3):
            for m in (2, 3, 4, 5):
                assert all(check_structure_power_relations(g, st, m).values())


class TestGeneralGroupReduction:
    def test_direct_scan_equals_sylow_route(self):
        # a subgroup with [T,T] <= T^(2^m) failing is a 2-group matter:
        # scanning all subgroups of G equals scanning a Sylow 2-subgroup
        for entry in mixed_order_entries():
            g = entry.group
            for m in (2, 3):
                direct, _ = subgroups_power_abelian_general(g, m)
                via_sylow = classify_sylow(g, m).subgroup_condition
                assert direct == via_sylow, (entry.name, m)

    def test_seed_independence(self):
        g = corpus_entry("S3xM16").group
        base = classify_sylow(g, 2, seed=0).subgroup_condition
        for seed in (1, 7, 42):
            assert classify_sylow(g, 2, seed=seed).subgroup_condition == base


class TestLatticeModularity:
    def test_frozen_modularity_facts(self):
        # level >= 2 structures (or Hamiltonian Q8) give modular lattices;
        # level-1 dihedral/semidihedral lattices are not modular
        expectations = {
            "D8": False,
            "D16": False,
            "SD16": False,
            "Q16": False,
            "Q8": True,  # Hamiltonian
            "M16": True,
            "M32": True,
            "C4xC4": True,
        }
        for name, expect in expectations.items():
            assert is_lattice_modular(corpus_entry(name).group) is expect, name

    def test_high_level_structure_implies_modular(self):
        g = corpus_entry("metacyclic-256").group
        assert is_lattice_modular(g) is True
