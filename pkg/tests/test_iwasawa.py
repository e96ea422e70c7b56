"""Power-structure theory: strength, structures, dual-route classification."""

import math

import pytest

from traceforms import (
    ConsistencyError,
    InputError,
    build_group,
    check_structure_power_relations,
    classify_sylow,
    classify_two_group,
    corpus_entry,
    is_powerful,
    iwasawa_structures,
    max_iwasawa_level,
    strength,
)
from traceforms.groups import (
    cyclic_group,
    dihedral_group,
    direct_product,
    modular_group,
    permutation_group,
    quaternion_group,
    semidihedral_group,
)


class TestStrength:
    def test_frozen_values(self):
        # dihedral/quaternion/semidihedral: commutators sit in squares only
        assert strength(dihedral_group(8)) == 1
        assert strength(quaternion_group(8)) == 1
        assert strength(semidihedral_group(16)) == 1
        assert strength(dihedral_group(32)) == 1
        # modular groups: t a t^-1 = a^(1 + 2^(n-2))
        assert strength(modular_group(4)) == 2
        assert strength(modular_group(5)) == 3
        assert strength(modular_group(6)) == 4
        # the order-256 showcase presentation
        assert strength(corpus_entry("metacyclic-256").group) == 4

    def test_abelian_is_infinite(self):
        assert strength(cyclic_group(16)) == math.inf
        assert strength(direct_product(cyclic_group(4), cyclic_group(4))) == math.inf

    def test_non_two_group_rejected(self):
        with pytest.raises(InputError):
            strength(cyclic_group(6))

    def test_powerful(self):
        assert not is_powerful(dihedral_group(8))
        assert is_powerful(modular_group(4))
        assert is_powerful(cyclic_group(8))
        assert is_powerful(corpus_entry("metacyclic-256").group)


class TestStructures:
    def test_d8_structures(self):
        d8 = dihedral_group(8)
        sts = iwasawa_structures(d8)
        assert len(sts) == 4
        assert {st.level for st in sts} == {1}
        for st in sts:
            assert st.subgroup.order == 4
            assert st.subgroup.is_abelian()
            # the witness element generates G together with A
            joined = d8.closure(st.subgroup.members + (st.element,))
            assert joined.order == 8

    def test_d16_has_no_structures(self):
        # conjugation by a reflection inverts the C8, and 1 + 2^s is never
        # -1 mod 8, so no (A, t, s) exists
        assert iwasawa_structures(dihedral_group(16)) == []
        assert max_iwasawa_level(dihedral_group(16)) is None

    def test_modular16_level(self):
        m16 = modular_group(4)
        sts = iwasawa_structures(m16)
        assert sts
        assert max(st.level for st in sts) == 2
        assert max_iwasawa_level(m16, sts) == 2

    def test_abelian_structure_is_whole_group(self):
        g = direct_product(cyclic_group(4), cyclic_group(2))
        sts = iwasawa_structures(g)
        assert len(sts) == 1
        assert sts[0].level == math.inf
        assert sts[0].subgroup.order == 8
        assert max_iwasawa_level(g) == math.inf

    def test_showcase_level_filter(self):
        g = corpus_entry("metacyclic-256").group
        assert {st.level for st in iwasawa_structures(g, min_level=1)} == {2, 3, 4}
        assert {st.level for st in iwasawa_structures(g, min_level=3)} == {3, 4}
        assert iwasawa_structures(g, min_level=5) == []

    def test_structures_sorted_best_first(self):
        g = corpus_entry("metacyclic-256").group
        sts = iwasawa_structures(g, min_level=2)
        levels = [st.level for st in sts]
        assert levels == sorted(levels, reverse=True)

    def test_power_relations_on_showcase(self):
        g = corpus_entry("metacyclic-256").group
        for st in iwasawa_structures(g, min_level=3):
            for m in (2, 3, 4, 5):
                rel = check_structure_power_relations(g, st, m)
                assert rel == {
                    "commutator_is_A_powers": True,
                    "strength_at_least_level": True,
                    "powers_split": True,
                }

    def test_power_relations_on_modular(self):
        g = modular_group(5)
        sts = iwasawa_structures(g)
        best = sts[0]
        rel = check_structure_power_relations(g, best, m=3)
        assert all(rel.values())

    def test_infinite_level_rejected(self):
        g = cyclic_group(8)
        st = iwasawa_structures(g)[0]
        with pytest.raises(InputError):
            check_structure_power_relations(g, st, m=2)


class TestClassification:
    def test_frozen_small_cases(self):
        # subgroups of exponent <= 2^m must all be abelian
        for name, m, expect in [
            ("D8", 2, False),
            ("Q8", 2, False),
            ("SD16", 2, False),
            ("M16", 2, True),
            ("M16", 3, False),
            ("M32", 2, True),
            ("M32", 3, True),
            ("M32", 4, False),
            ("C8", 2, True),
            ("C4xC4", 5, True),
        ]:
            report = classify_two_group(corpus_entry(name).group, m)
            assert report.subgroup_condition is expect, (name, m)
            assert report.structure_condition is expect, (name, m)

    def test_answer_tracks_strength_for_nonabelian(self):
        # for a non-abelian group with structures the answer is
        # strength >= m, by the level/strength equality
        for name in ("M16", "M32", "M64", "metacyclic-256"):
            g = corpus_entry(name).group
            s = strength(g)
            for m in (2, 3, 4, 5):
                rep = classify_two_group(g, m)
                assert rep.subgroup_condition == (s >= m), (name, m)

    def test_m_below_two_rejected(self):
        with pytest.raises(InputError):
            classify_two_group(dihedral_group(8), 1)

    def test_non_two_group_rejected(self):
        with pytest.raises(InputError):
            classify_two_group(cyclic_group(12), 2)

    def test_report_shape(self):
        rep = classify_two_group(dihedral_group(8), 2)
        js = rep.to_json()
        assert js["order"] == 8
        assert js["m"] == 2
        assert js["subgroup_condition"] is False
        assert js["structure_condition"] is False
        # a witness must name a non-abelian subgroup of exponent <= 4
        assert rep.subgroup_witness is not None
        assert not rep.subgroup_witness.is_abelian()
        assert rep.subgroup_witness.exponent() <= 4


class TestSylowClassification:
    def test_s4_matches_direct_sylow(self):
        s4 = permutation_group(4, [[1, 2, 3, 0], [1, 0, 2, 3]])
        rep = classify_sylow(s4, 2)
        # Sylow 2-subgroup of S4 is dihedral of order 8: not power-abelian
        assert rep.order == 8
        assert rep.subgroup_condition is False

    def test_two_group_passthrough(self):
        rep = classify_sylow(dihedral_group(8), 2)
        assert rep.order == 8
        assert rep.subgroup_condition is False

    def test_odd_order_group(self):
        c3 = cyclic_group(3)
        rep = classify_sylow(c3, 2)
        assert rep.order == 1
        assert rep.subgroup_condition is True

    def test_mixed_product(self):
        g = direct_product(cyclic_group(3), quaternion_group(8))
        rep = classify_sylow(g, 2)
        assert rep.order == 8
        assert rep.subgroup_condition is False
