"""Predictor, obstruction test, and template-recovery oracle."""

import math

import pytest

from traceforms import (
    FieldProfile,
    GaloisField,
    InputError,
    LaurentField,
    QForm,
    Rationals,
    extension_obstruction,
    min_nonabelian_exponent,
    modular_trace_witness,
    predict,
    recover_pfister_slots,
    scaled_pfister,
    witt_equivalent,
)
from traceforms.corpus import corpus_entry

F5 = GaloisField(5)


def group(name):
    return corpus_entry(name).group


class TestFieldProfile:
    def test_level_computed_from_field(self):
        assert FieldProfile(field=GaloisField(5)).m == 2
        assert FieldProfile(field=GaloisField(41)).m == 3
        assert FieldProfile(field=Rationals()).m == 1

    def test_declared_level_must_match_field(self):
        FieldProfile(field=F5, level=2)
        with pytest.raises(InputError):
            FieldProfile(field=F5, level=3)

    def test_needs_field_or_level(self):
        with pytest.raises(InputError):
            FieldProfile()

    def test_number_field_is_declaration_only(self):
        FieldProfile(level=2, is_number_field=True)
        with pytest.raises(InputError):
            FieldProfile(field=Rationals(), is_number_field=True)

    def test_json_round_trip(self):
        prof = FieldProfile(level=3, is_number_field=True, c_i_level=2, cd2_bound=1)
        again = FieldProfile.from_json(prof.to_json())
        assert again.to_json() == prof.to_json()
        with_field = FieldProfile.from_json({"field": {"base": {"kind": "GF", "p": 13}}})
        assert with_field.m == 2


class TestMinNonabelianExponent:
    @pytest.mark.parametrize(
        "name,expected",
        [("D8", 4), ("Q8", 4), ("SD16", 4), ("D16", 4), ("M16", 8), ("M32", 16)],
    )
    def test_frozen_values(self, name, expected):
        assert min_nonabelian_exponent(group(name)) == expected

    def test_abelian_gives_infinity(self):
        assert min_nonabelian_exponent(group("C8")) == math.inf

    def test_non_two_group_rejected(self):
        with pytest.raises(InputError):
            min_nonabelian_exponent(group("S4"))


class TestPredict:
    def test_small_exponent_groups_forced_at_level_two(self):
        for name in ("D8", "Q8", "SD16", "D16"):
            p = predict(group(name), FieldProfile(level=2))
            assert p.hyperbolic_forced is True
            assert p.rule == "root-of-unity-exponent"
            assert p.shape is None

    def test_modular_group_not_forced_below_its_exponent(self):
        p = predict(group("M16"), FieldProfile(level=2))
        assert p.hyperbolic_forced is False
        assert p.rule == "none"
        assert p.shape == {"scale": 16, "pfister_rank": 2}
        forced = predict(group("M16"), FieldProfile(level=3))
        assert forced.rule == "root-of-unity-exponent"

    def test_abelian_sylow_never_forced_by_group_rules(self):
        p = predict(group("C4xC4"), FieldProfile(level=2))
        assert p.hyperbolic_forced is False
        assert p.sylow_abelian is True
        assert p.shape == {"scale": 16, "pfister_rank": 2}

    def test_mixed_order_groups_use_sylow_subgroup(self):
        a5 = predict(group("A5"), FieldProfile(level=2))
        assert a5.sylow_order == 4 and a5.sylow_abelian
        assert a5.hyperbolic_forced is False
        psl = predict(group("PSL(2,7)"), FieldProfile(level=2))
        assert psl.sylow_order == 8 and not psl.sylow_abelian
        assert psl.hyperbolic_forced is True

    def test_declared_simple_rule(self):
        p = predict(group("M16"), FieldProfile(level=2), declared_simple=True)
        assert p.rule == "simple-group-sylow" and p.hyperbolic_forced
        # abelian Sylow blocks the simple-group rule
        q = predict(group("A5"), FieldProfile(level=2), declared_simple=True)
        assert q.rule == "none"

    def test_profile_rules_on_rank_three_abelian(self):
        g = group("C2xC2xC2")
        assert predict(g, FieldProfile(level=2, c_i_level=2)).rule == "ci-field"
        assert predict(g, FieldProfile(level=2, cd2_bound=2)).rule == "cd2-bound"
        assert (
            predict(g, FieldProfile(level=2, is_number_field=True)).rule
            == "number-field-rank"
        )
        # thresholds: c_i / cd2 must be <= rank-1
        assert predict(g, FieldProfile(level=2, c_i_level=3)).rule == "none"

    def test_level_below_two_rejected(self):
        with pytest.raises(InputError):
            predict(group("D8"), FieldProfile(level=1))

    def test_json_carries_rule_detail(self):
        for name, level in (("D8", 2), ("M16", 2)):
            payload = predict(group(name), FieldProfile(level=level)).to_json()
            assert isinstance(payload["rule_detail"], str) and payload["rule_detail"]
            assert payload["m"] == level

    def test_seed_independence(self):
        base = predict(group("S3xM16"), FieldProfile(level=2), seed=0).to_json()
        for seed in (1, 5):
            again = predict(group("S3xM16"), FieldProfile(level=2), seed=seed).to_json()
            assert again == base


class TestExtensionObstruction:
    def test_obstructed_over_laurent_tower(self):
        fld = LaurentField(F5, "X")
        res = extension_obstruction(fld, [2, fld.x()], group("D8"))
        assert res["rank"] == 2 and res["exponent"] == 4
        assert res["pfister_hyperbolic"] is False
        assert res["obstructed"] is True
        assert "unsolvable" in res["verdict"]

    def test_unobstructed_over_finite_field(self):
        res = extension_obstruction(F5, [2, 3], group("D8"))
        assert res["pfister_hyperbolic"] is True
        assert res["obstructed"] is False

    def test_slot_count_must_match_rank(self):
        with pytest.raises(InputError):
            extension_obstruction(F5, [2], group("D8"))

    def test_field_level_must_reach_exponent(self):
        # GF(7) has no sqrt(-1), D8 needs a primitive 4th root of unity
        with pytest.raises(InputError):
            extension_obstruction(GaloisField(7), [3, 3], group("D8"))
        with pytest.raises(InputError):
            extension_obstruction(Rationals(), [2, 3], group("D8"))

    def test_group_must_be_nonabelian_two_group(self):
        with pytest.raises(InputError):
            extension_obstruction(F5, [2, 2], group("C4xC4"))
        with pytest.raises(InputError):
            extension_obstruction(F5, [2], group("S3"))


class TestModularTraceWitness:
    def test_laurent_default_generator(self):
        fld = LaurentField(F5, "X")
        res = modular_trace_witness(fld, 4)
        assert res["dim"] == 16
        assert res["matches"] is True
        assert res["hyperbolic"] is False
        # Witt-equivalent: same anisotropic kernel, different ambient dims
        assert res["trace_class"]["aniso_diag"] == res["predicted_class"]["aniso_diag"]
        assert res["trace_class"]["aniso_dim"] == 4
        assert res["fixed_algebra"]["matches_multiquadratic"] is True

    def test_explicit_generator_required_off_laurent(self):
        with pytest.raises(InputError):
            modular_trace_witness(F5, 4)


class TestRecoverPfisterSlots:
    def test_recovers_matching_template(self):
        target = scaled_pfister(F5, 4, [2, 2])
        slots = recover_pfister_slots(F5, target, 4, 2)
        assert slots is not None and len(slots) == 2
        rebuilt = scaled_pfister(F5, 4, list(slots))
        assert witt_equivalent(target, rebuilt)

    def test_dimension_parity_mismatch_gives_none(self):
        # an odd-dimensional class can never match an even Pfister template
        assert recover_pfister_slots(F5, QForm(F5, [1]), 1, 1) is None
