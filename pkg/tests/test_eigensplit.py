"""Order-4 orthogonal eigensplitting: hand fixtures plus seeded random sweep."""

import random

import pytest

from traceforms import (
    GaloisField,
    GramMatrix,
    InputError,
    order4_eigensplit,
    run_suite,
)
from traceforms.suites import random_order4_case

F5 = GaloisField(5)
F13 = GaloisField(13)


def identity_gram(field, n):
    return GramMatrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


class TestHandFixtures:
    def test_identity_operator_all_fixed(self):
        gram = GramMatrix(F5, [[2, 0], [0, 3]])
        res = order4_eigensplit(gram, [[1, 0], [0, 1]])
        assert res.dims == {"+1": 2, "-1": 0, "+i": 0, "-i": 0}
        assert sorted(str(c) for c in res.plus_form.entries) == ["2", "3"]
        assert res.minus_form is None
        assert res.mixed_gram is None and res.mixed_class is None
        assert res.to_json()["mixed_hyperbolic"] is True

    def test_negated_identity_all_reversed(self):
        gram = identity_gram(F13, 3)
        res = order4_eigensplit(gram, [[-1 if i == j else 0 for j in range(3)] for i in range(3)])
        assert res.dims == {"+1": 0, "-1": 3, "+i": 0, "-i": 0}
        assert res.plus_form is None and res.minus_form.dim == 3

    def test_swap_splits_into_fixed_and_reversed(self):
        res = order4_eigensplit(identity_gram(F5, 2), [[0, 1], [1, 0]])
        assert res.dims == {"+1": 1, "-1": 1, "+i": 0, "-i": 0}
        # fixed line spanned by (1,1), reversed by (1,-1); both have B(v,v)=2
        assert str(res.plus_form.entries[0]) == "2"
        assert str(res.minus_form.entries[0]) == "2"

    def test_plane_rotation_is_purely_mixed(self):
        res = order4_eigensplit(identity_gram(F5, 2), [[0, -1], [1, 0]])
        assert res.dims == {"+1": 0, "-1": 0, "+i": 1, "-i": 1}
        assert res.plus_form is None and res.minus_form is None
        assert res.mixed_gram.dim == 2
        assert res.mixed_class.is_hyperbolic

    def test_four_cycle_has_all_four_eigenspaces(self):
        perm = [
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
        ]
        res = order4_eigensplit(identity_gram(F13, 4), perm)
        assert res.dims == {"+1": 1, "-1": 1, "+i": 1, "-i": 1}
        assert res.mixed_gram.dim == 2
        assert res.mixed_class.is_hyperbolic
        payload = res.to_json()
        assert payload["dims"] == res.dims
        assert payload["mixed_dim"] == 2

    def test_block_mix_keeps_restricted_types(self):
        # diag blocks: fixed with value 3, rotation plane with matching entries
        gram = GramMatrix(F5, [[3, 0, 0], [0, 2, 0], [0, 0, 2]])
        op = [[1, 0, 0], [0, 0, -1], [0, 1, 0]]
        res = order4_eigensplit(gram, op)
        assert res.dims == {"+1": 1, "-1": 0, "+i": 1, "-i": 1}
        assert str(res.plus_form.entries[0]) == "3"
        assert res.mixed_class.is_hyperbolic


class TestErrors:
    def test_field_without_sqrt_minus_one(self):
        f7 = GaloisField(7)
        with pytest.raises(InputError):
            order4_eigensplit(identity_gram(f7, 2), [[0, 1], [1, 0]])

    def test_operator_of_wrong_order(self):
        with pytest.raises(InputError):
            order4_eigensplit(identity_gram(F5, 2), [[1, 1], [0, 1]])

    def test_operator_not_preserving_form(self):
        # diag(2,1) has order 4 over GF(5) but scales the form
        with pytest.raises(InputError):
            order4_eigensplit(identity_gram(F5, 2), [[2, 0], [0, 1]])

    def test_shape_mismatch(self):
        with pytest.raises(InputError):
            order4_eigensplit(identity_gram(F5, 2), [[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_characteristic_two_rejected_at_field_level(self):
        with pytest.raises(InputError):
            GaloisField(2)


class TestRandomSweep:
    def test_suite_covers_at_least_hundred_cases(self):
        res = run_suite("eigensplit-random", seed=0)
        assert res.ok, res.failures[:3]
        assert res.cases >= 100

    @pytest.mark.parametrize("field", [F5, F13], ids=["GF5", "GF13"])
    def test_recovered_dims_match_construction(self, field):
        rng = random.Random(20240814)
        for _ in range(15):
            gram, operator, dims = random_order4_case(field, rng)
            res = order4_eigensplit(gram, operator)
            assert res.dims == dims
            if res.mixed_class is not None:
                assert res.mixed_class.is_hyperbolic

    def test_seed_determinism(self):
        a = run_suite("eigensplit-random", seed=7)
        b = run_suite("eigensplit-random", seed=7)
        assert a.cases == b.cases and a.ok == b.ok
