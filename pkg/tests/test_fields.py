"""Field arithmetic, square classes, root-of-unity levels, serialization."""

import math
from fractions import Fraction

import pytest

from traceforms import (
    GaloisField,
    InputError,
    LaurentField,
    Rationals,
    field_from_json,
    find_prime_with_level,
    laurent_tower,
    prime_power_for_level,
)
from traceforms.fields import (
    squarefree_part,
    tower_base,
    tower_variables,
    two_adic_valuation,
    valuation_vector,
    valuations_independent,
)


class TestGaloisField:
    def test_basic_arithmetic(self):
        f5 = GaloisField(5)
        a, b = f5.from_int(3), f5.from_int(4)
        assert str(a + b) == "2"
        assert str(a * b) == "2"
        assert str(a - b) == "4"
        assert str(a / b) == "2"  # 3 * 4^-1 = 3 * 4 = 12 = 2
        assert (a / b) * b == a

    def test_char_two_rejected(self):
        with pytest.raises(InputError):
            GaloisField(2)

    def test_non_prime_rejected(self):
        with pytest.raises(InputError):
            GaloisField(15)

    def test_extension_field_arithmetic(self):
        f9 = GaloisField(3, 2)
        assert f9.q == 9
        x = f9.gen()
        # multiplicative group is cyclic of order 8
        assert f9.element_order(x) in (2, 4, 8)
        powers = set()
        acc = f9.one()
        for _ in range(8):
            acc = acc * x
            powers.add(acc.payload)
        assert len(powers) == f9.element_order(x)

    def test_every_nonzero_element_invertible(self):
        for q, k in ((5, 1), (3, 2)):
            fld = GaloisField(q, k)
            for i in range(1, fld.q):
                e = fld.from_index(i)
                assert not e.is_zero()
                assert (e * (fld.one() / e)) == fld.one()

    def test_square_classes(self):
        f5 = GaloisField(5)
        reps = f5.square_class_reps()
        assert len(reps) == 2
        assert str(reps[0]) == "1"
        squares = {str((f5.from_int(i) * f5.from_int(i))) for i in range(1, 5)}
        assert str(reps[1]) not in squares

    def test_root_of_unity_levels(self):
        # 2-part of q - 1: GF(5) -> 4, GF(13) -> 4, GF(41) -> 8, GF(17) -> 16
        assert GaloisField(5).two_power_root_level() == 2
        assert GaloisField(13).two_power_root_level() == 2
        assert GaloisField(41).two_power_root_level() == 3
        assert GaloisField(17).two_power_root_level() == 4
        assert GaloisField(7).two_power_root_level() == 1

    def test_zeta_has_exact_order(self):
        for p, s in ((5, 2), (41, 3), (17, 4)):
            fld = GaloisField(p)
            z = fld.zeta(s)
            assert fld.element_order(z) == 2**s

    def test_json_round_trip(self):
        f25 = GaloisField(5, 2)
        again = field_from_json(f25.to_json())
        assert again == f25
        e = f25.gen() + f25.one()
        back = again.element(again.element_from_json(f25.element_to_json(e.payload)))
        assert back == e


class TestRationals:
    def test_exact_fractions(self):
        q = Rationals()
        x = q.element(Fraction(1, 3))
        assert str(x + x + x) == "1"

    def test_squarefree_part(self):
        assert squarefree_part(18) == 2
        assert squarefree_part(-50) == -2
        # square class of a fraction a/b is the class of a*b
        assert squarefree_part(4 * 9) == 1
        assert squarefree_part(2 * 3) == 6

    def test_two_adic_valuation(self):
        assert two_adic_valuation(40) == 3
        assert two_adic_valuation(17 - 1) == 4

    def test_json_round_trip(self):
        q = Rationals()
        e = q.element(Fraction(-7, 3))
        assert q.element_from_json(q.element_to_json(e.payload)) == e.payload


class TestLaurentTower:
    def test_construction_and_valuation(self):
        fx = LaurentField(GaloisField(5), "X")
        x = fx.x()
        assert fx.valuation(x) == 1
        assert fx.valuation(x * x) == 2
        assert fx.valuation(fx.one() / x) == -1
        assert str(fx.residue(fx.one() + x)) == "1"

    def test_two_layer_tower(self):
        fxy = laurent_tower(GaloisField(5), "X", "Y")
        assert tower_variables(fxy) == ["X", "Y"]
        assert tower_base(fxy).q == 5
        y = fxy.x()
        x = fxy.coerce(fxy.sub.x())
        assert fxy.valuation(y) == 1
        assert fxy.valuation(x) == 0  # X is a unit in the Y-adic valuation

    def test_square_class_reps_double_per_layer(self):
        f5 = GaloisField(5)
        assert len(f5.square_class_reps()) == 2
        fx = LaurentField(f5, "X")
        assert len(fx.square_class_reps()) == 4
        fxy = LaurentField(fx, "Y")
        assert len(fxy.square_class_reps()) == 8

    def test_is_square_in_tower(self):
        fx = LaurentField(GaloisField(5), "X")
        x = fx.x()
        assert not fx.is_square(x)
        assert fx.is_square(x * x)
        assert fx.is_square(fx.from_int(4) * x * x)
        assert not fx.is_square(fx.from_int(2) * x * x)

    def test_valuation_vectors_and_independence(self):
        fxy = laurent_tower(GaloisField(5), "X", "Y")
        x = fxy.coerce(fxy.sub.x())
        y = fxy.x()
        vx = valuation_vector(x)
        vy = valuation_vector(y)
        assert vx != vy
        assert valuations_independent(fxy, [x, y])
        assert not valuations_independent(fxy, [x, x * y * y])
        assert not valuations_independent(fxy, [fxy.from_int(2)])

    def test_level_inherited_from_base(self):
        fx = LaurentField(GaloisField(5), "X")
        assert fx.two_power_root_level() == 2
        assert str(fx.zeta(2)) == "2"

    def test_json_round_trip(self):
        fxy = laurent_tower(GaloisField(5), "X", "Y")
        again = field_from_json(fxy.to_json())
        assert again == fxy
        e = fxy.x() + fxy.coerce(fxy.sub.x())
        enc = fxy.element_to_json(e.payload)
        assert fxy.element(fxy.element_from_json(enc)) == e

    def test_q_base_tower_supported(self):
        qx = LaurentField(Rationals(), "X")
        x = qx.x()
        assert qx.valuation(x + x * x) == 1


class TestParameterSearch:
    def test_find_prime_with_level(self):
        assert find_prime_with_level(2) == 5
        assert find_prime_with_level(3) == 41
        assert find_prime_with_level(4) == 17

    def test_prime_power_for_level(self):
        assert prime_power_for_level(2) == 5
        assert prime_power_for_level(3) == 25
        assert prime_power_for_level(4) == 625

    def test_exact_two_part(self):
        for s in (2, 3, 4, 5):
            p = find_prime_with_level(s)
            q = prime_power_for_level(s)
            assert two_adic_valuation(p - 1) == s
            assert two_adic_valuation(q - 1) == s

    def test_level_below_two_rejected_for_power(self):
        with pytest.raises(InputError):
            prime_power_for_level(1)
