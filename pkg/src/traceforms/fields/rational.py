"""The rational base field, with square classes as signed squarefree integers."""

from __future__ import annotations

from fractions import Fraction

import sympy

from ..errors import InputError
from .base import Field


def squarefree_part(n: int) -> int:
    """Signed squarefree part of a nonzero integer."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    out = sign
    for p, e in sympy.factorint(abs(n)).items():
        if e % 2:
            out *= p
    return out


class Rationals(Field):
    kind = "Q"
    char = 0

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"

    # -- arithmetic -------------------------------------------------------
    def _add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def _neg(self, a: Fraction) -> Fraction:
        return -a

    def _mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def _div(self, a: Fraction, b: Fraction) -> Fraction:
        return a / b

    def _is_zero(self, a: Fraction) -> bool:
        return a == 0

    def _zero(self) -> Fraction:
        return Fraction(0)

    def _one(self) -> Fraction:
        return Fraction(1)

    def _from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return self.element(value)
        return super().coerce(value)

    def _format(self, a: Fraction) -> str:
        return str(a)

    # -- squares -----------------------------------------------------------
    def _is_square(self, a: Fraction) -> bool:
        if a <= 0:
            return False
        return (
            sympy.integer_nthroot(a.numerator, 2)[1]
            and sympy.integer_nthroot(a.denominator, 2)[1]
        )

    def _square_class(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("0 has no square class")
        return Fraction(squarefree_part(a.numerator * a.denominator))

    def square_class_reps(self):
        raise InputError("Q has infinitely many square classes")

    # -- roots of unity ------------------------------------------------------
    def two_power_root_level(self) -> int:
        return 1

    def zeta(self, k: int):
        if k > 1:
            raise InputError("Q contains no primitive 2^k-th root of unity for k > 1")
        return self.from_int(-1) if k == 1 else self.one()

    # -- JSON ---------------------------------------------------------------
    def element_to_json(self, a: Fraction):
        if a.denominator == 1:
            return int(a)
        return f"{a.numerator}/{a.denominator}"

    def element_from_json(self, obj) -> Fraction:
        if isinstance(obj, bool):
            raise InputError("boolean is not a rational")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            try:
                return Fraction(obj)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad rational literal {obj!r}") from exc
        raise InputError(f"bad rational literal {obj!r}")

    def to_json(self):
        return {"base": {"kind": "Q"}, "laurent_vars": []}
