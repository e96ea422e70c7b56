"""Field abstraction shared by the rational, Galois, and Laurent layers.

A field object owns all arithmetic; elements are thin immutable wrappers
around a canonical hashable payload.  Payload conventions:

  Rationals        fractions.Fraction
  GaloisField(p,k) tuple of k ints in [0, p), little-endian coefficients
  LaurentField     tuple of (exponent, sub-payload) pairs sorted by exponent,
                   zero coefficients stripped

Canonical payloads make equality and hashing structural, which the Witt
machinery relies on (square-class representatives used as dict keys).
"""

from __future__ import annotations

from typing import Any, Iterable

from ..errors import FieldMismatch


class Field:
    """Common interface; concrete layers override the payload methods."""

    kind: str = "?"
    char: int = 0

    # -- payload arithmetic, implemented by subclasses ------------------
    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _div(self, a, b):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _zero(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def _from_int(self, n: int):
        raise NotImplementedError

    def _format(self, a) -> str:
        raise NotImplementedError

    # -- square-class interface -----------------------------------------
    def _is_square(self, a) -> bool:
        raise NotImplementedError

    def _square_class(self, a):
        """Canonical payload representing a * (squares)."""
        raise NotImplementedError

    def square_class_reps(self) -> list["FieldElement"]:
        """All square classes, each as its canonical representative."""
        raise NotImplementedError

    # -- roots of unity ---------------------------------------------------
    def two_power_root_level(self) -> int:
        """Largest k with a primitive 2^k-th root of unity in the field."""
        raise NotImplementedError

    def zeta(self, k: int) -> "FieldElement":
        """Canonical primitive 2^k-th root of unity; errors if absent."""
        raise NotImplementedError

    # -- JSON ------------------------------------------------------------
    def element_to_json(self, a) -> Any:
        raise NotImplementedError

    def element_from_json(self, obj: Any):
        raise NotImplementedError

    def to_json(self) -> Any:
        raise NotImplementedError

    # -- wrapper helpers --------------------------------------------------
    def element(self, payload) -> "FieldElement":
        return FieldElement(self, payload)

    def zero(self) -> "FieldElement":
        return self.element(self._zero())

    def one(self) -> "FieldElement":
        return self.element(self._one())

    def from_int(self, n: int) -> "FieldElement":
        return self.element(self._from_int(n))

    def coerce(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        raise FieldMismatch(f"cannot coerce {value!r} into {self}")

    def elements_from(self, values: Iterable) -> list["FieldElement"]:
        return [self.coerce(v) for v in values]

    def is_square(self, x) -> bool:
        return self._is_square(self.coerce(x).payload)

    def square_class(self, x) -> "FieldElement":
        return self.element(self._square_class(self.coerce(x).payload))


class FieldElement:
    """Immutable element wrapper with operator sugar."""

    __slots__ = ("field", "payload")

    def __init__(self, field: Field, payload):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> "FieldElement":
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field._add(self.payload, o.payload))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.payload))

    def __sub__(self, other):
        o = self._other(other)
        return self + (-o)

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field._mul(self.payload, o.payload))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field._div(self.payload, o.payload))

    def __rtruediv__(self, other):
        return self._other(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self.field.one() / self) ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.payload == other.payload

    def __hash__(self):
        return hash((id(type(self.field)), self.field, self.payload))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.payload)

    def is_square(self) -> bool:
        return self.field._is_square(self.payload)

    def square_class(self) -> "FieldElement":
        return FieldElement(self.field, self.field._square_class(self.payload))

    def to_json(self):
        return self.field.element_to_json(self.payload)

    def __str__(self):
        return self.field._format(self.payload)

    def __repr__(self):
        return f"<{self} in {self.field}>"
