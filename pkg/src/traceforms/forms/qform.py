"""Diagonal quadratic forms and Pfister forms."""

from __future__ import annotations

from ..errors import InputError
from ..fields.base import Field, FieldElement


class QForm:
    """Nondegenerate diagonal quadratic form <a_1, ..., a_n>."""

    def __init__(self, field: Field, entries):
        self.field = field
        elems = tuple(field.coerce(x) for x in entries)
        if not elems:
            raise InputError("a quadratic form needs at least one entry")
        if any(e.is_zero() for e in elems):
            raise InputError("diagonal entries must be nonzero")
        self.entries = elems
        self.dim = len(elems)

    def __eq__(self, other):
        return (
            isinstance(other, QForm)
            and other.field == self.field
            and other.entries == self.entries
        )

    def __repr__(self):
        inside = ", ".join(str(e) for e in self.entries)
        return f"<{inside}>"

    def direct_sum(self, other: "QForm") -> "QForm":
        if other.field != self.field:
            raise InputError("direct sum needs matching fields")
        return QForm(self.field, self.entries + other.entries)

    def scale(self, c) -> "QForm":
        c = self.field.coerce(c)
        if c.is_zero():
            raise InputError("scale needs a nonzero scalar")
        return QForm(self.field, tuple(c * e for e in self.entries))

    def tensor(self, other: "QForm") -> "QForm":
        if other.field != self.field:
            raise InputError("tensor needs matching fields")
        return QForm(
            self.field, tuple(a * b for a in self.entries for b in other.entries)
        )

    def value(self, vector) -> FieldElement:
        vec = [self.field.coerce(v) for v in vector]
        if len(vec) != self.dim:
            raise InputError("vector length mismatch")
        return sum(
            (a * v * v for a, v in zip(self.entries, vec)),
            start=self.field.zero(),
        )

    def square_class_entries(self) -> tuple[FieldElement, ...]:
        return tuple(e.square_class() for e in self.entries)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "entries": [self.field.element_to_json(e.payload) for e in self.entries],
        }

    @classmethod
    def from_json(cls, field: Field, obj) -> "QForm":
        return cls(field, [field.element(field.element_from_json(x)) for x in obj["entries"]])


def hyperbolic_plane(field: Field) -> QForm:
    return QForm(field, [field.one(), -field.one()])


def hyperbolic_form(field: Field, planes: int) -> QForm:
    if planes < 1:
        raise InputError("need at least one plane")
    return QForm(field, [field.one(), -field.one()] * planes)


def pfister(field: Field, slots, convention: str = "minus") -> QForm:
    """r-fold Pfister form built from <1, -a_i> factors (2^r entries).

    convention="plus" uses <1, +a_i> factors instead; with a square root
    of -1 in the field the two conventions give the same form up to
    isometry, and "plus" demands that root (checked).

    An empty slot list gives the 0-fold form <1>.
    """
    slots = [field.coerce(a) for a in slots]
    if any(a.is_zero() for a in slots):
        raise InputError("Pfister slots must be nonzero")
    if convention not in ("minus", "plus"):
        raise InputError(f"unknown convention {convention!r}")
    if convention == "plus" and field.two_power_root_level() < 2:
        raise InputError("plus convention needs a square root of -1 in the field")
    form = QForm(field, [field.one()])
    for a in slots:
        second = a if convention == "plus" else -a
        form = form.tensor(QForm(field, [field.one(), second]))
    return form


def scaled_pfister(field: Field, scale, slots, convention: str = "minus") -> QForm:
    return pfister(field, slots, convention=convention).scale(scale)
