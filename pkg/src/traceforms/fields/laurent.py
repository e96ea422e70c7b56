"""Laurent layers: finitely supported Laurent polynomials over a lower field.

A tower base((X1))((X2)) is built innermost-first: LaurentField(LaurentField(
base, "X1"), "X2").  Payloads are tuples of (exponent, sub-payload) pairs
sorted by exponent with zero coefficients stripped, so equality and hashing
stay structural.

Laurent polynomials are not a field; division is exact-or-error.  Everything
in scope (square tests, valuations, residue forms, fraction-free congruence)
only ever needs exact division, see NotRepresentable.
"""

from __future__ import annotations

from ..errors import InputError, NotRepresentable
from .base import Field, FieldElement


class LaurentField(Field):
    kind = "laurent"

    def __init__(self, sub: Field, var: str):
        if not var or not var[0].isalpha():
            raise InputError(f"bad variable name {var!r}")
        if var in tower_variables(sub):
            raise InputError(f"variable {var!r} already used in the tower")
        self.sub = sub
        self.var = var
        self.char = sub.char

    def __eq__(self, other):
        return (
            isinstance(other, LaurentField)
            and self.var == other.var
            and self.sub == other.sub
        )

    def __hash__(self):
        return hash(("laurent", self.var, self.sub))

    def __repr__(self):
        return f"{self.sub!r}(({self.var}))"

    # -- payload helpers ----------------------------------------------------
    def _norm(self, pairs) -> tuple:
        merged: dict = {}
        for e, c in pairs:
            if e in merged:
                merged[e] = self.sub._add(merged[e], c)
            else:
                merged[e] = c
        return tuple(
            (e, merged[e]) for e in sorted(merged) if not self.sub._is_zero(merged[e])
        )

    def monomial(self, exp: int, coeff=None):
        """coeff * var^exp as an element (coeff defaults to 1)."""
        c = self.sub.one() if coeff is None else self.sub.coerce(coeff)
        return self.element(self._norm([(exp, c.payload)]))

    def x(self):
        return self.monomial(1)

    def lift(self, value):
        """Embed an element of the sub-field as a degree-0 Laurent polynomial."""
        c = self.sub.coerce(value)
        return self.element(self._norm([(0, c.payload)]))

    def coerce(self, value):
        if (
            isinstance(value, FieldElement)
            and value.field != self
            and _tower_contains(self.sub, value.field)
        ):
            return self.lift(self.sub.coerce(value))
        return super().coerce(value)

    # -- arithmetic -----------------------------------------------------------
    def _add(self, a, b):
        return self._norm(list(a) + list(b))

    def _neg(self, a):
        return tuple((e, self.sub._neg(c)) for e, c in a)

    def _mul(self, a, b):
        out = []
        for ea, ca in a:
            for eb, cb in b:
                out.append((ea + eb, self.sub._mul(ca, cb)))
        return self._norm(out)

    def _div(self, a, b):
        """Exact division; raises NotRepresentable when the quotient is not
        a Laurent polynomial."""
        if not b:
            raise ZeroDivisionError("division by zero in " + repr(self))
        if not a:
            return ()
        if len(b) == 1:
            eb, cb = b[0]
            return tuple((ea - eb, self.sub._div(ca, cb)) for ea, ca in a)
        # Long division from the top exponent down.  An exact quotient has
        # exponents in [val(a)-val(b), top(a)-top(b)]; leaving that window
        # proves inexactness.
        min_qe = a[0][0] - b[0][0]
        quotient = []
        rem = list(a)
        lead_e, lead_c = b[-1]
        while rem:
            ea, ca = rem[-1]
            qe = ea - lead_e
            if qe < min_qe:
                raise NotRepresentable(f"inexact division in {self!r}")
            qc = self.sub._div(ca, lead_c)
            quotient.append((qe, qc))
            piece = [(eb + qe, self.sub._neg(self.sub._mul(cb, qc))) for eb, cb in b]
            rem = list(self._norm(rem + piece))
        return self._norm(quotient)

    def _is_zero(self, a) -> bool:
        return not a

    def _zero(self):
        return ()

    def _one(self):
        return self._norm([(0, self.sub._one())])

    def _from_int(self, n: int):
        return self._norm([(0, self.sub._from_int(n))])

    def _format(self, a) -> str:
        if not a:
            return "0"
        terms = []
        for e, c in a:
            cs = self.sub._format(c)
            if "+" in cs or " " in cs:
                cs = f"({cs})"
            if e == 0:
                terms.append(cs)
            else:
                xs = self.var if e == 1 else f"{self.var}^{e}"
                terms.append(xs if cs == "1" else f"{cs}*{xs}")
        return " + ".join(terms)

    # -- valuation ---------------------------------------------------------------
    def valuation(self, x) -> int:
        """Order of vanishing in this layer's variable."""
        a = x.payload if isinstance(x, FieldElement) else self.coerce(x).payload
        if not a:
            raise ZeroDivisionError("0 has no valuation")
        return a[0][0]

    def residue(self, x):
        """Leading coefficient (at the minimal exponent) as a sub-field element.

        For a unit this is the image in the residue field; in char != 2 it
        decides squareness by Hensel's lemma.
        """
        a = x.payload if isinstance(x, FieldElement) else self.coerce(x).payload
        if not a:
            raise ZeroDivisionError("0 has no residue")
        return self.sub.element(a[0][1])

    # -- squares -----------------------------------------------------------------
    def _is_square(self, a) -> bool:
        if not a:
            return True
        e, c = a[0]
        return e % 2 == 0 and self.sub._is_square(c)

    def _square_class(self, a):
        if not a:
            raise ZeroDivisionError("0 has no square class")
        e, c = a[0]
        return self._norm([(e % 2, self.sub._square_class(c))])

    def square_class_reps(self):
        out = []
        for low in self.sub.square_class_reps():
            for e in (0, 1):
                out.append(self.monomial(e, low))
        return out

    # -- roots of unity -------------------------------------------------------------
    def two_power_root_level(self) -> int:
        return self.sub.two_power_root_level()

    def zeta(self, k: int):
        return self.lift(self.sub.zeta(k))

    # -- JSON --------------------------------------------------------------------------
    def element_to_json(self, a):
        return {str(e): self.sub.element_to_json(c) for e, c in a}

    def element_from_json(self, obj):
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            # allow base-field literals as constants
            try:
                return self._norm([(0, self.sub.element_from_json(obj))])
            except InputError:
                raise
        if not isinstance(obj, dict):
            raise InputError(f"bad Laurent element {obj!r}")
        pairs = []
        for key, val in obj.items():
            try:
                e = int(key)
            except ValueError as exc:
                raise InputError(f"bad exponent key {key!r}") from exc
            pairs.append((e, self.sub.element_from_json(val)))
        return self._norm(pairs)

    def to_json(self):
        inner = self.sub.to_json()
        return {"base": inner["base"], "laurent_vars": inner["laurent_vars"] + [self.var]}


def _tower_contains(field: Field, target: Field) -> bool:
    """Is `target` the field itself or one of its Laurent sub-layers?"""
    while True:
        if field == target:
            return True
        if isinstance(field, LaurentField):
            field = field.sub
        else:
            return False


def tower_variables(field: Field) -> list[str]:
    """Laurent variable names innermost-first."""
    out: list[str] = []
    while isinstance(field, LaurentField):
        out.append(field.var)
        field = field.sub
    out.reverse()
    return out


def tower_base(field: Field) -> Field:
    while isinstance(field, LaurentField):
        field = field.sub
    return field
