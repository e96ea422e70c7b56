"""Witt decomposition and Witt-class comparisons, per base-field kind.

* GF(q), q odd: classes are classified by (dim mod 2, discriminant);
  anisotropic dimensions are 0, 1, or 2.
* Laurent layer K((X)): residue-form splitting q = q0 + X*q1 reduces the
  computation to the coefficient field, exactly and recursively.
* Q: invariant-based local computations (see rationalwitt); anisotropic
  diagonals are reported only when forced (trivial class or the form
  already anisotropic), otherwise None while dimensions stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputError
from ..fields.base import Field, FieldElement
from ..fields.galois import GaloisField
from ..fields.laurent import LaurentField
from . import rationalwitt as rw
from .qform import QForm


@dataclass
class WittClass:
    """Witt-decomposition summary of a diagonal form."""

    field: Field
    dim: int
    aniso_dim: int
    aniso_diag: tuple[FieldElement, ...] | None
    invariants: dict | None = None

    @property
    def witt_index(self) -> int:
        return (self.dim - self.aniso_dim) // 2

    @property
    def is_hyperbolic(self) -> bool:
        return self.aniso_dim == 0

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "dim": self.dim,
            "aniso_dim": self.aniso_dim,
            "witt_index": self.witt_index,
            "is_hyperbolic": self.is_hyperbolic,
            "aniso_diag": (
                None
                if self.aniso_diag is None
                else [self.field.element_to_json(e.payload) for e in self.aniso_diag]
            ),
            "invariants": self.invariants,
        }


def _decompose_galois(q: QForm) -> WittClass:
    field: GaloisField = q.field
    n = q.dim
    disc = field.one()
    for e in q.entries:
        disc = disc * e
    minus_one = -field.one()
    if n % 2 == 0:
        target = minus_one ** (n // 2)
        if (disc * target).is_square():
            return WittClass(field, n, 0, ())
        d = (disc * minus_one ** ((n - 2) // 2)).square_class()
        return WittClass(field, n, 2, (field.one(), d))
    d = (disc * minus_one ** ((n - 1) // 2)).square_class()
    return WittClass(field, n, 1, (d,))


def _decompose_laurent(q: QForm) -> WittClass:
    field: LaurentField = q.field
    sub = field.sub
    even_res, odd_res = [], []
    for e in q.entries:
        cls = e.square_class()  # X^(0|1) * unit-class representative
        v = field.valuation(cls)
        res = field.residue(cls)
        (even_res if v == 0 else odd_res).append(res)
    parts = []
    aniso_entries: list[FieldElement] | None = []
    aniso_dim = 0
    x = field.x()
    for shift, residues in ((field.one(), even_res), (x, odd_res)):
        if not residues:
            continue
        wd = witt_decompose(QForm(sub, residues))
        parts.append(wd)
        aniso_dim += wd.aniso_dim
        if aniso_entries is not None and wd.aniso_diag is not None:
            aniso_entries.extend(shift * field.lift(d) for d in wd.aniso_diag)
        else:
            aniso_entries = None
    return WittClass(
        field,
        q.dim,
        aniso_dim,
        tuple(aniso_entries) if aniso_entries is not None else None,
    )


def _decompose_rational(q: QForm) -> WittClass:
    diag = [e.payload for e in q.entries]
    inv = rw.global_invariants(diag)
    aniso = rw.global_aniso_dim(diag)
    if aniso == 0:
        diag_out: tuple[FieldElement, ...] | None = ()
    elif aniso == q.dim:
        diag_out = tuple(e.square_class() for e in q.entries)
    else:
        diag_out = None
    return WittClass(q.field, q.dim, aniso, diag_out, invariants=inv)


def witt_decompose(q: QForm) -> WittClass:
    kind = q.field.kind
    if kind == "GF":
        return _decompose_galois(q)
    if kind == "laurent":
        return _decompose_laurent(q)
    if kind == "Q":
        return _decompose_rational(q)
    raise InputError(f"no Witt decomposition for field kind {kind!r}")


def anisotropic_dim(q: QForm) -> int:
    return witt_decompose(q).aniso_dim


def is_hyperbolic(q: QForm) -> bool:
    return witt_decompose(q).aniso_dim == 0


def is_isotropic(q: QForm) -> bool:
    return witt_decompose(q).aniso_dim < q.dim


def witt_equivalent(q1: QForm, q2: QForm) -> bool:
    """Same Witt class, decided on q1 + (-q2) being split."""
    if q1.field != q2.field:
        raise InputError("forms live over different fields")
    if (q1.dim - q2.dim) % 2:
        return False
    combined = QForm(q1.field, q1.entries + tuple(-e for e in q2.entries))
    return witt_decompose(combined).aniso_dim == 0
