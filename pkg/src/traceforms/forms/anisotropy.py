"""Anisotropy certificates for Pfister forms over iterated Laurent layers.

Over K((X1))...((Xr)) with K of odd characteristic and 2-power
root-of-unity level exactly s, consider the Pfister form on slots
(a_1, ..., a_k, zeta_(2^s)).  When the valuation vectors of the a_i are
linearly independent mod 2, the 2^k binary cells of the tensor product
land in pairwise distinct square classes of the value group, so the
Springer decomposition can never cancel between them; each surviving
residue cell is a scaled copy of <1, -zeta>, anisotropic because zeta
is a non-square (that is what level exactly s means).  Hence the whole
form is anisotropic.  The report cross-checks this certificate against
the Witt machinery's explicitly computed anisotropic dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConsistencyError, InputError
from ..fields.base import Field
from ..fields.laurent import tower_base, tower_variables
from ..fields.valuation import valuation_vector, valuations_independent
from .qform import pfister
from .witt import witt_decompose


@dataclass
class ValuationCriterionReport:
    independent: bool
    vectors: list[tuple[int, ...]]
    pfister_dim: int
    aniso_dim: int
    anisotropic: bool
    hyperbolic: bool

    def to_json(self) -> dict:
        return {
            "independent": self.independent,
            "vectors": [list(v) for v in self.vectors],
            "pfister_dim": self.pfister_dim,
            "aniso_dim": self.aniso_dim,
            "anisotropic": self.anisotropic,
            "hyperbolic": self.hyperbolic,
        }


def valuation_pfister_criterion(
    field: Field, entries, s: int, convention: str = "minus"
) -> ValuationCriterionReport:
    """Certify anisotropy of the Pfister form on (entries..., zeta_(2^s)).

    Preconditions: `field` is a Laurent tower whose base has 2-power
    root-of-unity level exactly s (so zeta_(2^s) exists but is not a
    square), and there are at most as many entries as Laurent layers.
    When the entries' valuation vectors are independent mod 2 the form
    must be anisotropic; a disagreement with the computed decomposition
    raises ConsistencyError.  Dependent vectors certify nothing, and the
    report simply records what the decomposition found.
    """
    if field.kind != "laurent":
        raise InputError("the criterion needs at least one Laurent layer")
    base = tower_base(field)
    if base.two_power_root_level() != s:
        raise InputError(
            "the certificate is only sound when the base field's 2-power "
            f"root-of-unity level is exactly s={s} "
            f"(got {base.two_power_root_level()})"
        )
    elems = [field.coerce(e) for e in entries]
    if len(elems) > len(tower_variables(field)):
        raise InputError("more slot entries than Laurent layers")
    vectors = [valuation_vector(e) for e in elems]
    independent = valuations_independent(field, elems) if elems else True
    form = pfister(field, elems + [field.zeta(s)], convention=convention)
    wd = witt_decompose(form)
    anisotropic = wd.aniso_dim == form.dim
    if independent and not anisotropic:
        raise ConsistencyError(
            "independent valuation vectors but the Pfister form has "
            f"anisotropic dimension {wd.aniso_dim} < {form.dim}"
        )
    return ValuationCriterionReport(
        independent=independent,
        vectors=vectors,
        pfister_dim=form.dim,
        aniso_dim=wd.aniso_dim,
        anisotropic=anisotropic,
        hyperbolic=wd.is_hyperbolic,
    )
