"""Hyperbolicity predictor for trace forms of Galois extensions.

Given a finite group G and a profile of the base field K (its 2-power
root-of-unity level m plus declared arithmetic facts), the rules below
decide whether the trace form of *every* Galois extension L/K with
group G is forced to be hyperbolic.  All rules are driven by the Sylow
2-subgroup S of G: when nothing forces hyperbolicity, the trace form is
Witt-equivalent to <|S|> tensor an r-fold Pfister form with r the
Frattini rank of S, and the predictor reports that template instead.

Rules, applied in a fixed order (the first hit is reported):

  root-of-unity-exponent   S non-abelian and zeta_e in K, where e is the
                           minimal exponent of a non-abelian subgroup
                           of S (i.e. 2^m >= e).
  sylow-tower-criterion    some subgroup T of S has T/T^(2^m)
                           non-abelian (the subgroup power condition
                           fails at level m).
  ci-field                 K is declared a C_i field with i <= r-1, so
                           the 2^r-dimensional Pfister template is
                           isotropic, hence hyperbolic.
  cd2-bound                the declared cohomological 2-dimension of K
                           is at most r-1.
  number-field-rank        K is declared a number field and r >= 3.
  simple-group-sylow       G is declared simple and S is non-abelian.

The companion operations turn specific situations into computations:
`extension_obstruction` tests the necessary Pfister-hyperbolicity
condition for an embedding problem over a computable field, and
`modular_trace_witness` produces the concrete power-algebra trace form
whose class realizes the non-hyperbolic template.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field

from .errors import ConsistencyError, InputError
from .fields import field_from_json
from .fields.base import Field
from .forms.kummer import KummerTraceReport, trace_form_kummer_tower
from .forms.qform import QForm, pfister, scaled_pfister
from .forms.witt import is_hyperbolic, is_isotropic, witt_decompose, witt_equivalent
from .groups import GroupTable
from .groups.structure import frattini_rank, is_two_group, sylow2
from .groups.subgroups import all_subgroups
from .iwasawa import classify_two_group

RULE_NAMES = (
    "root-of-unity-exponent",
    "sylow-tower-criterion",
    "ci-field",
    "cd2-bound",
    "number-field-rank",
    "simple-group-sylow",
    "none",
)

_RULE_DETAIL = {
    "root-of-unity-exponent": (
        "the field contains a primitive root of unity of order e, the "
        "minimal exponent of a non-abelian subgroup of the Sylow "
        "2-subgroup"
    ),
    "sylow-tower-criterion": (
        "some subgroup T of the Sylow 2-subgroup has T/T^(2^m) non-abelian"
    ),
    "ci-field": (
        "the declared C_i level is at most r-1, so every form of the "
        "2^r-dimensional Pfister template is isotropic, hence hyperbolic"
    ),
    "cd2-bound": (
        "the declared cohomological 2-dimension is at most r-1, which "
        "kills the r-fold Pfister template"
    ),
    "number-field-rank": (
        "over a number field containing i, every Pfister form of rank "
        ">= 3 is hyperbolic"
    ),
    "simple-group-sylow": (
        "the group is declared simple and its Sylow 2-subgroup is "
        "non-abelian"
    ),
    "none": (
        "no hyperbolicity rule fired; the trace form is Witt-equivalent "
        "to <|S|> tensor an r-fold Pfister form"
    ),
}


@dataclass
class FieldProfile:
    """What the predictor is allowed to know about the base field.

    Either an explicit computable field or a declared root-of-unity
    level m (max k with a primitive 2^k-th root of unity present) must
    be given; when both are present they must agree.  The remaining
    flags are caller-declared hypotheses, never computed.
    """

    field: Field | None = None
    level: int | None = None
    is_number_field: bool = False
    c_i_level: int | None = None
    cd2_bound: int | None = None

    def __post_init__(self):
        if self.field is not None:
            computed = self.field.two_power_root_level()
            if self.level is None:
                self.level = computed
            elif self.level != computed:
                raise InputError(
                    f"declared level {self.level} contradicts the field's "
                    f"computed root-of-unity level {computed}"
                )
        if self.level is None:
            raise InputError("profile needs a field or a declared level m")
        if self.field is not None and self.is_number_field:
            raise InputError(
                "number-field profiles are declaration-only; the computable "
                "field kinds here are not number fields beyond Q"
            )

    @property
    def m(self) -> int:
        return self.level

    @classmethod
    def from_json(cls, data: dict) -> "FieldProfile":
        fld = field_from_json(data["field"]) if data.get("field") else None
        return cls(
            field=fld,
            level=data.get("m"),
            is_number_field=bool(data.get("is_number_field", False)),
            c_i_level=data.get("c_i_level"),
            cd2_bound=data.get("cd2_bound"),
        )

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json() if self.field else None,
            "m": self.level,
            "is_number_field": self.is_number_field,
            "c_i_level": self.c_i_level,
            "cd2_bound": self.cd2_bound,
        }


@dataclass
class Prediction:
    """Outcome of the rule scan for one (group, profile) pair."""

    hyperbolic_forced: bool
    rule: str
    shape: dict | None
    sylow_order: int
    sylow_abelian: bool
    frattini_rank: int
    min_nonabelian_exponent: int | float
    m: int
    extras: dict = dataclass_field(default_factory=dict)

    def to_json(self) -> dict:
        e = self.min_nonabelian_exponent
        return {
            "hyperbolic_forced": self.hyperbolic_forced,
            "rule": self.rule,
            "rule_detail": _RULE_DETAIL[self.rule],
            "shape": self.shape,
            "sylow_order": self.sylow_order,
            "sylow_abelian": self.sylow_abelian,
            "frattini_rank": self.frattini_rank,
            "min_nonabelian_exponent": "inf" if e == math.inf else e,
            "m": self.m,
            **self.extras,
        }


def min_nonabelian_exponent(group: GroupTable) -> int | float:
    """Minimal exponent over the non-abelian subgroups of a 2-group.

    Returns math.inf when the group is abelian (no non-abelian
    subgroups at all).  The result is always a power of 2 at least 4.
    """
    if not is_two_group(group):
        raise InputError("minimal non-abelian exponent expects a 2-group")
    if group.is_abelian:
        return math.inf
    best = None
    for sub in all_subgroups(group):
        if sub.is_abelian():
            continue
        exp = sub.exponent()
        if best is None or exp < best:
            best = exp
    if best is None:  # non-abelian group always is its own witness
        raise ConsistencyError("no non-abelian subgroup found in a non-abelian group")
    return best


def _sylow_table(group: GroupTable, seed: int) -> GroupTable:
    if is_two_group(group):
        return group
    return sylow2(group, seed=seed).as_table()


def predict(
    group: GroupTable,
    profile: FieldProfile,
    declared_simple: bool = False,
    seed: int = 0,
) -> Prediction:
    """Scan the hyperbolicity rules for (group, profile), first hit wins.

    `declared_simple` is a caller-supplied fact about the group (its
    simplicity is never computed here).  The Sylow 2-subgroup search is
    randomized but seeded, and every rule only depends on the Sylow
    subgroup up to conjugacy, so results are reproducible.
    """
    m = profile.m
    if m < 2:
        raise InputError("the predictor requires root-of-unity level m >= 2")
    syl = _sylow_table(group, seed)
    r = frattini_rank(syl)
    e = min_nonabelian_exponent(syl)
    abelian = syl.is_abelian

    def done(rule: str, forced: bool, shape: dict | None = None) -> Prediction:
        return Prediction(
            hyperbolic_forced=forced,
            rule=rule,
            shape=shape,
            sylow_order=syl.n,
            sylow_abelian=abelian,
            frattini_rank=r,
            min_nonabelian_exponent=e,
            m=m,
        )

    if not abelian and 2**m >= e:
        return done("root-of-unity-exponent", True)
    if not abelian and not classify_two_group(syl, m).subgroup_condition:
        return done("sylow-tower-criterion", True)
    if profile.c_i_level is not None and profile.c_i_level <= r - 1:
        return done("ci-field", True)
    if profile.cd2_bound is not None and profile.cd2_bound <= r - 1:
        return done("cd2-bound", True)
    if profile.is_number_field and r >= 3:
        return done("number-field-rank", True)
    if declared_simple and not abelian:
        return done("simple-group-sylow", True)
    return done("none", False, shape={"scale": syl.n, "pfister_rank": r})


def extension_obstruction(
    field: Field, slots, group: GroupTable, convention: str = "plus"
) -> dict:
    """Necessary condition for realizing a 2-group extension with data.

    For a non-abelian 2-group G of Frattini rank r whose minimal
    non-abelian-subgroup exponent e satisfies zeta_e in F, an extension
    of F with group G and Frattini-quotient data [a_1..a_r] can only
    exist when the r-fold Pfister form on those slots is hyperbolic.
    Returns the verdict; a non-hyperbolic form proves unsolvability,
    a hyperbolic one only removes this particular obstruction.
    """
    if not is_two_group(group) or group.is_abelian:
        raise InputError("the obstruction test expects a non-abelian 2-group")
    r = frattini_rank(group)
    slots = [field.coerce(s) for s in slots]
    if len(slots) != r:
        raise InputError(
            f"slot count {len(slots)} must equal the Frattini rank {r}"
        )
    e = min_nonabelian_exponent(group)
    if 2 ** field.two_power_root_level() < e:
        raise InputError(
            f"the field must contain a primitive root of unity of order {e}"
        )
    form = pfister(field, slots, convention=convention)
    hyp = is_hyperbolic(form)
    iso = is_isotropic(form)
    if iso != hyp:  # Pfister forms: isotropic iff hyperbolic
        raise ConsistencyError(
            "Pfister form isotropy and hyperbolicity disagree"
        )
    return {
        "group": group.name,
        "rank": r,
        "exponent": e,
        "slots": [field.element_to_json(s.payload) for s in slots],
        "pfister_hyperbolic": hyp,
        "obstructed": not hyp,
        "verdict": (
            "no obstruction from the Pfister-hyperbolicity requirement"
            if hyp
            else "unsolvable: the required Pfister form is not hyperbolic"
        ),
    }


def modular_trace_witness(field: Field, n: int, a=None) -> dict:
    """Concrete trace form realizing the non-hyperbolic template.

    Builds the 2^n-dimensional power-algebra tower over `field` (whose
    2-power root-of-unity level must be exactly n-2) and compares its
    Witt class against <2^n> tensor the 2-fold Pfister form on
    (zeta_(2^(n-2)), a).  With no explicit `a`, the top Laurent variable
    is used; `a` must not become a square in the quadratic cyclotomic
    extension (squares and zeta times squares are rejected).
    """
    if a is None:
        if field.kind != "laurent":
            raise InputError(
                "an explicit generator a is required for non-Laurent fields"
            )
        a = field.x()
    report: KummerTraceReport = trace_form_kummer_tower(field, n, a)
    return {
        "n": n,
        "a": field.element_to_json(report.a.payload),
        "zeta": field.element_to_json(report.zeta.payload),
        "dim": report.gram.dim,
        "trace_class": report.witt.to_json(),
        "predicted_class": witt_decompose(report.predicted).to_json(),
        "matches": report.matches_predicted,
        "hyperbolic": report.witt.is_hyperbolic,
        "fixed_algebra": report.fixed_algebra,
    }


def recover_pfister_slots(
    field: Field, form: QForm, scale, rank: int
) -> tuple | None:
    """Search square-class representatives for a matching Pfister template.

    Returns the first tuple (a_1..a_rank) of square-class reps with
    `form` Witt-equivalent to <scale> tensor the Pfister form on the
    tuple, or None when no tuple matches.  Exponential in `rank`; meant
    for rank <= 3 over fields with few square classes.
    """
    reps = field.square_class_reps()
    convention = "plus" if field.two_power_root_level() >= 2 else "minus"
    scale = field.coerce(scale)

    def search(prefix: list) -> tuple | None:
        if len(prefix) == rank:
            candidate = scaled_pfister(field, scale, prefix, convention=convention)
            if witt_equivalent(form, candidate):
                return tuple(prefix)
            return None
        for rep in reps:
            hit = search(prefix + [rep])
            if hit is not None:
                return hit
        return None

    return search([])
