"""Trace form of the degree-2^n Kummer tower L = K(w, u) with
w^2 = z (a primitive 2^(n-2)-th root of unity in K) and u^(2^(n-1)) = a.

The K-algebra L has monomial basis w^j u^k (j < 2, k < 2^(n-1)) and
carries two K-algebra automorphisms,

    sigma: u -> w*u, w -> w        tau: w -> -w, u -> u,

which satisfy sigma^(2^(n-1)) = tau^2 = id and
tau sigma tau^-1 = sigma^(1 + 2^(n-2)); the generated group has order 2^n,
and both facts are verified on construction.  Traces are computed as the
full automorphism-group sum, with the regular-representation trace kept
as an independent cross-check.

When `a` is not a square in K(zeta_(2^(n-1))), L is a field and the
automorphism group is its Galois group.  The public builder
`trace_form_kummer_tower` requires this (and that the 2-power
root-of-unity level of K is exactly n-2); the raw `KummerAlgebra` stays
permissive so split (etale) towers remain available as fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConsistencyError, InputError
from ..fields.base import Field, FieldElement
from ..fields.galois import GaloisField, embedding
from ..fields.laurent import LaurentField
from ..groups import GroupTable, modular_group
from .gram import GramMatrix, diagonalize
from .qform import QForm, scaled_pfister
from .witt import WittClass, witt_decompose, witt_equivalent


def _square_in_cyclotomic_double(field: Field, elem: FieldElement, level: int) -> bool:
    """Is elem a square in field(zeta_(2^level))?  GF-based towers only."""
    if field.two_power_root_level() >= level:
        return elem.is_square()
    if isinstance(field, LaurentField):
        if field.valuation(elem) % 2:
            return False
        return _square_in_cyclotomic_double(field.sub, field.residue(elem), level)
    if isinstance(field, GaloisField):
        double = GaloisField(field.p, 2 * field.k)
        if double.two_power_root_level() < level:
            raise ConsistencyError("doubling a finite field doubles its 2-level")
        image = double.element(embedding(field, double)(elem.payload))
        return image.is_square()
    raise InputError(
        "the cyclotomic square test is implemented for GF-based towers only"
    )


class KummerAlgebra:
    """The 2^n-dimensional algebra over K with basis w^j u^k."""

    def __init__(self, field: Field, n: int, a):
        if n < 4:
            raise InputError("the tower needs n >= 4")
        if field.char == 2:
            raise InputError("characteristic 2 is out of scope")
        self.field = field
        self.n = n
        self.a = field.coerce(a)
        if self.a.is_zero():
            raise InputError("a must be nonzero")
        self.zeta = field.zeta(n - 2)  # needs 2-level >= n-2
        self.dim = 2**n
        self.ucount = 2 ** (n - 1)  # exponent range of u
        self._zeta_pow = [field.one()]
        for _ in range(2 ** (n - 2) - 1):
            self._zeta_pow.append(self._zeta_pow[-1] * self.zeta)
        self._aut = None  # cached (GroupTable, maps)

    # basis index: idx = j * ucount + k  for the monomial w^j u^k
    def index(self, j: int, k: int) -> int:
        return (j % 2) * self.ucount + (k % self.ucount)

    def mono_mul(self, j1, k1, j2, k2) -> tuple[FieldElement, int, int]:
        """(coefficient, j, k) of the product of two basis monomials."""
        j = j1 + j2
        k = k1 + k2
        coeff = self.field.one()
        if j >= 2:
            j -= 2
            coeff = coeff * self.zeta
        if k >= self.ucount:
            k -= self.ucount
            coeff = coeff * self.a
        return coeff, j, k

    def sigma_index(self, j: int, k: int) -> tuple[FieldElement, int, int]:
        """Image of w^j u^k under sigma: u -> w*u (so picks up w^k)."""
        jj = j + k
        coeff = self._zeta_pow[(jj // 2) % len(self._zeta_pow)]
        return coeff, jj % 2, k

    def tau_index(self, j: int, k: int) -> tuple[FieldElement, int, int]:
        sign = -self.field.one() if j else self.field.one()
        return sign, j, k

    def automorphism_table(self) -> tuple[GroupTable, list[list[tuple]]]:
        """Group generated by sigma and tau as monomial maps, with table.

        Each automorphism is stored as a list over basis indices of
        (coefficient, target_index).  Returns (GroupTable, maps) with the
        table verified isomorphic-by-presentation to the expected modular
        2-group of order 2^n.
        """
        if self._aut is not None:
            return self._aut
        field = self.field
        dim = self.dim

        def apply_map(phi, psi):  # phi after psi
            out = []
            for idx in range(dim):
                c1, t1 = psi[idx]
                c2, t2 = phi[t1]
                out.append((c1 * c2, t2))
            return out

        def map_of(fn):
            out = []
            for j in range(2):
                for k in range(self.ucount):
                    coeff, jj, kk = fn(j, k)
                    out.append((coeff, self.index(jj, kk)))
            return out

        identity = [(field.one(), i) for i in range(dim)]
        sigma = map_of(self.sigma_index)
        tau = map_of(self.tau_index)

        seen = {}
        maps = []

        def key(phi):
            return tuple((c.payload, t) for c, t in phi)

        frontier = [identity]
        seen[key(identity)] = 0
        maps.append(identity)
        while frontier:
            cur = frontier.pop()
            for gen in (sigma, tau):
                new = apply_map(gen, cur)
                k2 = key(new)
                if k2 not in seen:
                    seen[k2] = len(maps)
                    maps.append(new)
                    frontier.append(new)
        order = len(maps)
        if order != 2**self.n:
            raise ConsistencyError(
                f"automorphism group has order {order}, expected {2**self.n}"
            )
        mult = [
            [seen[key(apply_map(maps[i], maps[j]))] for j in range(order)]
            for i in range(order)
        ]
        table = GroupTable(mult, name=f"aut<kummer n={self.n}>")

        # verify the defining relations of the expected modular 2-group
        si, ti = seen[key(sigma)], seen[key(tau)]
        half = 2 ** (self.n - 1)
        if table.power(si, half) != table.identity:
            raise ConsistencyError("sigma must have order dividing 2^(n-1)")
        if table.power(si, half // 2) == table.identity:
            raise ConsistencyError("sigma must have order exactly 2^(n-1)")
        if table.mul(ti, ti) != table.identity:
            raise ConsistencyError("tau must be an involution")
        lhs = table.mul(table.mul(ti, si), ti)
        rhs = table.power(si, 1 + 2 ** (self.n - 2))
        if lhs != rhs:
            raise ConsistencyError("tau sigma tau != sigma^(1+2^(n-2))")
        expected = modular_group(self.n)
        if sorted(table.element_order(x) for x in range(order)) != sorted(
            expected.element_order(x) for x in range(expected.n)
        ):
            raise ConsistencyError("automorphism group order spectrum is wrong")
        self._aut = (table, maps)
        return self._aut

    def galois_trace_vector(self, maps) -> list[list[FieldElement]]:
        """For each basis monomial e, the full group sum as a basis vector."""
        field = self.field
        dim = self.dim
        sums = [[field.zero()] * dim for _ in range(dim)]
        for phi in maps:
            for idx in range(dim):
                coeff, target = phi[idx]
                sums[idx][target] = sums[idx][target] + coeff
        return sums

    def trace_of_monomial_sum(self, sums, idx: int) -> FieldElement:
        """Trace of basis monomial idx, checking the sum lands in K * 1."""
        vec = sums[idx]
        for t in range(1, self.dim):
            if not vec[t].is_zero():
                raise ConsistencyError(
                    "group-sum of a monomial left the base field"
                )
        return vec[0]

    def regular_trace_of_monomial(self, idx: int) -> FieldElement:
        """Trace of multiplication-by-monomial in the regular representation."""
        j1, k1 = divmod(idx, self.ucount)
        total = self.field.zero()
        for j2 in range(2):
            for k2 in range(self.ucount):
                coeff, j, k = self.mono_mul(j1, k1, j2, k2)
                if j == j2 and k == k2:
                    total = total + coeff
        return total

    def fixed_subalgebra_form(self) -> QForm:
        """Trace form of the subalgebra fixed by <sigma^2>.

        That subalgebra has basis {1, w, u^(2^(n-2)), w u^(2^(n-2))} --
        i.e. K adjoined square roots of zeta and of a -- and its own trace
        is the full-algebra trace divided by |<sigma^2>| = 2^(n-2).
        """
        _, maps = self.automorphism_table()
        sums = self.galois_trace_vector(maps)
        n, field = self.n, self.field
        fixed_idx = [
            self.index(0, 0),
            self.index(1, 0),
            self.index(0, 2 ** (n - 2)),
            self.index(1, 2 ** (n - 2)),
        ]
        sub_order = field.from_int(2 ** (n - 2))
        entries = []
        for i1 in fixed_idx:
            j1, k1 = divmod(i1, self.ucount)
            row = []
            for i2 in fixed_idx:
                j2, k2 = divmod(i2, self.ucount)
                coeff, j, k = self.mono_mul(j1, k1, j2, k2)
                full = coeff * self.trace_of_monomial_sum(sums, self.index(j, k))
                row.append(full / sub_order)
            entries.append(row)
        diag, _ = diagonalize(GramMatrix(field, entries))
        return QForm(field, diag)

    def gram(self) -> GramMatrix:
        """Trace-form Gram matrix on the monomial basis (both trace routes)."""
        table, maps = self.automorphism_table()
        sums = self.galois_trace_vector(maps)
        dim = self.dim
        entries = [[None] * dim for _ in range(dim)]
        field = self.field
        for i1 in range(dim):
            j1, k1 = divmod(i1, self.ucount)
            for i2 in range(i1, dim):
                j2, k2 = divmod(i2, self.ucount)
                coeff, j, k = self.mono_mul(j1, k1, j2, k2)
                idx = self.index(j, k)
                tr = coeff * self.trace_of_monomial_sum(sums, idx)
                reg = coeff * self.regular_trace_of_monomial(idx)
                if tr != reg:
                    raise ConsistencyError(
                        "Galois-sum trace and regular-representation trace differ"
                    )
                entries[i1][i2] = tr
                entries[i2][i1] = tr
        return GramMatrix(field, entries)


@dataclass
class KummerTraceReport:
    field: Field
    n: int
    a: FieldElement
    zeta: FieldElement
    gram: GramMatrix
    diagonal: QForm
    witt: WittClass
    predicted: QForm
    matches_predicted: bool
    is_field_extension: bool
    fixed_algebra: dict

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "a": self.field.element_to_json(self.a.payload),
            "dim": self.gram.dim,
            "witt": self.witt.to_json(),
            "matches_predicted": self.matches_predicted,
            "is_field_extension": self.is_field_extension,
            "fixed_algebra": self.fixed_algebra,
        }


def trace_form_kummer_tower(field: Field, n: int, a) -> KummerTraceReport:
    """Build the tower, both trace routes, and compare with the predicted
    Witt class <2^n> * <1, z> * <1, a> (the plus-convention 2-fold Pfister
    scaled by the extension degree).

    Preconditions: the base field is GF(q) or a Laurent tower over one,
    its 2-power root-of-unity level is exactly n-2, and `a` is not a
    square in the quadratic cyclotomic extension (so the tower is a field
    and the automorphism group acts faithfully as its Galois group).
    """
    if field.kind not in ("GF", "laurent"):
        raise InputError(
            "the tower builder needs GF(q) or a Laurent tower over GF(q)"
        )
    if n < 4:
        raise InputError("the tower needs n >= 4 (degree at least 16)")
    if field.two_power_root_level() != n - 2:
        raise InputError(
            "base-field 2-power root-of-unity level must be exactly n-2 "
            f"(got {field.two_power_root_level()}, need {n - 2})"
        )
    alg = KummerAlgebra(field, n, a)
    if _square_in_cyclotomic_double(field, alg.a, n - 1):
        raise InputError(
            "a is a square in the quadratic cyclotomic extension, "
            "so the power algebra splits instead of being a field"
        )
    gram = alg.gram()
    diag_entries, _ = diagonalize(gram)
    diagonal = QForm(field, diag_entries)
    wd = witt_decompose(diagonal)
    predicted = scaled_pfister(
        field, field.from_int(2**n), [alg.zeta, alg.a], convention="plus"
    )
    matches = witt_equivalent(diagonal, predicted)
    if not matches:
        raise ConsistencyError(
            "tower trace form does not match the predicted scaled Pfister class"
        )

    # Frattini-fixed descent: the subalgebra fixed by <sigma^2> must carry
    # the multiquadratic trace form of K[sqrt(z), sqrt(a)].
    from .tracebuilders import trace_form_multiquadratic

    fixed_form = alg.fixed_subalgebra_form()
    expected_fixed = trace_form_multiquadratic(field, [alg.zeta, alg.a])
    fixed_ok = witt_equivalent(fixed_form, expected_fixed)
    if not fixed_ok:
        raise ConsistencyError(
            "fixed-subalgebra trace form is not the multiquadratic form"
        )
    return KummerTraceReport(
        field=field,
        n=n,
        a=alg.a,
        zeta=alg.zeta,
        gram=gram,
        diagonal=diagonal,
        witt=wd,
        predicted=predicted,
        matches_predicted=matches,
        is_field_extension=True,
        fixed_algebra={
            "dim": 4,
            "matches_multiquadratic": fixed_ok,
            "slots": [
                field.element_to_json(alg.zeta.payload),
                field.element_to_json(alg.a.payload),
            ],
        },
    )


def frattini_descent_check(field: Field, spec: dict) -> dict:
    """Compare a trace form against its Frattini-fixed subalgebra form.

    For a Galois algebra L/K with 2-group G, the full trace form is
    Witt-equivalent to <|Fr(G)|> tensor the trace form of the subalgebra
    fixed by the Frattini subgroup Fr(G).  Supported extension specs:

      {"kind": "multiquadratic", "generators": [...]}   G = (Z/2)^r, Fr = 1
      {"kind": "kummer-tower", "n": int, "a": elem}     G = modular 2-group,
                                                        Fr = <sigma^2>

    The Kummer branch deliberately uses the raw algebra so split (etale)
    towers can be checked as fixtures.  Returns a dict with both Witt
    classes and the comparison verdict.
    """
    from .tracebuilders import trace_form_multiquadratic

    kind = spec.get("kind")
    if kind == "multiquadratic":
        gens = [field.coerce(g) for g in spec["generators"]]
        full = trace_form_multiquadratic(field, gens)
        frattini_order = 1
        descended = full  # Fr(G) trivial: the fixed subalgebra is L itself
    elif kind == "kummer-tower":
        alg = KummerAlgebra(field, int(spec["n"]), spec["a"])
        diag, _ = diagonalize(alg.gram())
        full = QForm(field, diag)
        frattini_order = 2 ** (alg.n - 2)
        descended = alg.fixed_subalgebra_form()
    else:
        raise InputError(f"unsupported extension spec kind: {kind!r}")
    scaled = descended.scale(field.from_int(frattini_order))
    equal = witt_equivalent(full, scaled)
    return {
        "kind": kind,
        "frattini_order": frattini_order,
        "full_class": witt_decompose(full).to_json(),
        "descended_class": witt_decompose(scaled).to_json(),
        "equal": equal,
    }
