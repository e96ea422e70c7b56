"""Quadratic / trace form layer: Gram matrices, Witt machinery, builders."""

from .anisotropy import ValuationCriterionReport, valuation_pfister_criterion
from .eigensplit import EigensplitResult, order4_eigensplit
from .gram import GramMatrix, diagonalize
from .kummer import KummerAlgebra, KummerTraceReport, trace_form_kummer_tower
from .qform import (
    QForm,
    hyperbolic_form,
    hyperbolic_plane,
    pfister,
    scaled_pfister,
)
from .tracebuilders import (
    power_sums,
    trace_form_from_poly,
    trace_form_multiquadratic,
)
from .witt import (
    WittClass,
    anisotropic_dim,
    is_hyperbolic,
    is_isotropic,
    witt_decompose,
    witt_equivalent,
)

__all__ = [
    "ValuationCriterionReport",
    "valuation_pfister_criterion",
    "EigensplitResult",
    "order4_eigensplit",
    "GramMatrix",
    "diagonalize",
    "KummerAlgebra",
    "KummerTraceReport",
    "trace_form_kummer_tower",
    "QForm",
    "hyperbolic_form",
    "hyperbolic_plane",
    "pfister",
    "scaled_pfister",
    "power_sums",
    "trace_form_from_poly",
    "trace_form_multiquadratic",
    "WittClass",
    "anisotropic_dim",
    "is_hyperbolic",
    "is_isotropic",
    "witt_decompose",
    "witt_equivalent",
]
