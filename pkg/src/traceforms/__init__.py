"""traceforms: exact trace-form and Witt-class computation over explicit fields,
with the 2-group structure theory that predicts when trace forms must be
hyperbolic.

Set the environment variable TRACEFORMS_PURE=1 before import to force the
pure-Python group kernels instead of the compiled extension.
"""

from .corpus import CorpusEntry, corpus, corpus_entry
from .errors import (
    CapExceeded,
    ConsistencyError,
    FieldMismatch,
    InputError,
    TraceformsError,
)
from .fields import (
    Field,
    FieldElement,
    GaloisField,
    LaurentField,
    Rationals,
    field_from_json,
    find_prime_with_level,
    laurent_tower,
    prime_power_for_level,
)
from .forms import (
    GramMatrix,
    KummerAlgebra,
    QForm,
    anisotropic_dim,
    diagonalize,
    is_hyperbolic,
    is_isotropic,
    order4_eigensplit,
    pfister,
    scaled_pfister,
    trace_form_from_poly,
    trace_form_kummer_tower,
    trace_form_multiquadratic,
    valuation_pfister_criterion,
    witt_decompose,
    witt_equivalent,
)
from .forms.kummer import frattini_descent_check
from .groups import BACKEND, GroupTable, Subgroup, build_group
from .iwasawa import (
    classify_sylow,
    classify_two_group,
    check_structure_power_relations,
    is_powerful,
    iwasawa_structures,
    max_iwasawa_level,
    strength,
)
from .oracle import (
    FieldProfile,
    Prediction,
    extension_obstruction,
    min_nonabelian_exponent,
    modular_trace_witness,
    predict,
    recover_pfister_slots,
)
from .suites import run_all, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapExceeded",
    "ConsistencyError",
    "CorpusEntry",
    "Field",
    "FieldElement",
    "FieldMismatch",
    "FieldProfile",
    "GaloisField",
    "GramMatrix",
    "GroupTable",
    "InputError",
    "KummerAlgebra",
    "LaurentField",
    "Prediction",
    "QForm",
    "Rationals",
    "Subgroup",
    "TraceformsError",
    "anisotropic_dim",
    "build_group",
    "check_structure_power_relations",
    "classify_sylow",
    "classify_two_group",
    "corpus",
    "corpus_entry",
    "diagonalize",
    "extension_obstruction",
    "field_from_json",
    "find_prime_with_level",
    "frattini_descent_check",
    "is_hyperbolic",
    "is_isotropic",
    "is_powerful",
    "iwasawa_structures",
    "laurent_tower",
    "max_iwasawa_level",
    "min_nonabelian_exponent",
    "modular_trace_witness",
    "order4_eigensplit",
    "pfister",
    "predict",
    "prime_power_for_level",
    "recover_pfister_slots",
    "run_all",
    "run_suite",
    "scaled_pfister",
    "strength",
    "suite_names",
    "trace_form_from_poly",
    "trace_form_kummer_tower",
    "trace_form_multiquadratic",
    "valuation_pfister_criterion",
    "witt_decompose",
    "witt_equivalent",
]
