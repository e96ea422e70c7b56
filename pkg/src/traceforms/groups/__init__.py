"""Finite-group layer: tables, presentations, subgroups, structure maps."""

from ._core import BACKEND, kernels
from .presentations import (
    build_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    iwasawa_group,
    modular_group,
    permutation_group,
    quaternion_group,
    semidihedral_group,
)
from .structure import (
    center,
    centralizer,
    commutator_subgroup,
    frattini_rank,
    frattini_subgroup,
    greedy_generating_set,
    is_two_group,
    normalizer,
    power_subgroup,
    quotient,
    sylow2,
)
from .subgroups import (
    ModularityReport,
    all_subgroups,
    interval_map_test,
    is_lattice_modular,
)
from .table import GroupTable, Subgroup

__all__ = [
    "BACKEND",
    "kernels",
    "GroupTable",
    "Subgroup",
    "build_group",
    "cyclic_group",
    "dihedral_group",
    "direct_product",
    "iwasawa_group",
    "modular_group",
    "permutation_group",
    "quaternion_group",
    "semidihedral_group",
    "center",
    "centralizer",
    "commutator_subgroup",
    "frattini_rank",
    "frattini_subgroup",
    "greedy_generating_set",
    "is_two_group",
    "normalizer",
    "power_subgroup",
    "quotient",
    "sylow2",
    "ModularityReport",
    "all_subgroups",
    "interval_map_test",
    "is_lattice_modular",
]
