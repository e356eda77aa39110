"""Spiral shifting operators on N^d and the submodule census they explain."""

from .cylinder import (
    Config,
    InternalInvariantError,
    MultiIndex,
    Slot,
    act,
    compositions,
    configs_with_size,
    decompose,
    is_tight,
    shift_all,
    shift_from,
    shift_slot,
    slot_from_index,
    slot_index,
    sorted_slots,
)
from .partitions import Partition, box_partitions, gaussian_count, partition_to_config
from .series import (
    BiPoly,
    GeneratorSet,
    NotFreeError,
    free_orbit_formula,
    geometric_inverse,
    is_free_basis,
    orbit_sum,
    product_formula,
    recurrence_formula,
    semigroup_elements,
    sum_over_configs,
)
from .stats import (
    ContentExponents,
    content,
    distance,
    multiindex_content,
    size,
    weight,
    weight_by_seats,
)
from .submodules import (
    DEFAULT_CAP,
    FeasibilityError,
    ModuleSpace,
    PrimeField,
    SubmoduleBasis,
    count_by_colength,
    echelonize,
    enumerate_stratum,
    enumerate_submodules,
    hermite_enumerate,
    hermite_strata,
    leading_module,
    pivot_profile,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "Config",
    "ContentExponents",
    "DEFAULT_CAP",
    "FeasibilityError",
    "GeneratorSet",
    "InternalInvariantError",
    "ModuleSpace",
    "MultiIndex",
    "NotFreeError",
    "Partition",
    "PrimeField",
    "Slot",
    "SubmoduleBasis",
    "act",
    "box_partitions",
    "compositions",
    "configs_with_size",
    "content",
    "count_by_colength",
    "decompose",
    "distance",
    "echelonize",
    "enumerate_stratum",
    "enumerate_submodules",
    "free_orbit_formula",
    "gaussian_count",
    "geometric_inverse",
    "hermite_enumerate",
    "hermite_strata",
    "is_free_basis",
    "is_tight",
    "leading_module",
    "multiindex_content",
    "orbit_sum",
    "partition_to_config",
    "pivot_profile",
    "product_formula",
    "recurrence_formula",
    "semigroup_elements",
    "shift_all",
    "shift_from",
    "shift_slot",
    "size",
    "slot_from_index",
    "slot_index",
    "sorted_slots",
    "sum_over_configs",
    "weight",
    "weight_by_seats",
]
