"""Glaisher-type bijections for partitions that are s-regular and t-distinct."""

from .bijection import BijectionConfig, ModulusPair, Variant, analyze, forward, inverse
from .glaisher import double_glaisher, from_matrices, phi, to_matrices, unwrap_shift, wrap_shift
from .orbit import OrbitReport, census, classify_orbit, step_T
from .partition import (
    EMPTY,
    DomainError,
    Partition,
    enumerate_partitions,
    format_partition,
    is_distinct,
    is_regular,
    merge,
    parse,
)

__all__ = [
    "BijectionConfig", "DomainError", "EMPTY", "ModulusPair", "OrbitReport", "Partition",
    "Variant", "analyze", "census", "classify_orbit", "double_glaisher", "enumerate_partitions",
    "format_partition", "forward", "from_matrices", "inverse", "is_distinct", "is_regular",
    "merge", "parse", "phi", "step_T", "to_matrices", "unwrap_shift", "wrap_shift",
]
