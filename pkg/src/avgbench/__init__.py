"""Averaging operators on finite groups, racks, skew braces and Leibniz-type algebras."""

from .magma import (
    FiniteMagma,
    GuardExceeded,
    RackReport,
    SetMap,
    StructureError,
    Verdict,
    enumerate_racks,
    flip_rack,
    is_complete_rack,
    is_rack_homomorphism,
    is_subrack,
    standard_rack,
    trivial_rack,
    validate_rack,
)
from .groups import (
    FiniteGroup,
    GroupAction,
    automorphism_group,
    cyclic_group,
    permutation_closure,
    semidirect_product,
    small_groups,
    symmetric_group,
    validate_action,
    validate_group,
)
from .averaging import (
    descendent_rack,
    embed_group_rack,
    enumerate_averaging,
    graph_check,
    is_averaging,
    power_hierarchy,
    product_rack,
)

__all__ = [
    "FiniteMagma",
    "GuardExceeded",
    "RackReport",
    "SetMap",
    "StructureError",
    "Verdict",
    "enumerate_racks",
    "flip_rack",
    "is_complete_rack",
    "is_rack_homomorphism",
    "is_subrack",
    "standard_rack",
    "trivial_rack",
    "validate_rack",
    "FiniteGroup",
    "GroupAction",
    "automorphism_group",
    "cyclic_group",
    "permutation_closure",
    "semidirect_product",
    "small_groups",
    "symmetric_group",
    "validate_action",
    "validate_group",
    "descendent_rack",
    "embed_group_rack",
    "enumerate_averaging",
    "graph_check",
    "is_averaging",
    "power_hierarchy",
    "product_rack",
]
