"""Brute-force oracle module for finite instances."""

from src.oracle.isomorphism import (
    DEFAULT_ISO_MAX_ORDER,
    brute_iso,
    conjugacy_representatives,
    fingerprints,
    is_homomorphism,
)
from src.oracle.structure import (
    DEFAULT_DIRECT_FACTOR_MAX_ORDER,
    OrderProfile,
    center_and_quotient,
    center_of,
    central_generators,
    derived_subgroup,
    direct_factor_search,
    element_orders,
    exponent_of,
    generating_set,
    normal_closure,
    order_profile,
    power_map,
    subgroup_closure,
)
from src.oracle.table import (
    DEFAULT_MAX_ORDER,
    MulTable,
    TableBuilder,
    build_table,
    export_table,
    import_table,
)

__all__ = [
    "DEFAULT_DIRECT_FACTOR_MAX_ORDER",
    "DEFAULT_ISO_MAX_ORDER",
    "DEFAULT_MAX_ORDER",
    "MulTable",
    "OrderProfile",
    "TableBuilder",
    "brute_iso",
    "build_table",
    "center_and_quotient",
    "center_of",
    "central_generators",
    "conjugacy_representatives",
    "derived_subgroup",
    "direct_factor_search",
    "element_orders",
    "exponent_of",
    "export_table",
    "fingerprints",
    "generating_set",
    "import_table",
    "is_homomorphism",
    "normal_closure",
    "order_profile",
    "power_map",
    "subgroup_closure",
]
