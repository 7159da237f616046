"""Skew left braces on finite carriers and their Yang-Baxter maps.

The package builds finite groups as Cayley tables, ties pairs of them into
skew braces, derives the sigma/tau maps and the R-map, verifies the
Yang-Baxter equation by exhaustive computation, and enumerates all braces of
small order with an independent brute-force oracle.
"""

__version__ = "0.1.0"

from .braces import (
    BraceError,
    CarrierMismatchError,
    CheckResult,
    IdentityMismatchError,
    NotABraceError,
    SkewBrace,
    brace_identity_suite,
    check_compatibility,
    check_compatibility_equivalence,
    check_inverse_product,
    check_sigma_automorphism,
    check_sigma_homomorphism,
    check_sigma_twisted_product,
    check_tau_antihomomorphism,
    make_brace,
    opposite_brace,
    parse_brace_json,
    parse_brace_text,
    sigma,
    sigma_perm,
    tau,
    tau_perm,
    trivial_brace,
)
from .groups import (
    GroupTable,
    GroupTableError,
    IdentityViolationError,
    NotAssociativeError,
    NotLatinError,
    OutOfRangeError,
    PermMap,
    automorphisms,
    cyclic_group,
    klein_four_group,
    parse_group_json,
    parse_group_text,
    symmetric_group_s3,
    validate_table,
)
from .search import (
    BraceCatalog,
    OrderTooLargeError,
    all_group_tables,
    brace_isomorphic,
    canonical_brace,
    catalog_to_json,
    deduplicate_catalog,
    enumerate_braces,
    enumerate_braces_on_group,
    enumerate_groups,
    group_isomorphic,
    load_expected_counts,
    oracle_enumerate,
)
from .ybe import (
    YbeMap,
    build_r,
    check_bijective,
    check_nondegenerate,
    check_product_preservation,
    check_ybe,
    check_ybe_materialized,
    parse_rmap_json,
    rmap_to_csv,
    rmap_to_json,
    swap_map,
)

__all__ = [
    "__version__",
    "BraceCatalog",
    "BraceError",
    "CarrierMismatchError",
    "CheckResult",
    "GroupTable",
    "GroupTableError",
    "IdentityMismatchError",
    "IdentityViolationError",
    "NotABraceError",
    "NotAssociativeError",
    "NotLatinError",
    "OrderTooLargeError",
    "OutOfRangeError",
    "PermMap",
    "SkewBrace",
    "YbeMap",
    "all_group_tables",
    "automorphisms",
    "brace_identity_suite",
    "brace_isomorphic",
    "build_r",
    "canonical_brace",
    "catalog_to_json",
    "check_bijective",
    "check_compatibility",
    "check_compatibility_equivalence",
    "check_inverse_product",
    "check_nondegenerate",
    "check_product_preservation",
    "check_sigma_automorphism",
    "check_sigma_homomorphism",
    "check_sigma_twisted_product",
    "check_tau_antihomomorphism",
    "check_ybe",
    "check_ybe_materialized",
    "cyclic_group",
    "deduplicate_catalog",
    "enumerate_braces",
    "enumerate_braces_on_group",
    "enumerate_groups",
    "group_isomorphic",
    "klein_four_group",
    "load_expected_counts",
    "make_brace",
    "opposite_brace",
    "oracle_enumerate",
    "parse_brace_json",
    "parse_brace_text",
    "parse_group_json",
    "parse_group_text",
    "parse_rmap_json",
    "rmap_to_csv",
    "rmap_to_json",
    "sigma",
    "sigma_perm",
    "swap_map",
    "symmetric_group_s3",
    "tau",
    "tau_perm",
    "trivial_brace",
    "validate_table",
]
