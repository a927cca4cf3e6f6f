"""Finite quandles as operation matrices.

Thin wrapper over the C++ core: validation, standard families, orbit
decomposition, rack actions, gluing, isomorphism and small-order census.
"""

from quandles._quandles import (  # noqa: F401
    BoundExceeded,
    MatrixParseError,
    Table,
    alexander,
    all_subquandles,
    are_isomorphic,
    automorphisms,
    axiom_violation,
    canonical_form,
    census,
    column_permutation,
    conjugation,
    dihedral,
    dual,
    enumerate_nonconnected,
    enumerate_rack_actions,
    glue2,
    glue_n,
    is_automorphism,
    is_closed_subset,
    is_complemented,
    is_connected,
    is_quandle,
    minimal_complemented,
    orbit,
    orbit_decomposition,
    parse_matrix_text,
    product,
    relabel,
    restrict_to,
    subquandle_depth,
    to_matrix_text,
    trivial,
    validate,
    verify_rack_action,
)

__all__ = [
    "BoundExceeded",
    "MatrixParseError",
    "Table",
    "alexander",
    "all_subquandles",
    "are_isomorphic",
    "automorphisms",
    "axiom_violation",
    "canonical_form",
    "census",
    "column_permutation",
    "conjugation",
    "dihedral",
    "dual",
    "enumerate_nonconnected",
    "enumerate_rack_actions",
    "glue2",
    "glue_n",
    "is_automorphism",
    "is_closed_subset",
    "is_complemented",
    "is_connected",
    "is_quandle",
    "minimal_complemented",
    "orbit",
    "orbit_decomposition",
    "parse_matrix_text",
    "product",
    "relabel",
    "restrict_to",
    "subquandle_depth",
    "to_matrix_text",
    "trivial",
    "validate",
    "verify_rack_action",
]
