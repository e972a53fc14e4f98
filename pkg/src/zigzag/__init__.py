"""Zigzag combinatorics: number triangles, object families, bijections.

The package computes the Entringer and Arnold number triangles, lists
the permutation and tree families those numbers count (plain and
signed), implements the bijections connecting the families along with
their statistic bookkeeping, and ships an exhaustive verification
engine plus a sweep of an open counting conjecture.
"""

from .bijections import (
    AlgoCStep,
    AlgoCTrace,
    chuang_phi,
    omega,
    omega_inv,
    omega_signed,
    phi,
    phi_inv,
    phi_signed,
    psi,
    psi_b,
    psi_c,
    psi_inv,
    psi_signed,
)
from .cdindex import reduced_variation_andre, reduced_variation_simsun, variation
from .core import (
    InvalidPermutationError,
    InvalidTreeError,
    Tree,
    TreeParseError,
    ends_with_ascent,
    has_double_descent,
    inorder,
    maximal_path_from,
    minimal_path,
    node,
    order_relabel,
    perm_from_sequence,
    perm_from_text,
    perm_to_text,
    pleaf,
    rtl_min_positions,
    signed_perm_from_sequence,
    subword_smallest,
    tree_from_json,
    tree_from_literal,
    tree_labels,
    tree_spans_range,
    tree_to_json,
    tree_to_literal,
    validate_tree,
)
from .families import (
    FamilyTag,
    GuardExceededError,
    count_family,
    count_hetyei_fast,
    enumerate_family,
    is_alternating,
    is_andre,
    is_andre_valley,
    is_hetyei_andre,
    is_signed_andre_b,
    is_signed_simsun,
    is_simsun,
    is_snake,
    iter_family,
)
from .triangles import (
    TriangleTable,
    arnold_table,
    entringer_table,
    euler_number,
    springer_number,
)
from .verify import CheckReport, check_conjecture, check_ids, run_checks

__version__ = "0.1.0"

__all__ = [
    "AlgoCStep",
    "AlgoCTrace",
    "CheckReport",
    "FamilyTag",
    "GuardExceededError",
    "InvalidPermutationError",
    "InvalidTreeError",
    "Tree",
    "TreeParseError",
    "TriangleTable",
    "arnold_table",
    "check_conjecture",
    "check_ids",
    "chuang_phi",
    "count_family",
    "count_hetyei_fast",
    "ends_with_ascent",
    "entringer_table",
    "enumerate_family",
    "euler_number",
    "has_double_descent",
    "inorder",
    "is_alternating",
    "is_andre",
    "is_andre_valley",
    "is_hetyei_andre",
    "is_signed_andre_b",
    "is_signed_simsun",
    "is_simsun",
    "is_snake",
    "iter_family",
    "maximal_path_from",
    "minimal_path",
    "node",
    "omega",
    "omega_inv",
    "omega_signed",
    "order_relabel",
    "perm_from_sequence",
    "perm_from_text",
    "perm_to_text",
    "phi",
    "phi_inv",
    "phi_signed",
    "pleaf",
    "psi",
    "psi_b",
    "psi_c",
    "psi_inv",
    "psi_signed",
    "reduced_variation_andre",
    "reduced_variation_simsun",
    "rtl_min_positions",
    "run_checks",
    "signed_perm_from_sequence",
    "springer_number",
    "subword_smallest",
    "tree_from_json",
    "tree_from_literal",
    "tree_labels",
    "tree_spans_range",
    "tree_to_json",
    "tree_to_literal",
    "validate_tree",
    "variation",
]
