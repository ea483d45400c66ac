"""Exact enumeration, counting, and bound verification for word neighborhoods.

The distance-d neighborhood of a word W is the set of words within
Levenshtein distance d of W. This package enumerates and counts that set
and its condensed (prefix-minimal) and super-condensed (subword-minimal)
variants, evaluates closed-form counts for unary words and two upper
bounds in exact arithmetic, and ships verification sweeps that check
every claim against brute-force oracles.
"""
from .core import (
    DELETION,
    GAP,
    INSERTION,
    KIND_CONDENSED,
    KIND_FULL,
    KIND_SUPER_CONDENSED,
    MATCH,
    MISMATCH,
    NEIGHBORHOOD_KINDS,
    Alignment,
    Alphabet,
    BudgetError,
    Column,
    NeighborhoodResult,
    RangeError,
    ValidationError,
    Word,
    alphabet_of_size,
    canonical_sorted,
    make_alphabet,
    make_word,
)
from .counting import (
    BoundReport,
    LemmaCheck,
    LemmaCheckReport,
    alignment_profile_bound,
    binom_ext,
    bound_report,
    bound_table_rows,
    check_bound_lemmas,
    closed_form_bound_exact,
    unary_condensed_count,
    unary_super_condensed_count,
)
from .distance import (
    alignment_order_key,
    enumerate_optimal_alignments,
    leftmost_optimal_alignment,
    levenshtein,
    mm_index_sequence,
    optimal_alignment,
)
from .extremal import ExtremalReport, scan_extremal
from .neighborhood import (
    brute_force_enumerate,
    count,
    enumerate_condensed,
    enumerate_full,
    enumerate_super_condensed,
    in_neighborhood,
)
from .verify import VerificationSummary, VerifyConfig, run_verification

__version__ = "0.1.0"

__all__ = [
    "DELETION",
    "GAP",
    "INSERTION",
    "KIND_CONDENSED",
    "KIND_FULL",
    "KIND_SUPER_CONDENSED",
    "MATCH",
    "MISMATCH",
    "NEIGHBORHOOD_KINDS",
    "Alignment",
    "Alphabet",
    "BoundReport",
    "BudgetError",
    "Column",
    "ExtremalReport",
    "LemmaCheck",
    "LemmaCheckReport",
    "NeighborhoodResult",
    "RangeError",
    "ValidationError",
    "VerificationSummary",
    "VerifyConfig",
    "Word",
    "alignment_order_key",
    "alignment_profile_bound",
    "alphabet_of_size",
    "binom_ext",
    "bound_report",
    "bound_table_rows",
    "brute_force_enumerate",
    "canonical_sorted",
    "check_bound_lemmas",
    "closed_form_bound_exact",
    "count",
    "enumerate_condensed",
    "enumerate_full",
    "enumerate_optimal_alignments",
    "enumerate_super_condensed",
    "in_neighborhood",
    "leftmost_optimal_alignment",
    "levenshtein",
    "make_alphabet",
    "make_word",
    "mm_index_sequence",
    "optimal_alignment",
    "run_verification",
    "scan_extremal",
    "unary_condensed_count",
    "unary_super_condensed_count",
    "__version__",
]
