"""
invariants/__init__.py

Invariants of link diagrams: biquandle colorings, parities, free-graph
pictures and the bracket state sums built on them.
"""

from .biquandle import (
    AxiomReport,
    Biquandle,
    BiquandleError,
    builtin_biquandles,
    check_axioms,
    enumerate_colorings,
    enumerate_colorings_bruteforce,
    get_biquandle,
    is_coloring,
)
from .brackets import (
    EquivalenceReport,
    biquandle_bracket_multiset,
    biquandle_bracket_polynomial,
    biquandle_bracket_value,
    coefficient_index,
    constant_nor,
    parity_bracket,
    pb_bracket_multiset,
    pb_bracket_value,
    run_equivalence_test,
    z2_parity_coefficients,
)
from .freegraph import CIRCLE, FreeGraph, GraphPolynomial, Smoothing, canonical_code, normalize, r2_reduce, smooth_state
from .kauffman import kauffman_coefficients, kauffman_oracle
from .multiset import InvariantMultiset, compare_multisets, parse_multiset_lines
from .parity import (
    biquandle_parity,
    check_parity_under_move,
    component_parity,
    format_parity,
    gaussian_parity,
    get_parity,
    zero_parity,
)
from .relations import (
    BracketCoefficients,
    NorCoefficients,
    RelationReport,
    verify_nor_relations,
    verify_pbbr_relations,
)
from .search import SearchBoundError, search_coefficients

__all__ = [
    "AxiomReport",
    "Biquandle",
    "BiquandleError",
    "BracketCoefficients",
    "CIRCLE",
    "EquivalenceReport",
    "FreeGraph",
    "GraphPolynomial",
    "InvariantMultiset",
    "NorCoefficients",
    "RelationReport",
    "SearchBoundError",
    "Smoothing",
    "biquandle_bracket_multiset",
    "biquandle_bracket_polynomial",
    "biquandle_bracket_value",
    "biquandle_parity",
    "builtin_biquandles",
    "canonical_code",
    "check_axioms",
    "check_parity_under_move",
    "coefficient_index",
    "compare_multisets",
    "component_parity",
    "constant_nor",
    "enumerate_colorings",
    "enumerate_colorings_bruteforce",
    "format_parity",
    "gaussian_parity",
    "get_biquandle",
    "get_parity",
    "is_coloring",
    "kauffman_coefficients",
    "kauffman_oracle",
    "normalize",
    "parity_bracket",
    "parse_multiset_lines",
    "pb_bracket_multiset",
    "pb_bracket_value",
    "r2_reduce",
    "run_equivalence_test",
    "search_coefficients",
    "smooth_state",
    "verify_nor_relations",
    "verify_pbbr_relations",
    "z2_parity_coefficients",
    "zero_parity",
]
