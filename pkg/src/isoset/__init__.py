"""Extremal submatrix structures of the t-subset intersection matrix.

Constructions (identity, circulant, four isolation regimes, triangular),
pattern verifiers, and exact brute-force oracles (maximum clique search,
minimum biclique cover) on small instances.
"""

from .construct import (
    ElementAllocator,
    circulant_isolation,
    compact_universe,
    identity_family,
    isolation_3t2,
    isolation_big_k,
    isolation_construct,
    isolation_maximal,
    isolation_regime,
    isolation_size,
    isolation_small_k,
    triangular_family,
)
from .core import (
    BoolMatrix,
    FamilyPair,
    ParseError,
    PatternCertificate,
    RangeError,
    ResourceLimitError,
    SearchResult,
    Subset,
    build_A,
    enumerate_t_subsets,
    family_to_matrix,
    intersects,
    max_dimension,
)
from .oracle import (
    CompatGraph,
    RankBudget,
    boolean_rank_exact,
    compat_graph,
    cover_to_factors,
    fooling_lower_bound,
    max_identity_bruteforce,
    max_isolation_bruteforce,
    max_triangular_bruteforce,
)
from .serialize import (
    family_from_json,
    family_to_json,
    load_document,
    matrix_from_text,
    matrix_to_text,
)
from .verify import (
    verify_identity,
    verify_identity_decomposition,
    verify_isolation,
    verify_matrix_identity,
    verify_matrix_isolation,
    verify_matrix_triangular,
    verify_triangular,
)

__version__ = "0.1.0"

__all__ = [
    "BoolMatrix",
    "CompatGraph",
    "ElementAllocator",
    "FamilyPair",
    "ParseError",
    "PatternCertificate",
    "RangeError",
    "RankBudget",
    "ResourceLimitError",
    "SearchResult",
    "Subset",
    "boolean_rank_exact",
    "build_A",
    "circulant_isolation",
    "compact_universe",
    "compat_graph",
    "cover_to_factors",
    "enumerate_t_subsets",
    "family_from_json",
    "family_to_json",
    "family_to_matrix",
    "fooling_lower_bound",
    "identity_family",
    "intersects",
    "isolation_3t2",
    "isolation_big_k",
    "isolation_construct",
    "isolation_maximal",
    "isolation_regime",
    "isolation_size",
    "isolation_small_k",
    "load_document",
    "matrix_from_text",
    "matrix_to_text",
    "max_dimension",
    "max_identity_bruteforce",
    "max_isolation_bruteforce",
    "max_triangular_bruteforce",
    "triangular_family",
    "verify_identity",
    "verify_identity_decomposition",
    "verify_isolation",
    "verify_matrix_identity",
    "verify_matrix_isolation",
    "verify_matrix_triangular",
    "verify_triangular",
]
