"""Multigraphs with disjoint 2-dominating sets: exact search, recognition of
minimal (2,2)-dominated graphs, subdivision, P-contraction, and decomposition
certificates."""
from .domination import KLPair, find_kl_pair, is_k_dominating, is_kl_dominated, is_kl_pair
from .isomorphism import are_isomorphic
from .multigraph import MultiGraph
from .recognition import (DegreeSplit, degree_split, extract_partition_pair,
                          is_minimal_22_oracle, is_minimal_22_structural, is_subdivision_graph)
from .transform import (Certificate, ContractionStep, Partition, decompose, expand,
                        p_contraction, replay, subdivide, validate_partition)

__all__ = [
    "MultiGraph", "KLPair", "find_kl_pair", "is_k_dominating", "is_kl_dominated", "is_kl_pair",
    "are_isomorphic", "DegreeSplit", "degree_split", "extract_partition_pair",
    "is_minimal_22_oracle", "is_minimal_22_structural", "is_subdivision_graph",
    "Certificate", "ContractionStep", "Partition", "decompose", "expand", "p_contraction",
    "replay", "subdivide", "validate_partition",
]
