"""Structural equivalence, SEP groups, complete skeletons and the -1 eigenvalue of graphs."""

from .enumeration import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    enumerate_graphs,
    enumerate_skeleton_structures,
    rank_catalog,
)
from .equivalence import (
    ClassKind,
    Partition,
    are_structurally_equivalent,
    equivalence_classes,
    is_transposition_automorphism,
)
from .errors import CapacityError, ConflationError, ConsistencyError, GraphParseError, SkelkitError
from .graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    figure2_graph,
    figure3_graph,
    ith_neighborhood,
    parse_edge_list,
    parse_graph6,
    path,
    pineapple,
    star,
    to_dot,
    to_graph6,
)
from .prime_graph import (
    PrimeGraph,
    SepSeries,
    has_k_clique,
    is_complete_prime_graph,
    oracle_prime_graph,
    prime_graph_of_sep,
    primes_up_to,
    sep_series,
)
from .sep_group import Permutation, SepSignature, contains, hereditary_witnesses, sep_order, sep_signature
from .skeleton import (
    Skeleton,
    complete_skeleton,
    conflate,
    is_skeleton_structure,
    reconstruct,
    skeleton_by_fixed_point,
    skeleton_structure,
    trivial_reconfiguration,
)
from .spectral import (
    charpoly,
    charpoly_multiplicity_oracle,
    lambda_term,
    minus_one_multiplicity,
    rank_I_plus_A,
    spectral_report,
)

__version__ = "0.1.0"
