"""Hypergraph polytopes: face lattices, exact rational realization,
operadic coherence edges, iterated truncations, and the words-with-holes
calculus of the permutohedron-based associahedron."""

from .hypergraph import (
    GuardExceeded,
    Hypergraph,
    HypergraphError,
    components,
    is_connected,
    quasi_partition_refine,
    restrict,
    saturate,
)
from .constructs import (
    Construct,
    ConstructError,
    Omega,
    covers,
    enumerate_constructions,
    enumerate_constructs,
    leq,
    make_node,
    parse_construct,
    print_construct,
    rewrite_step,
    span,
    spanning_partial_constructions,
    validate_construct,
    vertices_below,
)

from .nestedsets import (
    NestedSetError,
    check_tree_characterization,
    check_tubing_conditions,
    psi,
    unpsi,
)
from .realization import (
    HalfSpaceSystem,
    LinearConstraint,
    RationalPoint,
    RealizationError,
    VerificationReport,
    f_vector,
    face_vertex_set,
    hrep,
    verify_isomorphism,
    vertex_of_construction,
)
from .operadic import (
    EdgeClassification,
    EdgeGraph,
    MinPath,
    OperadicTree,
    OperadicTreeError,
    WordError,
    build_edge_graph,
    classify_edge,
    construction_to_word,
    decomposition_words,
    edge_removal_census,
    min_path,
    normalize_path,
    parse_tree,
    skeleton_dot,
    subtree_component_correspondence,
    tree_from_json_dict,
    word_to_construction,
)
from .truncation import (
    Multiset,
    RoundState,
    RoundTransition,
    TruncationError,
    advance,
    constrs,
    make_round,
    mu_sigma,
    next_round,
    round_state_from_json_dict,
    round_state_to_json_dict,
    simplex_round,
    tamed_constructions,
    tamed_constructs,
    vertex_family,
)
from .pba import (
    HoleWord,
    HoleWordError,
    PbaCensus,
    PbaError,
    PbaSetup,
    census,
    decode,
    encode,
    encode_via_order,
    face_constructs,
    face_words,
    parse_face,
    parse_word,
    pba_setup,
    rule_closure_leq,
    rule_upsteps,
    standardize,
    standardize_blocks,
    validate_word,
    word_leq,
    word_text,
    x_sigma,
)

__version__ = "0.1.0"
