"""Exact machine verification of plane-free hypergraph extremal facts.

Everything is driven by dense bitmask encodings: 3-uniform hypergraphs as
colex-rank edge masks, layer multigraphs as per-pair layer masks.  The
library provides named constructions, three independent plane detectors,
canonical forms, exhaustive boundary searches with exact state accounting,
and a registry of verifiable claims that emit JSON certificates.
"""

from .canonical import (
    CANONICAL_CAP,
    CanonicalForm,
    automorphism_count,
    canonical_form,
    is_canonical,
    relabel,
)
from .certificate import Certificate, CheckpointWriter, read_checkpoint
from .errors import (
    CapabilityError,
    FanoturanError,
    FormatError,
    ParameterError,
    VerificationError,
)
from .fano import (
    CrossingFanoWitness,
    DetectionMethod,
    PaschFanoWitness,
    contains_clique,
    contains_fano,
    contains_fano_cover,
    contains_fano_crossing,
    contains_fano_embedding,
    contains_fano_pasch,
    embedding_edges,
    fano_images,
    find_clique,
    find_fano_crossing,
    find_fano_embedding,
    find_fano_pasch,
    triple_cover_masks,
)
from .hypergraph import (
    FANO_LINES,
    MAX_VERTICES,
    PASCH_QUADS,
    Graph,
    Hypergraph,
    b_formula,
    complement,
    construct,
    degree_in_set,
    edge_split_counts,
    format_text,
    from_json_dict,
    link_graph,
    pair_rank,
    parse_text,
    random_hypergraph,
    recognize_balanced_bipartite,
    to_json_dict,
    triple_rank,
)
from .multigraph import (
    CrossingWitness,
    PMultigraph,
    e_induced,
    e_plus,
    extremal_4multigraph,
    f4_formula,
    f5_lower_constructions,
    has_three_crossing_pairs,
    max_edges_no_crossing,
    verify_corollary_inequalities,
    verify_lemma_4vertex,
    verify_section4_arithmetic,
)
from .search import (
    CLAIM_ORDER,
    LONG_RUN_CLAIMS,
    EnumerationPlan,
    enumerate_fano_free,
    fano_line_count,
    max_fano_free_edges,
    run_claim,
    verify_ex7,
    verify_ex8,
    verify_fact_2_4,
    verify_fact_tetra,
    verify_lemma_2_3,
    verify_lemma_n7,
    verify_matching_facts,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_CAP",
    "CLAIM_ORDER",
    "CanonicalForm",
    "CapabilityError",
    "Certificate",
    "CheckpointWriter",
    "CrossingFanoWitness",
    "CrossingWitness",
    "DetectionMethod",
    "EnumerationPlan",
    "FANO_LINES",
    "FanoturanError",
    "FormatError",
    "Graph",
    "Hypergraph",
    "LONG_RUN_CLAIMS",
    "MAX_VERTICES",
    "PASCH_QUADS",
    "PMultigraph",
    "ParameterError",
    "PaschFanoWitness",
    "VerificationError",
    "automorphism_count",
    "b_formula",
    "canonical_form",
    "complement",
    "construct",
    "contains_clique",
    "contains_fano",
    "contains_fano_cover",
    "contains_fano_crossing",
    "contains_fano_embedding",
    "contains_fano_pasch",
    "degree_in_set",
    "e_induced",
    "e_plus",
    "edge_split_counts",
    "embedding_edges",
    "enumerate_fano_free",
    "extremal_4multigraph",
    "f4_formula",
    "f5_lower_constructions",
    "fano_images",
    "fano_line_count",
    "find_clique",
    "find_fano_crossing",
    "find_fano_embedding",
    "find_fano_pasch",
    "format_text",
    "from_json_dict",
    "has_three_crossing_pairs",
    "is_canonical",
    "link_graph",
    "max_edges_no_crossing",
    "max_fano_free_edges",
    "pair_rank",
    "parse_text",
    "random_hypergraph",
    "read_checkpoint",
    "recognize_balanced_bipartite",
    "relabel",
    "run_claim",
    "to_json_dict",
    "triple_cover_masks",
    "triple_rank",
    "verify_corollary_inequalities",
    "verify_ex7",
    "verify_ex8",
    "verify_fact_2_4",
    "verify_fact_tetra",
    "verify_lemma_2_3",
    "verify_lemma_4vertex",
    "verify_lemma_n7",
    "verify_matching_facts",
    "verify_section4_arithmetic",
]
