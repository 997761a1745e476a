"""bctk: exact chromatic polynomials, broken circuits and NBC subset counting
for finite multigraphs with ordered edges."""

from .broken_circuit import (
    BrokenCircuitReport,
    WhitneyReport,
    broken_circuits,
    edge_set,
    enumerate_cycles,
    includes_broken_circuit,
    nbc_count,
    nbc_counts,
    nbc_subsets,
    whitney_check,
)
from .chromatic import (
    Polynomial,
    chromatic_polynomial,
    count_colorings_bruteforce,
    evaluate,
    oracle_polynomial,
)
from .corpus import FuzzConfig, exhaustive_corpus, generate_corpus
from .errors import (
    BctkError,
    CoefficientOverflowError,
    GraphError,
    GuardExceededError,
    LoopContractionError,
    NonTransitiveRelationError,
    PreconditionError,
)
from .graph import (
    EdgePartition,
    Graph,
    VertexPartition,
    are_parallel,
    build_graph,
    contract,
    delete,
    edge_classes_under,
    is_loop,
    is_simple,
    min_edge,
    relabel_edges,
    vertex_classes_under,
)
from .graphfile import parse_graph, read_graph, render_graph
from .lemmas import (
    LemmaVerdict,
    bijection_beta,
    check_deletion_contraction,
    check_lemma0,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_lemma4a,
    check_oracle,
    check_recurrence,
    minimize_counterexample,
    run_all_checks,
)

__version__ = "0.1.0"
