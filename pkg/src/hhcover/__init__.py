"""Minimum covers, criticality and factor-critical structure in hereditary
hypergraphs.

The package is organized around the generator-antichain representation of
hereditary hypergraphs (``core``), exact partition-cover search (``cover``),
maximum matching and factor-criticality (``matching``), the classification
of connected critical instances against the (n + 1) / 2 cover bound
(``criticality``), oracle-defined example families built from graphs,
digraphs and weighted graphs (``families``), and an exhaustive/randomized
verification harness with a command-line front end (``harness``, ``cli``).
"""

__version__ = "0.1.0"

from .core import (
    MAX_VERTICES,
    BadIndex,
    Graph,
    HereditaryHypergraph,
    IndependenceOracle,
    UncoveredVertex,
    VertexLimitExceeded,
    complete_graph,
    cycle_graph,
    dual,
    friendship_graph,
    from_hyperedges,
    full_set,
    members,
    path_graph,
    petersen_graph,
    stable_sets,
    vset,
)
from .cover import (
    Cover,
    CoverStats,
    cover_stats,
    enumerate_min_covers,
    has_singleton_free_min_cover,
    is_valid_cover,
    min_cover,
    mu,
    rho,
    rho_after_each_deletion,
    rho_closure_invariance_check,
    set_cover_number,
)
from .criticality import (
    ConditionNotMet,
    CorollaryConcreteReport,
    CorollaryGallaiReport,
    CriticalityReport,
    NotEqualityCase,
    TheoremCase,
    TheoremClassification,
    check_corollary_concrete,
    check_corollary_gallai,
    classify_critical,
    critical_core,
    is_critical,
    structured_cover,
)
from .families import (
    BadK,
    Digraph,
    GeneratorBudgetExceeded,
    LambdaTooSmall,
    MonotonicityViolation,
    NegativeWeight,
    SingletonExcluded,
    WeightedGraph,
    acyclic_family,
    bounded_class_family,
    clique_family,
    forbidden_subgraph_family,
    maximal_generators,
    spot_check_monotone,
    stable_set_family,
    threshold_family,
)
from .harness import (
    GeneratorConfig,
    TooLarge,
    VerificationReport,
    enumerate_hereditary,
    random_hereditary,
    verify_universe,
)
from .matching import (
    FactorCriticalCertificate,
    GallaiLemmaReport,
    Matching,
    is_factor_critical,
    max_matching,
    nu,
    verify_gallai_lemma,
)
from .cli import cli_main
