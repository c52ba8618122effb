"""Exact computation on small tournaments.

Bitset data model, exact solvers for colouring and domination, the named
constructions, structural analyzers, and an exhaustive small-scale scanning
harness, all tied together by a pipeable CLI.
"""

from .core import (
    MAX_VERTICES,
    CapacityError,
    Deadline,
    DeadlineExceeded,
    Graph,
    InducedGraph,
    InducedTournament,
    Numbering,
    OrderedTournament,
    Tournament,
    backedge_graph,
    bits,
    blowup,
    complete_to,
    contains,
    graph_from_edges,
    induce,
    induce_graph,
    is_transitive,
    is_transitive_set,
    isomorphic,
    mask_of,
    natural_numbering,
    reverse,
    tournament_from_backedge,
    tournament_from_edges,
)
from .formats import (
    FormatError,
    emit_compact,
    emit_tmt,
    format_matching,
    parse_compact,
    parse_matching,
    parse_tmt,
    tournament_code,
    tournament_from_code,
)
from .solvers import (
    ChiResult,
    DomResult,
    Law,
    Submeasure,
    SubdomResult,
    all_triangle_law,
    cardinality_submeasure,
    chi,
    chi_all_subsets,
    chi_h,
    chi_law,
    chi_submeasure,
    dilworth_partition,
    dom,
    edom,
    edom_submeasure,
    graph_chi,
    graph_omega,
    subdom,
    validate_law,
    validate_submeasure,
)
from .constructions import (
    ChainPower,
    CrossingTournament,
    IntegerMatching,
    UkTournament,
    chain_power,
    crossing,
    cyclic_triangle,
    delta,
    k_majority,
    paley,
    ramsey_amplify,
    random_numbering,
    random_tournament,
    s_t,
    t_t,
    transitive_tournament,
    u_k,
)
from .structure import (
    CompletePair,
    DensityEvidence,
    Diamond,
    DiamondResult,
    PairResult,
    PosetResult,
    Ring,
    best_complete_pair,
    c_good,
    density_in,
    density_out,
    diamond_free_numbering,
    find_ring,
    inout_witness,
    is_ordered_poset,
    is_poset_tournament,
    local_chromatic_number,
    local_sets,
    max_diamond,
    min_local_numbering,
    numbering_clique,
    ordered_contains,
    out_density_evidence,
    strong_chromatic_number,
    validate_complete_pair,
    validate_diamond,
    validate_ring,
)
from .enumeration import (
    CanonicalForm,
    SearchReport,
    canonical_code,
    canonical_form,
    count_classes,
    enumerate_all,
    is_canonical,
    legend_frontier,
    read_corpus,
    revalidate_witness,
    scan_backdom,
    scan_chi2,
    scan_theorem_suite,
    scan_tribip,
    write_corpus,
)

__version__ = "0.1.0"
