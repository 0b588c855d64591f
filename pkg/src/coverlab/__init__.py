"""Cover ideals of finite simple graphs: vertex decompositions, layered
powers, polarization, Betti tables, and componentwise linearity checks."""

from .decomp import (
    BgFamilyReport,
    LayeredGraph,
    SheddingDecomposition,
    bg_family_vd,
    bg_family_vd_report,
    build_bg,
    build_gk,
    enumerate_decompositions,
    is_scm_bipartite,
    is_shedding_vertex,
    is_vertex_decomposable,
    is_w_graph,
    layer_collapse_check,
    layer_collapse_check_bipartite,
    shedding_decomposition,
    validate_decomposition,
)
from .families import (
    complete,
    cycle,
    make_family,
    n_clique,
    path,
    random_graph,
    random_tree,
    star_complete,
)
from .graph_io import from_edge_text, from_graph6, to_edge_text, to_graph6
from .graphs import (
    Graph,
    add_whiskers,
    bipartition,
    delete_closed_neighborhood,
    delete_vertices,
    graph,
    independent_sets,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    is_connected,
    is_forest,
    is_independent,
    is_simplicial_vertex,
    maximal_independent_sets,
    neighbors_closed,
    standard_labels,
)
from .ideals import (
    MonomialIdeal,
    alexander_dual,
    contains_monomial,
    cover_ideal,
    edge_ideal,
    ideal_from_json,
    ideal_from_text,
    ideal_to_json,
    ideal_to_text,
    intersect,
    minimal_vertex_covers,
    monomial_ideal,
    polarize,
    depolarize,
    power,
    symbolic_power_bruteforce,
    symbolic_power_via_gk,
    truncation,
)
from .resolution import (
    BettiTable,
    LinearQuotients,
    SimplicialComplexChain,
    betti_table,
    betti_table_taylor,
    has_linear_quotients,
    has_linear_resolution,
    is_componentwise_linear,
    polarization_betti_check,
    reduced_homology_dims,
    regularity,
)
from .verify import (
    SuiteLimits,
    VerificationReport,
    enumerate_graphs,
    report_from_json,
    run_suite,
    suite_names,
)

__all__ = [name for name in dir() if not name.startswith("_")]
