"""Spanning surfaces in 3-uniform hypergraphs: constructions, recognition and exact search."""

from .constructions import (
    absorb,
    build_absorber,
    complete,
    double_ladder,
    double_pyramid,
    parity_extremal,
    projective_P12,
    r_partite_mod,
    single_tight_counterexample,
    torus_T9,
    tripartite_extremal,
    two_component_extremal,
)
from .hypergraph import (
    Graph,
    ThreeGraph,
    best_intersection,
    codegree,
    count_4cycles,
    find_cycle,
    find_even_cycle,
    link_graph,
    min_codegree,
    tight_components,
    touching_pairs,
)
from .search import (
    SearchBudget,
    SearchResult,
    connectibility_census,
    find_bipartite_sphere,
    find_double_pyramid,
    find_spanning_sphere,
    find_spanning_surface,
    max_surface_cover,
    touching_sphere_count,
)
from .toolkit import (
    Colour,
    EdgeColouring,
    MatchPartition,
    check_colouring,
    green_link,
    match_partition,
    merge_colouring,
)
from .topology import Complex, SurfaceType, classify, connected_sum_glue, euler_characteristic, is_closed_surface, orientability

__all__ = [name for name in dir() if not name.startswith("_")]
