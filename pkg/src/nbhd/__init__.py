"""Walk-neighborhood complexes of finite graphs: exact-length walk
neighborhoods, linked-pair posets, integral homology via Smith normal form,
mod-2 cup products and involution heights, discrete Morse collapses, and
graph-homomorphism obstruction certificates."""

from .errors import (
    CollapseError,
    ConsistencyError,
    FreenessError,
    QuotientStructureError,
    ResourceLimitError,
)
from .graphs import (
    Graph,
    SearchOutcome,
    format_edge_list,
    graph_from_json_obj,
    graph_to_json_obj,
    hom_search,
    is_connected,
    kneser_walk_test,
    load_graph,
    make_cycle,
    make_kneser,
    odd_girth,
    parse_edge_list,
    random_connected_graph,
    save_graph,
    validate_hom,
    walk_neighborhood,
)
from .complexes import (
    DEFAULT_FACE_LIMIT,
    Poset,
    SimplicialComplex,
    barycentric_subdivision,
    complex_from_json_obj,
    complex_to_json_obj,
    face_poset,
    load_complex,
    neighborhood_complex,
    order_complex,
    pair_poset,
    save_complex,
)
from .homology import (
    BoundaryMatrix,
    HomologyResult,
    Presentation,
    abelianize,
    boundary_matrices,
    edge_path_presentation,
    h1_summand_certificate,
    homology,
    homology_connectivity,
    smith_normal_form,
)
from .z2 import (
    CochainZ2,
    DoubleCover,
    FreenessReport,
    HeightBounds,
    Involution,
    KneserReport,
    ObstructionReport,
    check_free_involution,
    coboundary,
    cup_product,
    height_bounds,
    is_coboundary,
    kneser_certificate,
    obstruction_check,
    pair_space_height,
    pair_swap_involution,
    quotient_complex,
    unit_cochain,
    w1_cocycle,
    z2_height,
    zero_cochain,
)
from .morse import (
    AcyclicityReport,
    MatchingReport,
    MorseMatching,
    collapse,
    collapse_cycle_tower,
    cycle_matching,
    verify_acyclic,
    verify_matching,
)

__version__ = "0.1.0"
