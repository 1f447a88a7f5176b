"""Path-graph recognition through weak colorings of clique-separator parts."""

from .chordal import (
    CliqueTree,
    NotChordalError,
    build_clique_tree,
    clique_separators,
    is_chordal,
    maximal_cliques,
    mcs_order,
    verify_clique_path_tree,
)
from .coloring import (
    DPartition,
    PartialColoring,
    TripleWitness,
    WeakColoring,
    cross_set,
    d_partition,
    find_full_antipodal_triple,
    partial_coloring,
    strong_coloring_bruteforce,
    upper_bounds,
    weak_coloring,
)
from .graph import (
    EdgeListError,
    SimpleGraph,
    connected_components,
    induced_subgraph,
    parse_edge_list,
    serialize_edge_list,
)
from .oracle import PathRealization, oracle_is_path_graph, realize_paths
from .recognizer import ForbiddenWitness, Verdict, extract_certificate, g_plus, recognize, verify_certificate
from .separation import (
    Part,
    SeparationProfile,
    abstract_profile,
    antipodality_holds,
    build_profile,
    dominance_holds,
    quotient_profile,
)
from .templates import ColoredGraph, Template, attachedness_graph, find_forbidden, make_template

__version__ = "0.1.0"
