"""Directed Steiner path packing and directed path connectivity."""
from .constructions import (
    HamiltonianDecomposition,
    NoDecompositionError,
    complete_symmetric,
    decomposition_to_sr_packing,
    example1,
    half_decomposition_digraph,
    tillson_decomposition,
    transitive_tournament,
)
from .digraph import (
    Digraph,
    arc_connectivity,
    complement,
    from_arc_list,
    induced_arcs,
    is_eulerian,
    is_strong,
    is_symmetric,
    min_degrees,
    vertex_connectivity,
)
from .gadgets import (
    GadgetOutput,
    LinkageInstance,
    build_arc_gadget,
    build_internal_gadget,
    random_eulerian_digraph,
    solve_2linkage_exact,
)
from .packing import (
    PackingCertificate,
    ResourceLimitError,
    TerminalSpec,
    arc_disjoint,
    enumerate_sr_paths,
    internally_disjoint,
    is_sr_path,
    kappa_p_k,
    lambda_p_k,
    max_packing,
)
from .symmetric import (
    RoutingRequest,
    decide_kappa_at_least,
    decide_partition,
    enumerate_partitions,
    enumerate_skeletons,
    route_disjoint,
    skeleton_of,
)

__version__ = "0.1.0"
