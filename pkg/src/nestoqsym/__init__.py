"""Quasisymmetric lattice-point enumerators of nestohedra and graph-associahedra."""

from .buildset import (
    BuildingSet,
    HopfElement,
    OrderedSetPartition,
    building_set,
    components,
    contraction,
    coproduct,
    from_graph,
    parse_building_set,
    product,
    restriction,
    serialize_building_set,
    takeuchi_antipode,
    validate,
)
from .graphs import (
    CanonicalForm,
    Graph,
    canonical_form,
    contract,
    enumerate_graphs,
    family,
    from_graph6,
    graph_from_edges,
    independence_fvector,
    induced,
    is_connected,
    is_q_connected,
    parse_graph,
    serialize_graph,
    to_graph6,
)
from .invariants import (
    CollisionReport,
    SymElement,
    F_btree_route,
    F_fundamental,
    F_graph,
    F_graph_colorings,
    F_graph_recurrence,
    F_splitting,
    F_star,
    F_tree,
    check_thm72,
    chromatic_symmetric,
    collision_search,
    family_F,
    family_recurrence_check,
    family_vertex_counts,
    hopf_morphism_check,
    splitting_chains,
    tree_matrix_kernel,
    zeta,
)
from .nestopoly import (
    BTree,
    TreeShape,
    b_tree,
    check_realization,
    enumerate_tree_shapes,
    is_nested,
    linear_extensions,
    maximal_nested_sets,
    nested_sets,
    nested_sets_by_size,
    tree_multiset,
    vertex_coordinates,
)
from .qsym import (
    QSymElement,
    QSymTensor,
    antipode,
    coarsenings,
    descent_composition,
    from_fundamental,
    monomial,
    mul,
    parse,
    principal_specialization,
    refines,
    render,
    shift1,
    to_fundamental,
    to_json,
    vertex_count,
)

__all__ = [name for name in dir() if not name.startswith("_")]
