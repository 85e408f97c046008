"""Spectral radii of linear uniform hypergraphs, their shadows, designs and expansions."""

from .chromatic import (
    chromatic_number,
    complete_multipartite,
    complete_multipartite_plus,
    is_color_critical,
    turan_graph,
)
from .designs import (
    GroupDivision,
    cond1,
    cond2,
    gdd,
    steiner_triple_system,
    transversal_design,
    verify_design,
    verify_gdd,
)
from .expansion import (
    Embedding,
    Expansion,
    contains_expansion,
    expand,
    greedy_shadow_embedding,
    verify_embedding,
)
from .hypercore import (
    Graph,
    Hypergraph,
    degree_profile,
    is_connected,
    is_linear,
    read_hypergraph,
    validate,
    write_hypergraph,
)
from .shadow import global_bound_check, lconn_check, shadow, turan_bound_check
from .spectral import SpectralReport, apply_adjacency, graph_spectral_radius, rayleigh, spectral_radius

__version__ = "0.1.0"

__all__ = [
    "Embedding",
    "Expansion",
    "Graph",
    "GroupDivision",
    "Hypergraph",
    "SpectralReport",
    "apply_adjacency",
    "chromatic_number",
    "complete_multipartite",
    "complete_multipartite_plus",
    "cond1",
    "cond2",
    "contains_expansion",
    "degree_profile",
    "expand",
    "gdd",
    "global_bound_check",
    "graph_spectral_radius",
    "greedy_shadow_embedding",
    "is_color_critical",
    "is_connected",
    "is_linear",
    "lconn_check",
    "rayleigh",
    "read_hypergraph",
    "shadow",
    "spectral_radius",
    "steiner_triple_system",
    "transversal_design",
    "turan_bound_check",
    "turan_graph",
    "validate",
    "verify_design",
    "verify_embedding",
    "verify_gdd",
    "write_hypergraph",
]
