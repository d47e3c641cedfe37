"""Structural stability of sparse zero-patterns and of random symmetric graphs."""

from .graphs import (Digraph, Graph, ZeroPattern, build_digraph, build_graph,
                     connected_components, induced_subgraph, is_independent, neighbor_set,
                     pattern_graph_bijection, pattern_of, strongly_connected_components)
from .matching import (bipartite_double_cover, hall_violator, has_hamiltonian_decomposition,
                       max_matching)
from .stability import (Status, check_digraph, check_L, check_symmetric_stability,
                        classify_thin, has_k_decomposition, nested_chain)

__version__ = "0.1.0"
