"""Exact solvers, bounds and constructions for d-biclique covers of graphs."""

from .bicliques import (
    Biclique,
    CoverMultiset,
    enumerate_maximal_bicliques,
    is_biclique,
    is_good_cover,
    max_biclique_edges,
    trivial_lower_bound,
    verify_cover,
)
from .graphs import Graph, graph_from_edges
from .optimize import bc_exact, bc_fractional, bc_via_beta, find_tight_d, log_bound

__version__ = "0.1.0"
