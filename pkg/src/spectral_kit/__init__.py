"""Least eigenvalues of complements of graphs with given vertex connectivity."""

from .extremal import (
    ExtremalParams,
    QuotientPoly,
    build_b1,
    build_b2,
    build_b3,
    compare_b1_b2,
    least_root,
    predicted_min,
    quotient_poly_b1,
    quotient_poly_b2,
)
from .graph import Graph, VertexCut, complement, induced_subgraph, is_clique, is_connected, vertex_connectivity
from .oracle import check_structural_claims, enumerate_class, find_minimizer, verify_bounds
from .spectra import SignPartition, SpectralResult, eigen_sym, least_eigenpair, sign_partition

__version__ = "0.1.0"
