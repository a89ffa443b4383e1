"""Least H-eigenvalues of even-uniform hypergraphs."""

from ._core import (
    DomainError,
    EigenResult,
    FormatError,
    Hypergraph,
    PreconditionError,
    UnsupportedUniformity,
    __version__,
    are_isomorphic,
    blowup_power,
    canonical_edges,
    complete_hypergraph,
    cycle_graph,
    enumerate_family,
    enumerate_hypertrees,
    find_odd_bipartition,
    format_hypergraph,
    hyperstar,
    kth_power_of_graph,
    least_h_eigenvalue,
    parse_hypergraph,
    rayleigh,
    spectral_radius,
    tensor_apply,
)

__all__ = [name for name in dir() if not name.startswith("_")]
