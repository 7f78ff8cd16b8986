"""Spectral theory of general (uniform and non-uniform) hypergraphs."""

from .bounds import BoundsReport, bounds_report
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    ParseError,
    connected_components,
    degree_profile,
    is_regular,
    is_uniform,
    is_weakly_irreducible,
    parse_hypergraph,
    proper_sub_hypergraph,
    rank_corank,
    read_hypergraph,
    serialize_hypergraph,
)
from .oddbip import OddBipartition, find_odd_bipartition
from .perron import PerronResult, rayleigh, spectral_radius, spectral_radius_per_component
from .report import SpectralReport, build_report
from .tensor import (
    DenseTensor,
    HypergraphTensor,
    adjacency_apply,
    dense_adjacency,
    dense_laplacian,
    dense_signless,
    laplacian_apply,
    signless_apply,
)

__version__ = "0.1.0"
