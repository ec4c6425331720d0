"""Spectral radii of k-uniform hypergraphs under abc, adjacency, and
Randic edge weightings: generators for the extremal families, implicit
tensor power iteration with certified brackets, closed forms, and a
numeric verification suite."""

from .hypergraph import (
    DegreeVector,
    DuplicateEdgeError,
    EdgeCardinalityError,
    InvalidHypergraphError,
    RepeatedVertexError,
    SizeCapExceededError,
    StructureReport,
    UhgParseError,
    UniformHypergraph,
    VertexRangeError,
    build,
    classify,
    degrees,
    format_uhg,
    girth,
    is_connected,
    is_linear,
    parse_uhg,
)
from .canon import canonical_code
from .spectral import (
    ConvergenceError,
    NotConnectedError,
    SolveOptions,
    SpectralEstimate,
    residual,
    spectral_radius,
)
from .tensor import (
    COMPILED_KERNEL,
    TensorOperator,
    Weighting,
    abc_index,
    apply,
    edge_weight,
    form,
    k_unit,
    omega,
)

__version__ = "0.1.0"
