"""Exact calculus in the Lie algebra of graphs with ordered edge sets."""

from graphcomplex.dgla import (
    SINGLE_EDGE,
    OrderedPartition,
    blow_up,
    bracket,
    bracket_raw,
    d_direct,
    d_via_bracket,
    insert,
    is_cocycle,
    jacobiator,
)
from graphcomplex.graphs import (
    CanonicalResult,
    Graph,
    InvariantError,
    NotAutomorphismError,
    ParseError,
    VertexPermutation,
    automorphisms,
    canonicalize,
    enumerate_graphs,
    induced_edge_sign,
    is_leafless,
    is_zero_graph,
    parse_graph,
    serialize_graph,
)
from graphcomplex.homology import (
    DMatrix,
    bigraded_basis,
    cocycle_space,
    d_matrix,
    format_matrix,
)
from graphcomplex.kernel import BACKEND as KERNEL_BACKEND
from graphcomplex.sums import (
    GraphSum,
    NonUnitCoefficientError,
    PairingCertificate,
    RawSum,
    cancellation_certificate,
    parse_sum,
    reduce,
    serialize_sum,
)

__all__ = [
    "CanonicalResult",
    "DMatrix",
    "Graph",
    "GraphSum",
    "InvariantError",
    "KERNEL_BACKEND",
    "NonUnitCoefficientError",
    "NotAutomorphismError",
    "OrderedPartition",
    "PairingCertificate",
    "ParseError",
    "RawSum",
    "SINGLE_EDGE",
    "VertexPermutation",
    "automorphisms",
    "bigraded_basis",
    "blow_up",
    "bracket",
    "bracket_raw",
    "cancellation_certificate",
    "canonicalize",
    "cocycle_space",
    "d_direct",
    "d_matrix",
    "d_via_bracket",
    "enumerate_graphs",
    "format_matrix",
    "induced_edge_sign",
    "insert",
    "is_cocycle",
    "is_leafless",
    "is_zero_graph",
    "jacobiator",
    "parse_graph",
    "parse_sum",
    "reduce",
    "serialize_graph",
    "serialize_sum",
]

__version__ = "0.1.0"
