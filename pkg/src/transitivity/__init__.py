"""Transitivity of graphs.

Exact brute-force oracles for small graphs, linear-time algorithms for split
graphs, bipartite chain graphs and their complements, t-atom generation and
criticality classification, and Nordhaus-Gaddum checks.
"""
from .errors import (
    BudgetExceeded,
    ContractError,
    InvalidCertificate,
    MalformedPartition,
    NotInClass,
    ParseError,
)
from .graph import (
    Graph,
    TransitivePartition,
    complement,
    delete_edge,
    delete_vertex,
    dominates,
    induced_subgraph,
    verify_transitive_partition,
)

__version__ = "0.1.0"
