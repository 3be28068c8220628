"""Streaming community detection on evolving networks."""

from ._dyncomm import (
    ConfigError,
    DynamicLouvain,
    DyncommError,
    GenConfig,
    Graph,
    MissingEdgeError,
    StepReport,
    UndefinedModularityError,
    UnknownVertexError,
    WeightDomainError,
    adc,
    generate,
    louvain,
    modularity,
    optimize_density,
    parse_stream,
    partition_similarity,
    run_stream,
    stability,
)

__all__ = [
    "ConfigError",
    "DynamicLouvain",
    "DyncommError",
    "GenConfig",
    "Graph",
    "MissingEdgeError",
    "StepReport",
    "UndefinedModularityError",
    "UnknownVertexError",
    "WeightDomainError",
    "adc",
    "generate",
    "louvain",
    "modularity",
    "optimize_density",
    "parse_stream",
    "partition_similarity",
    "run_stream",
    "stability",
]
