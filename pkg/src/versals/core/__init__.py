from .hypergraph import (
    MAX_UNIVERSE,
    Hypergraph,
    VertexSet,
    find_containment,
    format_hypergraph,
    parse_hypergraph,
    read_hypergraph,
)
