from .bridge import (
    EXACT_BUDGET,
    MC_BLOCK,
    check_round_trip,
    edge_sums,
    incidence,
    min_unique_probability,
    unique_min_edge,
    weight_from_versal,
)
