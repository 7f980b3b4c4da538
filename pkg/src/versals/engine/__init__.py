from .versal import (
    ENUMERATION_LIMIT,
    all_versals,
    census_frame,
    count_null_versals,
    edge_free,
    edge_weights,
    free_pairs,
    free_vertices,
    is_versal,
    is_versal_uniform,
    null_versals,
    owner_table,
    versal_matrix,
    versals_of,
)
