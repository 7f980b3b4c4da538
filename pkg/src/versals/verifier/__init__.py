from .checks import (
    ALIASES,
    CLAIMS,
    LEMMAS,
    check_bounds,
    check_counting_floor,
    check_disjointness,
    check_lemma1,
    check_lemma3,
    check_lemma4,
    check_lemma5,
    check_lemma6,
    check_lifting,
    check_main_theorem,
    check_pennant_free,
    check_power_bound,
    check_theorem2,
    check_theorem7,
    check_uniform_equivalence,
    check_upward_closure,
    replay,
    resolve_claims,
    run_check,
)
from .enumerate import (
    DEDEKIND,
    MAX_ANTICHAIN_N,
    MAX_UNIFORM_INSTANCES,
    antichain_count,
    antichain_edge_sets,
    enum_antichains,
    enum_uniform,
    random_antichain,
    random_uniform,
    uniform_edge_sets,
    uniform_instance_count,
)
from .scopes import AntichainScope, FamilyScope, RandomScope, SingleScope, UniformScope
from .suite import build_config, check_lemma, run_suite, summary_frame
