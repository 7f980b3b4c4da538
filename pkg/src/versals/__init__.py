r"""

# Nomenclature

| Prefix | Definition | Examples |
| --- | --- | --- |
| `gen_` | Builds a named extremal family | [`gen_star(r, m)`][versals.families.generators.gen_star] <br> [`gen_c4()`][versals.families.generators.gen_c4] |
| `is_` | A yes/no predicate | [`is_versal(...)`][versals.engine.versal.is_versal] <br> [`is_flag(...)`][versals.families.recognize.is_flag] |
| `enum_` | An exhaustive, ordered stream of hypergraphs | [`enum_antichains(n)`][versals.verifier.enumerate.enum_antichains] |
| `random_` | A seeded random hypergraph | [`random_uniform(n, r, seed)`][versals.verifier.enumerate.random_uniform] |
| `check_` | Evaluates one claim and returns a `Verdict` | [`check_main_theorem(H)`][versals.verifier.checks.check_main_theorem] |

# Layout

`versals.core` holds the `Hypergraph` type and the `.hg` format, `versals.engine`
enumerates versals, `versals.families` builds and recognizes stars, binary stars
and flags, `versals.verifier` runs claims over exhaustive or random scopes,
`versals.isolation` relates versals to weightings with a unique minimum edge and
`versals.cli` exposes everything on the command line.

```mermaid
flowchart
    core --> engine
    engine --> families
    engine --> isolation
    families --> verifier
    isolation --> verifier
    verifier --> cli
```

"""

from .core import Hypergraph, format_hypergraph, parse_hypergraph, read_hypergraph
from .engine import (
    all_versals,
    free_pairs,
    free_vertices,
    is_versal,
    null_versals,
    versals_of,
)
from .exceptions import (
    EnumerationLimitError,
    HypothesisError,
    ImproperlyConfigured,
    NotAVersalError,
    ParseError,
    ValidationError,
)
from .families import (
    classify,
    gen_binary_star,
    gen_c4,
    gen_cosingletons,
    gen_singletons,
    gen_star,
    is_flag,
    pole_report,
    poles,
)
from .isolation import min_unique_probability, unique_min_edge, weight_from_versal
from .types import FamilyKind, Outcome, Verdict
from .verifier import build_config, check_lemma, run_suite
