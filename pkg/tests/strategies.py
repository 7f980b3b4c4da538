from itertools import combinations

from hypothesis import strategies as st

from versals.core import Hypergraph
from versals.utils import canonical_sort, vertex_set


@st.composite
def antichains(draw, max_n=5, max_edges=6):
    n = draw(st.integers(1, max_n))
    masks = draw(
        st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_edges, unique=True)
    )
    maximal = [s for s in masks if not any(s != t and s & t == s for t in masks)]
    return Hypergraph.from_masks(n, canonical_sort(maximal))


@st.composite
def uniform_hypergraphs(draw, max_n=6, min_edges=1):
    n = draw(st.integers(2, max_n))
    r = draw(st.integers(1, n - 1))
    pool = [vertex_set(c) for c in combinations(range(n), r)]
    edges = draw(
        st.lists(
            st.sampled_from(pool),
            min_size=min(min_edges, len(pool)),
            max_size=min(len(pool), 8),
            unique=True,
        )
    )
    return Hypergraph.from_masks(n, edges)
