r"""
# Versals

A set S is a *versal* for the edge e of H when every other edge f satisfies

    |e| + |S & e| < |f| + |S & f|

The quantity |f| + |S & f| is the weight of f under the weighting that puts 2 on S
and 1 elsewhere, so S is a versal for exactly the edge that uniquely minimises
that weight, and for no edge at all when the minimum is tied. The engine exploits
this: a single pass over all subsets computes an *owner table* mapping every S to
its edge (or -1), which gives L(e), Z(H) and Z'(H) at once.

| Function | Meaning |
| --- | --- |
| `is_versal` | the defining inequality for one (e, S) |
| `versals_of` | L(e) in canonical order |
| `all_versals` | census of Z(H) |
| `null_versals` | census of Z'(H), enumerating subsets of the edge complements only |
| `edge_free` / `free_pairs` | free vertices and their count q |
"""

import logging
from functools import lru_cache
from typing import List, Optional

import numpy as np
import pandas as pd

from ..core import Hypergraph, VertexSet
from ..exceptions import EnumerationLimitError, ValidationError
from ..types import VersalCensus, VersalRecord
from ..utils import canonical_sort, members, popcounts, submasks

ENUMERATION_LIMIT = 20

CHUNK = 1 << 16

logger = logging.getLogger(__name__)


def _check_enumerable(free: int, limit: int = ENUMERATION_LIMIT):
    if free > limit:
        raise EnumerationLimitError(
            f"enumerating 2^{free} subsets exceeds the limit of 2^{limit}"
        )


def edge_arrays(hypergraph: Hypergraph):
    edges = np.array(hypergraph.edges, dtype=np.int64)
    sizes = np.array(hypergraph.sizes, dtype=np.int64)
    return edges, sizes


def edge_weights(hypergraph: Hypergraph, subsets: np.ndarray) -> np.ndarray:
    """Matrix of |f| + |S & f| with one row per subset S and one column per edge f."""
    edges, sizes = edge_arrays(hypergraph)
    return sizes[None, :] + popcounts(subsets[:, None] & edges[None, :])


def _owners(weights: np.ndarray) -> np.ndarray:
    lowest = weights.min(axis=1)
    ties = (weights == lowest[:, None]).sum(axis=1)
    return np.where(ties == 1, weights.argmin(axis=1), -1)


@lru_cache(maxsize=32)
def owner_table(hypergraph: Hypergraph) -> np.ndarray:
    """
    For every subset S of V (indexed by its mask), the edge S is a versal for.

    Returns:
        np.ndarray: Read-only int64 array of length 2^n holding an edge index or -1.
    """
    _check_enumerable(hypergraph.n)
    logger.debug(f"owner table over 2^{hypergraph.n} subsets, {hypergraph.m} edges")
    size = 1 << hypergraph.n
    owners = np.full(size, -1, dtype=np.int64)
    if hypergraph.m:
        for start in range(0, size, CHUNK):
            subsets = np.arange(start, min(size, start + CHUNK), dtype=np.int64)
            owners[start:start + len(subsets)] = _owners(edge_weights(hypergraph, subsets))
    owners.setflags(write=False)
    return owners


def versal_matrix(hypergraph: Hypergraph, subsets: np.ndarray) -> np.ndarray:
    """
    The defining inequality evaluated edge by edge.

    Entry [i, e] is True when subsets[i] is a versal for edge e. This does not rely
    on the unique-minimum argument, so it serves as an independent formulation.
    """
    weights = edge_weights(hypergraph, subsets)
    m = hypergraph.m
    out = np.zeros((len(subsets), m), dtype=bool)
    for e in range(m):
        beats = weights[:, [e]] < weights
        beats[:, e] = True
        out[:, e] = beats.all(axis=1)
    return out


def _versal_rows(hypergraph: Hypergraph, edge_index: int, candidates: np.ndarray) -> np.ndarray:
    weights = edge_weights(hypergraph, candidates)
    own = weights[:, edge_index].copy()
    weights[:, edge_index] = np.iinfo(np.int64).max
    if hypergraph.m == 1:
        return np.ones(len(candidates), dtype=bool)
    return own < weights.min(axis=1)


def is_versal(hypergraph: Hypergraph, edge_index: int, s: VertexSet) -> bool:
    """
    Example:
    ```python
    is_versal(gen_c4(), 0, vertex_set([2, 3]))  # True
    ```

    Tests |e| + |S & e| < |f| + |S & f| for every edge f other than e.
    """
    hypergraph.check_edge_index(edge_index)
    hypergraph.check_subset(s)
    e = hypergraph.edges[edge_index]
    left = e.bit_count() + (s & e).bit_count()
    return all(
        left < f.bit_count() + (s & f).bit_count()
        for j, f in enumerate(hypergraph.edges)
        if j != edge_index
    )


def is_versal_uniform(hypergraph: Hypergraph, edge_index: int, s: VertexSet) -> bool:
    """The simplified test |S & e| < |S & f|, valid for uniform hypergraphs only."""
    if not hypergraph.is_uniform():
        raise ValidationError("the simplified versal test needs a uniform hypergraph")
    hypergraph.check_edge_index(edge_index)
    hypergraph.check_subset(s)
    e = hypergraph.edges[edge_index]
    return all(
        (s & e).bit_count() < (s & f).bit_count()
        for j, f in enumerate(hypergraph.edges)
        if j != edge_index
    )


def versals_of(hypergraph: Hypergraph, edge_index: int) -> List[VertexSet]:
    """L(e): every versal of the edge, by cardinality and then lexicographically."""
    hypergraph.check_edge_index(edge_index)
    _check_enumerable(hypergraph.n)
    found = []
    size = 1 << hypergraph.n
    for start in range(0, size, CHUNK):
        subsets = np.arange(start, min(size, start + CHUNK), dtype=np.int64)
        found.extend(subsets[_versal_rows(hypergraph, edge_index, subsets)].tolist())
    return canonical_sort(found)


def all_versals(hypergraph: Hypergraph, materialize: bool = False) -> VersalCensus:
    """
    Census of Z(H).

    Args:
        hypergraph (Hypergraph): The hypergraph; m = 0 gives an empty census.
        materialize (bool): Whether to list every versal as a `VersalRecord`.

    Returns:
        VersalCensus: Per-edge counts of versals and of null versals.
    """
    m = hypergraph.m
    owners = owner_table(hypergraph)
    selected = np.flatnonzero(owners >= 0)
    edge_of = owners[selected]
    edges, _ = edge_arrays(hypergraph)
    if m:
        is_null = (selected & edges[edge_of]) == 0
        counts = np.bincount(edge_of, minlength=m)
        null_counts = np.bincount(edge_of[is_null], minlength=m)
    else:
        is_null = np.zeros(0, dtype=bool)
        counts = null_counts = np.zeros(0, dtype=np.int64)

    census = VersalCensus(
        per_edge_counts=counts.tolist(),
        per_edge_null_counts=null_counts.tolist(),
        total=int(counts.sum()),
        null_total=int(null_counts.sum()),
    )
    if materialize:
        census.records = _records(selected.tolist(), edge_of.tolist(), is_null.tolist())
    return census


def _records(sets, edge_of, nulls) -> List[VersalRecord]:
    grouped = {}
    for s, e, null in zip(sets, edge_of, nulls):
        grouped.setdefault(e, []).append((s, null))
    records = []
    for e in sorted(grouped):
        flags = dict(grouped[e])
        for s in canonical_sort(flags):
            records.append(VersalRecord(edge_index=e, set=s, is_null=flags[s]))
    return records


def null_versals(hypergraph: Hypergraph, materialize: bool = False) -> VersalCensus:
    """
    Census of Z'(H), the versals disjoint from their edge.

    Only subsets of each edge complement are enumerated (2^(n-|e|) candidates per
    edge), which keeps this cheap enough for the exhaustive uniform sweeps.
    """
    m = hypergraph.m
    counts = [0] * m
    records: List[VersalRecord] = []
    if m == 0:
        return VersalCensus([], [], 0, 0)

    full = hypergraph.full
    edges, sizes = edge_arrays(hypergraph)
    pending = []
    pending_rows = 0

    def flush():
        candidates = np.concatenate([block for _, block in pending])
        owners = np.concatenate([np.full(len(block), e, dtype=np.int64) for e, block in pending])
        weights = sizes[None, :] + popcounts(candidates[:, None] & edges[None, :])
        rows = np.arange(len(candidates))
        own = weights[rows, owners].copy()
        weights[rows, owners] = np.iinfo(np.int64).max
        ok = own < weights.min(axis=1) if m > 1 else np.ones(len(candidates), dtype=bool)
        for e, c in zip(*np.unique(owners[ok], return_counts=True)):
            counts[int(e)] += int(c)
        if materialize:
            for e, s in zip(owners[ok].tolist(), candidates[ok].tolist()):
                records.append(VersalRecord(edge_index=e, set=s, is_null=True))

    for e, mask in enumerate(hypergraph.edges):
        complement = full ^ mask
        _check_enumerable(complement.bit_count())
        block = submasks(complement)
        pending.append((e, block))
        pending_rows += len(block)
        if pending_rows >= CHUNK:
            flush()
            pending, pending_rows = [], 0
    if pending:
        flush()

    census = VersalCensus(
        per_edge_counts=list(counts),
        per_edge_null_counts=list(counts),
        total=sum(counts),
        null_total=sum(counts),
    )
    if materialize:
        census.records = _records(
            [r.set for r in records], [r.edge_index for r in records], [True] * len(records)
        )
    return census


def count_null_versals(hypergraph: Hypergraph) -> int:
    return null_versals(hypergraph).null_total


def edge_free(hypergraph: Hypergraph, edge_index: int, v: int) -> bool:
    """
    Whether v is free for the edge: some versal S of e has v outside S and e.

    Versals stay versals when vertices outside e are added or vertices of e are
    removed, so this holds exactly when the complement of e minus v is a versal.
    """
    hypergraph.check_edge_index(edge_index)
    hypergraph.check_vertex(v)
    e = hypergraph.edges[edge_index]
    if e >> v & 1:
        raise ValidationError(f"vertex {v} belongs to edge {edge_index}")
    return is_versal(hypergraph, edge_index, (hypergraph.full ^ e) & ~(1 << v))


def free_vertices(hypergraph: Hypergraph, edge_index: int) -> List[int]:
    hypergraph.check_edge_index(edge_index)
    outside = members(hypergraph.full ^ hypergraph.edges[edge_index])
    if not outside:
        return []
    complement = hypergraph.full ^ hypergraph.edges[edge_index]
    candidates = np.array([complement & ~(1 << v) for v in outside], dtype=np.int64)
    ok = _versal_rows(hypergraph, edge_index, candidates)
    return [v for v, flag in zip(outside, ok.tolist()) if flag]


def free_pairs(hypergraph: Hypergraph) -> int:
    """q: the number of (edge, vertex) pairs with the vertex free for the edge."""
    return sum(len(free_vertices(hypergraph, e)) for e in range(hypergraph.m))


def census_frame(hypergraph: Hypergraph, census: Optional[VersalCensus] = None) -> pd.DataFrame:
    if census is None:
        census = all_versals(hypergraph)
    return pd.DataFrame(
        {
            "edge": list(range(hypergraph.m)),
            "members": [" ".join(map(str, members(e))) for e in hypergraph.edges],
            "versals": census.per_edge_counts,
            "null_versals": census.per_edge_null_counts,
            "free": [len(free_vertices(hypergraph, e)) for e in range(hypergraph.m)],
        }
    )
