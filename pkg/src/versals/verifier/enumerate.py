"""
Candidate streams for the verifier.

Exhaustive streams are deterministic and ordered; random generators are seeded
and produce the same hypergraph for the same (parameters, seed).
"""

from itertools import combinations
from math import comb
from typing import Iterator, List, Tuple

import numpy as np

from ..core import MAX_UNIVERSE, Hypergraph
from ..exceptions import EnumerationLimitError, ValidationError
from ..utils import canonical_sort, derive_seed, vertex_set

# M(n): antichains in the subset lattice of an n-set, the empty family and {{}} included.
DEDEKIND = {0: 2, 1: 3, 2: 6, 3: 20, 4: 168, 5: 7581, 6: 7828354}

MAX_ANTICHAIN_N = 5

MAX_UNIFORM_INSTANCES = 1 << 21


def antichain_count(n: int) -> int:
    """Hypergraphs produced by `enum_antichains(n)`: M(n) - 2."""
    return DEDEKIND[n] - 2


def antichain_edge_sets(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Every nonempty antichain of nonempty subsets of {0..n-1}, once each.

    Edges are drawn from the nonempty subsets in canonical order and a set is only
    added after sets that precede it, so each family appears with its edges sorted.
    """
    if not 0 <= n <= MAX_ANTICHAIN_N:
        raise EnumerationLimitError(
            f"exhaustive antichain enumeration supports n <= {MAX_ANTICHAIN_N}, got {n}"
        )
    pool = canonical_sort(range(1, 1 << n))
    chosen: List[int] = []

    def extend(start: int) -> Iterator[Tuple[int, ...]]:
        for i in range(start, len(pool)):
            s = pool[i]
            if any(c & s == c or c & s == s for c in chosen):
                continue
            chosen.append(s)
            yield tuple(chosen)
            yield from extend(i + 1)
            chosen.pop()

    yield from extend(0)


def enum_antichains(n: int) -> Iterator[Hypergraph]:
    for edges in antichain_edge_sets(n):
        yield Hypergraph(n, edges)


def _uniform_range(n: int, r: int, m_min: int, m_max: int) -> Tuple[int, int, int]:
    if not 1 <= n <= MAX_UNIVERSE:
        raise ValidationError(f"universe size {n} outside 1..{MAX_UNIVERSE}")
    if not 1 <= r <= n:
        raise ValidationError(f"rank {r} outside 1..{n}")
    pool = comb(n, r)
    if m_min < 1 or m_min > m_max or m_min > pool:
        raise ValidationError(
            f"edge count range {m_min}..{m_max} infeasible with {pool} possible edges"
        )
    return pool, m_min, min(m_max, pool)


def uniform_instance_count(n: int, r: int, m_min: int, m_max: int) -> int:
    pool, m_min, m_max = _uniform_range(n, r, m_min, m_max)
    return sum(comb(pool, m) for m in range(m_min, m_max + 1))


def uniform_edge_sets(n: int, r: int, m_min: int, m_max: int) -> Iterator[Tuple[int, ...]]:
    """All families of m distinct r-subsets for m_min <= m <= m_max, by m then lexicographically."""
    count = uniform_instance_count(n, r, m_min, m_max)
    if count > MAX_UNIFORM_INSTANCES:
        raise EnumerationLimitError(
            f"{count} uniform families at (n={n}, r={r}) exceed {MAX_UNIFORM_INSTANCES}; "
            "use random mode"
        )
    _, m_min, m_max = _uniform_range(n, r, m_min, m_max)
    pool = [vertex_set(c) for c in combinations(range(n), r)]
    for m in range(m_min, m_max + 1):
        yield from combinations(pool, m)


def enum_uniform(n: int, r: int, m_min: int, m_max: int) -> Iterator[Hypergraph]:
    for edges in uniform_edge_sets(n, r, m_min, m_max):
        yield Hypergraph(n, edges)


def random_antichain(n: int, seed: int) -> Hypergraph:
    """
    A seeded random antichain: a random family of nonempty subsets reduced to its
    containment-maximal members, edges in canonical order.
    """
    if not 1 <= n <= MAX_UNIVERSE:
        raise ValidationError(f"universe size {n} outside 1..{MAX_UNIVERSE}")
    rng = np.random.default_rng(derive_seed("antichain", n, seed))
    size = int(rng.integers(1, 2 * n + 1))
    family = set(rng.integers(1, 1 << n, size=size).tolist())
    maximal = [s for s in family if not any(s != t and s & t == s for t in family)]
    return Hypergraph(n, tuple(canonical_sort(maximal)))


def random_uniform(n: int, r: int, seed: int) -> Hypergraph:
    """A seeded random r-uniform hypergraph with 2 <= m <= min(C(n, r), 2n) edges."""
    pool, _, _ = _uniform_range(n, r, 1, 1)
    rng = np.random.default_rng(derive_seed("uniform", n, r, seed))
    m = 1 if pool < 2 else int(rng.integers(2, min(pool, 2 * n) + 1))
    edges = set()
    while len(edges) < m:
        edges.add(vertex_set(rng.choice(n, size=r, replace=False).tolist()))
    return Hypergraph(n, tuple(canonical_sort(edges)))
