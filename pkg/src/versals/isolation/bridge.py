"""
Versals as weightings with a unique minimum-weight edge.

A weighting w assigns a positive integer to every vertex; the weight of an edge is
the sum over its vertices. S is a versal for e exactly when the weighting that is 2
on S and 1 elsewhere gives e the strictly smallest weight, so the {1,2}-weightings
with a unique minimum edge are in bijection with Z(H).
"""

from fractions import Fraction
from functools import partial
from math import ceil, sqrt
from typing import List, Optional

import numpy as np

from ..core import Hypergraph, VertexSet
from ..engine import ENUMERATION_LIMIT, all_versals, is_versal, owner_table
from ..engine.versal import CHUNK
from ..exceptions import EnumerationLimitError, HypothesisError, NotAVersalError, ValidationError
from ..types import Outcome, ProbabilityResult, Verdict, Weighting
from ..utils import derive_seed, log, members, parallel_map

EXACT_BUDGET = 1 << 22

MC_BLOCK = 10_000


def incidence(hypergraph: Hypergraph) -> np.ndarray:
    """The n x m vertex/edge incidence matrix."""
    matrix = np.zeros((hypergraph.n, hypergraph.m), dtype=np.int64)
    for j, e in enumerate(hypergraph.edges):
        matrix[members(e), j] = 1
    return matrix


def _unique_minimum(sums: np.ndarray) -> np.ndarray:
    lowest = sums.min(axis=1)
    ties = (sums == lowest[:, None]).sum(axis=1)
    return np.where(ties == 1, sums.argmin(axis=1), -1)


def weight_from_versal(hypergraph: Hypergraph, edge_index: int, s: VertexSet) -> Weighting:
    """
    Example:
    ```python
    weight_from_versal(gen_c4(), 0, vertex_set([2, 3])).values  # (1, 1, 2, 2)
    ```

    The weighting that is 2 on the versal and 1 off it.

    Raises:
        NotAVersalError: If `s` is not a versal of the edge.
    """
    if not is_versal(hypergraph, edge_index, s):
        raise NotAVersalError(f"{members(s)} is not a versal of edge {edge_index}")
    return Weighting(tuple(2 if s >> v & 1 else 1 for v in range(hypergraph.n)))


def edge_sums(hypergraph: Hypergraph, weighting: Weighting) -> List[int]:
    if len(weighting.values) != hypergraph.n:
        raise ValidationError(
            f"weighting has {len(weighting.values)} values for {hypergraph.n} vertices"
        )
    return [sum(weighting.values[v] for v in members(e)) for e in hypergraph.edges]


def unique_min_edge(hypergraph: Hypergraph, weighting: Weighting) -> Optional[int]:
    """The edge of strictly smallest weight, or None when the minimum is tied."""
    sums = edge_sums(hypergraph, weighting)
    if not sums:
        return None
    lowest = min(sums)
    if sums.count(lowest) != 1:
        return None
    return sums.index(lowest)


def _exact_hits(hypergraph: Hypergraph, k: int) -> int:
    n = hypergraph.n
    total = k ** n
    place = k ** np.arange(n, dtype=np.int64)
    matrix = incidence(hypergraph)
    hits = 0
    for start in range(0, total, CHUNK):
        index = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        weights = (index[:, None] // place[None, :]) % k + 1
        hits += int((_unique_minimum(weights @ matrix) >= 0).sum())
    return hits


def _mc_block(hypergraph: Hypergraph, k: int, seed: int, samples: int, block: int) -> int:
    size = min(MC_BLOCK, samples - block * MC_BLOCK)
    rng = np.random.default_rng(derive_seed("mc", seed, block))
    weights = rng.integers(1, k + 1, size=(size, hypergraph.n), dtype=np.int64)
    return int((_unique_minimum(weights @ incidence(hypergraph)) >= 0).sum())


def min_unique_probability(
    hypergraph: Hypergraph,
    k: int,
    mode: str = "exact",
    samples: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
) -> ProbabilityResult:
    """
    Probability that a uniform random weighting in {1..k}^n has a unique minimum edge.

    Args:
        hypergraph (Hypergraph): The hypergraph.
        k (int): Largest weight, at least 1.
        mode (str): "exact" enumerates all k^n weightings and reports a reduced
            fraction; "mc" samples `samples` weightings in fixed blocks of
            `MC_BLOCK`, each block seeded from (seed, block index).
        samples (int): Sample count for "mc".
        seed (int): Seed for "mc".
        jobs (int): Worker processes for "mc" blocks.

    Returns:
        ProbabilityResult: The probability, with |Z(H)| attached when n is small
            enough to enumerate.

    Raises:
        EnumerationLimitError: If k^n exceeds `EXACT_BUDGET` in exact mode.
    """
    if k < 1:
        raise ValidationError(f"k must be at least 1, got {k}")

    n, m = hypergraph.n, hypergraph.m
    versals = all_versals(hypergraph).total if n <= ENUMERATION_LIMIT else None

    if mode == "exact":
        total = k ** n
        if total > EXACT_BUDGET:
            raise EnumerationLimitError(
                f"{k}^{n} weightings exceed the exact budget of {EXACT_BUDGET}; use Monte Carlo"
            )
        hits = _exact_hits(hypergraph, k) if m else 0
        log(f"{hits} of {total} weightings have a unique minimum edge", title="Exact")
        probability = Fraction(hits, total)
        return ProbabilityResult(
            k=k,
            mode=mode,
            estimate=float(probability),
            numerator=probability.numerator,
            denominator=probability.denominator,
            versals=versals,
        )

    if mode != "mc":
        raise ValidationError(f"unknown probability mode {mode!r}")
    if samples is None or samples < 1:
        raise ValidationError("Monte Carlo mode needs a positive sample count")

    if m:
        blocks = list(range(ceil(samples / MC_BLOCK)))
        hits = sum(parallel_map(partial(_mc_block, hypergraph, k, seed, samples), blocks, jobs))
    else:
        hits = 0
    p = hits / samples
    log(f"{hits} of {samples} sampled weightings have a unique minimum edge", title="Monte Carlo")
    return ProbabilityResult(
        k=k,
        mode=mode,
        estimate=p,
        samples=samples,
        seed=seed,
        stderr=sqrt(p * (1 - p) / samples),
        versals=versals,
    )


def check_round_trip(hypergraph: Hypergraph) -> Verdict:
    """
    Compares the {1,2}-weightings with a unique minimum edge against the versals.

    The weight sums come from a product with the incidence matrix, independently of
    the popcount arithmetic of the owner table; both must name the same edge for
    every subset. The number of such weightings therefore equals |Z(H)| and the
    exact min-unique probability at k = 2 is |Z(H)| / 2^n.
    """
    if hypergraph.m == 0:
        raise HypothesisError("isolation needs at least one edge")

    n = hypergraph.n
    owners = owner_table(hypergraph)
    matrix = incidence(hypergraph)
    shifts = np.arange(n, dtype=np.int64)
    unique = 0
    size = 1 << n

    for start in range(0, size, CHUNK):
        subsets = np.arange(start, min(size, start + CHUNK), dtype=np.int64)
        weights = ((subsets[:, None] >> shifts[None, :]) & 1) + 1
        selected = _unique_minimum(weights @ matrix)
        unique += int((selected >= 0).sum())
        wrong = np.flatnonzero(selected != owners[start:start + len(subsets)])
        if len(wrong):
            s = int(subsets[wrong[0]])
            return Verdict.for_instance(
                "isolation",
                hypergraph,
                Outcome.COUNTEREXAMPLE,
                detail={"n": n, "m": hypergraph.m},
                witness={
                    "twos": members(s),
                    "weighting_edge": int(selected[wrong[0]]),
                    "versal_edge": int(owners[s]),
                },
            )

    z = int((owners >= 0).sum())
    detail = {"n": n, "m": hypergraph.m, "z": z, "unique_weightings": unique}
    if unique != z:
        return Verdict.for_instance(
            "isolation", hypergraph, Outcome.COUNTEREXAMPLE, detail=detail,
            witness={"unique_weightings": unique, "z": z},
        )
    return Verdict.for_instance("isolation", hypergraph, Outcome.PASS, detail=detail)
