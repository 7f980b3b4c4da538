"""
Recognition of the extremal families and the flag apparatus.

Recognition works on labeled vertices: a family is recognized from shared cores
and matching tips, never by searching for an isomorphism.

Pennants of an edge e in an r-uniform hypergraph are the other edges meeting e in
r-1 vertices; the one vertex a pennant has outside e is its tip. An edge is a pole
when the tips of its pennants cover its whole complement.
"""

from functools import reduce
from itertools import combinations
from typing import List, Optional, Tuple

from ..core import Hypergraph
from ..exceptions import ValidationError
from ..types import FamilyKind, FamilyTag, PoleReport
from ..utils import members


def _common(hypergraph: Hypergraph) -> int:
    return reduce(lambda a, b: a & b, hypergraph.edges, hypergraph.full)


def _require_uniform(hypergraph: Hypergraph):
    if not hypergraph.edges or not hypergraph.is_uniform():
        raise ValidationError("pennants are only defined for uniform hypergraphs")


def is_star(hypergraph: Hypergraph) -> bool:
    """Uniform, more than one edge, and all edges share r - 1 vertices."""
    if hypergraph.m < 2 or not hypergraph.is_uniform():
        return False
    return _common(hypergraph).bit_count() >= hypergraph.rank() - 1


def _binary_star(hypergraph: Hypergraph, r: int, common: int) -> Optional[Tuple[int, int]]:
    m = hypergraph.m
    if r < 2 or m % 2 or m < 4 or common.bit_count() != r - 2:
        return None

    s = m // 2
    degrees = hypergraph.degrees()
    candidates = [v for v in members(hypergraph.full ^ common) if degrees[v] == s]

    for a, b in combinations(candidates, 2):
        side_a = [e for e in hypergraph.edges if e >> a & 1]
        side_b = [e for e in hypergraph.edges if e >> b & 1]
        if len(side_a) != s or len(side_b) != s:
            continue
        if any(e >> a & 1 and e >> b & 1 for e in hypergraph.edges):
            continue

        core_a, core_b = common | 1 << a, common | 1 << b
        if reduce(lambda x, y: x & y, side_a) != core_a:
            continue
        if reduce(lambda x, y: x & y, side_b) != core_b:
            continue

        tips_a = {e & ~core_a for e in side_a}
        tips_b = {e & ~core_b for e in side_b}
        if len(tips_a) == s and tips_a == tips_b:
            return a, b
    return None


def classify(hypergraph: Hypergraph) -> FamilyTag:
    """
    Example:
    ```python
    classify(gen_star(3, 4)).kind  # FamilyKind.STAR
    ```

    Checks, in order: singletons, co-singletons, star, binary star. C4 is the
    binary star with r = s = 2 on four vertices and is flagged with `is_c4`.

    Args:
        hypergraph (Hypergraph): A hypergraph with at least one edge.

    Returns:
        FamilyTag: The recognized family and its parameters.
    """
    if hypergraph.m == 0:
        raise ValidationError("cannot classify a hypergraph without edges")

    n, m, sizes = hypergraph.n, hypergraph.m, hypergraph.sizes

    if m == n and all(k == 1 for k in sizes):
        return FamilyTag(kind=FamilyKind.SINGLETONS, r=1)

    if n >= 2 and m == n and all(k == n - 1 for k in sizes):
        return FamilyTag(kind=FamilyKind.CO_SINGLETONS, r=n - 1)

    r = hypergraph.rank()
    if m < 2 or not hypergraph.is_uniform():
        return FamilyTag(kind=FamilyKind.OTHER, r=r)

    common = _common(hypergraph)
    if common.bit_count() >= r - 1:
        return FamilyTag(
            kind=FamilyKind.STAR,
            r=r,
            star_size=m,
            core=members(common)[: r - 1],
            spanning=n == r - 1 + m,
        )

    pair = _binary_star(hypergraph, r, common)
    if pair is not None:
        s = m // 2
        return FamilyTag(
            kind=FamilyKind.BINARY_STAR,
            r=r,
            star_size=s,
            core=members(common),
            extra=list(pair),
            spanning=n == r + s,
            is_c4=r == 2 and s == 2 and n == 4,
        )

    return FamilyTag(kind=FamilyKind.OTHER, r=r)


def pole_report(hypergraph: Hypergraph, edge_index: int) -> PoleReport:
    """P(e) and N(e): the pennants of an edge and how many tips are still missing."""
    _require_uniform(hypergraph)
    hypergraph.check_edge_index(edge_index)
    r = hypergraph.rank()
    e = hypergraph.edges[edge_index]

    pennants = []
    tips = 0
    for j, f in enumerate(hypergraph.edges):
        if j != edge_index and (f & e).bit_count() == r - 1:
            pennants.append(j)
            tips |= f & ~e

    missing = (hypergraph.full ^ e).bit_count() - tips.bit_count()
    return PoleReport(
        edge_index=edge_index, pennants=pennants, missing=missing, is_pole=missing == 0
    )


def poles(hypergraph: Hypergraph) -> List[int]:
    return [i for i in range(hypergraph.m) if pole_report(hypergraph, i).is_pole]


def is_flag(hypergraph: Hypergraph, pole_index: int) -> bool:
    """
    Whether the whole hypergraph is a flag with the given pole.

    That needs m = n - r + 1, every other edge a pennant of the pole, pairwise
    distinct tips covering the complement of the pole, and tips of degree 1.
    """
    _require_uniform(hypergraph)
    hypergraph.check_edge_index(pole_index)
    n, m, r = hypergraph.n, hypergraph.m, hypergraph.rank()
    if m != n - r + 1:
        return False

    e = hypergraph.edges[pole_index]
    tips = []
    for j, f in enumerate(hypergraph.edges):
        if j == pole_index:
            continue
        if (f & e).bit_count() != r - 1:
            return False
        tips.append(f & ~e)

    if len(set(tips)) != len(tips) or reduce(lambda a, b: a | b, tips, 0) != hypergraph.full ^ e:
        return False

    degrees = hypergraph.degrees()
    return all(degrees[t.bit_length() - 1] == 1 for t in tips)
