"""
Executable verdicts.

Every claim is a function `(Hypergraph) -> Verdict` registered in `CLAIMS`:

- `main_theorem`: |Z(H)| >= n + 1 unless H is S_n, its reflection or a labeled C4,
  where |Z(H)| = n.
- `theorem2`: for uniform H with 2r <= n and m > 1, |Z'(H)| >= n + 1 unless H is a
  spanning star (|Z'| = m = n - r + 1), S_n, or a binary star with s = r and
  n = 2r (|Z'| = n).
- `bounds`: |Z'| >= m 2^(n-m-r+1) when n > 2r and m <= n - r, and
  |Z'| >= m 2^(r-m+1) when n = 2r and m < r.
- `lifting`: versals of the minimum layer stay versals in H.
- `lemma1`: for uniform H, S -> complement(S) maps L(e) onto L(complement(e)) in
  the reflection.
- `lemma3`, `lemma4`: free vertices around edges of minimum size.
- `lemma5`: for flags, more than one pole <=> star <=> every edge a pole.
- `lemma6`: for uniform H with n >= 2r and n - r + 1 <= m <= n, every edge is a
  pole <=> H is a spanning star or a binary star with s = r and m = n = 2r.
- `theorem7`: the counting formulas of spanning stars and binary stars.

plus the property claims `disjointness`, `uniform_equivalence`, `upward_closure`,
`power_bound`, `counting_floor`, `pennant_free` and `isolation`.

A verdict is `not_applicable` when the instance is outside the claim's hypothesis.
Inputs without edges are refused with `HypothesisError`.
"""

from dataclasses import replace
from typing import Callable, Dict, List, Optional

import numpy as np

from ..core import Hypergraph, parse_hypergraph
from ..engine import (
    all_versals,
    count_null_versals,
    free_pairs,
    free_vertices,
    null_versals,
    owner_table,
    versal_matrix,
)
from ..engine.versal import CHUNK, edge_arrays
from ..exceptions import HypothesisError, ValidationError
from ..families import classify, is_flag, is_star, poles
from ..isolation import check_round_trip
from ..types import FamilyKind, FamilyTag, Outcome, Verdict
from ..utils import members, popcounts

Check = Callable[[Hypergraph], Verdict]


def _require_edges(hypergraph: Hypergraph, claim: str):
    if hypergraph.m == 0:
        raise HypothesisError(f"{claim} needs a hypergraph with at least one edge")


def _basics(hypergraph: Hypergraph) -> Dict[str, int]:
    return {"n": hypergraph.n, "m": hypergraph.m}


def _not_applicable(claim: str, hypergraph: Hypergraph, reason: str) -> Verdict:
    detail = _basics(hypergraph)
    detail["reason"] = reason
    return Verdict.for_instance(claim, hypergraph, Outcome.NOT_APPLICABLE, detail=detail)


def _passed(claim: str, hypergraph: Hypergraph, detail: Optional[dict] = None) -> Verdict:
    detail = detail or _basics(hypergraph)
    return Verdict.for_instance(claim, hypergraph, Outcome.PASS, detail=detail)


def _is_uniform_with_edges(hypergraph: Hypergraph, minimum: int = 1) -> bool:
    return hypergraph.m >= minimum and hypergraph.is_uniform()


def _shape_may_be_exception(hypergraph: Hypergraph, r: int) -> bool:
    n, m = hypergraph.n, hypergraph.m
    return m == n - r + 1 or m == n == 2 * r


def _edge_index(hypergraph: Hypergraph) -> Dict[int, int]:
    return {e: i for i, e in enumerate(hypergraph.edges)}


def check_main_theorem(hypergraph: Hypergraph) -> Verdict:
    """
    Example:
    ```python
    check_main_theorem(gen_c4()).outcome  # Outcome.EXCEPTION
    ```

    Args:
        hypergraph (Hypergraph): Any hypergraph with at least one edge.

    Returns:
        Verdict: `pass` when |Z(H)| >= n + 1; `exception_as_predicted` when H is
            S_n, the co-singletons or a labeled C4 and |Z(H)| = n; a counterexample
            otherwise, including a predicted family whose count is not n.
    """
    _require_edges(hypergraph, "main_theorem")
    n, m = hypergraph.n, hypergraph.m
    z = all_versals(hypergraph).total
    detail = {"n": n, "m": m, "z": z}

    if m == 1:
        detail["vacuous"] = True
        return Verdict.for_instance("main_theorem", hypergraph, Outcome.PASS, detail=detail)

    tag = classify(hypergraph)
    predicted = tag.kind in (FamilyKind.SINGLETONS, FamilyKind.CO_SINGLETONS) or tag.is_c4
    if predicted:
        detail["family"] = "c4" if tag.is_c4 else tag.kind.value
        if z == n:
            return Verdict.for_instance(
                "main_theorem", hypergraph, Outcome.EXCEPTION, detail=detail
            )
        witness = {"z": z, "expected": n, "family": detail["family"]}
        return Verdict.for_instance(
            "main_theorem", hypergraph, Outcome.COUNTEREXAMPLE, detail=detail, witness=witness
        )

    if z >= n + 1:
        return Verdict.for_instance("main_theorem", hypergraph, Outcome.PASS, detail=detail)
    return Verdict.for_instance(
        "main_theorem",
        hypergraph,
        Outcome.COUNTEREXAMPLE,
        detail=detail,
        witness={"z": z, "bound": n + 1, "family": tag.kind.value},
    )


def _theorem2_exception(hypergraph: Hypergraph, r: int) -> Optional[FamilyTag]:
    if not _shape_may_be_exception(hypergraph, r):
        return None
    n = hypergraph.n
    tag = classify(hypergraph)
    if tag.kind == FamilyKind.SINGLETONS:
        return tag
    if tag.kind == FamilyKind.STAR and tag.spanning:
        return tag
    if tag.kind == FamilyKind.BINARY_STAR and tag.star_size == r and n == 2 * r:
        return tag
    return None


def check_theorem2(hypergraph: Hypergraph) -> Verdict:
    """
    Null-versal count for uniform H with 2r <= n and m > 1.

    The predicted exceptions have |Z'(H)| = m: a spanning star has m = n - r + 1
    edges, S_n and a binary star with s = r, n = 2r have m = n. Non-spanning stars
    are not predicted and are reported like any other instance.
    """
    _require_edges(hypergraph, "theorem2")
    if not _is_uniform_with_edges(hypergraph, minimum=2):
        return _not_applicable("theorem2", hypergraph, "needs a uniform hypergraph with m > 1")
    n, m, r = hypergraph.n, hypergraph.m, hypergraph.rank()
    if 2 * r > n:
        return _not_applicable("theorem2", hypergraph, "needs 2r <= n")

    z_null = count_null_versals(hypergraph)
    detail = {"n": n, "m": m, "r": r, "null_versals": z_null}
    tag = _theorem2_exception(hypergraph, r)

    if tag is not None:
        detail["family"] = tag.kind.value
        if z_null == m:
            return Verdict.for_instance("theorem2", hypergraph, Outcome.EXCEPTION, detail=detail)
        return Verdict.for_instance(
            "theorem2",
            hypergraph,
            Outcome.COUNTEREXAMPLE,
            detail=detail,
            witness={"null_versals": z_null, "expected": m, "family": tag.kind.value},
        )

    if z_null >= n + 1:
        return Verdict.for_instance("theorem2", hypergraph, Outcome.PASS, detail=detail)

    found = classify(hypergraph)
    witness = {"null_versals": z_null, "bound": n + 1, "family": found.kind.value}
    if found.spanning is not None:
        witness["spanning"] = found.spanning
    return Verdict.for_instance(
        "theorem2", hypergraph, Outcome.COUNTEREXAMPLE, detail=detail, witness=witness
    )


def check_bounds(hypergraph: Hypergraph) -> Verdict:
    _require_edges(hypergraph, "bounds")
    if not _is_uniform_with_edges(hypergraph, minimum=2):
        return _not_applicable("bounds", hypergraph, "needs a uniform hypergraph with m > 1")
    n, m, r = hypergraph.n, hypergraph.m, hypergraph.rank()

    if n > 2 * r and m <= n - r:
        case, bound = "spread", m * 2 ** (n - m - r + 1)
    elif n == 2 * r and m < r:
        case, bound = "balanced", m * 2 ** (r - m + 1)
    else:
        reason = "neither n > 2r, m <= n - r nor n = 2r, m < r"
        return _not_applicable("bounds", hypergraph, reason)

    z_null = count_null_versals(hypergraph)
    detail = {"n": n, "m": m, "r": r, "case": case, "bound": bound, "null_versals": z_null}
    if z_null >= bound:
        return Verdict.for_instance("bounds", hypergraph, Outcome.PASS, detail=detail)
    return Verdict.for_instance(
        "bounds",
        hypergraph,
        Outcome.COUNTEREXAMPLE,
        detail=detail,
        witness={"null_versals": z_null, "bound": bound},
    )


def _spanning_core_family(layer: Hypergraph) -> bool:
    if layer.m < 2:
        return False
    tag = classify(layer)
    if tag.kind == FamilyKind.SINGLETONS:
        return True
    return tag.kind in (FamilyKind.STAR, FamilyKind.BINARY_STAR) and bool(tag.spanning)


def check_lifting(hypergraph: Hypergraph) -> Verdict:
    """
    Versals of the minimum layer H' lift to versals of H.

    With rho the smallest edge size: when n >= 2 rho every null versal of an edge
    in H' is a versal of the same edge in H; when n < 2 rho the complement of every
    null versal of the reflection of H' is a versal in H. When H' is a spanning
    star or binary star, every versal of e in H' contains the complement of e and
    is a versal of e in H as well.
    """
    _require_edges(hypergraph, "lifting")
    layer = hypergraph.min_layer()
    n, rho = hypergraph.n, hypergraph.min_rank()
    detail = {"n": n, "m": hypergraph.m, "rho": rho}
    if layer.m == hypergraph.m:
        detail["trivial"] = True
        return Verdict.for_instance("lifting", hypergraph, Outcome.PASS, detail=detail)

    owners = owner_table(hypergraph)
    index = _edge_index(hypergraph)
    full = hypergraph.full

    if n >= 2 * rho:
        detail["mode"] = "null"
        records = null_versals(layer, materialize=True).records
        pairs = [(layer.edges[rec.edge_index], rec.set) for rec in records]
    else:
        detail["mode"] = "complement"
        reflected = layer.reflect()
        records = null_versals(reflected, materialize=True).records
        pairs = [(layer.edges[rec.edge_index], full ^ rec.set) for rec in records]

    for edge, s in pairs:
        if owners[s] != index[edge]:
            return Verdict.for_instance(
                "lifting",
                hypergraph,
                Outcome.COUNTEREXAMPLE,
                detail=detail,
                witness={"edge": members(edge), "set": members(s), "mode": detail["mode"]},
            )
    detail["lifted"] = len(pairs)

    if _spanning_core_family(layer):
        layer_owners = owner_table(layer)
        subsets = np.flatnonzero(layer_owners >= 0)
        for j, edge in enumerate(layer.edges):
            own = subsets[layer_owners[subsets] == j]
            outside = full ^ edge
            bad = own[((own & outside) != outside) | (owners[own] != index[edge])]
            if len(bad):
                return Verdict.for_instance(
                    "lifting",
                    hypergraph,
                    Outcome.COUNTEREXAMPLE,
                    detail=detail,
                    witness={"edge": members(edge), "set": members(int(bad[0])), "mode": "star"},
                )
        detail["star_lifted"] = int(len(subsets))

    return Verdict.for_instance("lifting", hypergraph, Outcome.PASS, detail=detail)


def check_lemma1(hypergraph: Hypergraph) -> Verdict:
    _require_edges(hypergraph, "lemma1")
    if not hypergraph.is_uniform():
        return _not_applicable("lemma1", hypergraph, "needs a uniform hypergraph")
    if hypergraph.full in hypergraph.edges:
        return _not_applicable("lemma1", hypergraph, "an edge equals the vertex set")

    reflected = hypergraph.reflect()
    owners = owner_table(hypergraph)
    reflected_owners = owner_table(reflected)
    subsets = np.arange(len(owners), dtype=np.int64)
    mapped = reflected_owners[hypergraph.full ^ subsets]

    z, z_reflected = int((owners >= 0).sum()), int((reflected_owners >= 0).sum())
    detail = {"n": hypergraph.n, "m": hypergraph.m, "z": z, "z_reflected": z_reflected}
    wrong = np.flatnonzero(mapped != owners)
    if len(wrong):
        s = int(wrong[0])
        return Verdict.for_instance(
            "lemma1",
            hypergraph,
            Outcome.COUNTEREXAMPLE,
            detail=detail,
            witness={"set": members(s), "edge": int(owners[s]), "reflected_edge": int(mapped[s])},
        )
    return Verdict.for_instance("lemma1", hypergraph, Outcome.PASS, detail=detail)


def check_lemma3(hypergraph: Hypergraph) -> Verdict:
    """
    A vertex outside a minimum edge e that is not free for e is the only vertex
    some other minimum edge has outside e.
    """
    _require_edges(hypergraph, "lemma3")
    rho = hypergraph.min_rank()
    full = hypergraph.full
    smallest = [e for e, k in zip(hypergraph.edges, hypergraph.sizes) if k == rho]
    checked = 0

    for i, (e, k) in enumerate(zip(hypergraph.edges, hypergraph.sizes)):
        if k != rho:
            continue
        outside = full ^ e
        free = set(free_vertices(hypergraph, i))
        for v in members(outside):
            if v in free:
                continue
            checked += 1
            if not any(f & outside == 1 << v for f in smallest if f != e):
                return Verdict.for_instance(
                    "lemma3",
                    hypergraph,
                    Outcome.COUNTEREXAMPLE,
                    detail={"n": hypergraph.n, "m": hypergraph.m, "rho": rho},
                    witness={"edge": members(e), "vertex": v},
                )

    detail = {"n": hypergraph.n, "m": hypergraph.m, "rho": rho, "bound_vertices": checked}
    return Verdict.for_instance("lemma3", hypergraph, Outcome.PASS, detail=detail)


def check_lemma4(hypergraph: Hypergraph) -> Verdict:
    _require_edges(hypergraph, "lemma4")
    rho = hypergraph.min_rank()
    degrees = hypergraph.degrees()
    edges = hypergraph.edges
    has_free: Dict[int, bool] = {}
    triples = 0

    for fi, f in enumerate(edges):
        for u in members(f):
            if degrees[u] != 1:
                continue
            rest = f & ~(1 << u)
            for ei, e in enumerate(edges):
                if ei == fi or rest & e != rest:
                    continue
                for gi, g in enumerate(edges):
                    if gi == fi or g.bit_count() != rho or (f & g).bit_count() >= rho - 1:
                        continue
                    triples += 1
                    if gi not in has_free:
                        has_free[gi] = bool(free_vertices(hypergraph, gi))
                    if not has_free[gi]:
                        return Verdict.for_instance(
                            "lemma4",
                            hypergraph,
                            Outcome.COUNTEREXAMPLE,
                            detail={"n": hypergraph.n, "m": hypergraph.m, "rho": rho},
                            witness={
                                "e": members(e),
                                "f": members(f),
                                "g": members(g),
                                "u": u,
                            },
                        )

    detail = {"n": hypergraph.n, "m": hypergraph.m, "rho": rho, "triples": triples}
    return Verdict.for_instance("lemma4", hypergraph, Outcome.PASS, detail=detail)


def check_lemma5(hypergraph: Hypergraph) -> Verdict:
    _require_edges(hypergraph, "lemma5")
    if not _is_uniform_with_edges(hypergraph, minimum=2):
        return _not_applicable("lemma5", hypergraph, "needs a uniform hypergraph with m > 1")
    n, m, r = hypergraph.n, hypergraph.m, hypergraph.rank()
    if m != n - r + 1 or not any(is_flag(hypergraph, i) for i in range(m)):
        return _not_applicable("lemma5", hypergraph, "not a flag")

    found = poles(hypergraph)
    statements = {
        "several_poles": len(found) > 1,
        "star": is_star(hypergraph),
        "every_edge_pole": len(found) == m,
    }
    detail = {"n": n, "m": m, "r": r, "poles": len(found), **statements}
    if len(set(statements.values())) == 1:
        return Verdict.for_instance("lemma5", hypergraph, Outcome.PASS, detail=detail)
    return Verdict.for_instance(
        "lemma5", hypergraph, Outcome.COUNTEREXAMPLE, detail=detail, witness=dict(statements)
    )


def check_lemma6(hypergraph: Hypergraph) -> Verdict:
    """
    Every edge is a pole exactly for the spanning (n - r + 1)-star and, when
    m = n = 2r, the binary star with star size r.
    """
    _require_edges(hypergraph, "lemma6")
    if not _is_uniform_with_edges(hypergraph, minimum=2):
        return _not_applicable("lemma6", hypergraph, "needs a uniform hypergraph with m > 1")
    n, m, r = hypergraph.n, hypergraph.m, hypergraph.rank()
    if n < 2 * r or not n - r + 1 <= m <= n:
        return _not_applicable("lemma6", hypergraph, "needs n >= 2r and n - r + 1 <= m <= n")

    every_pole = len(poles(hypergraph)) == m
    spanning_star = is_star(hypergraph) and n == r - 1 + m
    binary = False
    if m == n == 2 * r:
        tag = classify(hypergraph)
        binary = tag.kind == FamilyKind.BINARY_STAR and tag.star_size == r
    detail = {
        "n": n,
        "m": m,
        "r": r,
        "every_edge_pole": every_pole,
        "spanning_star": spanning_star,
        "binary_star": binary,
    }
    if every_pole == (spanning_star or binary):
        return Verdict.for_instance("lemma6", hypergraph, Outcome.PASS, detail=detail)
    return Verdict.for_instance(
        "lemma6",
        hypergraph,
        Outcome.COUNTEREXAMPLE,
        detail=detail,
        witness={"every_edge_pole": every_pole, "structural": spanning_star or binary},
    )


def check_theorem7(hypergraph: Hypergraph) -> Verdict:
    """
    Counting formulas for the extremal uniform families.

    A spanning star of rank r with m edges has exactly 2^(r-1) m versals and, for
    r >= 2 and n >= 3, at least n + 1. A spanning binary star with star size s has
    exactly 2s null versals and, for r > 2, at least n + 1 versals. Other uniform
    hypergraphs get the `main_theorem` verdict.
    """
    _require_edges(hypergraph, "theorem7")
    if not hypergraph.is_uniform():
        return _not_applicable("theorem7", hypergraph, "needs a uniform hypergraph")
    if hypergraph.m == 1:
        return replace(check_main_theorem(hypergraph), claim="theorem7")

    n, m = hypergraph.n, hypergraph.m
    tag = classify(hypergraph)
    is_spanning_star = tag.kind == FamilyKind.SINGLETONS or (
        tag.kind == FamilyKind.STAR and tag.spanning
    )
    is_spanning_binary = tag.kind == FamilyKind.BINARY_STAR and tag.spanning
    if not (is_spanning_star or is_spanning_binary):
        return replace(check_main_theorem(hypergraph), claim="theorem7")

    r = tag.r
    z = all_versals(hypergraph).total
    detail = {"n": n, "m": m, "r": r, "z": z, "family": tag.kind.value}
    failures = {}

    if is_spanning_star:
        detail["formula"] = 2 ** (r - 1) * m
        if z != detail["formula"]:
            failures["formula"] = detail["formula"]
        if r >= 2 and n >= 3 and z < n + 1:
            failures["bound"] = n + 1
    else:
        z_null = count_null_versals(hypergraph)
        detail["null_versals"] = z_null
        if z_null != m:
            failures["null_versals"] = m
        if r > 2 and z < n + 1:
            failures["bound"] = n + 1

    if failures:
        witness = {"z": z, **{f"expected_{k}": v for k, v in failures.items()}}
        return Verdict.for_instance(
            "theorem7", hypergraph, Outcome.COUNTEREXAMPLE, detail=detail, witness=witness
        )
    return Verdict.for_instance("theorem7", hypergraph, Outcome.PASS, detail=detail)


def check_disjointness(hypergraph: Hypergraph) -> Verdict:
    """No set is a versal for two edges; the per-edge definition matches the owner table."""
    _require_edges(hypergraph, "disjointness")
    owners = owner_table(hypergraph)
    size = len(owners)
    for start in range(0, size, CHUNK):
        subsets = np.arange(start, min(size, start + CHUNK), dtype=np.int64)
        matrix = versal_matrix(hypergraph, subsets)
        hits = matrix.sum(axis=1)
        chosen = np.where(hits == 1, matrix.argmax(axis=1), -1)
        wrong = np.flatnonzero((hits > 1) | (chosen != owners[start:start + len(subsets)]))
        if len(wrong):
            s = int(subsets[wrong[0]])
            return Verdict.for_instance(
                "disjointness",
                hypergraph,
                Outcome.COUNTEREXAMPLE,
                detail=_basics(hypergraph),
                witness={"set": members(s), "edges": np.flatnonzero(matrix[wrong[0]]).tolist()},
            )
    return _passed("disjointness", hypergraph)


def check_uniform_equivalence(hypergraph: Hypergraph) -> Verdict:
    _require_edges(hypergraph, "uniform_equivalence")
    if not hypergraph.is_uniform():
        return _not_applicable("uniform_equivalence", hypergraph, "needs a uniform hypergraph")
    edges, _ = edge_arrays(hypergraph)
    m = hypergraph.m
    size = 1 << hypergraph.n
    for start in range(0, size, CHUNK):
        subsets = np.arange(start, min(size, start + CHUNK), dtype=np.int64)
        general = versal_matrix(hypergraph, subsets)
        meets = popcounts(subsets[:, None] & edges[None, :])
        simple = np.zeros_like(general)
        for e in range(m):
            smaller = meets[:, [e]] < meets
            smaller[:, e] = True
            simple[:, e] = smaller.all(axis=1)
        wrong = np.argwhere(general != simple)
        if len(wrong):
            row, e = wrong[0]
            return Verdict.for_instance(
                "uniform_equivalence",
                hypergraph,
                Outcome.COUNTEREXAMPLE,
                detail=_basics(hypergraph),
                witness={
                    "set": members(int(subsets[row])),
                    "edge": int(e),
                    "general": bool(general[row, e]),
                },
            )
    return _passed("uniform_equivalence", hypergraph)


def check_upward_closure(hypergraph: Hypergraph) -> Verdict:
    """Adding a vertex outside S and e to a versal S of e gives another versal of e."""
    _require_edges(hypergraph, "upward_closure")
    owners = owner_table(hypergraph)
    edges, _ = edge_arrays(hypergraph)
    subsets = np.flatnonzero(owners >= 0)
    edge_of = owners[subsets]
    for v in range(hypergraph.n):
        bit = 1 << v
        room = ((subsets | edges[edge_of]) & bit) == 0
        grown = owners[subsets[room] | bit]
        wrong = np.flatnonzero(grown != edge_of[room])
        if len(wrong):
            s = int(subsets[room][wrong[0]])
            return Verdict.for_instance(
                "upward_closure",
                hypergraph,
                Outcome.COUNTEREXAMPLE,
                detail=_basics(hypergraph),
                witness={"set": members(s), "edge": int(owners[s]), "vertex": v},
            )
    return _passed("upward_closure", hypergraph)


def check_power_bound(hypergraph: Hypergraph) -> Verdict:
    """|L(e)| >= 2^p whenever some versal S of e leaves p vertices outside S and e."""
    _require_edges(hypergraph, "power_bound")
    owners = owner_table(hypergraph)
    edges, _ = edge_arrays(hypergraph)
    m = hypergraph.m
    subsets = np.flatnonzero(owners >= 0)
    edge_of = owners[subsets]
    counts = np.bincount(edge_of, minlength=m)
    covered = np.full(m, hypergraph.n, dtype=np.int64)
    np.minimum.at(covered, edge_of, popcounts(subsets | edges[edge_of]))
    exponent = np.where(counts > 0, hypergraph.n - covered, 0)

    for e in range(m):
        if counts[e] < 2 ** int(exponent[e]):
            return Verdict.for_instance(
                "power_bound",
                hypergraph,
                Outcome.COUNTEREXAMPLE,
                detail=_basics(hypergraph),
                witness={"edge": e, "versals": int(counts[e]), "free": int(exponent[e])},
            )
    return _passed("power_bound", hypergraph)


def check_counting_floor(hypergraph: Hypergraph) -> Verdict:
    _require_edges(hypergraph, "counting_floor")
    if not _is_uniform_with_edges(hypergraph, minimum=2):
        reason = "needs a uniform hypergraph with m > 1"
        return _not_applicable("counting_floor", hypergraph, reason)
    q = free_pairs(hypergraph)
    z_null = count_null_versals(hypergraph)
    detail = {**_basics(hypergraph), "q": q, "null_versals": z_null}
    if hypergraph.m + q <= z_null:
        return Verdict.for_instance("counting_floor", hypergraph, Outcome.PASS, detail=detail)
    return Verdict.for_instance(
        "counting_floor",
        hypergraph,
        Outcome.COUNTEREXAMPLE,
        detail=detail,
        witness={"m_plus_q": hypergraph.m + q, "null_versals": z_null},
    )


def check_pennant_free(hypergraph: Hypergraph) -> Verdict:
    """In a uniform hypergraph every vertex outside e that is not a pennant tip is free for e."""
    _require_edges(hypergraph, "pennant_free")
    if not _is_uniform_with_edges(hypergraph, minimum=2):
        return _not_applicable("pennant_free", hypergraph, "needs a uniform hypergraph with m > 1")
    r = hypergraph.rank()
    for i, e in enumerate(hypergraph.edges):
        tips = 0
        for j, f in enumerate(hypergraph.edges):
            if j != i and (f & e).bit_count() == r - 1:
                tips |= f & ~e
        free = set(free_vertices(hypergraph, i))
        for v in members(hypergraph.full ^ e ^ tips):
            if v not in free:
                return Verdict.for_instance(
                    "pennant_free",
                    hypergraph,
                    Outcome.COUNTEREXAMPLE,
                    detail=_basics(hypergraph),
                    witness={"edge": members(e), "vertex": v},
                )
    return _passed("pennant_free", hypergraph)


CLAIMS: Dict[str, Check] = {
    "main_theorem": check_main_theorem,
    "theorem2": check_theorem2,
    "bounds": check_bounds,
    "lifting": check_lifting,
    "lemma1": check_lemma1,
    "lemma3": check_lemma3,
    "lemma4": check_lemma4,
    "lemma5": check_lemma5,
    "lemma6": check_lemma6,
    "theorem7": check_theorem7,
    "disjointness": check_disjointness,
    "uniform_equivalence": check_uniform_equivalence,
    "upward_closure": check_upward_closure,
    "power_bound": check_power_bound,
    "counting_floor": check_counting_floor,
    "pennant_free": check_pennant_free,
    "isolation": check_round_trip,
}

ALIASES: Dict[str, List[str]] = {
    "properties": [
        "lemma3",
        "lemma4",
        "counting_floor",
        "power_bound",
        "upward_closure",
        "disjointness",
        "uniform_equivalence",
        "pennant_free",
    ],
}

LEMMAS = ("lemma1", "lemma3", "lemma4", "lemma5", "lemma6", "theorem7")


def resolve_claims(names) -> List[str]:
    """
    Normalizes claim names (hyphens or underscores, comma-separated strings allowed)
    and expands aliases, keeping first occurrences in order.
    """
    if isinstance(names, str):
        names = names.split(",")
    resolved: List[str] = []
    for raw in names:
        name = raw.strip().replace("-", "_")
        if not name:
            continue
        expanded = ALIASES.get(name, [name])
        for claim in expanded:
            if claim not in CLAIMS:
                known = ", ".join(sorted(CLAIMS) + sorted(ALIASES))
                raise ValidationError(f"unknown claim {raw!r}; choose from {known}")
            if claim not in resolved:
                resolved.append(claim)
    if not resolved:
        raise ValidationError("no claim given")
    return resolved


def run_check(claim: str, hypergraph: Hypergraph) -> Verdict:
    return CLAIMS[resolve_claims([claim])[0]](hypergraph)


def replay(verdict: Verdict) -> Verdict:
    """Re-runs a verdict's claim on the instance it carries."""
    return run_check(verdict.claim, parse_hypergraph(verdict.instance))
