"""
Suite runner.

The candidate stream of each scope is cut into chunks of `chunk_size` instances by
index. Chunks are evaluated in waves, one chunk per worker call, and every chunk
reports counts plus its first `max_counterexamples` counterexamples tagged with
their instance index. Merging adds counts and sorts by index before truncating,
so a report never depends on how many workers ran it.
"""

import time
from functools import partial
from itertools import islice
from math import comb
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

import pandas as pd

from ..core import Hypergraph
from ..exceptions import ImproperlyConfigured, ValidationError
from ..types import Outcome, SuiteConfig, SuiteReport, Verdict
from ..utils import log, worker_pool
from .checks import CLAIMS, LEMMAS, resolve_claims
from .enumerate import MAX_ANTICHAIN_N
from .scopes import AntichainScope, FamilyScope, RandomScope, SingleScope, UniformScope

Scope = Union[AntichainScope, UniformScope, RandomScope, FamilyScope, SingleScope]

WAVE = 4

MODES = ("exhaustive", "random", "families", "single")


def _as_list(config: Dict[str, Any], key: str) -> List[int]:
    value = config.get(key)
    if value is None:
        return []
    if isinstance(value, str):
        items = [v for v in value.split(",") if v.strip()]
    elif isinstance(value, (list, tuple)):
        items = list(value)
    else:
        items = [value]
    try:
        return [int(v) for v in items]
    except (TypeError, ValueError):
        raise ImproperlyConfigured(f"{key} must be integers, got {value!r}")


def _positive(config: Dict[str, Any], key: str, default: int, minimum: int = 1) -> int:
    value = config.get(key, default)
    if value is None:
        return default
    if not isinstance(value, int) or value < minimum:
        raise ImproperlyConfigured(f"{key} must be an integer >= {minimum}, got {value!r}")
    return value


def build_config(config: Dict[str, Any]) -> SuiteConfig:
    """
    Example:
    ```python
    build_config({"claims": "main-theorem", "n": [3, 4]})
    build_config({"claims": "lemma1", "mode": "random", "n": 12, "uniform": True,
                  "samples": 1000, "seed": 7})
    ```

    Builds a validated `SuiteConfig` from a plain dictionary.

    Args:
        config (dict): Keys `claims` (names or a comma-separated string), `mode`
            (`exhaustive`, `random`, `families` or `single`), `n`, `r`, `m_min`,
            `m_max`, `n_max`, `samples`, `seed`, `uniform`, `hypergraph`, `jobs`,
            `max_counterexamples` and `chunk_size`.

    Returns:
        SuiteConfig: The claims and the scopes to run them on.

    Raises:
        ImproperlyConfigured: For missing or inconsistent keys.
    """
    try:
        claims = resolve_claims(config.get("claims") or [])
    except ValidationError as e:
        raise ImproperlyConfigured(str(e))

    mode = config.get("mode", "exhaustive")
    if mode not in MODES:
        raise ImproperlyConfigured(f"mode must be one of {', '.join(MODES)}, got {mode!r}")

    ns = _as_list(config, "n")
    ranks = _as_list(config, "r")
    m_min = _positive(config, "m_min", 2)
    m_max = config.get("m_max")
    scopes: List[Scope] = []

    try:
        if mode == "single":
            hypergraph = config.get("hypergraph")
            if not isinstance(hypergraph, Hypergraph):
                raise ImproperlyConfigured("single mode needs a hypergraph")
            scopes.append(SingleScope(hypergraph))

        elif mode == "families":
            r_min, r_max = (min(ranks), max(ranks)) if ranks else (1, 5)
            size_max = m_max if m_max is not None else 6
            scopes.append(FamilyScope(r_min, r_max, m_min, size_max))

        elif mode == "random":
            if not ns:
                raise ImproperlyConfigured("random mode needs n")
            if len(ranks) > 1:
                raise ImproperlyConfigured("random mode takes at most one rank")
            n_max = config.get("n_max") or max(ns)
            scopes.append(
                RandomScope(
                    n_min=min(ns),
                    n_max=n_max,
                    samples=_positive(config, "samples", 1000),
                    seed=_positive(config, "seed", 0, minimum=0),
                    r=ranks[0] if ranks else None,
                    uniform=bool(config.get("uniform")) or bool(ranks),
                )
            )

        else:
            if not ns:
                raise ImproperlyConfigured("exhaustive mode needs n")
            for n in ns:
                if not ranks:
                    if n > MAX_ANTICHAIN_N:
                        raise ImproperlyConfigured(
                            f"exhaustive antichains need n <= {MAX_ANTICHAIN_N}; "
                            "give --r for uniform families or use random mode"
                        )
                    scopes.append(AntichainScope(n))
                    continue
                for r in ranks:
                    upper = comb(n, r) if m_max is None else m_max
                    scopes.append(UniformScope(n, r, m_min, upper))
    except ValidationError as e:
        raise ImproperlyConfigured(str(e))

    return SuiteConfig(
        claims=claims,
        scopes=scopes,
        jobs=_positive(config, "jobs", 1),
        max_counterexamples=_positive(config, "max_counterexamples", 50, minimum=0),
        chunk_size=_positive(config, "chunk_size", 2048),
    )


def _empty_tally() -> Dict[str, Any]:
    return {
        "instances": 0,
        "passed": 0,
        "not_applicable": 0,
        "vacuous": 0,
        "exceptions": [],
        "counterexamples": [],
        "counterexample_total": 0,
    }


def _record(verdict: Verdict, index: int) -> Dict[str, Any]:
    d = verdict.to_dict()
    d["index"] = index
    return d


def _run_chunk(
    claims: Sequence[str], max_counterexamples: int, chunk: Tuple[int, List[Hypergraph]]
) -> Dict[str, Dict[str, Any]]:
    start, instances = chunk
    tallies = {claim: _empty_tally() for claim in claims}
    for offset, hypergraph in enumerate(instances):
        for claim in claims:
            verdict = CLAIMS[claim](hypergraph)
            tally = tallies[claim]
            tally["instances"] += 1
            if verdict.outcome == Outcome.PASS:
                tally["passed"] += 1
                if verdict.detail.get("vacuous"):
                    tally["vacuous"] += 1
            elif verdict.outcome == Outcome.NOT_APPLICABLE:
                tally["not_applicable"] += 1
            elif verdict.outcome == Outcome.EXCEPTION:
                tally["exceptions"].append(_record(verdict, start + offset))
            else:
                tally["counterexample_total"] += 1
                if len(tally["counterexamples"]) < max_counterexamples:
                    tally["counterexamples"].append(_record(verdict, start + offset))
    return tallies


def _merge(report: SuiteReport, tally: Dict[str, Any], max_counterexamples: int):
    report.instances += tally["instances"]
    report.passed += tally["passed"]
    report.not_applicable += tally["not_applicable"]
    report.vacuous += tally["vacuous"]
    report.exceptions.extend(tally["exceptions"])
    report.counterexample_total += tally["counterexample_total"]
    merged = report.counterexamples + tally["counterexamples"]
    merged.sort(key=lambda d: d["index"])
    report.counterexamples = merged[:max_counterexamples]


def _chunks(instances: Iterable[Hypergraph], size: int):
    stream = iter(instances)
    start = 0
    while True:
        batch = list(islice(stream, size))
        if not batch:
            return
        yield start, batch
        start += len(batch)


def _run_scope(config: SuiteConfig, scope: Scope, pool_map) -> List[SuiteReport]:
    label = scope.label()
    total = scope.count()
    reports = {claim: SuiteReport(claim=claim, scope=label) for claim in config.claims}
    worker = partial(_run_chunk, tuple(config.claims), config.max_counterexamples)
    chunks = _chunks(scope.instances(), config.chunk_size)
    wave_size = config.jobs * WAVE
    began = time.perf_counter()
    done = 0

    while True:
        wave = list(islice(chunks, wave_size))
        if not wave:
            break
        for tallies in pool_map(worker, wave):
            for claim, tally in tallies.items():
                _merge(reports[claim], tally, config.max_counterexamples)
        done += sum(len(batch) for _, batch in wave)
        log(f"{done}/{total} instances", title=label)

    seconds = time.perf_counter() - began
    for report in reports.values():
        report.exceptions.sort(key=lambda d: d["index"])
        report.seconds = seconds
        log(
            f"{report.instances} instances, {len(report.exceptions)} exceptions, "
            f"{report.counterexample_total} counterexamples in {seconds:.2f}s",
            title=report.claim,
        )
    return [reports[claim] for claim in config.claims]


def run_suite(config: SuiteConfig) -> List[SuiteReport]:
    """
    Runs every claim over every scope.

    Args:
        config (SuiteConfig): Claims, scopes and execution settings.

    Returns:
        List[SuiteReport]: One report per (scope, claim), scopes in configuration
            order and claims in resolution order within each scope.
    """
    reports: List[SuiteReport] = []
    with worker_pool(config.jobs) as pool_map:
        for scope in config.scopes:
            reports.extend(_run_scope(config, scope, pool_map))
    return reports


def check_lemma(name: str, scope: Union[Hypergraph, Scope]) -> Verdict:
    """
    Runs one lemma (or `theorem7`) on a single hypergraph or a whole scope.

    On a scope the verdict aggregates the suite report: it is a counterexample when
    any instance failed, carrying the first failing instance and its witness.
    """
    claim = resolve_claims([name])[0]
    if claim not in LEMMAS:
        raise ValidationError(f"{name!r} is not one of {', '.join(LEMMAS)}")

    if isinstance(scope, Hypergraph):
        return CLAIMS[claim](scope)

    report = run_suite(SuiteConfig(claims=[claim], scopes=[scope]))[0]
    detail = {
        "instances": report.instances,
        "pass": report.passed,
        "not_applicable": report.not_applicable,
        "counterexample_total": report.counterexample_total,
    }
    if not report.failed:
        return Verdict(claim=claim, instance=report.scope, outcome=Outcome.PASS, detail=detail)
    first = report.counterexamples[0]
    return Verdict(
        claim=claim,
        instance=first["instance"],
        outcome=Outcome.COUNTEREXAMPLE,
        detail=detail,
        witness=first.get("witness"),
    )


def summary_frame(reports: Sequence[SuiteReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "claim": r.claim,
                "scope": r.scope,
                "instances": r.instances,
                "pass": r.passed,
                "not_applicable": r.not_applicable,
                "vacuous": r.vacuous,
                "exceptions": len(r.exceptions),
                "counterexamples": r.counterexample_total,
            }
            for r in reports
        ]
    )
