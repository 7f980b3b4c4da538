from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..core import Hypergraph, format_hypergraph
from ..exceptions import ValidationError
from ..utils import members


@dataclass(frozen=True)
class VersalRecord:
    edge_index: int
    set: int
    is_null: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"edge": self.edge_index, "set": members(self.set), "null": self.is_null}


@dataclass
class VersalCensus:
    """Counts of versals per edge; `records` is filled only when materialized."""

    per_edge_counts: List[int]
    per_edge_null_counts: List[int]
    total: int
    null_total: int
    records: List[VersalRecord] = field(default_factory=list)

    def sets_for(self, edge_index: int) -> List[int]:
        return [r.set for r in self.records if r.edge_index == edge_index]


class FamilyKind(str, Enum):
    SINGLETONS = "singletons"
    CO_SINGLETONS = "co_singletons"
    STAR = "star"
    BINARY_STAR = "binary_star"
    OTHER = "other"


@dataclass
class FamilyTag:
    kind: FamilyKind
    r: Optional[int] = None
    star_size: Optional[int] = None
    core: Optional[List[int]] = None
    extra: Optional[List[int]] = None
    spanning: Optional[bool] = None
    is_c4: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "r": self.r,
            "star_size": self.star_size,
            "core": self.core,
            "extra": self.extra,
            "spanning": self.spanning,
            "is_c4": self.is_c4,
        }


@dataclass
class PoleReport:
    edge_index: int
    pennants: List[int]
    missing: int
    is_pole: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "edge": self.edge_index,
            "pennants": self.pennants,
            "missing": self.missing,
            "is_pole": self.is_pole,
        }


class Outcome(str, Enum):
    PASS = "pass"
    EXCEPTION = "exception_as_predicted"
    COUNTEREXAMPLE = "counterexample"
    NOT_APPLICABLE = "not_applicable"


@dataclass
class Verdict:
    """
    The outcome of one claim on one instance.

    `instance` is the `.hg` text of the hypergraph (or a parameter label for
    aggregated verdicts), so a counterexample always carries its full instance.
    """

    claim: str
    instance: str
    outcome: Outcome
    detail: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None

    @classmethod
    def for_instance(
        cls,
        claim: str,
        hypergraph: Hypergraph,
        outcome: Outcome,
        detail: Optional[Dict[str, Any]] = None,
        witness: Optional[Dict[str, Any]] = None,
    ) -> Verdict:
        return cls(
            claim=claim,
            instance=format_hypergraph(hypergraph),
            outcome=outcome,
            detail=detail or {},
            witness=witness,
        )

    @property
    def failed(self) -> bool:
        return self.outcome == Outcome.COUNTEREXAMPLE

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "claim": self.claim,
            "outcome": self.outcome.value,
            "detail": self.detail,
            "instance": self.instance,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class SuiteConfig:
    claims: List[str]
    scopes: List[Any]
    jobs: int = 1
    max_counterexamples: int = 50
    chunk_size: int = 2048


@dataclass
class SuiteReport:
    claim: str
    scope: str
    instances: int = 0
    passed: int = 0
    not_applicable: int = 0
    vacuous: int = 0
    exceptions: List[Dict[str, Any]] = field(default_factory=list)
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    counterexample_total: int = 0
    seconds: float = 0.0

    @property
    def failed(self) -> bool:
        return self.counterexample_total > 0

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        d = {
            "claim": self.claim,
            "scope": self.scope,
            "instances": self.instances,
            "pass": self.passed,
            "not_applicable": self.not_applicable,
            "vacuous": self.vacuous,
            "exception_total": len(self.exceptions),
            "exceptions": self.exceptions,
            "counterexample_total": self.counterexample_total,
            "counterexamples": self.counterexamples,
        }
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d


@dataclass(frozen=True)
class Weighting:
    values: Tuple[int, ...]

    def __post_init__(self):
        if any(int(v) < 1 for v in self.values):
            raise ValidationError(f"weights must be positive integers, got {list(self.values)}")


@dataclass
class ProbabilityResult:
    k: int
    mode: str
    estimate: float
    numerator: Optional[int] = None
    denominator: Optional[int] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    stderr: Optional[float] = None
    versals: Optional[int] = None

    @property
    def fraction(self) -> Fraction:
        if self.numerator is None:
            raise ValidationError("Monte Carlo results have no exact fraction")
        return Fraction(self.numerator, self.denominator)

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"k": self.k, "mode": self.mode}
        if self.mode == "exact":
            d["probability"] = f"{self.numerator}/{self.denominator}"
            d["numerator"] = self.numerator
            d["denominator"] = self.denominator
        else:
            d["samples"] = self.samples
            d["seed"] = self.seed
            d["estimate"] = float(f"{self.estimate:.10g}")
            d["stderr"] = float(f"{self.stderr:.10g}")
        d["versals"] = self.versals
        return d
