from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Optional

import numpy as np

from ..core import Hypergraph
from ..exceptions import ValidationError
from ..families import gen_binary_star, gen_star
from ..utils import derive_seed
from .enumerate import (
    MAX_ANTICHAIN_N,
    antichain_count,
    enum_antichains,
    enum_uniform,
    random_antichain,
    random_uniform,
    uniform_instance_count,
)


@dataclass(frozen=True)
class AntichainScope:
    """Every antichain hypergraph on n vertices."""

    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ANTICHAIN_N:
            raise ValidationError(f"antichain scope supports n <= {MAX_ANTICHAIN_N}, got {self.n}")

    def label(self) -> str:
        return f"antichains(n={self.n})"

    def count(self) -> int:
        return antichain_count(self.n)

    def instances(self) -> Iterator[Hypergraph]:
        return enum_antichains(self.n)


@dataclass(frozen=True)
class UniformScope:
    """Every r-uniform hypergraph on n vertices with m_min <= m <= m_max."""

    n: int
    r: int
    m_min: int = 2
    m_max: Optional[int] = None

    def __post_init__(self):
        uniform_instance_count(self.n, self.r, self.m_min, self.upper)

    @property
    def upper(self) -> int:
        pool = comb(self.n, self.r)
        return pool if self.m_max is None else min(self.m_max, pool)

    def label(self) -> str:
        return f"uniform(n={self.n},r={self.r},m={self.m_min}..{self.upper})"

    def count(self) -> int:
        return uniform_instance_count(self.n, self.r, self.m_min, self.upper)

    def instances(self) -> Iterator[Hypergraph]:
        return enum_uniform(self.n, self.r, self.m_min, self.upper)


@dataclass(frozen=True)
class RandomScope:
    """
    `samples` seeded random hypergraphs.

    Sample i draws n from n_min..n_max and then an antichain, or an r-uniform
    hypergraph when `uniform` is set (r drawn from 1..n-1 unless fixed), all from
    seeds derived from (seed, i).
    """

    n_min: int
    n_max: int
    samples: int
    seed: int = 0
    r: Optional[int] = None
    uniform: bool = False

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise ValidationError(f"invalid universe range {self.n_min}..{self.n_max}")
        if self.samples < 1:
            raise ValidationError(f"samples must be positive, got {self.samples}")
        if self.uniform and self.r is None and self.n_min < 2:
            raise ValidationError("random uniform hypergraphs without a fixed rank need n >= 2")

    def label(self) -> str:
        kind = "uniform" if self.uniform else "antichains"
        rank = f",r={self.r}" if self.r is not None else ""
        return (
            f"random({kind},n={self.n_min}..{self.n_max}{rank},"
            f"samples={self.samples},seed={self.seed})"
        )

    def count(self) -> int:
        return self.samples

    def instances(self) -> Iterator[Hypergraph]:
        for i in range(self.samples):
            rng = np.random.default_rng(derive_seed("scope", self.seed, i))
            n = int(rng.integers(self.n_min, self.n_max + 1))
            sample_seed = derive_seed(self.seed, i)
            if not self.uniform:
                yield random_antichain(n, sample_seed)
                continue
            r = self.r if self.r is not None else int(rng.integers(1, n))
            yield random_uniform(n, r, sample_seed)


@dataclass(frozen=True)
class FamilyScope:
    """The generated spanning stars and binary stars over ranges of rank and star size."""

    r_min: int = 1
    r_max: int = 5
    size_min: int = 2
    size_max: int = 6

    def _members(self) -> List[Hypergraph]:
        found = []
        for r in range(max(1, self.r_min), self.r_max + 1):
            for size in range(max(2, self.size_min), self.size_max + 1):
                found.append(gen_star(r, size))
                if r >= 2:
                    found.append(gen_binary_star(r, size))
        return found

    def label(self) -> str:
        return f"families(r={self.r_min}..{self.r_max},size={self.size_min}..{self.size_max})"

    def count(self) -> int:
        return len(self._members())

    def instances(self) -> Iterator[Hypergraph]:
        return iter(self._members())


@dataclass(frozen=True)
class SingleScope:
    hypergraph: Hypergraph

    def label(self) -> str:
        return f"single(n={self.hypergraph.n},m={self.hypergraph.m})"

    def count(self) -> int:
        return 1

    def instances(self) -> Iterator[Hypergraph]:
        return iter([self.hypergraph])
