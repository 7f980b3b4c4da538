import hashlib
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from functools import lru_cache
from typing import Callable, Iterable, Iterator, List, Sequence, Tuple, TypeVar, Union

import numpy as np

from .exceptions import ImproperlyConfigured, ValidationError

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


def log(message: str, title: str = "Info", level: int = logging.INFO):
    logger.log(level, f"{title}: {message}")


def validate_input_path(path):
    if path == "-":
        return

    if not os.path.exists(path):
        raise ValidationError(f"No such input file: {path}")

    if not os.path.isfile(path):
        raise ValidationError(f"Input should be a file: {path}")

    if not os.access(path, os.R_OK):
        raise ValidationError(
            f"Cannot read the input file. Please grant read privileges: {path}"
        )


def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> List[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def canonical_key(mask: int) -> Tuple[int, List[int]]:
    """Sort key: cardinality first, then lexicographic on the sorted members."""
    return mask.bit_count(), members(mask)


def canonical_sort(masks: Iterable[int]) -> List[int]:
    return sorted(masks, key=canonical_key)


# Expansions of masks with more members are rebuilt on every call.
CACHED_SUBMASK_BITS = 12


def _expand(mask: int) -> np.ndarray:
    positions = members(mask)
    index = np.arange(1 << len(positions), dtype=np.int64)
    out = np.zeros_like(index)
    for j, p in enumerate(positions):
        out |= ((index >> j) & 1) << p
    out.setflags(write=False)
    return out


_cached_expand = lru_cache(maxsize=256)(_expand)


def submasks(mask: int) -> np.ndarray:
    """
    All subsets of `mask` in increasing integer order.

    Args:
        mask (int): The bit mask to expand.

    Returns:
        np.ndarray: Read-only int64 array of length 2^popcount(mask).
    """
    if mask.bit_count() <= CACHED_SUBMASK_BITS:
        return _cached_expand(mask)
    return _expand(mask)


def popcounts(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values).astype(np.int64)


def derive_seed(*parts: Union[str, int]) -> int:
    """Creates a deterministic 63-bit seed from the hash of its parts.

    Args:
        parts: Strings or integers identifying the random stream.

    Returns:
        Seed suitable for `np.random.default_rng`.
    """
    content = "/".join(str(p) for p in parts).encode("utf-8")
    digest = hashlib.sha256(content).digest()
    return int.from_bytes(digest[:8], "big") >> 1


@contextmanager
def worker_pool(jobs: int = 1) -> Iterator[Callable[[Callable[[T], R], Sequence[T]], List[R]]]:
    """
    Yields a `map`-like callable that returns a list in input order.

    With `jobs > 1` the calls run in one process pool that lives as long as the
    context, so a caller can feed it several waves of work.
    """
    if jobs < 1:
        raise ImproperlyConfigured(f"jobs must be at least 1, got {jobs}")

    if jobs == 1:
        yield lambda func, items: [func(item) for item in items]
        return

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield lambda func, items: list(pool.map(func, items))


def parallel_map(func: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> List[R]:
    """Map `func` over `items` in order; `jobs > 1` uses a process pool."""
    if jobs > 1 and len(items) <= 1:
        jobs = 1
    with worker_pool(jobs) as pool_map:
        return pool_map(func, items)
