"""
Hypergraphs on a labeled universe {0..n-1}.

Vertex sets are plain `int` bit masks (bit v set means vertex v is a member), so
every set operation is a single machine-word operation as long as n stays within
`MAX_UNIVERSE`. A `Hypergraph` keeps its edges as a tuple of masks in input order;
every edge index reported anywhere in the package refers to that order.

The `.hg` interchange format:

```
# comment lines start with '#', blank lines are ignored
4 4
0 1
1 2
2 3
0 3
```

Line 1 holds `n m`; each of the next m lines lists one edge as ascending 0-based
vertex indices.
"""

import sys
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, TextIO, Tuple, Union

from ..exceptions import ParseError, ValidationError
from ..utils import members, validate_input_path, vertex_set

MAX_UNIVERSE = 24

VertexSet = int


def find_containment(masks: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Return indices (i, j) with edge i a proper subset of edge j, if any."""
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a and a != b:
                return i, j
    return None


@dataclass(frozen=True)
class Hypergraph:
    """
    A hypergraph whose edges form an antichain of distinct nonempty sets.

    The plain constructor trusts its input; enumerators that guarantee the
    invariants use it directly. Use `Hypergraph.build` or `Hypergraph.from_masks`
    for anything that needs validation.
    """

    n: int
    edges: Tuple[VertexSet, ...]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Hypergraph":
        masks = tuple(masks)
        _check_universe(n)
        seen = {}
        for i, mask in enumerate(masks):
            if mask == 0:
                raise ValidationError(f"edge {i} is empty")
            if mask >> n:
                raise ValidationError(f"edge {i} has a vertex index >= n = {n}")
            if mask in seen:
                raise ValidationError(f"edge {i} duplicates edge {seen[mask]}")
            seen[mask] = i
        pair = find_containment(masks)
        if pair is not None:
            raise ValidationError(f"edge {pair[0]} is contained in edge {pair[1]}")
        return cls(n, masks)

    @classmethod
    def build(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        masks = []
        for i, edge in enumerate(edges):
            edge = list(edge)
            if any(v < 0 or v >= n for v in edge):
                raise ValidationError(f"edge {i} has a vertex index outside 0..{n - 1}")
            masks.append(vertex_set(edge))
        return cls.from_masks(n, masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @cached_property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(e.bit_count() for e in self.edges)

    def _require_edges(self):
        if not self.edges:
            raise ValidationError("hypergraph has no edges")

    def rank(self) -> int:
        self._require_edges()
        return max(self.sizes)

    def min_rank(self) -> int:
        self._require_edges()
        return min(self.sizes)

    def is_uniform(self) -> bool:
        return self.rank() == self.min_rank()

    def edge_members(self, index: int) -> List[int]:
        self.check_edge_index(index)
        return members(self.edges[index])

    def check_edge_index(self, index: int):
        if not 0 <= index < self.m:
            raise ValidationError(f"edge index {index} out of range 0..{self.m - 1}")

    def check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise ValidationError(f"vertex {v} out of range 0..{self.n - 1}")

    def check_subset(self, s: VertexSet):
        if s < 0 or s >> self.n:
            raise ValidationError(f"set {members(s)} is not a subset of 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return sum(1 for e in self.edges if e >> v & 1)

    def degrees(self) -> List[int]:
        return [sum(1 for e in self.edges if e >> v & 1) for v in range(self.n)]

    def reflect(self) -> "Hypergraph":
        """The reflection: edge i becomes the complement of edge i."""
        for i, e in enumerate(self.edges):
            if e == self.full:
                raise ValidationError(
                    f"edge {i} is the full vertex set; its complement would be empty"
                )
        return Hypergraph(self.n, tuple(self.full ^ e for e in self.edges))

    def min_layer(self) -> "Hypergraph":
        """The sub-hypergraph of all edges of minimum cardinality."""
        rho = self.min_rank()
        return Hypergraph(self.n, tuple(e for e, k in zip(self.edges, self.sizes) if k == rho))

    def __str__(self) -> str:
        return format_hypergraph(self)


def _check_universe(n: int):
    if not 0 <= n <= MAX_UNIVERSE:
        raise ValidationError(f"universe size {n} outside 0..{MAX_UNIVERSE}")


def format_hypergraph(hypergraph: Hypergraph) -> str:
    lines = [f"{hypergraph.n} {hypergraph.m}"]
    lines.extend(" ".join(str(v) for v in members(e)) for e in hypergraph.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: Union[str, TextIO]) -> Hypergraph:
    """
    Example:
    ```python
    parse_hypergraph("4 4\\n0 1\\n1 2\\n2 3\\n0 3")
    ```

    Parses the `.hg` format and validates the result.

    Args:
        text (Union[str, TextIO]): The `.hg` content or a readable stream.

    Returns:
        Hypergraph: The validated hypergraph, edges in input order.

    Raises:
        ParseError: For malformed lines, out-of-range vertices, duplicate or empty
            edges and containment violations, with the offending line number.
    """
    if not isinstance(text, str):
        text = text.read()

    header = None
    n = m = 0
    masks: List[int] = []
    lines: List[int] = []
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        try:
            values = [int(token) for token in line.split()]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", number)

        if header is None:
            if len(values) != 2 or values[0] < 0 or values[1] < 0:
                raise ParseError("header must be two non-negative integers 'n m'", number)
            n, m = values
            if n > MAX_UNIVERSE:
                raise ParseError(f"universe size {n} exceeds {MAX_UNIVERSE}", number)
            header = number
            continue

        if len(masks) == m:
            raise ParseError(f"more than the {m} declared edge lines", number)

        for v in values:
            if v < 0 or v >= n:
                raise ParseError(f"vertex index {v} outside 0..{n - 1}", number)
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ParseError("vertices must be strictly ascending", number)

        mask = vertex_set(values)
        if mask in masks:
            previous = lines[masks.index(mask)]
            raise ParseError(f"duplicate of the edge on line {previous}", number)
        for other, other_line in zip(masks, lines):
            if other & mask == other:
                raise ParseError(f"edge contains the edge on line {other_line}", number)
            if other & mask == mask:
                raise ParseError(f"edge is contained in the edge on line {other_line}", number)

        masks.append(mask)
        lines.append(number)

    if header is None:
        raise ParseError("missing header 'n m'", last_line + 1)
    if len(masks) < m:
        raise ParseError(
            f"expected {m} edge lines, found {len(masks)} (an edge may not be empty)",
            last_line + 1,
        )

    return Hypergraph(n, tuple(masks))


def read_hypergraph(path: str) -> Hypergraph:
    """Reads `.hg` from `path`, or from standard input when `path` is `-`."""
    validate_input_path(path)
    if path == "-":
        return parse_hypergraph(sys.stdin)
    with open(path, "r") as f:
        return parse_hypergraph(f)
