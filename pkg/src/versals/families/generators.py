from ..core import MAX_UNIVERSE, Hypergraph
from ..exceptions import ValidationError


def _check_n(n: int):
    if n > MAX_UNIVERSE:
        raise ValidationError(f"universe size {n} exceeds {MAX_UNIVERSE}")


def gen_singletons(n: int) -> Hypergraph:
    """S_n: every vertex on its own."""
    if n < 2:
        raise ValidationError(f"singletons need n >= 2, got {n}")
    _check_n(n)
    return Hypergraph(n, tuple(1 << v for v in range(n)))


def gen_cosingletons(n: int) -> Hypergraph:
    """The reflection of S_n: every complement of a single vertex."""
    if n < 2:
        raise ValidationError(f"co-singletons need n >= 2, got {n}")
    _check_n(n)
    full = (1 << n) - 1
    return Hypergraph(n, tuple(full ^ (1 << v) for v in range(n)))


def gen_c4() -> Hypergraph:
    return Hypergraph(4, (0b0011, 0b0110, 0b1100, 0b1001))


def gen_star(r: int, m: int) -> Hypergraph:
    """
    The spanning m-star of rank r.

    Vertices 0..r-2 form the core and r-1..r-2+m are the tips; edge i is the core
    plus tip i, so n = r - 1 + m.
    """
    if r < 1 or m < 2:
        raise ValidationError(f"a star needs r >= 1 and m >= 2, got r={r}, m={m}")
    n = r - 1 + m
    _check_n(n)
    core = (1 << (r - 1)) - 1
    return Hypergraph(n, tuple(core | 1 << t for t in range(r - 1, n)))


def gen_binary_star(r: int, s: int) -> Hypergraph:
    """
    Two s-stars of rank r whose cores share r-2 vertices and whose tips coincide.

    Vertices 0..r-3 are the shared core, a = r-2 and b = r-1 complete the two cores
    and r..r-1+s are the tips. For each tip t the edges are shared+{a,t} and
    shared+{b,t}, giving n = r + s and 2s edges.
    """
    if r < 2 or s < 2:
        raise ValidationError(f"a binary star needs r >= 2 and s >= 2, got r={r}, s={s}")
    n = r + s
    _check_n(n)
    shared = (1 << (r - 2)) - 1
    a, b = 1 << (r - 2), 1 << (r - 1)
    edges = []
    for t in range(r, n):
        edges.append(shared | a | 1 << t)
        edges.append(shared | b | 1 << t)
    return Hypergraph(n, tuple(edges))
