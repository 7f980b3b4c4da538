import io
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import antichains
from versals.core import Hypergraph, find_containment, format_hypergraph, parse_hypergraph
from versals.core import read_hypergraph
from versals.exceptions import ParseError, ValidationError
from versals.families import gen_c4, gen_cosingletons, gen_singletons, gen_star

C4_TEXT = "4 4\n0 1\n1 2\n2 3\n0 3\n"


def test_parse_c4():
    h = parse_hypergraph(C4_TEXT)
    assert h.n == 4
    assert h.edges == (0b0011, 0b0110, 0b1100, 0b1001)
    assert h == gen_c4()


def test_parse_skips_comments_and_blank_lines():
    h = parse_hypergraph("# a path\n\n3 2\n# first edge\n0 1\n\n1 2\n")
    assert h.edges == (0b011, 0b110)


def test_parse_accepts_a_stream():
    assert parse_hypergraph(io.StringIO(C4_TEXT)) == gen_c4()


def test_parse_without_edges():
    h = parse_hypergraph("2 0\n")
    assert h.n == 2 and h.m == 0


def test_format_matches_input_order():
    assert format_hypergraph(parse_hypergraph(C4_TEXT)) == C4_TEXT
    assert str(gen_c4()) == C4_TEXT


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 2\n0 1\n0 1 2\n", 3),
        ("3 2\n0 1 2\n0 1\n", 3),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 0\n", 2),
        ("3 1\n0 x\n", 2),
        ("3 2\n0 1\n", 3),
        ("3 1\n0 1\n1 2\n", 3),
        ("3\n0 1\n", 1),
        ("# nothing here\n", 2),
        ("25 1\n0\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_hypergraph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}")


def test_parse_error_is_a_validation_error():
    with pytest.raises(ValidationError):
        parse_hypergraph("2 1\n0 2\n")


def test_from_masks_validates():
    with pytest.raises(ValidationError):
        Hypergraph.from_masks(3, [0])
    with pytest.raises(ValidationError):
        Hypergraph.from_masks(3, [0b1000])
    with pytest.raises(ValidationError):
        Hypergraph.from_masks(3, [0b011, 0b011])
    with pytest.raises(ValidationError):
        Hypergraph.from_masks(3, [0b001, 0b011])
    with pytest.raises(ValidationError):
        Hypergraph.from_masks(25, [1])


def test_build_from_vertex_lists():
    assert Hypergraph.build(4, [[0, 1], [1, 2], [2, 3], [0, 3]]) == gen_c4()
    with pytest.raises(ValidationError):
        Hypergraph.build(3, [[0, 3]])


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.integers(1, (1 << n) - 1), max_size=6, unique=True).map(
        lambda masks: (n, masks)
    )
))
def test_containment_matches_brute_force(case):
    n, masks = case
    nested = any(a != b and a & b == a for a, b in combinations(masks, 2)) or any(
        a != b and a & b == b for a, b in combinations(masks, 2)
    )
    assert (find_containment(masks) is not None) == nested
    if nested:
        with pytest.raises(ValidationError):
            Hypergraph.from_masks(n, masks)
    else:
        assert Hypergraph.from_masks(n, masks).m == len(masks)


def test_rank_and_uniformity():
    h = parse_hypergraph("3 2\n0\n1 2\n")
    assert h.rank() == 2
    assert h.min_rank() == 1
    assert not h.is_uniform()
    assert gen_c4().is_uniform()
    with pytest.raises(ValidationError):
        Hypergraph(2, ()).rank()


def test_degrees():
    assert gen_c4().degrees() == [2, 2, 2, 2]
    star = gen_star(3, 4)
    assert star.degree(0) == 4
    assert star.degree(5) == 1
    with pytest.raises(ValidationError):
        star.degree(6)


@given(antichains())
def test_degree_sum_equals_size_sum(h):
    assert sum(h.degrees()) == sum(h.sizes)


def test_reflect():
    assert gen_singletons(3).reflect() == gen_cosingletons(3)
    assert set(gen_c4().reflect().edges) == set(gen_c4().edges)
    with pytest.raises(ValidationError):
        Hypergraph(2, (0b11,)).reflect()


@given(antichains())
def test_reflect_is_an_involution(h):
    if h.full in h.edges:
        return
    assert h.reflect().reflect() == h


def test_min_layer():
    h = parse_hypergraph("3 2\n0\n1 2\n")
    assert h.min_layer().edges == (0b001,)


def test_edge_members():
    assert gen_c4().edge_members(3) == [0, 3]
    with pytest.raises(ValidationError):
        gen_c4().edge_members(4)


def test_read_hypergraph(tmp_path, monkeypatch):
    path = tmp_path / "cycle.hg"
    path.write_text(C4_TEXT)
    assert read_hypergraph(str(path)) == gen_c4()

    monkeypatch.setattr("sys.stdin", io.StringIO(C4_TEXT))
    assert read_hypergraph("-") == gen_c4()

    with pytest.raises(ValidationError):
        read_hypergraph(str(tmp_path / "missing.hg"))
    with pytest.raises(ValidationError):
        read_hypergraph(str(tmp_path))
