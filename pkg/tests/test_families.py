import pytest
from hypothesis import given

from strategies import uniform_hypergraphs
from versals.core import parse_hypergraph
from versals.engine import all_versals, null_versals
from versals.exceptions import ValidationError
from versals.families import (
    classify,
    gen_binary_star,
    gen_c4,
    gen_cosingletons,
    gen_singletons,
    gen_star,
    is_flag,
    is_star,
    pole_report,
    poles,
)
from versals.types import FamilyKind

P4 = parse_hypergraph("4 3\n0 1\n1 2\n0 3\n")


def test_generators():
    assert gen_singletons(3).edges == (0b001, 0b010, 0b100)
    assert gen_cosingletons(3).edges == (0b110, 0b101, 0b011)
    assert gen_star(3, 4).edges == (0b000111, 0b001011, 0b010011, 0b100011)
    assert gen_star(1, 4) == gen_singletons(4)
    assert gen_binary_star(3, 3).n == 6
    assert gen_binary_star(3, 3).m == 6


@pytest.mark.parametrize(
    "build",
    [
        lambda: gen_singletons(1),
        lambda: gen_cosingletons(1),
        lambda: gen_star(0, 3),
        lambda: gen_star(2, 1),
        lambda: gen_binary_star(1, 3),
        lambda: gen_binary_star(3, 1),
        lambda: gen_star(3, 30),
    ],
)
def test_generator_arguments_are_validated(build):
    with pytest.raises(ValidationError):
        build()


def test_classify_named_families():
    assert classify(gen_singletons(2)).kind == FamilyKind.SINGLETONS
    assert classify(gen_cosingletons(4)).kind == FamilyKind.CO_SINGLETONS

    star = classify(gen_star(3, 4))
    assert star.kind == FamilyKind.STAR
    assert star.core == [0, 1]
    assert star.star_size == 4
    assert star.spanning

    binary = classify(gen_binary_star(3, 3))
    assert binary.kind == FamilyKind.BINARY_STAR
    assert binary.core == [0]
    assert binary.extra == [1, 2]
    assert binary.star_size == 3
    assert binary.spanning
    assert not binary.is_c4


def test_c4_is_a_binary_star():
    tag = classify(gen_c4())
    assert tag.kind == FamilyKind.BINARY_STAR
    assert tag.is_c4
    assert tag.extra == [0, 2]
    assert classify(gen_binary_star(2, 2)).is_c4


def test_non_spanning_star():
    tag = classify(parse_hypergraph("4 2\n0 1\n1 2\n"))
    assert tag.kind == FamilyKind.STAR
    assert tag.core == [1]
    assert not tag.spanning


def test_classify_other():
    assert classify(parse_hypergraph("4 2\n0 1\n2 3\n")).kind == FamilyKind.OTHER
    assert classify(parse_hypergraph("3 2\n0\n1 2\n")).kind == FamilyKind.OTHER
    assert classify(P4).kind == FamilyKind.OTHER
    with pytest.raises(ValidationError):
        classify(parse_hypergraph("2 0\n"))


def test_classify_recognizes_every_generated_member():
    for r in range(1, 5):
        for size in range(2, 6):
            expected = FamilyKind.SINGLETONS if r == 1 else FamilyKind.STAR
            assert classify(gen_star(r, size)).kind == expected
            if r >= 2:
                tag = classify(gen_binary_star(r, size))
                assert tag.kind == FamilyKind.BINARY_STAR
                assert tag.star_size == size


def test_star_versal_formula():
    for r in range(1, 6):
        for m in range(2, 7):
            assert all_versals(gen_star(r, m)).total == 2 ** (r - 1) * m


def test_binary_star_null_versals():
    for r in range(2, 5):
        for s in range(2, 6):
            assert null_versals(gen_binary_star(r, s)).null_total == 2 * s


@given(uniform_hypergraphs())
def test_is_star_matches_common_core(h):
    common = h.full
    for e in h.edges:
        common &= e
    assert is_star(h) == (h.m > 1 and common.bit_count() >= h.rank() - 1)


def test_pole_report():
    report = pole_report(gen_c4(), 0)
    assert report.pennants == [1, 3]
    assert report.missing == 0
    assert report.is_pole

    report = pole_report(parse_hypergraph("4 2\n0 1\n2 3\n"), 0)
    assert report.pennants == []
    assert report.missing == 2
    assert not report.is_pole
    assert report.to_dict() == {"edge": 0, "pennants": [], "missing": 2, "is_pole": False}


def test_pole_report_needs_uniformity():
    with pytest.raises(ValidationError):
        pole_report(parse_hypergraph("3 2\n0\n1 2\n"), 0)


def test_poles():
    assert poles(gen_star(3, 4)) == [0, 1, 2, 3]
    assert poles(gen_binary_star(3, 3)) == list(range(6))
    assert poles(P4) == [0]


def test_is_flag():
    assert is_flag(gen_star(3, 4), 0)
    assert is_flag(P4, 0)
    assert not is_flag(P4, 1)
    assert not is_flag(gen_c4(), 0)
    shrunk = parse_hypergraph("6 3\n0 1 2\n0 1 3\n0 1 4\n")
    assert not is_flag(shrunk, 0)
