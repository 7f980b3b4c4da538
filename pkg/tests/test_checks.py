import pytest
from hypothesis import given, settings

from strategies import antichains, uniform_hypergraphs
from versals.core import Hypergraph, parse_hypergraph
from versals.exceptions import HypothesisError, ValidationError
from versals.families import gen_binary_star, gen_c4, gen_cosingletons, gen_singletons, gen_star
from versals.types import Outcome
from versals.verifier import (
    ALIASES,
    CLAIMS,
    check_bounds,
    check_lemma1,
    check_lemma5,
    check_lemma6,
    check_lifting,
    check_main_theorem,
    check_theorem2,
    check_theorem7,
    replay,
    resolve_claims,
    run_check,
)

P3 = parse_hypergraph("3 2\n0 1\n1 2\n")
PATH_WITH_ISOLATED = parse_hypergraph("4 2\n0 1\n1 2\n")
TRIANGLES = parse_hypergraph("6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n")
P4 = parse_hypergraph("4 3\n0 1\n1 2\n0 3\n")


def test_main_theorem_exceptions():
    for h, family in [
        (gen_c4(), "c4"),
        (gen_singletons(4), "singletons"),
        (gen_cosingletons(4), "co_singletons"),
    ]:
        verdict = check_main_theorem(h)
        assert verdict.outcome == Outcome.EXCEPTION
        assert verdict.detail["z"] == 4
        assert verdict.detail["family"] == family


def test_main_theorem_passes():
    assert check_main_theorem(P3).outcome == Outcome.PASS
    assert check_main_theorem(parse_hypergraph("3 2\n0\n1 2\n")).detail["z"] == 7
    assert check_main_theorem(gen_star(3, 4)).detail["z"] == 16


def test_main_theorem_single_edge_is_vacuous():
    verdict = check_main_theorem(Hypergraph(3, (0b011,)))
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["vacuous"]


def test_claims_refuse_empty_hypergraphs():
    for check in CLAIMS.values():
        with pytest.raises(HypothesisError):
            check(Hypergraph(3, ()))


def test_theorem2_exceptions():
    verdict = check_theorem2(gen_star(3, 4))
    assert verdict.outcome == Outcome.EXCEPTION
    assert verdict.detail["null_versals"] == 4

    verdict = check_theorem2(gen_binary_star(3, 3))
    assert verdict.outcome == Outcome.EXCEPTION
    assert verdict.detail["null_versals"] == 6

    assert check_theorem2(gen_c4()).outcome == Outcome.EXCEPTION
    assert check_theorem2(gen_singletons(3)).outcome == Outcome.EXCEPTION


def test_theorem2_passes():
    verdict = check_theorem2(TRIANGLES)
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["null_versals"] == 24


def test_theorem2_hypothesis():
    assert check_theorem2(parse_hypergraph("3 2\n0\n1 2\n")).outcome == Outcome.NOT_APPLICABLE
    assert check_theorem2(gen_star(3, 2)).outcome == Outcome.NOT_APPLICABLE
    assert check_theorem2(Hypergraph(4, (0b0011,))).outcome == Outcome.NOT_APPLICABLE


def test_theorem2_reports_non_spanning_stars():
    verdict = check_theorem2(PATH_WITH_ISOLATED)
    assert verdict.outcome == Outcome.COUNTEREXAMPLE
    assert verdict.witness == {
        "null_versals": 4,
        "bound": 5,
        "family": "star",
        "spanning": False,
    }
    assert verdict.instance == "4 2\n0 1\n1 2\n"


def test_replay_reproduces_a_verdict():
    verdict = check_theorem2(PATH_WITH_ISOLATED)
    assert replay(verdict) == verdict


def test_bounds():
    spread = check_bounds(parse_hypergraph("7 2\n0 1 2\n0 1 3\n"))
    assert spread.outcome == Outcome.PASS
    assert spread.detail["case"] == "spread"
    assert spread.detail["bound"] == 16
    assert spread.detail["null_versals"] == 16

    balanced = check_bounds(parse_hypergraph("8 3\n0 1 2 3\n0 1 2 4\n0 1 2 5\n"))
    assert balanced.outcome == Outcome.PASS
    assert balanced.detail["case"] == "balanced"
    assert balanced.detail["bound"] == 12
    assert balanced.detail["null_versals"] == 12

    assert check_bounds(gen_binary_star(3, 3)).outcome == Outcome.NOT_APPLICABLE


def test_lifting_modes():
    verdict = check_lifting(parse_hypergraph("4 2\n0 1\n0 2 3\n"))
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["mode"] == "null"

    verdict = check_lifting(parse_hypergraph("5 2\n0 1 2\n0 1 3 4\n"))
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["mode"] == "complement"

    verdict = check_lifting(gen_c4())
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["trivial"]


def test_lifting_star_layer():
    h = parse_hypergraph("5 3\n0 1\n0 2\n1 2 3 4\n")
    verdict = check_lifting(h)
    assert verdict.outcome == Outcome.PASS
    assert "star_lifted" not in verdict.detail
    spanning = parse_hypergraph("3 2\n0 1\n0 2\n")
    assert check_lifting(spanning).detail["trivial"]


def test_lemma1():
    verdict = check_lemma1(gen_c4())
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["z"] == verdict.detail["z_reflected"] == 4
    assert check_lemma1(parse_hypergraph("3 2\n0\n1 2\n")).outcome == Outcome.NOT_APPLICABLE


@settings(max_examples=50)
@given(uniform_hypergraphs())
def test_lemma1_on_random_uniform_hypergraphs(h):
    assert check_lemma1(h).outcome in (Outcome.PASS, Outcome.NOT_APPLICABLE)


def test_lemma5():
    verdict = check_lemma5(gen_star(3, 4))
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["poles"] == 4
    assert verdict.detail["star"] and verdict.detail["every_edge_pole"]

    verdict = check_lemma5(P4)
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["poles"] == 1
    assert not verdict.detail["star"]

    assert check_lemma5(gen_c4()).outcome == Outcome.NOT_APPLICABLE


def test_lemma6():
    assert check_lemma6(gen_c4()).detail["binary_star"]
    assert check_lemma6(gen_star(2, 3)).detail["spanning_star"]
    verdict = check_lemma6(P4)
    assert verdict.outcome == Outcome.PASS
    assert not verdict.detail["every_edge_pole"]
    assert check_lemma6(gen_binary_star(3, 3)).outcome == Outcome.PASS
    assert check_lemma6(PATH_WITH_ISOLATED).outcome == Outcome.NOT_APPLICABLE


def test_theorem7():
    verdict = check_theorem7(gen_star(4, 5))
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["z"] == verdict.detail["formula"] == 40

    verdict = check_theorem7(gen_binary_star(3, 4))
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["null_versals"] == 8

    fallback = check_theorem7(gen_c4())
    assert fallback.claim == "theorem7"
    assert check_theorem7(parse_hypergraph("3 2\n0\n1 2\n")).outcome == Outcome.NOT_APPLICABLE
    assert check_theorem7(TRIANGLES).claim == "theorem7"


@settings(max_examples=60, deadline=None)
@given(antichains())
def test_property_claims_hold(h):
    for claim in ALIASES["properties"] + ["isolation", "lifting"]:
        assert not run_check(claim, h).failed, claim


def test_resolve_claims():
    assert resolve_claims("main-theorem") == ["main_theorem"]
    assert resolve_claims(["lemma1", "lemma1", "theorem2"]) == ["lemma1", "theorem2"]
    assert resolve_claims("properties") == ALIASES["properties"]
    assert resolve_claims("lemma3, properties")[0] == "lemma3"
    with pytest.raises(ValidationError):
        resolve_claims("lemma2")
    with pytest.raises(ValidationError):
        resolve_claims("")


def test_verdict_to_dict():
    d = check_theorem2(PATH_WITH_ISOLATED).to_dict()
    assert d["claim"] == "theorem2"
    assert d["outcome"] == "counterexample"
    assert d["witness"]["family"] == "star"
    assert "witness" not in check_main_theorem(P3).to_dict()


def test_lifting_spanning_star_layer():
    verdict = check_lifting(parse_hypergraph("4 4\n0 1\n0 2\n0 3\n1 2 3\n"))
    assert verdict.outcome == Outcome.PASS
    assert verdict.detail["mode"] == "null"
    assert verdict.detail["star_lifted"] == 6
