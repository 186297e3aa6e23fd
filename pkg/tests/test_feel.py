import pytest

from programs import DISJ, LOOP, GAMMA3, V, views

from elpkit import (
    BeliefInterpretation,
    HTPair,
    belief_view,
    bi_sat,
    feel_world_views,
    parse_formula,
    view_leq,
)
from elpkit.feel import bi_neg_sat_check, feel_epistemic_model, is_feel_world_view, there_view, view_lt

E = frozenset()


def P(here, there):
    return HTPair(frozenset(here), frozenset(there))


def test_there_view():
    assert there_view([P("", "a")]) == V("a")
    assert there_view([P("a", "ab"), P("b", "ab")]) == V("ab")
    assert there_view(V("a", "b")) == V("a", "b")


def test_belief_view_rejects_empty():
    with pytest.raises(ValueError):
        belief_view([])


def test_bi_sat_k_implies_atom():
    i = BeliefInterpretation(belief_view([P("", "a")]), P("a", "a"))
    assert not bi_sat(i, parse_formula("K a"))
    assert bi_sat(i, parse_formula("K a -> a"))
    j = BeliefInterpretation(belief_view([P("", "")]), P("", "a"))
    assert bi_sat(j, parse_formula("K a -> a"))


@pytest.mark.parametrize("text", ["bot", "a", "K a", "not K a", "a | K b", "K (a -> b)"])
def test_negation_shortcut(text):
    f = parse_formula(text)
    for view in ([P("", "a")], [P("a", "ab"), P("", "b")], [P("", "")]):
        for real in (P("", ""), P("", "a"), P("a", "ab")):
            i = BeliefInterpretation(belief_view(view), real)
            assert bi_neg_sat_check(i, f) == bi_sat(i, parse_formula(f"({text}) -> bot"))


def test_view_order():
    small = [P("", "a")]
    assert view_leq(small, V("a"))
    assert view_lt(small, V("a"))
    assert not view_leq(V("a"), small)
    assert not view_leq(V("a"), V("b"))
    assert view_leq(V("a"), V("a"))
    # every pair on one side must be matched on the other
    assert view_leq([P("a", "ab"), P("", "ab")], V("ab"))
    assert not view_leq([P("", "a")], V("a", "b"))


def test_epistemic_models():
    assert feel_epistemic_model([P("", "a")], GAMMA3)
    assert feel_epistemic_model(V("ab"), LOOP)
    assert not feel_epistemic_model([P("", "ab")], LOOP)


@pytest.mark.parametrize(
    "theory, expected",
    [
        (DISJ, views(V("a", "b"), V("a"), V("b"))),
        (GAMMA3, views(V(""))),
        (LOOP, views(V("a", "b"))),
    ],
)
def test_feel_examples(theory, expected):
    assert set(feel_world_views(theory)) == expected


def test_feel_rejects_self_supported_view():
    assert not is_feel_world_view(GAMMA3, V("a"))
    assert not is_feel_world_view(DISJ, V("ab"))
    assert is_feel_world_view(DISJ, V("a"))
