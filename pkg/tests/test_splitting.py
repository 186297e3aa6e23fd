import pytest

from programs import MUTUAL, PI3, V, views

from elpkit import (
    NotASplittingSet,
    classify_rule,
    compose,
    eu_reduct,
    is_splitting_set,
    parse_program,
    parse_rule,
    print_program,
    restrict,
    solutions,
    split,
    world_views,
    world_views_via_splitting,
)
from elpkit.ht import HTPair
from elpkit.splitting import OverlapError, Placement, splitting_sets

AB = {"a", "b"}


def test_classify_rule():
    assert classify_rule(parse_rule("c :- K a."), AB) is Placement.TOP_ONLY
    assert classify_rule(parse_rule("a :- not K b."), AB) is Placement.BOTTOM_ONLY
    assert classify_rule(parse_rule(":- K a."), {"a"}) is Placement.EITHER
    assert classify_rule(parse_rule("a :- not K b."), {"a"}) is Placement.NEITHER


def test_is_splitting_set():
    assert is_splitting_set(AB, PI3)
    assert not is_splitting_set({"a"}, MUTUAL)
    for p in (PI3, MUTUAL):
        assert is_splitting_set(set(), p)
        assert is_splitting_set(p.signature.atoms, p)


def test_splitting_sets_of_pi3():
    assert splitting_sets(PI3) == [frozenset(), frozenset(AB), frozenset("abc")]


def test_split_raises_with_offending_rules():
    with pytest.raises(NotASplittingSet) as info:
        split(MUTUAL, {"a"})
    # b :- not K a only sees a through K, so it can sit in the top
    assert [str(r) for r in info.value.rules] == ["a :- not K b."]


def test_either_rules_follow_policy():
    p = parse_program("a :- not K b.\n:- K a.\nc :- K a.")
    bottom_first = split(p, AB, "bottom-first")
    top_first = split(p, AB, "top-first")
    assert len(bottom_first.either_rules) == 1
    assert len(bottom_first.bottom) == 2 and len(top_first.bottom) == 1
    with pytest.raises(ValueError):
        split(p, AB, "sideways")


def test_eu_reduct():
    assert print_program(eu_reduct(PI3, AB, V("a"))).strip() == "c :- top."
    assert print_program(eu_reduct(PI3, AB, V("b"))).strip() == "c :- bot."
    plain = parse_program("a.\nc :- d.")
    assert eu_reduct(plain, {"a"}, V("a")) == parse_program("c :- d.")


def test_restrict_and_compose():
    assert restrict(V("ac"), AB) == V("a")
    assert restrict([HTPair({"a"}, {"a", "c"})], {"c"}) == {HTPair(frozenset(), {"c"})}
    assert compose(V("a"), V("c")) == V("ac")
    assert compose(V("b"), V("")) == V("b")
    assert compose(V("a", "b"), V("c", "")) == V("ac", "a", "bc", "b")
    with pytest.raises(OverlapError):
        compose(V("a"), V("a"))


@pytest.mark.parametrize("semantics", ["g91", "faeel"])
def test_pi3_solutions(semantics):
    assert solutions(PI3, AB, semantics) == [(V("a"), V("c")), (V("b"), V(""))]
    assert set(world_views_via_splitting(PI3, AB, semantics)) == views(V("ac"), V("b"))


def test_full_set_puts_everything_at_the_bottom():
    sols = solutions(PI3, "abc", "g91")
    assert {wb for wb, _ in sols} == set(world_views(PI3, "g91"))
    assert all(wt == V("") for _, wt in sols)


def test_empty_set():
    parts = split(PI3, set())
    assert len(parts.bottom) == 0 and parts.top == PI3


@pytest.mark.parametrize("semantics", ["g91", "feel", "faeel", "eel", "eel_g91"])
@pytest.mark.parametrize("policy", ["bottom-first", "top-first"])
def test_splitting_agrees_with_direct(semantics, policy):
    p = parse_program("a | b.\n:- not K a.\nc :- K a.\nd :- not K c, not a.")
    direct = set(world_views(p, semantics))
    for u in splitting_sets(p):
        assert set(world_views_via_splitting(p, u, semantics, policy=policy)) == direct


def test_unknown_semantics():
    with pytest.raises(ValueError):
        solutions(PI3, AB, "weak")
