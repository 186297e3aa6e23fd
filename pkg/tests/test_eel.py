import pytest

from programs import DISJ, LOOP, LOOP_C, GAMMA3, V, views

from elpkit import HTPair, eel_g91_world_views, eel_world_views, feel_world_views, is_simple, parse_theory
from elpkit.eel import has_simple_witness, is_eel_world_view


def P(here, there):
    return HTPair(frozenset(here), frozenset(there))


def test_is_simple():
    assert not is_simple([P("a", "ab"), P("b", "ab")])
    assert is_simple(V("a", "b", "ab"))
    assert is_simple([P("", "ab")])


def test_example10():
    got = set(eel_world_views(LOOP))
    assert V("a", "b") in got and V("ab") in got
    assert got == views(V("a", "b"), V("ab"))


def test_eel_agrees_with_feel_on_disjunction():
    assert set(eel_world_views(DISJ)) == set(feel_world_views(DISJ))


def test_self_supported_belief():
    assert set(eel_world_views(GAMMA3)) == views(V(""))
    assert has_simple_witness(GAMMA3, V("a"))


@pytest.mark.parametrize("form", ["order", "definitional"])
def test_forms_agree_on_examples(form):
    assert set(eel_world_views(LOOP, form=form)) == views(V("a", "b"), V("ab"))
    assert is_eel_world_view(LOOP, V("ab"), form=form)


def test_unknown_form():
    with pytest.raises(ValueError):
        eel_world_views(DISJ, form="other")


def test_eel_g91():
    # adding the constraint leaves only the self-supported view
    assert set(eel_g91_world_views(LOOP_C)) == views(V("ab"))
    assert set(eel_g91_world_views(DISJ)) == views(V("a", "b"))
    assert set(eel_g91_world_views(parse_theory(""), ("a",))) == views(V(""))
