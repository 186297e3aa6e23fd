import pytest

from programs import MUTUAL, DISJ, GAMMA1, GAMMA2, GAMMA3, PI3, V, views

from elpkit import (
    BeliefInterpretation,
    HTPair,
    belief_view,
    faeel_world_views,
    faeel_world_views_direct,
    is_equilibrium_belief_model,
    moore_extensions,
    negatively_subjective_reduct,
    parse_program,
    parse_theory,
    print_program,
    weak_autoepistemic_world_views,
)
from elpkit.core import BOT, TOP, Atom, Implies
from elpkit.faeel import (
    belief_model,
    bint_leq,
    bint_lt,
    excluded_middle,
    is_faeel_world_view,
    is_weak_equilibrium_belief_model,
)

a = Atom("a")


def P(here, there):
    return HTPair(frozenset(here), frozenset(there))


def test_belief_models():
    assert belief_model(BeliefInterpretation(belief_view([P("", "")]), P("", "a")), GAMMA3)
    assert belief_model(BeliefInterpretation(V("a"), P("a", "a")), GAMMA3)


def test_bint_order():
    big = BeliefInterpretation(V("a"), P("a", "a"))
    small = BeliefInterpretation(belief_view([P("", "a")]), P("", "a"))
    assert bint_leq(small, big) and bint_lt(small, big)
    assert not bint_leq(big, small)
    assert not bint_lt(big, big)


@pytest.mark.parametrize(
    "real, view, expected",
    [("a", V("a"), False), ("", V(""), True), ("a", V(""), False)],
)
def test_equilibrium_belief_models_of_gamma3(real, view, expected):
    assert is_equilibrium_belief_model(frozenset(real), view, GAMMA3) is expected


def test_weak_equilibrium_accepts_self_support():
    assert is_weak_equilibrium_belief_model(frozenset("a"), V("a"), GAMMA3)
    assert is_weak_equilibrium_belief_model(frozenset(), V(""), parse_theory(""), ("a",))


@pytest.mark.parametrize("engine", ["characterization", "direct"])
@pytest.mark.parametrize(
    "theory, expected",
    [
        (GAMMA3, views(V(""))),
        (DISJ, views(V("a", "b"))),
        (GAMMA2, views(V("a"), V("b"))),
        (MUTUAL, views(V("a"), V("b"))),
        (PI3, views(V("ac"), V("b"))),
    ],
)
def test_faeel_examples(theory, expected, engine):
    assert set(faeel_world_views(theory, engine=engine)) == expected


def test_engine_validation():
    assert faeel_world_views(DISJ, engine="char") == faeel_world_views_direct(DISJ)
    with pytest.raises(ValueError):
        faeel_world_views(DISJ, engine="nope")


def test_is_faeel_world_view():
    assert is_faeel_world_view(GAMMA3, V(""))
    assert not is_faeel_world_view(GAMMA3, V("a"))


@pytest.mark.parametrize(
    "theory, sig, expected",
    [
        (GAMMA3, None, views(V(""), V("a"))),
        (GAMMA1, None, views(V("a"))),
        (parse_theory(""), ("a",), views(V(""))),
    ],
)
def test_weak_autoepistemic(theory, sig, expected):
    assert set(weak_autoepistemic_world_views(theory, sig)) == expected


def test_negatively_subjective_reduct():
    assert negatively_subjective_reduct(GAMMA3, V("a")) == GAMMA3
    (f,) = negatively_subjective_reduct(GAMMA1, V("a"))
    assert f == Implies(TOP, a)
    (f,) = negatively_subjective_reduct(GAMMA1, V("b"))
    assert f == Implies(BOT, a)
    prog = negatively_subjective_reduct(parse_program("a :- not K b."), V("a"))
    assert print_program(prog).strip() == "a :- top."


def test_moore_emulation():
    assert len(moore_extensions(parse_program("a :- not K b.\nc :- K a."))) <= 1
    assert set(moore_extensions(parse_theory(""), ("a",))) <= set(faeel_world_views(excluded_middle(("a",)), ("a",)))
    em = tuple(GAMMA3) + excluded_middle(("a",))
    assert set(moore_extensions(GAMMA3)) <= set(weak_autoepistemic_world_views(em, ("a",)))
