import pytest

from programs import MUTUAL, GAMMA1, GAMMA2, GAMMA3, KA, PI3, V, views

from elpkit import (
    K,
    Atom,
    g91_world_views,
    is_g91_world_view,
    parse_formula,
    parse_program,
    parse_theory,
    print_program,
    s5_sat,
    subjective_reduct,
)
from elpkit import oracle
from elpkit.core import BOT, TOP, EnumerationCapError, Implies
from elpkit.g91 import epistemic_model_s5

a, b = Atom("a"), Atom("b")


def test_known_atom_holds_everywhere():
    w = V("b")
    for real in (frozenset(), frozenset("a"), frozenset("b")):
        assert s5_sat(real, w, K(b))


def test_k_and_m_on_two_worlds():
    w = V("a", "b")
    assert not s5_sat(frozenset("a"), w, K(a))
    assert s5_sat(frozenset("a"), w, parse_formula("M a"))


def test_epistemic_models_of_gamma1():
    expected = views(V("b"), V("ab"), V("b", "ab"), V("a"), V("a", "ab"))
    assert set(oracle.epistemic_models(GAMMA1, ("a", "b"))) == expected
    assert epistemic_model_s5(V("ab"), GAMMA1)


def test_reduct_examples():
    (f,) = subjective_reduct(GAMMA1, V("b"))
    assert f == Implies(Implies(TOP, BOT), a)
    (f,) = subjective_reduct(GAMMA1, V("a"))
    assert f == Implies(Implies(BOT, BOT), a)


def test_reduct_over_u_leaves_other_k_alone():
    top = parse_program("c :- K a.")
    assert print_program(subjective_reduct(top, V("a"), frozenset("ab"))).strip() == "c :- top."
    assert print_program(subjective_reduct(top, V("b"), frozenset("ab"))).strip() == "c :- bot."
    kept = subjective_reduct(parse_program("c :- K d."), V("a"), frozenset("ab"))
    assert print_program(kept).strip() == "c :- K d."


@pytest.mark.parametrize(
    "theory, expected",
    [
        (GAMMA1, views(V("a"))),
        (GAMMA2, views(V("a"), V("b"))),
        (GAMMA3, views(V(""), V("a"))),
        (MUTUAL, views(V("a"), V("b"))),
        (PI3, views(V("ac"), V("b"))),
        (KA, views(V(""), V("a"))),
    ],
)
def test_g91_examples(theory, expected):
    assert set(g91_world_views(theory)) == expected


def test_g91_world_views_are_fixpoints():
    for w in g91_world_views(PI3):
        assert is_g91_world_view(PI3, w)
    assert not is_g91_world_view(PI3, V("a"))


def test_g91_output_is_sorted_and_deterministic():
    assert g91_world_views(PI3) == g91_world_views(PI3)
    assert g91_world_views(GAMMA3) == [V(""), V("a")]


def test_unsatisfiable_program_has_no_views():
    assert g91_world_views(parse_program("a.\n:- K a.")) == []


def test_cap():
    with pytest.raises(EnumerationCapError):
        g91_world_views(parse_theory("a"), tuple("abcdefg"), cap=5)
