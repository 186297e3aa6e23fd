from itertools import product

from hypothesis import given, settings, strategies as st
import pytest
import random

from elpkit import HTPair, ht_sat, parse_formula, parse_theory, stable_models
from elpkit.core import EnumerationCapError
from elpkit.harness import random_formula
from elpkit.ht import classical_sat, ht_model


def test_double_negation_at_here_level():
    p = HTPair(frozenset(), {"a"})
    assert ht_sat(p, parse_formula("not not a"))
    assert not ht_sat(p, parse_formula("a"))


def test_implication_needs_there_too():
    p = HTPair(frozenset(), {"a"})
    assert not ht_sat(p, parse_formula("not a"))
    assert ht_sat(HTPair(frozenset(), frozenset()), parse_formula("not a"))


def test_pair_rejects_here_outside_there():
    with pytest.raises(ValueError):
        HTPair({"a"}, frozenset())


def test_ht_rejects_modal_formulas():
    with pytest.raises((TypeError, ValueError)):
        ht_sat(HTPair.total({"a"}), parse_formula("K a"))


@pytest.mark.parametrize(
    "theory, sig, expected",
    [
        ("a | b", None, [{"a"}, {"b"}]),
        ("", ("a",), [set()]),
        ("top -> a\nbot -> b", None, [{"a"}]),
        ("not a -> b\nnot b -> a", None, [{"a"}, {"b"}]),
        ("not not a -> a", None, [set(), {"a"}]),
        ("a -> a", None, [set()]),
        ("not a -> a", None, []),
    ],
)
def test_stable_models(theory, sig, expected):
    got = stable_models(parse_theory(theory), sig)
    assert sorted(map(sorted, got)) == sorted(map(sorted, expected))


def test_stable_model_cap():
    with pytest.raises(EnumerationCapError):
        stable_models(parse_theory("a"), tuple("abcdef"), cap=4)


def _pairs(atoms):
    for bits in product((0, 1, 2), repeat=len(atoms)):
        there = {x for x, v in zip(atoms, bits) if v}
        here = {x for x, v in zip(atoms, bits) if v == 2}
        yield HTPair(here, there)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_persistence_and_total_pairs_are_classical(seed):
    atoms = ("a", "b", "c")
    f = random_formula(random.Random(seed), atoms, 3, modal=False)
    for p in _pairs(atoms):
        if ht_sat(p, f):
            assert ht_sat(HTPair.total(p.there), f)
        if p.is_total:
            assert ht_sat(p, f) == classical_sat(p.there, f)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_stable_models_match_definition(seed):
    atoms = ("a", "b")
    rng = random.Random(seed)
    theory = [random_formula(rng, atoms, 2, modal=False) for _ in range(rng.randint(1, 3))]
    expected = []
    for p in _pairs(atoms):
        if p.is_total and ht_model(p, theory):
            smaller = any(
                q.there == p.there and q.here < p.there and ht_model(q, theory) for q in _pairs(atoms)
            )
            if not smaller:
                expected.append(p.there)
    assert set(stable_models(theory, atoms)) == set(expected)


def test_free_atoms_stay_false():
    # widening the signature never adds stable models containing unused atoms
    base = stable_models(parse_theory("a | b"))
    assert set(stable_models(parse_theory("a | b"), ("a", "b", "z"))) == set(base)
