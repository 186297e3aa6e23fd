"""Differential checks of the bitmask engines against the brute-force oracle."""

import random

import pytest

from elpkit import oracle, parse_theory
from elpkit.core import Theory
from elpkit.eel import eel_world_views
from elpkit.faeel import faeel_world_views_direct, weak_autoepistemic_world_views
from elpkit.feel import feel_world_views
from elpkit.g91 import g91_world_views
from elpkit.harness import GenConfig, random_formula, random_program

ENGINES = [
    (g91_world_views, oracle.g91),
    (feel_world_views, oracle.feel),
    (eel_world_views, oracle.eel),
    (faeel_world_views_direct, oracle.faeel),
    (weak_autoepistemic_world_views, oracle.weak_autoepistemic),
]


@pytest.mark.parametrize("fast, slow", ENGINES, ids=[e[0].__name__ for e in ENGINES])
def test_programs_at_two_atoms(fast, slow):
    cfg = GenConfig(atom_count=2)
    for s in range(60):
        p = random_program(cfg, s)
        assert set(fast(p, cfg.atoms)) == set(slow(p, cfg.atoms)), p


@pytest.mark.parametrize("fast, slow", ENGINES, ids=[e[0].__name__ for e in ENGINES])
def test_nested_theories_at_two_atoms(fast, slow):
    atoms = ("a", "b")
    for s in range(40):
        rng = random.Random(s)
        t = Theory(tuple(random_formula(rng, atoms, 3) for _ in range(rng.randint(1, 2))))
        assert set(fast(t, atoms)) == set(slow(t, atoms)), t


def test_oracle_on_examples():
    g3 = parse_theory("K a -> a")
    assert set(oracle.g91(g3)) == {frozenset([frozenset()]), frozenset([frozenset("a")])}
    assert set(oracle.faeel(g3)) == {frozenset([frozenset()])}
