import json

from programs import DISJ, PI3

from elpkit import parse_program
from elpkit.harness import (
    PROPERTIES,
    GenConfig,
    check_property,
    random_program,
    report_json,
    report_text,
    run_battery,
    shrink,
)
import pytest


def test_generation_is_deterministic():
    cfg = GenConfig(atom_count=3)
    assert random_program(cfg, 7) == random_program(cfg, 7)
    assert random_program(cfg, 7) != random_program(cfg, 8)


def test_zero_rules_gives_empty_program():
    assert len(random_program(GenConfig(atom_count=1, rule_count=(0, 0)), 3)) == 0


def test_config_validation():
    with pytest.raises(ValueError):
        GenConfig(atom_count=0)
    with pytest.raises(ValueError):
        GenConfig(atom_count=6)


def test_supra_asp_faeel_passes_on_disjunction():
    assert check_property("supra_asp", DISJ, {"semantics": ("faeel",)}).passed


def test_supra_asp_feel_fails_on_disjunction():
    rep = check_property("supra_asp", DISJ, {"semantics": ("feel",)})
    assert not rep.passed
    assert "[{a}]" in rep.failures[0].witness and "[{b}]" in rep.failures[0].witness


def test_splitting_property_on_pi3():
    assert check_property("splitting", PI3, {"semantics": ("faeel",), "U": {"a", "b"}}).passed


def test_not_applicable_is_not_a_failure():
    rep = check_property("tight_coincidence", parse_program("a :- K a."))
    assert rep.applicable == 0 and rep.passed


def test_shrinking_drops_irrelevant_rules():
    p = parse_program("a | b.\nc :- not d.\nd :- c.")
    small, witness = shrink("supra_asp", p, ("a", "b", "c", "d"), {"semantics": ("feel",)})
    assert small == parse_program("a | b.")
    assert witness


def test_battery_reports():
    reports = run_battery(["weak_equals_g91", "persistence"], count=5, atom_counts=(2,), seed=1)
    assert [r.name for r in reports] == ["weak_equals_g91", "persistence"]
    assert all(r.trials == 5 and r.passed for r in reports)
    assert "PASS" in report_text(reports)
    doc = json.loads(report_json(reports))
    assert doc[0]["failures"] == [] if isinstance(doc, list) else doc


def test_every_property_runs_on_a_small_program():
    for name in PROPERTIES:
        params = {"constraint": parse_program(":- not K a.").rules[0]}
        assert check_property(name, PI3, params).passed, name
