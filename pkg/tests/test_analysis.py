from programs import MUTUAL, LOOP, KA, PI3

from elpkit import dep_pairs, parse_program, stratify, tight_stratify
from elpkit.analysis import LayerAssignment, is_stratified, is_tight, verify, violation
from elpkit.harness import GenConfig, random_stratified_program, random_tight_program


def test_dependence_pairs():
    g = dep_pairs(PI3)
    assert ("c", "a") in g.edges
    assert {("a", "b"), ("b", "a")} <= g.edges
    assert ("a", "a") in dep_pairs(KA).plus_edges
    assert not dep_pairs(parse_program("a :- b, not c.\nb | c.")).edges


def test_mutual_negative_knowledge_is_not_stratified():
    assert stratify(MUTUAL) is None
    assert violation(MUTUAL) is not None
    assert stratify(KA) is None


def test_pi3_is_tight_with_two_layers():
    # Π3 contains the mutual ¬K cycle of MUTUAL, so only the tight layering exists
    assert stratify(PI3) is None
    la = tight_stratify(PI3)
    assert la.layers == {"a": 0, "b": 0, "c": 1}
    assert la.strata() == [["a", "b"], ["c"]]


def test_tightness():
    assert tight_stratify(MUTUAL) is not None
    assert tight_stratify(KA) is None
    assert tight_stratify(LOOP) is None
    assert not is_tight(LOOP) and is_tight(MUTUAL)


def test_stratified_chain():
    p = parse_program("a :- not K b.\nc :- K a, not K b.")
    la = stratify(p)
    assert la is not None and is_stratified(p)
    assert la["b"] < la["a"] < la["c"]


def test_generated_layerings_verify():
    for n in (2, 3, 4):
        cfg = GenConfig(atom_count=n)
        for s in range(30):
            p, lam = random_stratified_program(cfg, s)
            assert verify(dep_pairs(p), LayerAssignment(lam))
            assert is_stratified(p)
            q, lam = random_tight_program(cfg, s)
            assert verify(dep_pairs(q), LayerAssignment(lam), plus_only=True)
            assert is_tight(q)
