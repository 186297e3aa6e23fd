"""Random programs and the property battery.

Every generator is a pure function of ``(config, seed)``.  A battery run
derives one seed per trial from the base seed and the trial index, so any
reported failure can be replayed from those three values.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field, replace
from typing import Callable

from .core import (
    And,
    Atom,
    BOT,
    Formula,
    Implies,
    K,
    Not,
    ObjectiveLiteral,
    Or,
    Program,
    Rule,
    SubjectiveLiteral,
    print_formula,
    print_program,
)
from .ht import HTPair

ATOM_NAMES = "abcde"

LITERAL_KINDS = ("obj0", "obj1", "obj2", "sub0", "sub1", "sub2")


@dataclass(frozen=True)
class GenConfig:
    atom_count: int = 3
    rule_count: tuple[int, int] = (1, 4)
    head_size: tuple[int, int] = (1, 2)
    body_size: tuple[int, int] = (0, 3)
    # relative weights, keyed as in LITERAL_KINDS
    weights: tuple[float, ...] = (4.0, 2.0, 0.5, 2.0, 2.0, 0.5)
    inner_negation: tuple[float, float, float] = (6.0, 1.0, 0.5)
    constraint_prob: float = 0.15
    constant_prob: float = 0.03
    # chance of adding a positive epistemic loop x|y, x :- K y, y :- K x;
    # uniform random rules almost never contain one
    loop_prob: float = 0.2
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.atom_count <= len(ATOM_NAMES):
            raise ValueError(f"atom_count must be in 1..{len(ATOM_NAMES)}")
        for name in ("rule_count", "head_size", "body_size"):
            lo, hi = getattr(self, name)
            if lo < 0 or lo > hi:
                raise ValueError(f"{name} must be a non-empty range of non-negative ints")
        if len(self.weights) != len(LITERAL_KINDS) or sum(self.weights) <= 0:
            raise ValueError("weights must give one positive-sum weight per literal kind")

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(ATOM_NAMES[: self.atom_count])


def trial_seed(seed: int, index: int) -> int:
    return (seed * 1_000_003 + index) & 0xFFFFFFFF


# ---------------------------------------------------------------------------
# Programs


def _objective_literal(rng: random.Random, cfg: GenConfig, pool, negations: int) -> ObjectiveLiteral:
    if rng.random() < cfg.constant_prob:
        return ObjectiveLiteral(rng.choice(("top", "bot")), negations)
    return ObjectiveLiteral(rng.choice(pool), negations)


def _literal(rng: random.Random, cfg: GenConfig, kind: str, obj_pool, sub_pool):
    negations = int(kind[3])
    if kind.startswith("obj"):
        return _objective_literal(rng, cfg, obj_pool, negations)
    inner_neg = rng.choices((0, 1, 2), weights=cfg.inner_negation)[0]
    return SubjectiveLiteral(_objective_literal(rng, cfg, sub_pool, inner_neg), negations)


def _rule(rng, cfg, obj_pool, sub_pool, kinds=LITERAL_KINDS, weights=None) -> Rule:
    weights = cfg.weights if weights is None else weights
    if rng.random() < cfg.constraint_prob:
        head: list[str] = []
    else:
        lo, hi = cfg.head_size
        k = rng.randint(max(lo, 1), max(hi, 1))
        head = rng.sample(list(obj_pool), min(k, len(obj_pool)))
    body = []
    for _ in range(rng.randint(*cfg.body_size)):
        kind = rng.choices(kinds, weights=weights)[0]
        if kind.startswith("sub") and not sub_pool:
            kind = "obj" + kind[3]
        body.append(_literal(rng, cfg, kind, obj_pool, sub_pool))
    return Rule(tuple(head), tuple(body))


def _loop_rules(rng: random.Random, atoms) -> list[Rule]:
    if len(atoms) < 2:
        return []
    x, y = rng.sample(list(atoms), 2)
    rules = [
        Rule((x,), (SubjectiveLiteral(ObjectiveLiteral(y)),)),
        Rule((y,), (SubjectiveLiteral(ObjectiveLiteral(x)),)),
    ]
    if rng.random() < 0.7:
        rules.append(Rule((x, y), ()))
    return rules


def random_program(cfg: GenConfig, seed: int | None = None) -> Program:
    rng = random.Random(cfg.seed if seed is None else seed)
    atoms = cfg.atoms
    rules = [_rule(rng, cfg, atoms, atoms) for _ in range(rng.randint(*cfg.rule_count))]
    if rules and rng.random() < cfg.loop_prob:
        rules.extend(_loop_rules(rng, atoms))
        rng.shuffle(rules)
    return Program(tuple(rules))


def random_objective_program(cfg: GenConfig, seed: int | None = None) -> Program:
    kinds = ("obj0", "obj1", "obj2")
    rng = random.Random(cfg.seed if seed is None else seed)
    atoms = cfg.atoms
    rules = [
        _rule(rng, cfg, atoms, atoms, kinds, cfg.weights[:3])
        for _ in range(rng.randint(*cfg.rule_count))
    ]
    return Program(tuple(rules))


def random_layering(rng: random.Random, atoms) -> dict[str, int]:
    layers = rng.randint(1, len(atoms))
    return {a: rng.randrange(layers) for a in atoms}


def _layered_program(cfg: GenConfig, seed: int | None, tight: bool) -> tuple[Program, dict[str, int]]:
    """Rules whose head and objective atoms share one layer.  Subjective
    literals point strictly downwards; in tight mode negated ones may point
    anywhere."""
    rng = random.Random(cfg.seed if seed is None else seed)
    atoms = cfg.atoms
    lam = random_layering(rng, atoms)
    rules = []
    for _ in range(rng.randint(*cfg.rule_count)):
        k = rng.choice(sorted(set(lam.values())))
        same = [a for a in atoms if lam[a] == k]
        lower = [a for a in atoms if lam[a] < k]
        body = []
        r = _rule(rng, cfg, same, atoms)
        for lit in r.body:
            if isinstance(lit, SubjectiveLiteral) and not (tight and lit.negations > 0):
                if not lower:
                    lit = _objective_literal(rng, cfg, same, lit.negations)
                elif not lit.inner.is_constant:
                    lit = SubjectiveLiteral(replace(lit.inner, base=rng.choice(lower)), lit.negations)
            body.append(lit)
        rules.append(Rule(r.head, tuple(body)))
    return Program(tuple(rules)), lam


def random_stratified_program(cfg: GenConfig, seed: int | None = None) -> tuple[Program, dict[str, int]]:
    return _layered_program(cfg, seed, tight=False)


def random_tight_program(cfg: GenConfig, seed: int | None = None) -> tuple[Program, dict[str, int]]:
    return _layered_program(cfg, seed, tight=True)


def random_subjective_constraint(cfg: GenConfig, seed: int | None = None) -> Rule:
    rng = random.Random(cfg.seed if seed is None else seed)
    kinds = ("sub0", "sub1", "sub2")
    size = rng.randint(1, max(1, cfg.body_size[1]))
    body = tuple(
        _literal(rng, cfg, rng.choices(kinds, weights=cfg.weights[3:])[0], cfg.atoms, cfg.atoms)
        for _ in range(size)
    )
    return Rule((), body)


# ---------------------------------------------------------------------------
# Formulas and views


def random_formula(rng: random.Random, atoms, depth: int = 3, modal: bool = True) -> Formula:
    if depth <= 0 or rng.random() < 0.25:
        return BOT if rng.random() < 0.07 else Atom(rng.choice(atoms))
    op = rng.choices(("and", "or", "imp", "not", "K"), weights=(2, 2, 2, 2, 2 if modal else 0))[0]
    if op == "not":
        return Not(random_formula(rng, atoms, depth - 1, modal))
    if op == "K":
        return K(random_formula(rng, atoms, depth - 1, modal))
    left = random_formula(rng, atoms, depth - 1, modal)
    right = random_formula(rng, atoms, depth - 1, modal)
    return {"and": And, "or": Or, "imp": Implies}[op](left, right)


def random_subset(rng: random.Random, atoms) -> frozenset[str]:
    return frozenset(a for a in atoms if rng.random() < 0.5)


def random_pair(rng: random.Random, atoms) -> HTPair:
    t = random_subset(rng, atoms)
    return HTPair(frozenset(a for a in t if rng.random() < 0.6), t)


def random_belief_view(rng: random.Random, atoms, size: int | None = None):
    size = rng.randint(1, 4) if size is None else size
    return frozenset(random_pair(rng, atoms) for _ in range(size))


def random_total_view(rng: random.Random, atoms, size: int | None = None):
    size = rng.randint(1, 4) if size is None else size
    return frozenset(random_subset(rng, atoms) for _ in range(size))


# ---------------------------------------------------------------------------
# Properties


@dataclass
class Failure:
    program: str
    witness: str
    seed: int | None = None
    trial: int | None = None


@dataclass
class PropertyReport:
    name: str
    trials: int = 0
    applicable: int = 0
    failures: list[Failure] = field(default_factory=list)
    seeds: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "PropertyReport") -> None:
        self.trials += other.trials
        self.applicable += other.applicable
        self.failures.extend(other.failures)
        self.seeds.extend(other.seeds)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.trials} trials, {self.applicable} applicable, {len(self.failures)} failures"


# A checker takes (program, sig, params) and returns None when the property
# does not apply, [] when it holds, or a list of witness strings.
Checker = Callable[[Program, tuple, dict], "list[str] | None"]

PROPERTIES: dict[str, Checker] = {}


def prop(name: str):
    def register(fn: Checker) -> Checker:
        PROPERTIES[name] = fn
        return fn

    return register


def _fmt_views(views) -> str:
    from ._kernel import view_key

    return "{" + ", ".join(
        "[" + ", ".join("{" + ",".join(sorted(t)) + "}" for t in view_key(w)[1]) + "]" for w in views
    ) + "}"


SIX = ("g91", "feel", "faeel", "eel", "eel_g91", "weak")


@prop("supra_asp")
def _supra_asp(program, sig, params):
    from .ht import stable_models
    from .semantics import world_views

    objective = Program(tuple(r for r in program.rules if r.is_objective))
    sm = stable_models(objective, sig)
    expected = [frozenset(sm)] if sm else []
    out = []
    for s in params.get("semantics", ("g91", "faeel", "eel_g91")):
        got = world_views(objective, s, sig)
        if set(got) != set(expected):
            out.append(f"{s}: expected {_fmt_views(expected)}, got {_fmt_views(got)}")
    return out


@prop("supra_s5")
def _supra_s5(program, sig, params):
    from .g91 import epistemic_model_s5
    from .semantics import world_views

    out = []
    for s in params.get("semantics", SIX):
        for w in world_views(program, s, sig):
            if not epistemic_model_s5(w, program):
                out.append(f"{s}: {_fmt_views([w])} is not an epistemic model")
    return out


@prop("constraint_monotonicity")
def _constraint_monotonicity(program, sig, params):
    from .g91 import epistemic_model_s5
    from .semantics import world_views

    r = params.get("constraint")
    if r is None:
        return None
    extended = program.union([r])
    out = []
    for s in params.get("semantics", ("g91", "feel", "faeel", "eel", "eel_g91")):
        expected = [w for w in world_views(program, s, sig) if epistemic_model_s5(w, [r])]
        got = world_views(extended, s, sig)
        if set(got) != set(expected):
            out.append(f"{s} with {r}: expected {_fmt_views(expected)}, got {_fmt_views(got)}")
    return out


@prop("splitting")
def _splitting(program, sig, params):
    from .semantics import world_views
    from .splitting import compose, restrict, solutions, splitting_sets

    out = []
    sets = params.get("sets")
    if sets is None:
        sets = splitting_sets(program, sig) if params.get("U") is None else [frozenset(params["U"])]
    for s in params.get("semantics", ("g91", "feel", "faeel", "eel")):
        direct = world_views(program, s, sig)
        for u in sets:
            rest = frozenset(sig) - u
            for policy in ("bottom-first", "top-first"):
                sols = solutions(program, u, s, sig, policy=policy)
                composed = {compose(wb, wt) for wb, wt in sols}
                if composed != set(direct):
                    out.append(
                        f"{s}, U={{{','.join(sorted(u))}}}, {policy}: direct {_fmt_views(direct)}, "
                        f"via splitting {_fmt_views(composed)}"
                    )
            sol_set = set(solutions(program, u, s, sig))
            for w in direct:
                pair = (restrict(w, u), restrict(w, rest))
                if pair not in sol_set or compose(*pair) != w:
                    out.append(f"{s}, U={{{','.join(sorted(u))}}}: {_fmt_views([w])} does not decompose")
    return out


@prop("faeel_characterization")
def _faeel_characterization(program, sig, params):
    from .faeel import faeel_world_views_direct
    from .feel import feel_world_views
    from .g91 import g91_world_views

    direct = set(faeel_world_views_direct(program, sig))
    g91 = set(g91_world_views(program, sig))
    char = {w for w in feel_world_views(program, sig) if w in g91}
    if direct != char:
        return [f"direct {_fmt_views(direct)} vs FEEL∩G91 {_fmt_views(char)}"]
    return []


@prop("weak_equals_g91")
def _weak_equals_g91(program, sig, params):
    from .faeel import weak_autoepistemic_world_views
    from .g91 import g91_world_views

    weak, g91 = weak_autoepistemic_world_views(program, sig), g91_world_views(program, sig)
    if set(weak) != set(g91):
        return [f"weak {_fmt_views(weak)} vs G91 {_fmt_views(g91)}"]
    return []


@prop("faeel_subset_feel")
def _faeel_subset_feel(program, sig, params):
    from .faeel import faeel_world_views_direct
    from .feel import feel_world_views

    extra = set(faeel_world_views_direct(program, sig)) - set(feel_world_views(program, sig))
    return [f"FAEEL views not in FEEL: {_fmt_views(extra)}"] if extra else []


@prop("feel_subset_eel")
def _feel_subset_eel(program, sig, params):
    from .eel import eel_world_views
    from .faeel import faeel_world_views
    from .feel import feel_world_views

    eel = set(eel_world_views(program, sig))
    out = []
    for name, views in (("FEEL", feel_world_views(program, sig)), ("FAEEL", faeel_world_views(program, sig))):
        extra = set(views) - eel
        if extra:
            out.append(f"{name} views not in EEL: {_fmt_views(extra)}")
    return out


@prop("tight_coincidence")
def _tight_coincidence(program, sig, params):
    from .analysis import is_tight
    from .faeel import faeel_world_views
    from .g91 import g91_world_views

    if not is_tight(program):
        return None
    g91, faeel = g91_world_views(program, sig), faeel_world_views(program, sig, engine="direct")
    if set(g91) != set(faeel):
        return [f"G91 {_fmt_views(g91)} vs FAEEL {_fmt_views(faeel)}"]
    return []


@prop("stratified_unique")
def _stratified_unique(program, sig, params):
    from .analysis import is_stratified
    from .faeel import faeel_world_views, moore_extensions
    from .g91 import g91_world_views

    if not is_stratified(program):
        return None
    g91, faeel = g91_world_views(program, sig), faeel_world_views(program, sig, engine="direct")
    moore = moore_extensions(program, sig)
    out = []
    if len(g91) > 1 or len(faeel) > 1 or set(g91) != set(faeel):
        out.append(f"G91 {_fmt_views(g91)} vs FAEEL {_fmt_views(faeel)}")
    if len(moore) > 1:
        out.append(f"{len(moore)} Moore extensions: {_fmt_views(moore)}")
    return out


def _candidate_views(sig, limit: int = 8):
    from ._kernel import space

    sp = space(tuple(sig))
    if sp.size > limit:
        return None
    return [sp.view(w) for w in range(1, 1 << sp.size)]


@prop("neg_reduct_invariance")
def _neg_reduct_invariance(program, sig, params):
    from .faeel import faeel_world_views, is_faeel_world_view, negatively_subjective_reduct
    from .g91 import epistemic_model_s5

    views = set(faeel_world_views(program, sig, engine="direct"))
    candidates = _candidate_views(sig)
    if candidates is None:
        # beyond 3 atoms: the world views plus a sample of epistemic models
        rng = random.Random(params.get("seed", 0))
        candidates = list(views) + [
            w for w in (random_total_view(rng, sig) for _ in range(40)) if epistemic_model_s5(w, program)
        ]
    out = []
    for w in candidates:
        reduct = negatively_subjective_reduct(program, w)
        if (w in views) != is_faeel_world_view(reduct, w, sig):
            out.append(f"{_fmt_views([w])}: in FAEEL(Π)={w in views}, reduct {print_program(reduct)!r}")
    return out


@prop("eel_form_equivalence")
def _eel_form_equivalence(program, sig, params):
    from .core import as_formulas
    from .eel import eel_world_views, is_eel_world_view
    from ._kernel import compile_theory

    order = eel_world_views(program, sig, form="order")
    definitional = eel_world_views(program, sig, form="definitional")
    if set(order) != set(definitional):
        return [f"order {_fmt_views(order)} vs definitional {_fmt_views(definitional)}"]
    # per candidate: both forms on a sample of all epistemic models, where
    # the definitional search (one here-world per there-world) stays small
    c = compile_theory(as_formulas(program), tuple(sig))
    pool = []
    for w in c.epistemic_models():
        view = c.sp.view(w)
        if sum(len(t) for t in view) <= 10:
            pool.append(view)
        if len(pool) >= 400:
            break
    rng = random.Random(params.get("seed", 0))
    sample = rng.sample(pool, min(len(pool), params.get("samples", 12)))
    out = []
    for w in sample:
        a = is_eel_world_view(program, w, sig, form="order")
        b = is_eel_world_view(program, w, sig, form="definitional")
        if a != b:
            out.append(f"{_fmt_views([w])}: order {a}, definitional {b}")
    return out


# Formula-level properties use their own random inputs drawn from params["seed"].


def _formula_trial(params, sig):
    rng = random.Random(params.get("seed", 0))
    depth = params.get("depth", 3)
    return rng, random_formula(rng, sig, depth)


@prop("persistence")
def _persistence(program, sig, params):
    from .feel import BeliefInterpretation, bi_sat, there_view
    from .g91 import s5_sat
    from .ht import ht_sat
    from .core import is_objective, subformulas

    rng, f = _formula_trial(params, sig)
    out = []
    for _ in range(params.get("samples", 8)):
        view = random_belief_view(rng, sig)
        real = random_pair(rng, sig)
        wt = there_view(view)
        pt = frozenset(HTPair.total(t) for t in wt)
        for g in set(subformulas(f)):
            # model level: W |= g implies W^t |= g
            if all(bi_sat(BeliefInterpretation(view, p), g) for p in view):
                if not all(s5_sat(t, wt, g) for t in wt):
                    out.append(f"view {sorted(view, key=repr)} models {print_formula(g)} but its there-view does not")
            # interpretation level, with a real world outside the view
            i = BeliefInterpretation(view, real)
            if bi_sat(i, g) and not bi_sat(BeliefInterpretation(pt, HTPair.total(real.there)), g):
                out.append(f"{real} in {sorted(view, key=repr)} satisfies {print_formula(g)}, total version does not")
            if is_objective(g) and ht_sat(real, g) and not ht_sat(HTPair.total(real.there), g):
                out.append(f"HT persistence fails for {print_formula(g)} at {real}")
    return out


@prop("negation_shortcut")
def _negation_shortcut(program, sig, params):
    from .feel import BeliefInterpretation, bi_neg_sat_check, bi_sat

    rng, f = _formula_trial(params, sig)
    out = []
    for _ in range(params.get("samples", 8)):
        i = BeliefInterpretation(random_belief_view(rng, sig), random_pair(rng, sig))
        if bi_sat(i, Not(f)) != bi_neg_sat_check(i, f):
            out.append(f"not {print_formula(f)} at {i.real} in {sorted(i.view, key=repr)}")
    return out


@prop("free_atom_invariance")
def _free_atom_invariance(program, sig, params):
    from .core import atoms_of
    from .feel import feel_epistemic_model
    from .splitting import restrict

    rng, f = _formula_trial(params, sig)
    u = atoms_of(f) | random_subset(rng, sig)
    free = [a for a in sig if a not in u]
    out = []
    for _ in range(params.get("samples", 8)):
        w = random_belief_view(rng, sig)
        # rebuild each restricted pair with fresh values on the free atoms
        w2 = set()
        for p in restrict(w, u):
            for _ in range(rng.randint(1, 2)):
                extra_t = random_subset(rng, free)
                extra_h = frozenset(a for a in extra_t if rng.random() < 0.5)
                w2.add(HTPair(p.here | extra_h, p.there | extra_t))
        w2 = frozenset(w2)
        assert restrict(w2, u) == restrict(w, u)
        if feel_epistemic_model(w, [f]) != feel_epistemic_model(w2, [f]):
            out.append(f"{print_formula(f)} over U={{{','.join(sorted(u))}}} separates {sorted(w, key=repr)} and {sorted(w2, key=repr)}")
    return out


FORMULA_PROPERTIES = ("persistence", "negation_shortcut", "free_atom_invariance")


# ---------------------------------------------------------------------------
# Shrinking


def _shrink_candidates(program: Program):
    rules = list(program.rules)
    for i in range(len(rules)):
        yield Program(tuple(rules[:i] + rules[i + 1:]))
    for i, r in enumerate(rules):
        for j in range(len(r.body)):
            smaller = Rule(r.head, r.body[:j] + r.body[j + 1:])
            yield Program(tuple(rules[:i] + [smaller] + rules[i + 1:]))
    for i, r in enumerate(rules):
        for a in r.head:
            smaller = Rule(tuple(x for x in r.head if x != a), r.body)
            yield Program(tuple(rules[:i] + [smaller] + rules[i + 1:]))


def shrink(name: str, program: Program, sig, params) -> tuple[Program, list[str]]:
    """Greedy shrinking: rule deletion, then literal deletion, then head-atom
    deletion, restarting after every successful step."""
    checker = PROPERTIES[name]
    witness = checker(program, sig, params) or []
    progress = True
    while progress:
        progress = False
        for cand in _shrink_candidates(program):
            got = checker(cand, sig, params)
            if got:
                program, witness, progress = cand, got, True
                break
    return program, witness


def check_property(name: str, program: Program | None = None, params: dict | None = None, sig=None) -> PropertyReport:
    if name not in PROPERTIES:
        raise KeyError(f"unknown property {name!r}; known: {sorted(PROPERTIES)}")
    params = dict(params or {})
    program = Program(()) if program is None else program
    if sig is None:
        sig = tuple(sorted(program.signature.atoms))
    sig = tuple(sorted(sig))
    report = PropertyReport(name, trials=1)
    got = PROPERTIES[name](program, sig, params)
    if got is None:
        return report
    report.applicable = 1
    if got:
        if params.get("shrink", True) and name not in FORMULA_PROPERTIES:
            program, got = shrink(name, program, sig, params)
        report.failures.append(Failure(print_program(program), "; ".join(got), params.get("seed"), params.get("trial")))
    return report


# ---------------------------------------------------------------------------
# Battery


def trial_inputs(name: str, cfg: GenConfig, seed: int) -> tuple[Program, dict]:
    """The program and parameters a battery trial feeds to ``name``."""
    params: dict = {"seed": seed}
    if name == "supra_asp":
        return random_objective_program(cfg, seed), params
    if name == "stratified_unique":
        return random_stratified_program(cfg, seed)[0], params
    if name == "tight_coincidence":
        return random_tight_program(cfg, seed)[0], params
    if name == "constraint_monotonicity":
        params["constraint"] = random_subjective_constraint(cfg, seed ^ 0x5A5A5A5A)
    if name in FORMULA_PROPERTIES:
        return Program(()), params
    return random_program(cfg, seed), params


def run_battery(
    properties=None,
    count: int = 200,
    atom_counts=(3,),
    seed: int = 0,
    cfg: GenConfig | None = None,
    params: dict | None = None,
    progress: Callable[[str], None] | None = None,
) -> list[PropertyReport]:
    """Run ``count`` trials per property for each atom count."""
    names = sorted(PROPERTIES) if properties is None else list(properties)
    base = GenConfig() if cfg is None else cfg
    reports = []
    for name in names:
        total = PropertyReport(name)
        for n in atom_counts:
            c = replace(base, atom_count=n)
            for index in range(count):
                s = trial_seed(seed + n, index)
                program, p = trial_inputs(name, c, s)
                p.update(params or {})
                p["trial"] = index
                rep = check_property(name, program, p, sig=c.atoms)
                rep.seeds.append(s)
                total.merge(rep)
        reports.append(total)
        if progress:
            progress(total.line())
    return reports


def report_text(reports: list[PropertyReport]) -> str:
    lines = []
    for r in reports:
        lines.append(r.line())
        for f in r.failures:
            where = "" if f.seed is None else f"trial {f.trial} seed {f.seed}: "
            lines.append(f"  {where}{f.witness}")
            lines.extend("    " + line for line in f.program.splitlines())
    return "\n".join(lines)


def report_json(reports: list[PropertyReport]) -> str:
    records = [
        {
            "name": r.name,
            "trials": r.trials,
            "applicable": r.applicable,
            "failures": [asdict(f) for f in r.failures],
            "seeds": r.seeds,
        }
        for r in reports
    ]
    return json.dumps(records, indent=2, sort_keys=True)
