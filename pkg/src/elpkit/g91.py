"""S5 satisfaction over total belief views, the subjective reduct and G91
world views."""

from __future__ import annotations

from typing import Iterable

from .core import (
    And,
    Atom,
    Bot,
    Formula,
    Implies,
    K,
    ObjectiveLiteral,
    Or,
    Program,
    Rule,
    SubjectiveLiteral,
    Theory,
    TheoryLike,
    TOP,
    BOT,
    as_formulas,
    atoms_of,
    sig_for,
)
from ._kernel import check_cap, compile_theory, sort_views, space
from .ht import stable_models

TotalBeliefView = frozenset  # frozenset[frozenset[str]]

EPISTEMIC_CAP = 5


def total_view(sets: Iterable[Iterable[str]]) -> TotalBeliefView:
    w = frozenset(frozenset(s) for s in sets)
    if not w:
        raise ValueError("a belief view must be non-empty")
    return w


def s5_sat(real: frozenset[str], view: TotalBeliefView, f: Formula) -> bool:
    if isinstance(f, Bot):
        return False
    if isinstance(f, Atom):
        return f.name in real
    if isinstance(f, And):
        return s5_sat(real, view, f.left) and s5_sat(real, view, f.right)
    if isinstance(f, Or):
        return s5_sat(real, view, f.left) or s5_sat(real, view, f.right)
    if isinstance(f, Implies):
        return not s5_sat(real, view, f.left) or s5_sat(real, view, f.right)
    if isinstance(f, K):
        return all(s5_sat(j, view, f.body) for j in view)
    raise TypeError(f"not a formula: {f!r}")


def epistemic_model_s5(view: TotalBeliefView, theory: TheoryLike) -> bool:
    formulas = as_formulas(theory)
    return all(s5_sat(j, view, f) for j in view for f in formulas)


def _reduce(f: Formula, view, u: frozenset[str]) -> Formula:
    if isinstance(f, K):
        if atoms_of(f.body) <= u:
            return TOP if epistemic_model_s5(view, [f.body]) else BOT
        return K(_reduce(f.body, view, u))
    if isinstance(f, (And, Or, Implies)):
        return type(f)(_reduce(f.left, view, u), _reduce(f.right, view, u))
    return f


def _reduce_rule(r: Rule, view, u: frozenset[str]) -> Rule:
    body = []
    for lit in r.body:
        if isinstance(lit, SubjectiveLiteral) and lit.atoms() <= u:
            value = epistemic_model_s5(view, [lit.inner.to_formula()])
            body.append(ObjectiveLiteral("top" if value else "bot", lit.negations))
        else:
            body.append(lit)
    return Rule(r.head, tuple(body))


def subjective_reduct(theory, view: TotalBeliefView, u=None):
    """Replace each maximal ``K φ`` with ``Atoms(φ) ⊆ u`` by ⊤ or ⊥.

    ``u`` defaults to all atoms.  Programs reduce rule by rule and stay
    programs; anything else is treated as a theory.
    """
    view = frozenset(frozenset(t) for t in view)
    if isinstance(theory, Program):
        u = atoms_of(theory) if u is None else frozenset(u)
        return Program(tuple(_reduce_rule(r, view, u) for r in theory.rules))
    formulas = as_formulas(theory)
    u = atoms_of(formulas) if u is None else frozenset(u)
    return Theory(tuple(_reduce(f, view, u) for f in formulas))


def is_g91_world_view(theory: TheoryLike, view: TotalBeliefView, sig=None) -> bool:
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    reduct = subjective_reduct(formulas, view, names)
    return set(stable_models(reduct, names)) == set(view)


def g91_world_views(theory: TheoryLike, sig=None, cap: int | None = EPISTEMIC_CAP) -> list[TotalBeliefView]:
    """All W with W = SM[Γ^W], canonically sorted.

    Guess-and-check over the truth values of the maximal K-subformulas: each
    guess fixes the reduct, whose stable models are the only view that can
    realise it.
    """
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    check_cap(names, cap)
    c = compile_theory(formulas, names)
    sp = space(names)
    return sort_views(sp.view(w) for w in c.g91_views())
