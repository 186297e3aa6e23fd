"""Belief models, equilibrium belief models and the autoepistemic fixpoint:
FAEEL world views, weak autoepistemic world views, the negatively subjective
reduct and Moore-style extensions."""

from __future__ import annotations

from .core import (
    And,
    Atom,
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
    Not,
    as_formulas,
    is_negation,
    sig_for,
)
from .feel import BeliefInterpretation, _bi, belief_view
from .g91 import EPISTEMIC_CAP, TotalBeliefView, epistemic_model_s5, g91_world_views
from .ht import HTPair
from ._kernel import ViewContext, check_cap, compile_theory, sort_views, space

ENGINES = ("characterization", "direct")


def is_belief_total(i: BeliefInterpretation) -> bool:
    return i.is_belief_total


def belief_model(i: BeliefInterpretation, theory: TheoryLike) -> bool:
    formulas = as_formulas(theory)
    pairs = set(i.view) | {i.real}
    return all(_bi(p, i.view, f, None) for p in pairs for f in formulas)


def bint_leq(i1: BeliefInterpretation, i2: BeliefInterpretation) -> bool:
    """``i1 ⪯ i2``: same real there-world with a smaller here-world, and the
    views related as in the view preorder."""
    if i1.real.there != i2.real.there or not i1.real.here <= i2.real.here:
        return False
    for p in i2.view:
        if not any(q.there == p.there and q.here <= p.here for q in i1.view):
            return False
    for q in i1.view:
        if not any(p.there == q.there and q.here <= p.here for p in i2.view):
            return False
    return True


def bint_lt(i1: BeliefInterpretation, i2: BeliefInterpretation) -> bool:
    return i1 != i2 and bint_leq(i1, i2)


def _context(theory, view, real, sig):
    formulas = as_formulas(theory)
    extra = set(real).union(*view)
    names = sig_for(formulas, None if sig is None else sig)
    if sig is None:
        names = tuple(sorted(set(names) | extra))
    sp = space(names)
    return ViewContext(compile_theory(formulas, names), sp.view_mask(view)), sp.interp(real)


def is_equilibrium_belief_model(t, view: TotalBeliefView, theory: TheoryLike, sig=None) -> bool:
    ctx, ti = _context(theory, view, t, sig)
    return ctx.equilibrium(ti)


def is_weak_equilibrium_belief_model(t, view: TotalBeliefView, theory: TheoryLike, sig=None) -> bool:
    ctx, ti = _context(theory, view, t, sig)
    return ctx.equilibrium(ti, belief_total=True)


def is_faeel_world_view(theory: TheoryLike, view: TotalBeliefView, sig=None) -> bool:
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    ctx = ViewContext(compile_theory(formulas, names), space(names).view_mask(view))
    return ctx.autoepistemic_fixpoint()


def _fixpoint_views(theory, sig, cap, belief_total):
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    check_cap(names, cap)
    c = compile_theory(formulas, names)
    out = [
        c.sp.view(w)
        for w in c.candidate_views("fixpoint")
        if ViewContext(c, w).autoepistemic_fixpoint(belief_total)
    ]
    return sort_views(out)


def faeel_world_views_direct(theory: TheoryLike, sig=None, cap: int | None = EPISTEMIC_CAP) -> list[TotalBeliefView]:
    """W = {T : <T|W> is an equilibrium belief model}, T over all of 2^sig."""
    return _fixpoint_views(theory, sig, cap, belief_total=False)


def faeel_world_views(
    theory: TheoryLike, sig=None, cap: int | None = EPISTEMIC_CAP, engine: str = "characterization"
) -> list[TotalBeliefView]:
    """FAEEL world views; by default computed as FEEL ∩ G91."""
    if engine == "char":
        engine = "characterization"
    if engine == "direct":
        return faeel_world_views_direct(theory, sig, cap)
    if engine != "characterization":
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    # FEEL ∩ G91, testing FEEL minimality only on the (few) G91 views
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    g91 = g91_world_views(formulas, names, cap)
    c = compile_theory(formulas, names)
    return [w for w in g91 if _feel_minimal(c, w)]


def _feel_minimal(c, w) -> bool:
    ctx = ViewContext(c, c.sp.view_mask(w))
    return ctx.is_model and ctx.feel_minimal()


def weak_autoepistemic_world_views(theory: TheoryLike, sig=None, cap: int | None = EPISTEMIC_CAP) -> list[TotalBeliefView]:
    """Fixpoint over weak equilibrium belief models (minimisation against
    belief-total interpretations only)."""
    return _fixpoint_views(theory, sig, cap, belief_total=True)


# ---------------------------------------------------------------------------


def _neg_reduce(f: Formula, view) -> Formula:
    if is_negation(f) and isinstance(f.left, K):
        return BOT if epistemic_model_s5(view, [f.left.body]) else TOP
    if isinstance(f, K):
        return K(_neg_reduce(f.body, view))
    if isinstance(f, (And, Or, Implies)):
        return type(f)(_neg_reduce(f.left, view), _neg_reduce(f.right, view))
    return f


def _neg_reduce_rule(r: Rule, view) -> Rule:
    body = []
    for lit in r.body:
        if isinstance(lit, SubjectiveLiteral) and lit.negations > 0:
            known = epistemic_model_s5(view, [lit.inner.to_formula()])
            # ¬K l becomes ⊤/⊥; ¬¬K l is ¬(¬K l)
            base = "bot" if known else "top"
            body.append(ObjectiveLiteral(base, lit.negations - 1))
        else:
            body.append(lit)
    return Rule(r.head, tuple(body))


def negatively_subjective_reduct(theory, view: TotalBeliefView):
    """Replace each maximal ``¬K φ`` by ⊤ when the view does not know φ,
    by ⊥ otherwise."""
    view = frozenset(frozenset(t) for t in view)
    if isinstance(theory, Program):
        return Program(tuple(_neg_reduce_rule(r, view) for r in theory.rules))
    return Theory(tuple(_neg_reduce(f, view) for f in as_formulas(theory)))


def excluded_middle(sig) -> tuple[Formula, ...]:
    return tuple(Or(Atom(p), Not(Atom(p))) for p in sig)


def moore_extensions(theory: TheoryLike, sig=None, cap: int | None = EPISTEMIC_CAP, engine: str = "characterization") -> list[TotalBeliefView]:
    """FAEEL world views after adding ``p ∨ ¬p`` for every atom of the signature."""
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    return faeel_world_views(formulas + excluded_middle(names), names, cap, engine)


__all__ = [
    "BeliefInterpretation",
    "HTPair",
    "belief_model",
    "belief_view",
    "bint_leq",
    "bint_lt",
    "excluded_middle",
    "faeel_world_views",
    "faeel_world_views_direct",
    "is_belief_total",
    "is_equilibrium_belief_model",
    "is_faeel_world_view",
    "is_weak_equilibrium_belief_model",
    "moore_extensions",
    "negatively_subjective_reduct",
    "weak_autoepistemic_world_views",
]
