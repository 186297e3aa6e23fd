"""Belief views of HT pairs, the HT x modal satisfaction relation, the view
preorder and FEEL world views."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import And, Atom, Bot, Formula, Implies, K, Or, TheoryLike, as_formulas, sig_for
from .g91 import EPISTEMIC_CAP, TotalBeliefView, s5_sat
from .ht import HTPair
from ._kernel import ViewContext, check_cap, compile_theory, sort_views, space

BeliefView = frozenset  # frozenset[HTPair]


def belief_view(pairs: Iterable) -> BeliefView:
    """Build a view from HTPairs, ``(here, there)`` tuples or plain sets
    (taken as total pairs)."""
    out = set()
    for p in pairs:
        if isinstance(p, HTPair):
            out.add(p)
        elif isinstance(p, tuple) and len(p) == 2 and not isinstance(p[0], str):
            out.add(HTPair(frozenset(p[0]), frozenset(p[1])))
        else:
            out.add(HTPair.total(p))
    if not out:
        raise ValueError("a belief view must be non-empty")
    return frozenset(out)


def as_pair_view(view) -> BeliefView:
    return belief_view(view)


@dataclass(frozen=True, slots=True)
class BeliefInterpretation:
    view: BeliefView
    real: HTPair

    def __post_init__(self):
        object.__setattr__(self, "view", belief_view(self.view))
        if not isinstance(self.real, HTPair):
            object.__setattr__(self, "real", HTPair.total(self.real))

    @property
    def is_total(self) -> bool:
        return self.real.is_total and is_total_view(self.view)

    @property
    def is_belief_total(self) -> bool:
        return is_total_view(self.view)


def is_total_view(view: BeliefView) -> bool:
    return all(p.is_total for p in view)


def there_view(view) -> TotalBeliefView:
    return frozenset(p.there for p in belief_view(view))


def bi_sat(i: BeliefInterpretation, f: Formula) -> bool:
    return _bi(i.real, i.view, f, None)


def _bi(p: HTPair, view: BeliefView, f: Formula, wt) -> bool:
    if isinstance(f, Bot):
        return False
    if isinstance(f, Atom):
        return f.name in p.here
    if isinstance(f, And):
        return _bi(p, view, f.left, wt) and _bi(p, view, f.right, wt)
    if isinstance(f, Or):
        return _bi(p, view, f.left, wt) or _bi(p, view, f.right, wt)
    if isinstance(f, Implies):
        if wt is None:
            wt = frozenset(q.there for q in view)
        if s5_sat(p.there, wt, f.left) and not s5_sat(p.there, wt, f.right):
            return False
        return not _bi(p, view, f.left, wt) or _bi(p, view, f.right, wt)
    if isinstance(f, K):
        return all(_bi(q, view, f.body, wt) for q in view)
    raise TypeError(f"not a formula: {f!r}")


def bi_neg_sat_check(i: BeliefInterpretation, f: Formula) -> bool:
    """Evaluate ``¬f`` at ``i`` through its there-level shortcut."""
    return not s5_sat(i.real.there, there_view(i.view), f)


def feel_epistemic_model(view, theory: TheoryLike) -> bool:
    view = belief_view(view)
    formulas = as_formulas(theory)
    return all(_bi(p, view, f, None) for p in view for f in formulas)


def _leq_one_side(lower: BeliefView, upper: BeliefView) -> bool:
    # every pair of `upper` has a pair of `lower` with the same there and a smaller here
    return all(
        any(q.there == p.there and q.here <= p.here for q in lower) for p in upper
    )


def view_leq(w1, w2) -> bool:
    w1, w2 = belief_view(w1), belief_view(w2)
    if not _leq_one_side(w1, w2):
        return False
    return all(any(q.there == p.there and p.here <= q.here for q in w2) for p in w1)


def view_lt(w1, w2) -> bool:
    return view_leq(w1, w2) and belief_view(w1) != belief_view(w2)


def is_feel_world_view(theory: TheoryLike, view, sig=None) -> bool:
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    sp = space(names)
    c = compile_theory(formulas, names)
    ctx = ViewContext(c, sp.view_mask(view))
    return ctx.is_model and ctx.feel_minimal()


def feel_world_views(theory: TheoryLike, sig=None, cap: int | None = EPISTEMIC_CAP) -> list[TotalBeliefView]:
    """Total epistemic models with no epistemic model strictly below them."""
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    check_cap(names, cap)
    c = compile_theory(formulas, names)
    sp = c.sp
    out = [sp.view(w) for w in c.candidate_views("minimal") if ViewContext(c, w).feel_minimal()]
    return sort_views(out)
