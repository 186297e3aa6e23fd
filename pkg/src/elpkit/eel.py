"""Simple belief views, EEL world views and the EEL+G91 combination."""

from __future__ import annotations

from itertools import combinations, product

from .core import TheoryLike, as_formulas, sig_for
from .feel import belief_view, feel_epistemic_model
from .g91 import EPISTEMIC_CAP, TotalBeliefView, g91_world_views
from .ht import HTPair
from ._kernel import ViewContext, check_cap, compile_theory, sort_views

FORMS = ("order", "definitional")


def is_simple(view) -> bool:
    """At most one here-world per there-world."""
    seen: dict[frozenset, frozenset] = {}
    for p in belief_view(view):
        if seen.setdefault(p.there, p.here) != p.here:
            return False
    return True


def _subsets(t: frozenset[str]):
    members = sorted(t)
    for size in range(len(members) + 1):
        for combo in combinations(members, size):
            yield frozenset(combo)


def has_simple_witness(theory: TheoryLike, view: TotalBeliefView) -> bool:
    """Is there a simple belief model W' with (W')^t = W and some H ⊂ T?

    Exhaustive over one here-world per there-world.
    """
    formulas = as_formulas(theory)
    members = sorted(view, key=lambda t: sorted(t))
    choices = [list(_subsets(t)) for t in members]
    for heres in product(*choices):
        if all(h == t for h, t in zip(heres, members)):
            continue
        candidate = frozenset(HTPair(h, t) for h, t in zip(heres, members))
        if feel_epistemic_model(candidate, formulas):
            return True
    return False


def is_eel_world_view(theory: TheoryLike, view: TotalBeliefView, sig=None, form: str = "order") -> bool:
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    if form == "definitional":
        if not feel_epistemic_model(view, formulas):
            return False
        return not has_simple_witness(formulas, view)
    if form != "order":
        raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")
    c = compile_theory(formulas, names)
    ctx = ViewContext(c, c.sp.view_mask(view))
    return ctx.is_model and ctx.simple_minimal()


def eel_world_views(
    theory: TheoryLike, sig=None, cap: int | None = EPISTEMIC_CAP, form: str = "order"
) -> list[TotalBeliefView]:
    """Total epistemic models with no strictly smaller simple epistemic model."""
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    check_cap(names, cap)
    c = compile_theory(formulas, names)
    out = []
    for w in c.candidate_views("minimal"):
        if form == "order":
            keep = ViewContext(c, w).simple_minimal()
        else:
            keep = not has_simple_witness(formulas, c.sp.view(w))
        if keep:
            out.append(c.sp.view(w))
    return sort_views(out)


def eel_g91_world_views(theory: TheoryLike, sig=None, cap: int | None = EPISTEMIC_CAP) -> list[TotalBeliefView]:
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    c = compile_theory(formulas, names)
    out = []
    for w in g91_world_views(formulas, names, cap):
        ctx = ViewContext(c, c.sp.view_mask(w))
        if ctx.is_model and ctx.simple_minimal():
            out.append(w)
    return out
