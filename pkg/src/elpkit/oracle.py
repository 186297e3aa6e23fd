"""Brute-force reference semantics.

Every function here enumerates the objects a definition quantifies over and
evaluates them with the explicit satisfaction relations (``ht_sat``,
``s5_sat``, ``bi_sat``); nothing goes through the bitmask kernel.  They are
exponential in the number of *views* and meant for signatures of at most two
or three atoms, as a differential check of the engines.
"""

from __future__ import annotations

from itertools import combinations, product

from .core import TheoryLike, as_formulas, sig_for
from .faeel import belief_model, bint_lt
from .feel import BeliefInterpretation, feel_epistemic_model, view_lt
from .g91 import epistemic_model_s5, subjective_reduct
from .ht import HTPair, stable_models
from ._kernel import sort_views


def interpretations(sig) -> list[frozenset[str]]:
    names = sorted(sig)
    return [frozenset(c) for size in range(len(names) + 1) for c in combinations(names, size)]


def total_views(sig) -> list[frozenset[frozenset[str]]]:
    worlds = interpretations(sig)
    return [
        frozenset(c) for size in range(1, len(worlds) + 1) for c in combinations(worlds, size)
    ]


def _nonempty_families(t: frozenset[str]):
    heres = interpretations(t)
    for size in range(1, len(heres) + 1):
        yield from combinations(heres, size)


def views_below(w) -> list[frozenset[HTPair]]:
    """All belief views with there-view exactly ``w``."""
    members = sorted(w, key=sorted)
    out = []
    for fams in product(*(_nonempty_families(t) for t in members)):
        out.append(frozenset(HTPair(h, t) for t, fam in zip(members, fams) for h in fam))
    return out


def g91(theory: TheoryLike, sig=None):
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    out = []
    for w in total_views(names):
        if set(stable_models(subjective_reduct(formulas, w, names), names)) == set(w):
            out.append(w)
    return sort_views(out)


def epistemic_models(theory: TheoryLike, sig=None):
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    return [w for w in total_views(names) if epistemic_model_s5(w, formulas)]


def feel(theory: TheoryLike, sig=None):
    formulas = as_formulas(theory)
    out = []
    for w in epistemic_models(formulas, sig):
        pw = frozenset(HTPair.total(t) for t in w)
        if not any(
            view_lt(v, pw) and feel_epistemic_model(v, formulas) for v in views_below(w)
        ):
            out.append(w)
    return sort_views(out)


def eel(theory: TheoryLike, sig=None):
    from .eel import is_simple

    formulas = as_formulas(theory)
    out = []
    for w in epistemic_models(formulas, sig):
        pw = frozenset(HTPair.total(t) for t in w)
        if not any(
            is_simple(v) and view_lt(v, pw) and feel_epistemic_model(v, formulas)
            for v in views_below(w)
        ):
            out.append(w)
    return sort_views(out)


def equilibrium(t, w, theory: TheoryLike, belief_total: bool = False) -> bool:
    formulas = as_formulas(theory)
    pw = frozenset(HTPair.total(x) for x in w)
    i = BeliefInterpretation(pw, HTPair.total(t))
    if not belief_model(i, formulas):
        return False
    lower_views = [pw] if belief_total else views_below(w)
    t = frozenset(t)
    for v in lower_views:
        for h in interpretations(t):
            j = BeliefInterpretation(v, HTPair(h, t))
            if bint_lt(j, i) and belief_model(j, formulas):
                return False
    return True


def _fixpoint(theory, sig, belief_total):
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    worlds = interpretations(names)
    out = []
    for w in epistemic_models(formulas, names):
        if frozenset(t for t in worlds if equilibrium(t, w, formulas, belief_total)) == w:
            out.append(w)
    return sort_views(out)


def faeel(theory: TheoryLike, sig=None):
    return _fixpoint(theory, sig, False)


def weak_autoepistemic(theory: TheoryLike, sig=None):
    return _fixpoint(theory, sig, True)
