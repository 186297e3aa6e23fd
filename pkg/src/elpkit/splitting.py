"""Epistemic splitting sets, the bottom/top partition of a program, the
E_U reduct, view restriction and composition, and splitting solutions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .core import Program, Rule, sig_for
from .g91 import EPISTEMIC_CAP, subjective_reduct
from .ht import HTPair
from .semantics import SPLITTING_SEMANTICS, world_views
from ._kernel import sort_views, view_key

POLICIES = ("bottom-first", "top-first")


class Placement(Enum):
    BOTTOM_ONLY = "BottomOnly"
    TOP_ONLY = "TopOnly"
    EITHER = "Either"
    NEITHER = "Neither"


class NotASplittingSet(ValueError):
    def __init__(self, u, rules: Iterable[Rule]):
        self.u = frozenset(u)
        self.rules = tuple(rules)
        listed = "; ".join(str(r) for r in self.rules)
        super().__init__(f"{{{', '.join(sorted(self.u))}}} is not an epistemic splitting set; offending rules: {listed}")


class OverlapError(ValueError):
    pass


@dataclass(frozen=True)
class SplitResult:
    bottom: Program
    top: Program
    either_rules: tuple[Rule, ...]
    placement_policy: str


def _in_bottom(r: Rule, u: frozenset[str]) -> bool:
    return r.atoms() <= u


def _in_top(r: Rule, u: frozenset[str]) -> bool:
    visible = set(r.head).union(*(l.atoms() for l in r.body_obj))
    return not (visible & u)


def classify_rule(r: Rule, u) -> Placement:
    u = frozenset(u)
    bottom, top = _in_bottom(r, u), _in_top(r, u)
    if bottom and top:
        return Placement.EITHER
    if bottom:
        return Placement.BOTTOM_ONLY
    if top:
        return Placement.TOP_ONLY
    return Placement.NEITHER


def _offending(u, program: Program) -> list[Rule]:
    return [r for r in program.rules if classify_rule(r, u) is Placement.NEITHER]


def is_splitting_set(u, program: Program) -> bool:
    return not _offending(u, program)


def split(program: Program, u, policy: str = "bottom-first") -> SplitResult:
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}; expected one of {POLICIES}")
    u = frozenset(u)
    bad = _offending(u, program)
    if bad:
        raise NotASplittingSet(u, bad)
    bottom, top, either = [], [], []
    for r in program.rules:
        place = classify_rule(r, u)
        if place is Placement.EITHER:
            either.append(r)
            (bottom if policy == "bottom-first" else top).append(r)
        elif place is Placement.BOTTOM_ONLY:
            bottom.append(r)
        else:
            top.append(r)
    return SplitResult(Program(tuple(bottom)), Program(tuple(top)), tuple(either), policy)


def eu_reduct(program: Program, u, wb, policy: str = "bottom-first") -> Program:
    """Subjective reduct of the top part with respect to ``wb`` over ``u``."""
    return subjective_reduct(split(program, u, policy).top, wb, frozenset(u))


def restrict(view, u) -> frozenset:
    """Intersect every member of a view with ``u``; works on total views
    (sets of interpretations) and on views of HT pairs."""
    u = frozenset(u)
    out = set()
    for m in view:
        if isinstance(m, HTPair):
            out.add(HTPair(m.here & u, m.there & u))
        else:
            out.add(frozenset(m) & u)
    return frozenset(out)


def _view_atoms(view) -> frozenset[str]:
    out: set[str] = set()
    for m in view:
        out |= m.there if isinstance(m, HTPair) else m
    return frozenset(out)


def compose(wb, wt) -> frozenset:
    overlap = _view_atoms(wb) & _view_atoms(wt)
    if overlap:
        raise OverlapError(f"views share atoms {sorted(overlap)}")
    out = set()
    for b in wb:
        for t in wt:
            if isinstance(b, HTPair) or isinstance(t, HTPair):
                b2 = b if isinstance(b, HTPair) else HTPair.total(b)
                t2 = t if isinstance(t, HTPair) else HTPair.total(t)
                out.add(HTPair(b2.here | t2.here, b2.there | t2.there))
            else:
                out.add(frozenset(b) | frozenset(t))
    return frozenset(out)


def _check_semantics(semantics: str) -> None:
    if semantics not in SPLITTING_SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}; expected one of {SPLITTING_SEMANTICS}")


def solutions(
    program: Program,
    u,
    semantics: str = "g91",
    sig=None,
    cap: int | None = EPISTEMIC_CAP,
    policy: str = "bottom-first",
) -> list[tuple[frozenset, frozenset]]:
    """All pairs (Wb, Wt) with Wb a world view of the bottom over ``u`` and
    Wt a world view of E_U(program, Wb) over the remaining atoms."""
    _check_semantics(semantics)
    names = sig_for(program, sig)
    u = frozenset(u) & frozenset(names)
    rest = tuple(a for a in names if a not in u)
    parts = split(program, u, policy)
    out = []
    for wb in world_views(parts.bottom, semantics, tuple(sorted(u)), cap):
        top = subjective_reduct(parts.top, wb, u)
        for wt in world_views(top, semantics, rest, cap):
            out.append((wb, wt))
    return sorted(out, key=lambda p: (view_key(compose(*p)), view_key(p[0]), view_key(p[1])))


def world_views_via_splitting(
    program: Program,
    u,
    semantics: str = "g91",
    sig=None,
    cap: int | None = EPISTEMIC_CAP,
    policy: str = "bottom-first",
) -> list[frozenset]:
    return sort_views({compose(wb, wt) for wb, wt in solutions(program, u, semantics, sig, cap, policy)})


def splitting_sets(program: Program, sig=None) -> list[frozenset[str]]:
    """Every subset of the signature that is an epistemic splitting set."""
    names = sig_for(program, sig)
    out = []
    for size in range(len(names) + 1):
        for combo in combinations(names, size):
            if is_splitting_set(combo, program):
                out.append(frozenset(combo))
    return out
