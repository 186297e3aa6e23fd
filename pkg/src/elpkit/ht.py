"""Here-and-there satisfaction and stable models of objective theories."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    And,
    Atom,
    Bot,
    EnumerationCapError,
    Formula,
    Implies,
    K,
    Or,
    TheoryLike,
    as_formulas,
    is_objective,
    sig_for,
)
from ._kernel import interp_key

Interpretation = frozenset  # frozenset[str]

OBJECTIVE_CAP = 16


@dataclass(frozen=True, slots=True)
class HTPair:
    here: frozenset[str]
    there: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "here", frozenset(self.here))
        object.__setattr__(self, "there", frozenset(self.there))
        if not self.here <= self.there:
            raise ValueError(f"here {set(self.here)} is not a subset of there {set(self.there)}")

    @classmethod
    def total(cls, t) -> "HTPair":
        t = frozenset(t)
        return cls(t, t)

    @property
    def is_total(self) -> bool:
        return self.here == self.there

    def __repr__(self) -> str:
        h = "{" + ",".join(sorted(self.here)) + "}"
        t = "{" + ",".join(sorted(self.there)) + "}"
        return f"<{h},{t}>"


def classical_sat(t: frozenset[str], f: Formula) -> bool:
    if isinstance(f, Bot):
        return False
    if isinstance(f, Atom):
        return f.name in t
    if isinstance(f, And):
        return classical_sat(t, f.left) and classical_sat(t, f.right)
    if isinstance(f, Or):
        return classical_sat(t, f.left) or classical_sat(t, f.right)
    if isinstance(f, Implies):
        return not classical_sat(t, f.left) or classical_sat(t, f.right)
    raise ValueError("classical satisfaction is undefined for formulas with K")


def ht_sat(p: HTPair, f: Formula) -> bool:
    if isinstance(f, Bot):
        return False
    if isinstance(f, Atom):
        return f.name in p.here
    if isinstance(f, And):
        return ht_sat(p, f.left) and ht_sat(p, f.right)
    if isinstance(f, Or):
        return ht_sat(p, f.left) or ht_sat(p, f.right)
    if isinstance(f, Implies):
        return classical_sat(p.there, f) and (not ht_sat(p, f.left) or ht_sat(p, f.right))
    if isinstance(f, K):
        raise ValueError("here-and-there satisfaction is undefined for formulas with K")
    raise TypeError(f"not a formula: {f!r}")


def ht_model(p: HTPair, theory: TheoryLike) -> bool:
    return all(ht_sat(p, f) for f in as_formulas(theory))


def stable_models(theory: TheoryLike, sig=None, cap: int | None = OBJECTIVE_CAP) -> list[frozenset[str]]:
    """Stable models of an objective theory, canonically ordered.

    Every ``T`` over the signature is tested: ``T`` must be a classical model
    and no proper subset ``H`` may give an HT model ``<H,T>``; subsets are
    tried by increasing size so that small counter-models reject early.
    """
    formulas = as_formulas(theory)
    names = sig_for(formulas, sig)
    for f in formulas:
        if not is_objective(f):
            raise ValueError("stable_models requires an objective theory")
    if cap is not None and len(names) > cap:
        raise EnumerationCapError(f"signature has {len(names)} atoms; cap is {cap}")
    out = []
    for size in range(len(names) + 1):
        for combo in combinations(names, size):
            t = frozenset(combo)
            if not all(classical_sat(t, f) for f in formulas):
                continue
            if not _has_smaller_model(t, formulas):
                out.append(t)
    return sorted(out, key=interp_key)


def _has_smaller_model(t: frozenset[str], formulas) -> bool:
    members = sorted(t)
    for size in range(len(members)):
        for combo in combinations(members, size):
            if all(ht_sat(HTPair(frozenset(combo), t), f) for f in formulas):
                return True
    return False
