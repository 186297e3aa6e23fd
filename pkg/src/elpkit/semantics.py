"""Name-based dispatch over the world-view engines."""

from __future__ import annotations

from .core import TheoryLike
from .eel import eel_g91_world_views, eel_world_views
from .faeel import faeel_world_views, moore_extensions, weak_autoepistemic_world_views
from .feel import feel_world_views
from .g91 import EPISTEMIC_CAP, g91_world_views

SEMANTICS = ("g91", "feel", "faeel", "eel", "eel_g91", "weak", "moore")
SPLITTING_SEMANTICS = ("g91", "feel", "faeel", "eel", "eel_g91")


def world_views(
    theory: TheoryLike,
    semantics: str,
    sig=None,
    cap: int | None = EPISTEMIC_CAP,
    engine: str = "characterization",
):
    if semantics == "g91":
        return g91_world_views(theory, sig, cap)
    if semantics == "feel":
        return feel_world_views(theory, sig, cap)
    if semantics == "faeel":
        return faeel_world_views(theory, sig, cap, engine)
    if semantics == "eel":
        return eel_world_views(theory, sig, cap)
    if semantics == "eel_g91":
        return eel_g91_world_views(theory, sig, cap)
    if semantics == "weak":
        return weak_autoepistemic_world_views(theory, sig, cap)
    if semantics == "moore":
        return moore_extensions(theory, sig, cap, engine)
    raise ValueError(f"unknown semantics {semantics!r}; expected one of {SEMANTICS}")
