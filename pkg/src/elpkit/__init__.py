"""World-view enumeration for epistemic logic programs under G91, FEEL,
FAEEL, EEL, EEL+G91 and weak autoepistemic semantics, with epistemic
splitting, stratification analysis and a property battery."""

from .core import (
    BOT,
    TOP,
    And,
    Atom,
    Bot,
    EnumerationCapError,
    Implies,
    K,
    M,
    Not,
    ObjectiveLiteral,
    Or,
    ParseError,
    Program,
    Rule,
    Signature,
    SubjectiveLiteral,
    Theory,
    atoms_of,
    parse_formula,
    parse_program,
    parse_rule,
    parse_theory,
    print_formula,
    print_program,
    rule_to_formula,
)
from .ht import HTPair, ht_sat, stable_models
from .g91 import g91_world_views, is_g91_world_view, s5_sat, subjective_reduct, total_view
from .feel import BeliefInterpretation, belief_view, bi_sat, feel_world_views, view_leq
from .faeel import (
    faeel_world_views,
    faeel_world_views_direct,
    is_equilibrium_belief_model,
    moore_extensions,
    negatively_subjective_reduct,
    weak_autoepistemic_world_views,
)
from .eel import eel_g91_world_views, eel_world_views, is_simple
from .semantics import SEMANTICS, world_views
from .splitting import (
    NotASplittingSet,
    classify_rule,
    compose,
    eu_reduct,
    is_splitting_set,
    restrict,
    solutions,
    split,
    world_views_via_splitting,
)
from .analysis import dep_pairs, stratify, tight_stratify

__version__ = "0.1.0"
