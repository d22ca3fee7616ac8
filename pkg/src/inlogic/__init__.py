"""Interval neutrosophic logic: interval-valued truth, indeterminacy and
falsity degrees, the sets and relations built on them, propositional and
first-order evaluation with sampled semantic checks, and a rule engine.
"""

from .checking import HOLDS, NO_WITNESS, REFUTED, WITNESS_FOUND, CheckReport, Counterexample
from .connectives import MOORE, RESIDUAL, Connectives, get_connectives
from .interval import (
    ONE,
    ZERO,
    Interval,
    NeutroTriple,
    UnitInterval,
    iv_add,
    iv_approx_eq,
    iv_clamp01,
    iv_max,
    iv_midpoint,
    iv_min,
    iv_sub,
    triple_approx_eq,
)
from .pred import (
    FoInterpretation,
    check_fo_satisfiable,
    check_fo_valid,
    eval_fo,
    parse_fo_formula,
)
from .prop import (
    check_equivalence,
    check_modus_ponens_preservation,
    check_tautology,
    eval_prop,
    is_designated,
    parse_formula,
)
from .sets import InsRelation, InsSet, Universe
from .syntax import LexError, ParseError

__version__ = "0.1.0"

__all__ = [
    "HOLDS",
    "NO_WITNESS",
    "REFUTED",
    "WITNESS_FOUND",
    "CheckReport",
    "Counterexample",
    "MOORE",
    "RESIDUAL",
    "Connectives",
    "get_connectives",
    "ONE",
    "ZERO",
    "Interval",
    "NeutroTriple",
    "UnitInterval",
    "iv_add",
    "iv_approx_eq",
    "iv_clamp01",
    "iv_max",
    "iv_midpoint",
    "iv_min",
    "iv_sub",
    "triple_approx_eq",
    "FoInterpretation",
    "check_fo_satisfiable",
    "check_fo_valid",
    "eval_fo",
    "parse_fo_formula",
    "check_equivalence",
    "check_modus_ponens_preservation",
    "check_tautology",
    "eval_prop",
    "is_designated",
    "parse_formula",
    "InsRelation",
    "InsSet",
    "Universe",
    "LexError",
    "ParseError",
]
