"""Simple semi-Thue systems compiled into higher-order beta-matching.

Modules by layer: ``terms`` (kernel), ``syntax`` (text formats),
``ssts`` (rewriting), ``gadgets`` and ``reduction`` (the compiler),
``witness``/``verifier``/``solver`` (solutions), ``itypes`` (intersection
types) and ``cli``.
"""

from .reduction import MatchingInstance, compile_system
from .ssts import Rule, Ssts, decide_for_n, search_zero_one
from .terms import App, Lam, Var, normalize, type_check, type_infer
from .verifier import verify_solution
from .witness import solution_term

__all__ = [
    "App",
    "Lam",
    "MatchingInstance",
    "Rule",
    "Ssts",
    "Var",
    "compile_system",
    "decide_for_n",
    "normalize",
    "search_zero_one",
    "solution_term",
    "type_check",
    "type_infer",
    "verify_solution",
]
