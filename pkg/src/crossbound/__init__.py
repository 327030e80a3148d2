"""Exact crossing-number tools and a checked construction bounding the crossing
number of k-crossing-critical graphs by 2k + 6 sqrt(k) + 47."""

from .bound import build_lemma2, redraw, verify_main_theorem
from .campaign import find_critical, run_campaign
from .crossing import Drawing, crossing_number, crossing_number_naive, is_k_crossing_critical
from .errors import BudgetExhausted, CrossboundError, GraphError, TheoremViolation
from .generators import generate
from .graph import ApexCycle, MultiGraph, preprocess_critical
from .planarity import is_planar, optimal_planarizing_set, skewness, verify_lemma1
from .rt import rt_find_cycle, validate_trace

__version__ = "0.1.0"

__all__ = [
    "ApexCycle",
    "BudgetExhausted",
    "CrossboundError",
    "Drawing",
    "GraphError",
    "MultiGraph",
    "TheoremViolation",
    "build_lemma2",
    "crossing_number",
    "crossing_number_naive",
    "find_critical",
    "generate",
    "is_k_crossing_critical",
    "is_planar",
    "optimal_planarizing_set",
    "preprocess_critical",
    "redraw",
    "rt_find_cycle",
    "run_campaign",
    "skewness",
    "validate_trace",
    "verify_lemma1",
    "verify_main_theorem",
]
