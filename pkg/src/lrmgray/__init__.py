"""Constant-weight Gray codes for sliding-window rank demodulation.

Words are read from integer charge levels two cells at a time: bit p is 1
exactly when cell p out-charges cell p+1 (mod n).  The package builds
Gray codes over such words where each step is one push-to-the-top write,
verifies and ranks them, screens parameters with exact number theory, and
simulates the charge levels themselves.
"""

from .chargesim import (
    ChargeState,
    TraversalStats,
    jump_bound,
    push_cell,
    push_transition,
    realize,
    traverse,
)
from .colors import (
    REASON_COLOR_BALANCE,
    REASON_DIVISIBILITY,
    REASON_PRIME_WEIGHT,
    ColorHistogram,
    FeasibilityVerdict,
    color,
    color_count_formula,
    color_counts_bruteforce,
    color_imbalance,
    cyclic_size_condition,
    optimal_cyclic_feasible,
)
from .lrm import LrmParams, demodulate, induced_permutation, is_realizable_word, word_from_charges
from .oracle import SearchResult, longest_code, reverify
from .weight2 import BoundReport, RowCol, build_weight2, cyclic_size_bound
from .weight3 import (
    Config,
    Move,
    NecklacePath,
    admissible_residue_class,
    build_weight3,
    canonical_configurations,
    config_cycle,
    config_cycle_length,
    is_admissible,
    lift,
    lift_rank,
    realize_path,
)
from .words import (
    GrayCode,
    ValidationReport,
    Word,
    apply_transition,
    constant_weight_successors,
    cyclic_shift,
    efficiency,
    is_single_track,
    next_word,
    rank,
    transition_index,
    validate_code,
)

__version__ = "0.1.0"

__all__ = [
    "REASON_COLOR_BALANCE",
    "REASON_DIVISIBILITY",
    "REASON_PRIME_WEIGHT",
    "ChargeState",
    "TraversalStats",
    "jump_bound",
    "push_cell",
    "push_transition",
    "realize",
    "traverse",
    "ColorHistogram",
    "FeasibilityVerdict",
    "color",
    "color_count_formula",
    "color_counts_bruteforce",
    "color_imbalance",
    "cyclic_size_condition",
    "optimal_cyclic_feasible",
    "LrmParams",
    "demodulate",
    "induced_permutation",
    "is_realizable_word",
    "word_from_charges",
    "SearchResult",
    "longest_code",
    "reverify",
    "BoundReport",
    "RowCol",
    "build_weight2",
    "cyclic_size_bound",
    "Config",
    "Move",
    "NecklacePath",
    "admissible_residue_class",
    "build_weight3",
    "canonical_configurations",
    "config_cycle",
    "config_cycle_length",
    "is_admissible",
    "lift",
    "lift_rank",
    "realize_path",
    "GrayCode",
    "ValidationReport",
    "Word",
    "apply_transition",
    "constant_weight_successors",
    "cyclic_shift",
    "efficiency",
    "is_single_track",
    "next_word",
    "rank",
    "transition_index",
    "validate_code",
    "__version__",
]
