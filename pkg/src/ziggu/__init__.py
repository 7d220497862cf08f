"""Ziggu puzzle engine: listings, rulers, successor rules, ranking, the
brute-force oracle, the Nurikabe bijection, a CLI and a solver service."""

from .codes import (
    ListingKind,
    SolutionList,
    classic_count,
    classic_recurrence_count,
    count,
    greedy_brgc,
    iter_listing,
    listing,
    recurrence_count,
)
from .ranking import a003462, a033114, distance, rank, unrank
from .rulers import RulerKind, replay, ruler, ruler_entry_binary, ruler_list
from .state import (
    IllegalMoveError,
    InvalidStateError,
    MazeVector,
    Move,
    QuatString,
    apply_move,
    from_maze,
    is_valid,
    is_ziggu,
    legal_moves,
    parse,
    to_maze,
)
from .stepper import (
    AFTER,
    BEFORE,
    EQUAL,
    End,
    StepOutcome,
    compare,
    greedy_step,
    greedy_walk,
    next_state,
    prev_state,
    solve_path,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "QuatString",
    "Move",
    "MazeVector",
    "InvalidStateError",
    "IllegalMoveError",
    "parse",
    "is_valid",
    "is_ziggu",
    "to_maze",
    "from_maze",
    "legal_moves",
    "apply_move",
    "ListingKind",
    "SolutionList",
    "iter_listing",
    "listing",
    "greedy_brgc",
    "count",
    "recurrence_count",
    "classic_count",
    "classic_recurrence_count",
    "RulerKind",
    "ruler",
    "ruler_list",
    "ruler_entry_binary",
    "replay",
    "End",
    "StepOutcome",
    "next_state",
    "prev_state",
    "compare",
    "BEFORE",
    "EQUAL",
    "AFTER",
    "greedy_step",
    "greedy_walk",
    "solve_path",
    "rank",
    "unrank",
    "distance",
    "a033114",
    "a003462",
]
