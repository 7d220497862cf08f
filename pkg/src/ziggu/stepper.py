"""Successor and predecessor rules, the order-comparison formula, and greedy
non-reversing walks (leftmost piece = shortest solution, rightmost piece =
longest solution).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import ranking as _rank
from .codes import ListingKind, count
from .state import (
    InvalidStateError,
    Move,
    QuatString,
    apply_move,
    is_valid,
    is_ziggu,
    legal_moves,
    parse,
)

__all__ = [
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
]

BEFORE, EQUAL, AFTER = -1, 0, 1


class End(Enum):
    """Marker for walking off either end of a listing."""

    SOLVED = "solved"  # no successor: the last state of the listing
    FIRST = "first"    # no predecessor: the all-zeros state


@dataclass(frozen=True)
class StepOutcome:
    """Result of one successor/predecessor step.

    Either ``state`` plus the changed digit, or ``end`` when the input was
    the last (resp. first) state of the listing.
    """

    state: QuatString | None
    index: int | None
    delta: int | None
    end: End | None = None

    @property
    def at_end(self) -> bool:
        return self.end is not None


def _check_kind(kind: ListingKind, q: QuatString, member: bool) -> None:
    if kind is ListingKind.BRGC:
        raise ValueError("successor rules apply to quaternary listings only")
    if kind in (ListingKind.LONG, ListingKind.SHORT) and not is_valid(q):
        raise InvalidStateError(f"{q!r} is not a valid state")
    if member and kind is ListingKind.SHORT and not is_ziggu(q):
        raise ValueError(f"{q!r} is not on the shortest solution")


def next_state(kind: ListingKind | str, q: QuatString | str) -> StepOutcome:
    """The successor of ``q`` in the listing, from the state alone.

    Scanning digit positions i = 1, 2, ... (right to left), change the first
    digit that qualifies: increment q_i when the digit sum left of i is even
    and q_i < 3; decrement when that sum is odd and q_i > 0.  The longest
    solution additionally refuses a decrement when the digit left of q_i is
    a 3 (the result would be unreachable), and the shortest solution also
    refuses it when q_i = 3 sits right of a 0 (the result would leave the
    shortest path).  No index qualifying means q is the final state.

    Any valid state is accepted: for states off the shortest solution the
    SHORT rule still yields a valid state and iterating it rejoins the
    solution, which is what a solver resuming from an arbitrary position
    needs.
    """
    kind = ListingKind.coerce(kind)
    q = parse(q) if not isinstance(q, QuatString) else q
    _check_kind(kind, q, member=False)
    n = len(q)
    total = q.digit_sum()
    below = 0  # sum of digits at positions < i
    for i in range(1, n + 1):
        d = q.digit(i)
        left = total - below - d
        if left % 2 == 0:
            if d < 3:
                return StepOutcome(q.with_digit(i, d + 1), i, +1)
        elif d > 0:
            blocked = False
            if kind is not ListingKind.QUAT and i < n:
                left_digit = q.digit(i + 1)
                if left_digit == 3:
                    blocked = True
                elif kind is ListingKind.SHORT and left_digit == 0 and d == 3:
                    blocked = True
            if not blocked:
                return StepOutcome(q.with_digit(i, d - 1), i, -1)
        below += d
    return StepOutcome(None, None, None, End.SOLVED)


def prev_state(kind: ListingKind | str, q: QuatString | str) -> StepOutcome:
    """The predecessor of ``q`` in the listing (inverse of next_state).

    Computed as unrank(rank(q) - 1); the changed digit is read off the
    difference.  Returns the FIRST marker at the all-zeros state.  Unlike
    next_state, the input must belong to the listing: off the shortest
    solution the successor rule is not injective (e.g. 20103 and 20202 both
    step to 20203), so no unique predecessor exists there.
    """
    kind = ListingKind.coerce(kind)
    q = parse(q) if not isinstance(q, QuatString) else q
    _check_kind(kind, q, member=True)
    r = _rank.rank(kind, q)
    if r == 0:
        return StepOutcome(None, None, None, End.FIRST)
    p = _rank.unrank(kind, len(q), r - 1)
    for i in range(1, len(q) + 1):
        diff = q.digit(i) - p.digit(i)
        if diff:
            return StepOutcome(p, i, -diff)
    raise AssertionError("adjacent listing states must differ")


def compare(w: QuatString | str, v: QuatString | str) -> int:
    """Relative order of two states in their common listing: BEFORE (-1),
    EQUAL (0) or AFTER (+1).

    At the leftmost differing digit, the smaller digit comes first when the
    digit sum to its left is even, and last when it is odd (each odd digit
    above reverses the sub-list).  The same formula orders the binary code,
    the quaternary code, and both solutions, since the solutions are
    order-preserving sublists.
    """
    w = parse(w) if not isinstance(w, QuatString) else w
    v = parse(v) if not isinstance(v, QuatString) else v
    if len(w) != len(v):
        raise ValueError(f"length mismatch: {len(w)} vs {len(v)}")
    left = 0
    for a, b in zip(w, v):
        da, db = ord(a) - 48, ord(b) - 48
        if da != db:
            if left % 2 == 0:
                return BEFORE if da < db else AFTER
            return BEFORE if da > db else AFTER
        left += da
    return EQUAL


def greedy_step(
    q: QuatString | str,
    last_move: Move | None,
    side: str,
) -> Move | None:
    """The extremal non-reversing move, or None when only undoing remains.

    ``side`` is "leftmost" or "rightmost", referring to the puzzle pieces:
    the leftmost piece is the highest digit position (the first, red piece
    sits on the right).  Ties between the two directions of one digit are
    broken toward incrementing.
    """
    if side not in ("leftmost", "rightmost"):
        raise ValueError(f"side must be 'leftmost' or 'rightmost', got {side!r}")
    moves = legal_moves(q)
    if last_move is not None:
        moves.discard(Move(last_move.index, -last_move.delta))
    if not moves:
        return None
    if side == "leftmost":
        return max(moves, key=lambda m: (m.index, m.delta))
    return min(moves, key=lambda m: (m.index, -m.delta))


def greedy_walk(
    start: QuatString | str,
    side: str,
    budget: int | None = None,
) -> list[QuatString]:
    """Walk from ``start`` making the extremal non-reversing move until the
    solved state (or a dead end).  The step budget guards against cycles
    that greedy play can enter from off-path starts; exceeding it raises."""
    cur = parse(start) if not isinstance(start, QuatString) else start
    n = len(cur)
    solved = QuatString("3" * n)
    if budget is None:
        budget = 4 * (3 ** (n + 1))
    path = [cur]
    last: Move | None = None
    while cur != solved:
        move = greedy_step(cur, last, side)
        if move is None:
            break
        cur = apply_move(cur, move)
        path.append(cur)
        last = move
        if len(path) > budget:
            raise RuntimeError(
                f"greedy {side} walk from {start!r} exceeded {budget} steps"
            )
    return path


def solve_path(q: QuatString | str, mode: str = "shortest_list") -> list[Move]:
    """Moves from ``q`` to the solved state 3^n.

    shortest_list -- follow the shortest-solution successor (q must be on it).
    longest_list  -- follow the longest-solution successor (any valid q).
    bfs           -- true geodesic on the brute-force state graph (n <= 12).
    """
    q = parse(q) if not isinstance(q, QuatString) else q
    if not is_valid(q):
        raise InvalidStateError(f"{q!r} is not a valid state")
    if mode == "bfs":
        from . import oracle

        g = oracle.build_graph(len(q))
        states = oracle.bfs_path(g, q, QuatString("3" * len(q)))
        return _moves_along(states)
    if mode == "shortest_list":
        kind = ListingKind.SHORT
        if not is_ziggu(q):
            raise ValueError(
                f"{q!r} is not on the shortest solution; use mode='bfs'"
            )
    elif mode == "longest_list":
        kind = ListingKind.LONG
    else:
        raise ValueError(f"unknown mode {mode!r}")
    moves = []
    cur = q
    while True:
        step = next_state(kind, cur)
        if step.at_end:
            return moves
        moves.append(Move(step.index, step.delta))
        cur = step.state


def _moves_along(states: list[QuatString]) -> list[Move]:
    moves = []
    for a, b in zip(states, states[1:]):
        for i in range(1, len(a) + 1):
            diff = b.digit(i) - a.digit(i)
            if diff:
                moves.append(Move(i, diff))
                break
    return moves
