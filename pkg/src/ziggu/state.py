"""Quaternary puzzle states, validity predicates, maze coordinates, and the
single-digit move model.

A state of a puzzle with n dials is a base-4 string q = q_n ... q_2 q_1.
Digit positions are 1-based and counted right to left (q_1 is the rightmost
digit), but the text form is written leftmost digit first: "10203" has
q_5 = 1 and q_1 = 3.  Everything in this module is immutable and pure, so
values can be shared freely across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
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
    "max_move_bound",
]

# A state is reachable iff no digit other than 3 appears to the right of a 3.
_VALID_RE = re.compile(r"[012]*3*")

# States on the shortest solution: optional leading zeros, a run of 1s and 2s,
# at most one more 0, then trailing 3s.  This closed form is cross-checked
# against the recursive construction of the shortest solution in the tests.
_ZIGGU_RE = re.compile(r"0*[12]*0?3*")


class InvalidStateError(ValueError):
    """Raised when a digit string is not a reachable puzzle state."""


class IllegalMoveError(ValueError):
    """Raised for a move the puzzle cannot perform.

    ``reason`` names the violated constraint: "validity" when the resulting
    string would not be a reachable state (digit out of range, or the digit
    is pinned by a 3 on its left), "maze-turn" when the S-maze only allows
    that vertical transition at the opposite end of the row.
    """

    def __init__(self, message: str, reason: str) -> None:
        super().__init__(message)
        self.reason = reason


class QuatString(str):
    """An n-digit base-4 state; a plain ``str`` with digit accessors.

    Construction checks the alphabet only ('0'..'3', nonempty); use
    :func:`is_valid` / :func:`is_ziggu` for reachability.
    """

    __slots__ = ()

    def __new__(cls, text: str) -> "QuatString":
        if not text:
            raise InvalidStateError("empty state string")
        for ch in text:
            if ch not in "0123":
                raise InvalidStateError(
                    f"bad digit {ch!r} in state {text!r}: digits must be 0..3"
                )
        return str.__new__(cls, text)

    @property
    def n(self) -> int:
        return len(self)

    def digit(self, i: int) -> int:
        """Digit q_i, 1-based right-to-left: digit(1) is the rightmost."""
        if not 1 <= i <= len(self):
            raise IndexError(f"digit index {i} out of range 1..{len(self)}")
        return ord(self[len(self) - i]) - 48

    def with_digit(self, i: int, value: int) -> "QuatString":
        """Copy of the state with q_i replaced by ``value``."""
        if not 0 <= value <= 3:
            raise ValueError(f"digit value {value} out of range 0..3")
        p = len(self) - i
        return QuatString(self[:p] + chr(48 + value) + self[p + 1 :])

    def digit_sum(self) -> int:
        return sum(ord(c) - 48 for c in self)


class Move(NamedTuple):
    """A unit change of one digit: position ``index`` (right-to-left, 1-based)
    moves by ``delta`` (+1 or -1)."""

    index: int
    delta: int

    def inverse(self) -> "Move":
        return Move(self.index, -self.delta)


@dataclass(frozen=True)
class MazeVector:
    """Positions of the m = n-1 chained S-mazes, leftmost maze first.

    Maze j sits at (row, col); adjacent mazes share a coordinate: the column
    of maze j equals the row of maze j+1.  The 13 legal cells per maze are
    rows 0..2 with any column, plus (3, 3).
    """

    positions: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.positions:
            raise ValueError("a maze vector needs at least one maze")
        for j, (row, col) in enumerate(self.positions, start=1):
            if not (0 <= row <= 3 and 0 <= col <= 3):
                raise ValueError(f"maze {j} position {(row, col)} out of grid")
            if row == 3 and col != 3:
                raise ValueError(
                    f"maze {j} position {(row, col)} illegal: row 3 only at column 3"
                )
        for j in range(len(self.positions) - 1):
            if self.positions[j][1] != self.positions[j + 1][0]:
                raise ValueError(
                    f"broken chaining between mazes {j + 1} and {j + 2}: "
                    f"column {self.positions[j][1]} != row {self.positions[j + 1][0]}"
                )


def parse(text: str) -> QuatString:
    """Parse the text form of a state (leftmost digit first)."""
    if not isinstance(text, str):
        raise InvalidStateError(f"state must be a string, got {type(text).__name__}")
    return QuatString(text)


def is_valid(q: str) -> bool:
    """True iff q is a reachable state: every digit right of a 3 is a 3."""
    return _VALID_RE.fullmatch(q) is not None


def is_ziggu(q: str) -> bool:
    """True iff q lies on the shortest solution (pattern 0*[12]*0?3*)."""
    return _ZIGGU_RE.fullmatch(q) is not None


def to_maze(q: QuatString | str) -> MazeVector:
    """Maze coordinates of a valid state of length n >= 2.

    Reading the text form left to right as d_1 ... d_n, maze j has
    row d_j and column d_(j+1); this is the orientation under which cell
    legality coincides with string validity.
    """
    q = parse(q) if not isinstance(q, QuatString) else q
    if len(q) < 2:
        raise ValueError("maze form needs at least 2 digits (1 maze)")
    if not is_valid(q):
        raise InvalidStateError(f"{q!r} is not a valid state")
    d = [ord(c) - 48 for c in q]
    return MazeVector(tuple((d[j], d[j + 1]) for j in range(len(d) - 1)))


def from_maze(mv: MazeVector) -> QuatString:
    """Inverse of :func:`to_maze`; MazeVector validation enforces legality."""
    digits = [row for row, _ in mv.positions]
    digits.append(mv.positions[-1][1])
    return QuatString("".join(chr(48 + d) for d in digits))


def _move_violation(q: QuatString, index: int, delta: int) -> str | None:
    """None if the move is legal, else the violated constraint name."""
    n = len(q)
    if not 1 <= index <= n:
        return "validity"
    if delta not in (1, -1):
        return "validity"
    old = q.digit(index)
    new = old + delta
    if not 0 <= new <= 3:
        return "validity"
    # Horizontal role: q_index is the column of the maze whose row is the
    # digit on its left; a 3 on the left pins it (anything else would break
    # the all-3 suffix).
    if index < n and q.digit(index + 1) == 3:
        return "validity"
    # Vertical role: q_index is the row of the maze whose column is the digit
    # on its right.  The S-maze turns at alternating ends: rows 0<->1 and
    # 2<->3 connect at column 3, rows 1<->2 at column 0.
    if index > 1:
        turn_col = 3 if min(old, new) % 2 == 0 else 0
        if q.digit(index - 1) != turn_col:
            return "maze-turn"
    return None


def legal_moves(q: QuatString | str) -> set[Move]:
    """All single-digit moves the puzzle allows from a valid state."""
    q = parse(q) if not isinstance(q, QuatString) else q
    if not is_valid(q):
        raise InvalidStateError(f"{q!r} is not a valid state")
    moves = set()
    for index in range(1, len(q) + 1):
        for delta in (1, -1):
            if _move_violation(q, index, delta) is None:
                moves.add(Move(index, delta))
    return moves


def apply_move(q: QuatString | str, move: Move) -> QuatString:
    """Apply a legal move; rejects illegal ones naming the violated rule."""
    q = parse(q) if not isinstance(q, QuatString) else q
    if not is_valid(q):
        raise InvalidStateError(f"{q!r} is not a valid state")
    index, delta = move
    why = _move_violation(q, index, delta)
    if why is not None:
        raise IllegalMoveError(
            f"move ({index}, {delta:+d}) illegal at {q!r}: {why} constraint",
            reason=why,
        )
    return q.with_digit(index, q.digit(index) + delta)


def max_move_bound(n: int) -> int:
    """Upper bound on simultaneous legal signed moves: ceil(n/2) + 1."""
    return (n + 1) // 2 + 1


def iter_valid_states(n: int) -> Iterable[QuatString]:
    """All valid length-n states, generated from the validity pattern.

    Yields every u . 3^t with u over {0,1,2}; order is not meaningful.
    Count is (3^(n+1) - 1) / 2.
    """
    from itertools import product

    for t in range(n + 1):
        suffix = "3" * t
        for u in product("012", repeat=n - t):
            yield QuatString("".join(u) + suffix)
