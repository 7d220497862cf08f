"""2 x n Nurikabe grids, their counting formulas, and the bijection with the
states of the shortest puzzle solution.

A grid is a sequence of columns, each column a (top, bottom) pair of
booleans with True = black.  Valid grids have an edge-connected black
region (possibly empty) and no 2 x 2 all-black block.  Text form: two rows
of '#' (black) and '.' (white), top row first, e.g. "##.\\n#..".
"""

from __future__ import annotations

from dataclasses import dataclass

from .state import QuatString, is_ziggu, parse

__all__ = [
    "Column",
    "COLUMNS",
    "NurikabeGrid",
    "is_valid_grid",
    "sigma",
    "sigma_inverse",
    "rho",
    "reflection_check",
    "nurikabe_counts",
]

Column = tuple[bool, bool]

BB: Column = (True, True)
WB: Column = (False, True)
BW: Column = (True, False)
WW: Column = (False, False)
COLUMNS: tuple[Column, ...] = (BB, WB, BW, WW)


@dataclass(frozen=True)
class NurikabeGrid:
    columns: tuple[Column, ...]

    @property
    def n(self) -> int:
        return len(self.columns)

    def render(self) -> str:
        top = "".join("#" if c[0] else "." for c in self.columns)
        bottom = "".join("#" if c[1] else "." for c in self.columns)
        return top + "\n" + bottom

    @classmethod
    def from_text(cls, text: str) -> "NurikabeGrid":
        rows = text.strip("\n").split("\n")
        if len(rows) != 2 or len(rows[0]) != len(rows[1]):
            raise ValueError("grid text needs two equal-length rows")
        for row in rows:
            if any(ch not in "#." for ch in row):
                raise ValueError(f"bad grid character in {row!r}")
        return cls(
            tuple((t == "#", b == "#") for t, b in zip(rows[0], rows[1]))
        )

    def mirror(self) -> "NurikabeGrid":
        """Reflection about the horizontal axis (swap the two rows)."""
        return NurikabeGrid(tuple((b, t) for t, b in self.columns))


def is_valid_grid(g: NurikabeGrid) -> bool:
    """Both grid constraints hold: connected black region, no 2x2 block.

    In a 2-row strip the black cells are connected exactly when the columns
    containing black form one contiguous interval and every adjacent pair
    inside it shares a black row (a path between columns must cross their
    boundary on some black row).  The 2x2 rule forbids adjacent all-black
    columns.
    """
    cols = g.columns
    support = [i for i, c in enumerate(cols) if c[0] or c[1]]
    if not support:
        return True  # the empty region counts (forced by the n = 1 census)
    lo, hi = support[0], support[-1]
    if len(support) != hi - lo + 1:
        return False
    for i in range(lo, hi):
        a, b = cols[i], cols[i + 1]
        if a == BB and b == BB:
            return False
        if not ((a[0] and b[0]) or (a[1] and b[1])):
            return False
    return True


def _s(digit: int) -> Column:
    # per-digit column map for the extremal suffix region
    return (BB, WB, BW, WW)[digit]


def _p(right: Column, digit: int) -> Column:
    """Transition map for the middle region: the column for ``digit`` given
    the already-built column on its right.  An all-white right column acts
    like the virtual column past the grid's right edge.  Inputs outside
    these cases mean a state off the shortest solution slipped through."""
    if digit == 1:
        if right == BW:
            return BB
        if right in (BB, WB, WW):
            return WB
    elif digit == 2:
        if right == WB:
            return BB
        if right in (BB, BW, WW):
            return BW
    raise ValueError(f"no transition for digit {digit} with right column {right}")


def sigma(w: QuatString | str) -> NurikabeGrid:
    """The grid for a shortest-solution state.

    The state's text form is read left to right as w_1 ... w_n, and column
    i of the grid corresponds to w_i.  Columns are built right to left:
    the maximal extremal suffix (one optional 0 then all 3s) maps through
    the per-digit column map, the run of 1s and 2s chains through the
    transition map, and leading zeros become all-white columns.  Where the
    regions overlap (e.g. the all-zeros state) the suffix rule wins.
    """
    w = parse(w) if not isinstance(w, QuatString) else w
    if not is_ziggu(w):
        raise ValueError(f"{w!r} is not on the shortest solution")
    digits = [ord(c) - 48 for c in w]  # w_1 .. w_n, left to right
    n = len(digits)

    # k = start (1-based) of the maximal suffix 0 3^t or 3^t; n+1 if none.
    t = 0
    while t < n and digits[n - 1 - t] == 3:
        t += 1
    if t < n and digits[n - 1 - t] == 0:
        k = n - t
    elif t > 0:
        k = n - t + 1
    else:
        k = n + 1
    # l = length of the all-zero prefix.
    l = 0
    while l < n and digits[l] == 0:
        l += 1

    columns: list[Column] = [WW] * n
    right: Column = WW  # virtual column beyond the right edge
    for i in range(n, 0, -1):  # 1-based, right to left
        if i >= k:
            col = _s(digits[i - 1])
        elif i > l:
            col = _p(right, digits[i - 1])
        else:
            col = WW
        columns[i - 1] = col
        right = col
    return NurikabeGrid(tuple(columns))


def sigma_inverse(g: NurikabeGrid) -> QuatString:
    """The shortest-solution state for a valid grid; inverts :func:`sigma`."""
    if not is_valid_grid(g):
        raise ValueError("not a valid grid")
    cols = g.columns
    n = len(cols)
    if n == 0:
        raise ValueError("cannot invert the empty grid to a state")
    digits: list[int] = []  # built right to left
    i = n - 1
    while i >= 0 and cols[i] == WW:
        digits.append(3)
        i -= 1
    if i >= 0:
        # boundary column: its right neighbour is all-white (or the edge)
        digits.append({BB: 0, WB: 1, BW: 2}[cols[i]])
        i -= 1
    while i >= 0 and cols[i] != WW:
        col, right = cols[i], cols[i + 1]
        if col == WB:
            digit = 1
        elif col == BW:
            digit = 2
        elif col == BB and right == BW:
            digit = 1
        elif col == BB and right == WB:
            digit = 2
        else:
            raise ValueError(f"grid column {i} not in the bijection's image")
        digits.append(digit)
        i -= 1
    while i >= 0:
        if cols[i] != WW:
            raise ValueError(f"grid column {i} not in the bijection's image")
        digits.append(0)
        i -= 1
    return QuatString("".join(chr(48 + d) for d in reversed(digits)))


def rho(w: QuatString | str) -> QuatString:
    """Swap digits 1 <-> 2 (0 and 3 fixed); an involution on the shortest
    solution's states."""
    w = parse(w) if not isinstance(w, QuatString) else w
    if not is_ziggu(w):
        raise ValueError(f"{w!r} is not on the shortest solution")
    table = str.maketrans("12", "21")
    return QuatString(str(w).translate(table))


def reflection_check(w: QuatString | str) -> bool:
    """sigma(rho(w)) equals the horizontal mirror of sigma(w).

    (Mirroring is an involution, so this is the same statement in either
    composition order.)
    """
    w = parse(w) if not isinstance(w, QuatString) else w
    return sigma(rho(w)) == sigma(w).mirror()


def nurikabe_counts(n: int) -> tuple[int, int, int]:
    """(a, b, c): total grids, grids with black in every column, grids with
    an all-white column; a = b + c."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    a = 6 * 2**n - 3 * n - 5
    b = 0 if n == 0 else 3 * 2 ** (n - 1)
    return a, b, a - b
