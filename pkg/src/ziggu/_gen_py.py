"""Pure-Python kernels for loopless generation of the shortest solution.

Both generators emit the change stream (index, delta) that transforms the
all-zeros state into the all-3 state along the shortest solution, doing
worst-case O(1) work per change.

``short_changes_index`` keeps only the current digit array and one cursor:
the rightmost digit is swept across its whole range in one burst, and any
other digit moves toward or away from its right neighbour's parity, the
cursor then moving left on an extremal result (0 or 3) and right otherwise.

``short_changes_directed`` trades n extra direction bits for even simpler
control flow: change the cursor digit in its stored direction, flip that
direction and move left when the digit becomes extremal, otherwise move
right.

The generators accept a pre-built digit array so the instrumented run in
:mod:`ziggu.loopless` can count element accesses.
"""

from __future__ import annotations

from typing import Iterator, MutableSequence

__all__ = ["short_changes_index", "short_changes_directed"]


def short_changes_index(
    n: int, w: MutableSequence[int] | None = None
) -> Iterator[tuple[int, int]]:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if w is None:
        w = [0] * (n + 1)  # 1-based
    i = 1
    while i <= n:
        if i == 1:
            v = w[1]
            d = 1 if v == 0 else -1
            for _ in range(3):
                v += d
                w[1] = v
                yield (1, d)
            i = 2
        else:
            a = w[i]
            d = 1 if (a + w[i - 1]) % 2 == 1 else -1
            v = a + d
            w[i] = v
            yield (i, d)
            if v == 0 or v == 3:
                i += 1
            else:
                i -= 1


def short_changes_directed(
    n: int,
    w: MutableSequence[int] | None = None,
    dirs: MutableSequence[int] | None = None,
) -> Iterator[tuple[int, int]]:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if w is None:
        w = [0] * (n + 1)  # 1-based
    if dirs is None:
        dirs = [1] * (n + 1)
    i = 1
    while i <= n:
        d = dirs[i]
        v = w[i] + d
        w[i] = v
        yield (i, d)
        if v == 0 or v == 3:
            dirs[i] = -d
            i += 1
        elif i > 1:
            i -= 1
