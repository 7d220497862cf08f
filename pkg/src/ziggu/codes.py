"""Recursive constructions of the four listings and the counting formulae.

The four listings over length-n strings:

* BRGC  -- binary reflected Gray code, 2^n bit strings.
* QUAT  -- quaternary reflected Gray code, 4^n states.
* LONG  -- the longest puzzle solution: QUAT with unreachable encodings
           skipped; visits all (3^(n+1) - 1)/2 valid states.
* SHORT -- the shortest solution: LONG with off-path states skipped;
           visits the 6*2^n - 3n - 5 ziggu states.

Listings are produced lazily by generators so sizes up to n ~ 20 can be
streamed; full materialisation is limited to n <= 12.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .state import QuatString

__all__ = [
    "ListingKind",
    "SolutionList",
    "iter_listing",
    "listing",
    "greedy_brgc",
    "count",
    "recurrence_count",
    "classic_count",
    "classic_recurrence_count",
    "MATERIALIZE_LIMIT",
]

MATERIALIZE_LIMIT = 12


class ListingKind(Enum):
    BRGC = "brgc"
    QUAT = "quat"
    LONG = "long"
    SHORT = "short"

    @classmethod
    def coerce(cls, kind: "ListingKind | str") -> "ListingKind":
        return kind if isinstance(kind, cls) else cls(str(kind).lower())


@dataclass(frozen=True)
class SolutionList:
    """A fully materialised listing."""

    kind: ListingKind
    n: int
    states: tuple[QuatString, ...]

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, i):
        return self.states[i]

    def index(self, q: str) -> int:
        return self.states.index(q)


def _snapshot(buf: list[str]) -> QuatString:
    return QuatString("".join(buf))


def _iter_brgc(buf: list[str], p: int, rev: bool) -> Iterator[QuatString]:
    if p == len(buf):
        yield _snapshot(buf)
        return
    for d in ("10" if rev else "01"):
        buf[p] = d
        yield from _iter_brgc(buf, p + 1, rev ^ (d == "1"))


def _iter_quat(buf: list[str], p: int, rev: bool) -> Iterator[QuatString]:
    if p == len(buf):
        yield _snapshot(buf)
        return
    for d in ("3210" if rev else "0123"):
        buf[p] = d
        yield from _iter_quat(buf, p + 1, rev ^ (d in "13"))


def _fill3(buf: list[str], p: int) -> QuatString:
    for j in range(p, len(buf)):
        buf[j] = "3"
    return _snapshot(buf)


def _iter_long(buf: list[str], p: int, rev: bool) -> Iterator[QuatString]:
    # Like the quaternary recursion, but the digit-3 branch collapses to the
    # single all-3 suffix: nothing past the solved sub-state is visited.
    if p == len(buf):
        yield _snapshot(buf)
        return
    if rev:
        yield _fill3(buf, p)
        for d in "210":
            buf[p] = d
            yield from _iter_long(buf, p + 1, rev ^ (d == "1"))
    else:
        for d in "012":
            buf[p] = d
            yield from _iter_long(buf, p + 1, rev ^ (d == "1"))
        yield _fill3(buf, p)


def _iter_core(buf: list[str], p: int, rev: bool) -> Iterator[QuatString]:
    # Building block of the shortest solution over positions p..n-1:
    # forward order 0 3^(L-1), 1.reverse(core), 2.core, 3^L.
    n = len(buf)
    if p == n - 1:
        for d in ("3210" if rev else "0123"):
            buf[p] = d
            yield _snapshot(buf)
        return
    if rev:
        yield _fill3(buf, p)
        buf[p] = "2"
        yield from _iter_core(buf, p + 1, True)
        buf[p] = "1"
        yield from _iter_core(buf, p + 1, False)
        buf[p] = "0"
        yield _fill3(buf, p + 1)
    else:
        buf[p] = "0"
        yield _fill3(buf, p + 1)
        buf[p] = "1"
        yield from _iter_core(buf, p + 1, True)
        buf[p] = "2"
        yield from _iter_core(buf, p + 1, False)
        yield _fill3(buf, p)


def _iter_short(buf: list[str], p: int) -> Iterator[QuatString]:
    n = len(buf)
    if p == n - 1:
        for d in "0123":
            buf[p] = d
            yield _snapshot(buf)
        return
    buf[p] = "0"
    yield from _iter_short(buf, p + 1)
    # The first core element duplicates the 0-branch's last state 0 3^(L-1),
    # so skip that single emission instead of slicing a materialised list.
    it = _iter_core(buf, p, False)
    next(it)
    yield from it


def iter_listing(kind: ListingKind | str, n: int) -> Iterator[QuatString]:
    """Stream the listing in order; first state is all zeros."""
    kind = ListingKind.coerce(kind)
    if n < 1:
        raise ValueError(f"listing size must be >= 1, got {n}")
    buf = ["0"] * n
    if kind is ListingKind.BRGC:
        return _iter_brgc(buf, 0, False)
    if kind is ListingKind.QUAT:
        return _iter_quat(buf, 0, False)
    if kind is ListingKind.LONG:
        return _iter_long(buf, 0, False)
    return _iter_short(buf, 0)


def listing(kind: ListingKind | str, n: int) -> SolutionList:
    """Materialise the full listing (n <= MATERIALIZE_LIMIT)."""
    kind = ListingKind.coerce(kind)
    if n > MATERIALIZE_LIMIT:
        raise ValueError(
            f"refusing to materialise {kind.value} listing for n={n} "
            f"(limit {MATERIALIZE_LIMIT}); use iter_listing"
        )
    return SolutionList(kind, n, tuple(iter_listing(kind, n)))


def greedy_brgc(n: int) -> SolutionList:
    """Greedy construction of the binary code: starting from the all-zeros
    string, repeatedly complement the rightmost bit that yields a string not
    seen before.  Keeps a visited set, so capped at n <= 20."""
    if n < 1:
        raise ValueError(f"greedy construction needs n >= 1, got {n}")
    if n > 20:
        raise ValueError(f"greedy construction keeps a visited set; n={n} > 20")
    cur = "0" * n
    seen = {cur}
    out = [QuatString(cur)]
    while True:
        for p in range(n - 1, -1, -1):
            flipped = cur[:p] + ("1" if cur[p] == "0" else "0") + cur[p + 1 :]
            if flipped not in seen:
                cur = flipped
                seen.add(cur)
                out.append(QuatString(cur))
                break
        else:
            return SolutionList(ListingKind.BRGC, n, tuple(out))


def count(kind: ListingKind | str, n: int) -> int:
    """Closed-form number of states in the listing."""
    kind = ListingKind.coerce(kind)
    if n < 1:
        raise ValueError(f"count needs n >= 1, got {n}")
    if kind is ListingKind.BRGC:
        return 2**n
    if kind is ListingKind.QUAT:
        return 4**n
    if kind is ListingKind.LONG:
        return (3 ** (n + 1) - 1) // 2
    return 6 * 2**n - 3 * n - 5


def recurrence_count(kind: ListingKind | str, n: int) -> int:
    """Same quantity via the recurrences; must agree with :func:`count`.

    LONG: g(n) = 3 g(n-1) + 1.  SHORT: g(n) = 3 g(n-1) - 2 g(n-2) + 3,
    the -2 term coming from taking the shortcut twice.
    """
    kind = ListingKind.coerce(kind)
    if n < 1:
        raise ValueError(f"count needs n >= 1, got {n}")
    if kind is ListingKind.BRGC:
        g = 2
        for _ in range(n - 1):
            g = 2 * g
        return g
    if kind is ListingKind.QUAT:
        g = 4
        for _ in range(n - 1):
            g = 4 * g
        return g
    if kind is ListingKind.LONG:
        g = 4
        for _ in range(n - 1):
            g = 3 * g + 1
        return g
    if n == 1:
        return 4
    prev, g = 4, 13
    for _ in range(n - 2):
        prev, g = g, 3 * g - 2 * prev + 3
    return g


def classic_count(puzzle: str, n: int, quantity: str) -> int:
    """Closed forms for the classic binary puzzles.

    hanoi:   moves 2^n - 1, states 2^n.
    spinout: moves floor(2^(n+1)/3), states ceil(2^(n+1)/3).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    _check_quantity(quantity)
    if puzzle == "hanoi":
        return 2**n - 1 if quantity == "moves" else 2**n
    if puzzle == "spinout":
        if quantity == "moves":
            return 2 ** (n + 1) // 3
        return -(-(2 ** (n + 1)) // 3)
    raise ValueError(f"unknown puzzle {puzzle!r}")


def _check_quantity(quantity: str) -> None:
    if quantity not in ("moves", "states"):
        raise ValueError(f"quantity must be 'moves' or 'states', got {quantity!r}")


def classic_recurrence_count(puzzle: str, n: int, quantity: str) -> int:
    """The same classic-puzzle quantities via their recurrences."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    _check_quantity(quantity)
    if puzzle == "hanoi":
        if quantity == "moves":
            f = 1
            for _ in range(n - 1):
                f = 2 * f + 1
            return f
        g = 2
        for _ in range(n - 1):
            g = 2 * g
        return g
    if puzzle == "spinout":
        if quantity == "moves":
            if n == 1:
                return 1
            prev, f = 1, 2
            for _ in range(n - 2):
                prev, f = f, f + 2 * prev + 1
            return f
        if n == 1:
            return 2
        prev, g = 2, 3
        for _ in range(n - 2):
            prev, g = g, g + 2 * prev - 1
        return g
    raise ValueError(f"unknown puzzle {puzzle!r}")
