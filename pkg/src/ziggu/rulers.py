"""Change ("ruler") sequences for all four listings, unsigned and signed,
plus replay of a change sequence from a start state.

A change entry is a plain integer: in an unsigned sequence the value i >= 1
is the 1-based right-to-left digit position to change; in a signed sequence
+i means increment digit q_i and -i means decrement it.  Sequences are
produced by generators; materialisation helpers are capped at n <= 12.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator, Sequence

from .state import QuatString, parse

__all__ = [
    "RulerKind",
    "ruler",
    "ruler_list",
    "ruler_entry_binary",
    "replay",
    "complement",
    "complement_max",
    "complement_mid",
    "MATERIALIZE_LIMIT",
]

MATERIALIZE_LIMIT = 12


class RulerKind(Enum):
    BINARY = "binary"
    QUAT = "quat"
    LONG = "long"
    SHORT = "short"

    @classmethod
    def coerce(cls, kind: "RulerKind | str") -> "RulerKind":
        return kind if isinstance(kind, cls) else cls(str(kind).lower())


# --- binary ---------------------------------------------------------------
#
# b(n) = b(n-1), n, b(n-1); it is a palindrome so no reversal is needed.
# The signed form negates the middle (largest) entry of every second copy.


def _binary(n: int) -> Iterator[int]:
    if n == 0:
        return
    yield from _binary(n - 1)
    yield n
    yield from _binary(n - 1)


def _binary_signed(n: int, neg_top: bool) -> Iterator[int]:
    if n == 0:
        return
    yield from _binary_signed(n - 1, False)
    yield -n if neg_top else n
    yield from _binary_signed(n - 1, True)


# --- quaternary -----------------------------------------------------------
#
# r(n) = r(n-1), n, r(n-1), n, r(n-1), n, r(n-1)   (palindrome again).
# Signed: every second copy of r(n-1) has its largest entries negated.


def _quat(n: int) -> Iterator[int]:
    if n == 1:
        yield from (1, 1, 1)
        return
    for k in range(4):
        if k:
            yield n
        yield from _quat(n - 1)


def _quat_signed(n: int, neg_top: bool) -> Iterator[int]:
    if n == 1:
        v = -1 if neg_top else 1
        yield from (v, v, v)
        return
    sep = -n if neg_top else n
    yield from _quat_signed(n - 1, False)
    yield sep
    yield from _quat_signed(n - 1, True)
    yield sep
    yield from _quat_signed(n - 1, False)
    yield sep
    yield from _quat_signed(n - 1, True)


# --- longest solution -----------------------------------------------------
#
# r(n) = r(n-1), n, reverse(r(n-1)), n, r(n-1), n  -- the final quaternary
# copy is dropped, so the sequence is no longer a palindrome and reversal
# matters.  Reversal and complementation are tracked lazily through flags.


def _long(n: int, rev: bool) -> Iterator[int]:
    if n == 1:
        yield from (1, 1, 1)
        return
    if rev:
        yield n
        yield from _long(n - 1, True)
        yield n
        yield from _long(n - 1, False)
        yield n
        yield from _long(n - 1, True)
    else:
        yield from _long(n - 1, False)
        yield n
        yield from _long(n - 1, True)
        yield n
        yield from _long(n - 1, False)
        yield n


def _long_signed(n: int, rev: bool, comp: bool) -> Iterator[int]:
    sign = -1 if comp else 1
    if n == 1:
        yield from (sign, sign, sign)
        return
    if rev:
        # reverse of [A, n, B, n, C, n] is [n, rev(C), n, rev(B), n, rev(A)]
        # with B itself a reversed-complemented copy.
        yield sign * n
        yield from _long_signed(n - 1, True, comp)
        yield sign * n
        yield from _long_signed(n - 1, False, not comp)
        yield sign * n
        yield from _long_signed(n - 1, True, comp)
    else:
        yield from _long_signed(n - 1, False, comp)
        yield sign * n
        yield from _long_signed(n - 1, True, not comp)
        yield sign * n
        yield from _long_signed(n - 1, False, comp)
        yield sign * n


# --- shortest solution ----------------------------------------------------
#
# Flag recursion: R_f(n) = [R_f(n-1) if f], n, R_0(n-1), n, R_0(n-1), n,
# with R_f(1) = 1,1,1.  The flag avoids slicing off a duplicated state.
# R_0 is a palindrome, so the middle copy needs no reversal; the signed
# version negates the largest entries of the middle copy instead.


def _short(n: int, f: int) -> Iterator[int]:
    if n == 1:
        yield from (1, 1, 1)
        return
    if f:
        yield from _short(n - 1, 1)
    yield n
    yield from _short(n - 1, 0)
    yield n
    yield from _short(n - 1, 0)
    yield n


def _short_signed(n: int, f: int, neg_top: bool) -> Iterator[int]:
    if n == 1:
        v = -1 if neg_top else 1
        yield from (v, v, v)
        return
    sep = -n if neg_top else n
    if f:
        yield from _short_signed(n - 1, 1, False)
    yield sep
    yield from _short_signed(n - 1, 0, True)
    yield sep
    yield from _short_signed(n - 1, 0, False)
    yield sep


def ruler(kind: RulerKind | str, n: int, signed: bool = False) -> Iterator[int]:
    """Stream the change sequence for the listing of size n.

    Lengths: 2^n - 1 (binary), 4^n - 1 (quat), (3^(n+1) - 3)/2 (long),
    6*2^n - 3n - 6 (short).
    """
    kind = RulerKind.coerce(kind)
    if n < 1:
        raise ValueError(f"ruler needs n >= 1, got {n}")
    if kind is RulerKind.BINARY:
        return _binary_signed(n, False) if signed else _binary(n)
    if kind is RulerKind.QUAT:
        return _quat_signed(n, False) if signed else _quat(n)
    if kind is RulerKind.LONG:
        return _long_signed(n, False, False) if signed else _long(n, False)
    return _short_signed(n, 1, False) if signed else _short(n, 1)


def ruler_list(kind: RulerKind | str, n: int, signed: bool = False) -> list[int]:
    """Materialise a change sequence (n <= MATERIALIZE_LIMIT)."""
    if n > MATERIALIZE_LIMIT:
        raise ValueError(
            f"refusing to materialise ruler for n={n} (limit {MATERIALIZE_LIMIT})"
        )
    return list(ruler(kind, n, signed))


def ruler_entry_binary(j: int, signed: bool = False) -> int:
    """Entry j (1-based) of the infinite binary change sequence, directly.

    The value is one more than the number of trailing zero bits of j; the
    sign is negative when the odd part of j is 3 mod 4.
    """
    if j < 1:
        raise ValueError(f"entry index must be >= 1, got {j}")
    tz = (j & -j).bit_length() - 1
    value = tz + 1
    if not signed:
        return value
    return value if (j >> tz) % 4 == 1 else -value


def replay(
    start: QuatString | str,
    entries: Iterable[int],
    signed: bool = False,
) -> list[QuatString]:
    """Apply a change sequence from ``start``; returns the full trajectory
    (including the start state).

    For unsigned entries the direction is inferred: digit q_i is incremented
    exactly when the sum of the digits to its left is even.  (Extremal
    digits 0 and 3 admit only one direction, and that direction always
    agrees with the parity rule on the listings generated here.)
    """
    cur = parse(start) if not isinstance(start, QuatString) else start
    out = [cur]
    digits = [ord(c) - 48 for c in cur]  # left to right
    n = len(digits)
    total = sum(digits)
    for step, entry in enumerate(entries):
        if signed:
            i, delta = abs(entry), (1 if entry > 0 else -1)
        else:
            if entry < 1:
                raise ValueError(f"unsigned entry must be >= 1, got {entry}")
            i = entry
            left = total - sum(digits[n - i :])
            delta = 1 if left % 2 == 0 else -1
        if not 1 <= i <= n:
            raise ValueError(f"entry {entry} at step {step}: no digit {i} in {cur!r}")
        p = n - i
        new = digits[p] + delta
        if not 0 <= new <= 3:
            raise ValueError(
                f"entry {entry} at step {step} drives digit {i} of {cur!r} "
                f"to {new}, outside 0..3"
            )
        digits[p] = new
        total += delta
        cur = QuatString("".join(chr(48 + d) for d in digits))
        out.append(cur)
    return out


def complement(seq: Sequence[int]) -> list[int]:
    """Negate every entry."""
    return [-v for v in seq]


def complement_max(seq: Sequence[int]) -> list[int]:
    """Negate the entries of largest magnitude."""
    top = max(abs(v) for v in seq)
    return [-v if abs(v) == top else v for v in seq]


def complement_mid(seq: Sequence[int]) -> list[int]:
    """Negate the middle entry of an odd-length sequence."""
    if len(seq) % 2 == 0:
        raise ValueError("complement_mid needs an odd-length sequence")
    out = list(seq)
    out[len(seq) // 2] = -out[len(seq) // 2]
    return out
