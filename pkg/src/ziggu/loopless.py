"""Loopless (worst-case O(1)-per-state) generation of the shortest solution.

Two algorithms are provided, each in two backends:

* "index"    -- one cursor, no auxiliary memory beyond the digit array;
* "directed" -- one cursor plus n direction bits.

The compiled kernel (ziggu._fastgen, built from Cython) is used when the
extension compiled at install time; otherwise the pure-Python kernel in
ziggu._gen_py is selected.  ``backend`` can force either one, e.g. for the
benchmark in benchmarks/bench_loopless.py.

The public iterators yield the change stream (index, delta); ``iter_short``
additionally materialises each visited state as a string, starting with the
all-zeros state.
"""

from __future__ import annotations

from typing import Iterator

from . import _gen_py
from .state import QuatString

try:  # compiled kernel is optional
    from . import _fastgen  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    _fastgen = None

__all__ = [
    "ALGORITHMS",
    "available_backends",
    "default_backend",
    "short_changes",
    "iter_short",
    "ops_per_state",
]

ALGORITHMS = ("index", "directed")


def available_backends() -> tuple[str, ...]:
    return ("c", "py") if _fastgen is not None else ("py",)


def default_backend() -> str:
    return "c" if _fastgen is not None else "py"


def short_changes(
    n: int, algorithm: str = "index", backend: str | None = None
) -> Iterator[tuple[int, int]]:
    """Stream the 6*2^n - 3n - 6 changes of the shortest solution."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")
    if backend is None:
        backend = default_backend()
    if backend == "c":
        if _fastgen is None:
            raise RuntimeError("compiled kernel not available; use backend='py'")
        mod = _fastgen
    elif backend == "py":
        mod = _gen_py
    else:
        raise ValueError(f"backend must be 'c' or 'py', got {backend!r}")
    fn = mod.short_changes_index if algorithm == "index" else mod.short_changes_directed
    return fn(n)


def iter_short(
    n: int, algorithm: str = "index", backend: str | None = None
) -> Iterator[QuatString]:
    """Yield the shortest solution's states in order, starting at all zeros."""
    digits = bytearray(b"0" * n)
    yield QuatString(digits.decode())
    for index, delta in short_changes(n, algorithm, backend):
        digits[n - index] += delta
        yield QuatString(digits.decode())


class _CountingArray:
    """List wrapper counting element reads and writes."""

    __slots__ = ("data", "ops")

    def __init__(self, data: list[int]) -> None:
        self.data = data
        self.ops = 0

    def __getitem__(self, i: int) -> int:
        self.ops += 1
        return self.data[i]

    def __setitem__(self, i: int, v: int) -> None:
        self.ops += 1
        self.data[i] = v

    def __len__(self) -> int:
        return len(self.data)


def ops_per_state(n: int, algorithm: str = "index") -> tuple[int, int]:
    """Run the pure-Python kernel against an access-counting digit array and
    report (max, total) digit reads+writes between consecutive emitted
    states.  A loopless run keeps the max bounded by a constant independent
    of n (the direction array of the "directed" algorithm is not counted;
    the bound concerns digit accesses)."""
    w = _CountingArray([0] * (n + 1))
    if algorithm == "index":
        gen = _gen_py.short_changes_index(n, w=w)
    elif algorithm == "directed":
        gen = _gen_py.short_changes_directed(n, w=w)
    else:
        raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")
    max_ops = 0
    prev = 0
    for _ in gen:
        max_ops = max(max_ops, w.ops - prev)
        prev = w.ops
    return max_ops, w.ops
