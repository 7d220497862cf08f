"""Brute-force ground truth: the full state graph, BFS geodesics, Hamilton
path checks, greedy walks over the graph, and exhaustive enumerations.

Everything here is built from the state module's move model alone (never
from the listing/ruler/successor constructions), so it serves as an
independent witness for all of them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .state import Move, QuatString, iter_valid_states, legal_moves, parse

__all__ = [
    "StateGraph",
    "build_graph",
    "bfs_path",
    "bfs_distances",
    "geodesic_count",
    "is_hamilton_path",
    "hamilton_paths_from",
    "greedy_walk",
    "max_legal_moves",
    "enumerate_nurikabe",
    "GRAPH_LIMIT",
]

GRAPH_LIMIT = 12


@dataclass(frozen=True)
class StateGraph:
    """All valid states of one size with their legal-move edges."""

    n: int
    adjacency: dict[QuatString, dict[Move, QuatString]]

    @property
    def vertices(self):
        return self.adjacency.keys()

    def __len__(self) -> int:
        return len(self.adjacency)

    def __contains__(self, q: str) -> bool:
        return q in self.adjacency

    def neighbors(self, q: str) -> Iterable[QuatString]:
        return self.adjacency[q].values()

    def degree(self, q: str) -> int:
        return len(self.adjacency[q])


def build_graph(n: int) -> StateGraph:
    """Materialise the graph of all valid states (1 <= n <= GRAPH_LIMIT)."""
    if not 1 <= n <= GRAPH_LIMIT:
        raise ValueError(f"graph size must be 1..{GRAPH_LIMIT}, got {n}")
    adjacency: dict[QuatString, dict[Move, QuatString]] = {}
    for q in iter_valid_states(n):
        adjacency[q] = {m: q.with_digit(m.index, q.digit(m.index) + m.delta)
                        for m in legal_moves(q)}
    return StateGraph(n, adjacency)


def bfs_path(g: StateGraph, frm: str, to: str) -> list[QuatString]:
    """A geodesic between two states of the graph."""
    frm, to = parse(frm), parse(to)
    if frm not in g or to not in g:
        missing = frm if frm not in g else to
        raise ValueError(f"{missing!r} is not a vertex of the graph")
    if frm == to:
        return [frm]
    parent: dict[QuatString, QuatString] = {frm: frm}
    queue = deque([frm])
    while queue:
        cur = queue.popleft()
        for nxt in g.neighbors(cur):
            if nxt not in parent:
                parent[nxt] = cur
                if nxt == to:
                    path = [nxt]
                    while path[-1] != frm:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(nxt)
    raise ValueError(f"no path from {frm!r} to {to!r}")


def bfs_distances(g: StateGraph, frm: str) -> dict[QuatString, int]:
    """Geodesic distance from ``frm`` to every vertex."""
    frm = parse(frm)
    dist = {frm: 0}
    queue = deque([frm])
    while queue:
        cur = queue.popleft()
        for nxt in g.neighbors(cur):
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    return dist


def geodesic_count(g: StateGraph, frm: str, to: str) -> int:
    """Number of distinct shortest paths, by counting geodesic predecessors."""
    frm, to = parse(frm), parse(to)
    dist = bfs_distances(g, frm)
    if to not in dist:
        return 0
    counts = {frm: 1}
    order = sorted(dist, key=dist.get)
    for cur in order:
        if cur == frm:
            continue
        counts[cur] = sum(
            counts[prev]
            for prev in g.neighbors(cur)
            if dist[prev] == dist[cur] - 1
        )
    return counts[to]


def is_hamilton_path(g: StateGraph, states: Sequence[str]) -> bool:
    """True iff ``states`` visits every vertex exactly once along edges."""
    if len(states) != len(g):
        return False
    seen = set()
    for q in states:
        if q not in g or q in seen:
            return False
        seen.add(q)
    for a, b in zip(states, states[1:]):
        if b not in g.adjacency[parse(a)].values():
            return False
    return True


def hamilton_paths_from(g: StateGraph, start: str, limit: int = 2) -> int:
    """Count Hamilton paths starting at ``start`` by backtracking, stopping
    early once ``limit`` paths are found.  Exponential; intended for n <= 4.
    Recursion depth equals the vertex count (121 at n = 4)."""
    start = parse(start)
    total = len(g)
    found = 0
    visited = {start}

    def extend(cur: QuatString) -> None:
        nonlocal found
        if len(visited) == total:
            found += 1
            return
        for nxt in g.neighbors(cur):
            if found >= limit:
                return
            if nxt not in visited:
                visited.add(nxt)
                extend(nxt)
                visited.discard(nxt)

    extend(start)
    return found


def greedy_walk(g: StateGraph, side: str, budget: int | None = None) -> list[QuatString]:
    """Walk the graph from the all-zeros state, always taking the extremal
    (highest-index for "leftmost", lowest-index for "rightmost") move that
    does not undo the previous one, until the all-3 state."""
    if side not in ("leftmost", "rightmost"):
        raise ValueError(f"side must be 'leftmost' or 'rightmost', got {side!r}")
    cur = QuatString("0" * g.n)
    goal = QuatString("3" * g.n)
    if budget is None:
        budget = 4 * len(g)
    path = [cur]
    last: Move | None = None
    while cur != goal:
        options = dict(g.adjacency[cur])
        if last is not None:
            options.pop(Move(last.index, -last.delta), None)
        if not options:
            raise RuntimeError(f"greedy {side} walk stuck at {cur!r}")
        if side == "leftmost":
            move = max(options, key=lambda m: (m.index, m.delta))
        else:
            move = min(options, key=lambda m: (m.index, -m.delta))
        cur = options[move]
        path.append(cur)
        last = move
        if len(path) > budget:
            raise RuntimeError(f"greedy {side} walk exceeded {budget} steps")
    return path


def max_legal_moves(g: StateGraph) -> tuple[int, list[QuatString]]:
    """The maximum number of legal signed moves over all states, with the
    states attaining it."""
    best = 0
    witnesses: list[QuatString] = []
    for q in g.vertices:
        d = g.degree(q)
        if d > best:
            best, witnesses = d, [q]
        elif d == best:
            witnesses.append(q)
    return best, witnesses


def enumerate_nurikabe(n: int):
    """All valid 2 x n grids by exhaustive enumeration of the 4^n column
    colourings (0 <= n <= 12)."""
    from .nurikabe import COLUMNS, NurikabeGrid, is_valid_grid

    if not 0 <= n <= GRAPH_LIMIT:
        raise ValueError(f"grid width must be 0..{GRAPH_LIMIT}, got {n}")
    grids = []
    for cols in product(COLUMNS, repeat=n):
        g = NurikabeGrid(cols)
        if is_valid_grid(g):
            grids.append(g)
    return grids
