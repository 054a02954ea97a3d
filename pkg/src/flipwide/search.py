"""Exact and greedy independent-set / clique search on small graphs.

The exact searches are plain include/exclude DFS over the vertex order
with a counting bound: complete, and because the include branch of the
smallest candidate is explored first, the first set found is the
lexicographically smallest one, which keeps every caller deterministic.
"""

from __future__ import annotations

from .bitset import iter_bits
from .graph import Graph

# Pools up to this size get complete searches; beyond it callers fall
# back to greedy results that must be labeled non-exhaustive.
EXACT_POOL_LIMIT = 40


def find_independent_set(g: Graph, target: int) -> int | None:
    """Lexicographically smallest independent set of exactly *target* vertices.

    Complete search: None means no independent set of that size exists.
    """
    if target == 0:
        return 0
    if target > g.n:
        return None
    adj = g.adj
    full = (1 << g.n) - 1

    def dfs(chosen: int, size: int, cand: int) -> int | None:
        if size == target:
            return chosen
        if size + cand.bit_count() < target:
            return None
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            hit = dfs(chosen | low, size + 1, cand & ~adj[v])
            if hit is not None:
                return hit
            if size + cand.bit_count() < target:
                return None
        return None

    return dfs(0, 0, full)


def max_independent_set(g: Graph) -> int:
    """Lexicographically smallest maximum independent set, as a mask."""
    adj = g.adj
    best = 0

    def grow(chosen: int, size: int, cand: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(chosen | low, size + 1, cand & ~adj[v])
            if size + cand.bit_count() <= best:
                return
        if size > best:
            best = size

    grow(0, 0, (1 << g.n) - 1)
    if best == 0:
        return 0
    found = find_independent_set(g, best)
    assert found is not None
    return found


def greedy_independent_set(g: Graph) -> int:
    """First-fit independent set in vertex order; deterministic, not maximum."""
    chosen = 0
    blocked = 0
    for v in range(g.n):
        bit = 1 << v
        if blocked & bit:
            continue
        chosen |= bit
        blocked |= bit | g.adj[v]
    return chosen


def find_clique(g: Graph, target: int) -> int | None:
    return find_independent_set(g.complement(), target)


def max_clique(g: Graph) -> int:
    return max_independent_set(g.complement())


def greedy_clique(g: Graph) -> int:
    chosen = 0
    for v in range(g.n):
        if chosen & ~g.adj[v]:
            continue
        chosen |= 1 << v
    return chosen


def is_independent(g: Graph, mask: int) -> bool:
    return all(not (g.adj[v] & mask) for v in iter_bits(mask))


def is_clique(g: Graph, mask: int) -> bool:
    return all((mask & ~g.adj[v] & ~(1 << v)) == 0 for v in iter_bits(mask))
