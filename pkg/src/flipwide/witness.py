"""Verification and search for flip-flatness and deletion-wideness witnesses.

A flippable instance asks for a large subset of A that is r-independent
after a given flip set; a widenable instance asks for the same after
deleting a small vertex set. Both are checked against the definitions,
not against the search code that produced them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .bitset import full_mask, iter_bits, members
from .errors import MissingWitnessError, OutOfRangeError, TooLargeError
from .flips import Flip, FlippedView, normalize
from .graph import Graph, bfs_reach, is_r_independent, isolate_vertices
from .families import ramsey_upper
from .search import (
    EXACT_POOL_LIMIT,
    find_independent_set,
    greedy_clique,
    greedy_independent_set,
    max_clique,
    max_independent_set,
)

# search_deletion_witness enumerates all deletion sets; beyond this range
# the enumeration is not honest desk-scale work, so it is refused.
ORACLE_MAX_VERTICES = 24
ORACLE_MAX_BUDGET = 3


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


VALID = Verdict(True)


@dataclass(frozen=True)
class FlippableInstance:
    """(A, flips) with target radius r and size m, witnessed by B."""

    a_set: int
    flips: tuple[Flip, ...]
    r: int
    m: int
    witness: int | None = None


@dataclass(frozen=True)
class WidenableInstance:
    """(A, S) with target radius r and size m, witnessed by B inside A minus S."""

    a_set: int
    s_set: int
    r: int
    m: int
    witness: int | None = None


def verify_flippable(g: Graph, inst: FlippableInstance) -> Verdict:
    if inst.witness is None:
        raise MissingWitnessError("flippable instance has no witness set")
    b = inst.witness
    if b & ~inst.a_set:
        return Verdict(False, "witness is not a subset of A")
    if b.bit_count() < inst.m:
        return Verdict(False, f"witness has {b.bit_count()} vertices, needs {inst.m}")
    view = FlippedView(g, normalize(inst.flips, g.n))
    if not is_r_independent(view.rows, g.n, b, inst.r):
        return Verdict(False, "witness is not r-independent in the flipped graph")
    return VALID


def verify_widenable(g: Graph, inst: WidenableInstance) -> Verdict:
    if inst.witness is None:
        raise MissingWitnessError("widenable instance has no witness set")
    b = inst.witness
    if b & ~(inst.a_set & ~inst.s_set):
        return Verdict(False, "witness is not a subset of A minus S")
    if b.bit_count() < inst.m:
        return Verdict(False, f"witness has {b.bit_count()} vertices, needs {inst.m}")
    residual = isolate_vertices(g, inst.s_set)
    if not is_r_independent(residual.adj, g.n, b, inst.r):
        return Verdict(False, "witness is not r-independent after the deletion")
    return VALID


@dataclass(frozen=True)
class ClosenessGraph:
    """Auxiliary graph on a candidate pool: edges join vertices at distance <= r.

    Independent sets here are exactly the r-independent subsets of the
    pool, and cliques are the mutually close subsets.
    """

    members: tuple[int, ...]
    graph: Graph
    r: int

    def to_pool_mask(self, original_mask: int) -> int:
        m = 0
        for i, v in enumerate(self.members):
            if original_mask >> v & 1:
                m |= 1 << i
        return m

    def to_original_mask(self, pool_mask: int) -> int:
        m = 0
        for i in iter_bits(pool_mask):
            m |= 1 << self.members[i]
        return m


def closeness_graph(rows, n: int, pool_mask: int, r: int) -> ClosenessGraph:
    """One bounded BFS per pool vertex; works on a Graph's rows or a view's."""
    if pool_mask < 0 or pool_mask >> n:
        raise OutOfRangeError("pool has bits outside the vertex range")
    pool = members(pool_mask)
    index = {v: i for i, v in enumerate(pool)}
    adj = [0] * len(pool)
    for i, u in enumerate(pool):
        reach = bfs_reach(rows, n, u, r) & pool_mask & ~(1 << u)
        for v in iter_bits(reach):
            j = index[v]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return ClosenessGraph(tuple(pool), Graph(len(pool), adj), r)


def closeness_of_graph(g: Graph, pool_mask: int, r: int) -> ClosenessGraph:
    return closeness_graph(g.adj, g.n, pool_mask, r)


def closeness_of_view(view: FlippedView, pool_mask: int, r: int) -> ClosenessGraph:
    return closeness_graph(view.rows, view.n, pool_mask, r)


@dataclass(frozen=True)
class CloseFarResult:
    """Outcome of the far/close dichotomy on a closeness graph.

    kind is "far" (an r-independent set of size >= m, in original vertex
    ids), "close" (a mutually-close set of size >= q), or "neither".
    exhaustive reports whether the search was complete.
    """

    kind: str
    vertices: int
    exhaustive: bool

    @property
    def size(self) -> int:
        return self.vertices.bit_count()


def _lex_smallest_nonedge(g: Graph) -> int | None:
    for u in range(g.n):
        free = ~g.adj[u] & ~((1 << (u + 1)) - 1) & full_mask(g.n)
        if free:
            return (1 << u) | (free & -free)
    return None


def close_or_far(cg: ClosenessGraph, m: int, q: int) -> CloseFarResult:
    """Find a far set of size >= m, else a close set of size >= q.

    Far sets win ties. Complete (branch-and-bound) up to pools of
    EXACT_POOL_LIMIT vertices; beyond that greedy, where "neither" is
    allowed. Targets of size <= 2 stay exact at any scale: they reduce to
    scanning for a vertex or a non-edge.
    """
    g = cg.graph
    p = g.n
    exact = p <= EXACT_POOL_LIMIT
    if m == 0:
        return CloseFarResult("far", 0, True)
    if m == 1 and p >= 1:
        return CloseFarResult("far", 1 << cg.members[0], True)
    if m == 2:
        pair = _lex_smallest_nonedge(g)
        if pair is not None:
            return CloseFarResult("far", cg.to_original_mask(pair), True)
        # Complete closeness graph: the whole pool is mutually close.
        if p >= q:
            return CloseFarResult("close", cg.to_original_mask(full_mask(p)), True)
        return CloseFarResult("neither", 0, True)

    if exact:
        far = max_independent_set(g)
        if far.bit_count() >= m:
            return CloseFarResult("far", cg.to_original_mask(far), True)
        close = max_clique(g)
        if close.bit_count() >= q:
            return CloseFarResult("close", cg.to_original_mask(close), True)
        assert p < ramsey_upper(m, q), (
            "complete search found neither side on a pool at or above the"
            " Ramsey upper bound"
        )
        return CloseFarResult("neither", 0, True)

    if _lex_smallest_nonedge(g) is None and p >= q:
        return CloseFarResult("close", cg.to_original_mask(full_mask(p)), True)
    far = greedy_independent_set(g)
    if far.bit_count() >= m:
        return CloseFarResult("far", cg.to_original_mask(far), False)
    close = greedy_clique(g)
    if close.bit_count() >= q:
        return CloseFarResult("close", cg.to_original_mask(close), False)
    return CloseFarResult("neither", 0, False)


def find_flat_subset(
    g: Graph, flips: Sequence[Flip], a_set: int, r: int, m: int
) -> int | None:
    """A subset of A of size >= m that is r-independent after the flips.

    Exact for pools up to EXACT_POOL_LIMIT, greedy beyond; every result
    is re-verified against the definition before being returned.
    """
    view = FlippedView(g, normalize(flips, g.n))
    cg = closeness_of_view(view, a_set, r)
    if cg.graph.n <= EXACT_POOL_LIMIT:
        found = find_independent_set(cg.graph, m) if m <= cg.graph.n else None
    else:
        greedy = greedy_independent_set(cg.graph)
        found = greedy if greedy.bit_count() >= m else None
    if found is None:
        return None
    b = cg.to_original_mask(found)
    verdict = verify_flippable(
        g, FlippableInstance(a_set, tuple(flips), r, m, witness=b)
    )
    assert verdict, f"flat-subset search produced an invalid witness: {verdict.reason}"
    return b


def search_deletion_witness(
    g: Graph, a_set: int, r: int, m: int, budget: int, allow_large: bool = False
) -> tuple[int, int] | None:
    """Brute-force oracle for deletion-based wideness witnesses.

    Enumerates every deletion set of size at most *budget* in order of
    size then lexicographic rank, and for each looks for the smallest
    r-independent m-subset of A minus S. Exhaustive by construction,
    which is why the range is capped (n <= 24, budget <= 3) unless
    allow_large is set.
    """
    if not allow_large and (g.n > ORACLE_MAX_VERTICES or budget > ORACLE_MAX_BUDGET):
        raise TooLargeError(
            f"exhaustive witness search supports n <= {ORACLE_MAX_VERTICES},"
            f" budget <= {ORACLE_MAX_BUDGET}; pass allow_large to override"
        )
    if a_set >> g.n:
        raise OutOfRangeError("A has bits outside the vertex range")
    for size in range(budget + 1):
        for combo in itertools.combinations(range(g.n), size):
            s_mask = 0
            for v in combo:
                s_mask |= 1 << v
            pool = a_set & ~s_mask
            if pool.bit_count() < m:
                continue
            residual = isolate_vertices(g, s_mask)
            cg = closeness_of_graph(residual, pool, r)
            found = find_independent_set(cg.graph, m)
            if found is not None:
                b = cg.to_original_mask(found)
                verdict = verify_widenable(
                    g, WidenableInstance(a_set, s_mask, r, m, witness=b)
                )
                assert verdict, (
                    f"deletion-witness search produced an invalid witness: {verdict.reason}"
                )
                return s_mask, b
    return None
