"""Loop-free undirected graphs over vertices 0..n-1 with dense bit rows.

Row u is an int whose bit v says whether uv is an edge. Rows are the unit
of work everywhere: flips complement whole blocks of a row at once, and
BFS expands a frontier with a handful of word-parallel operations per
vertex.
"""

from __future__ import annotations

import math
from typing import Iterable

from .bitset import full_mask, iter_bits, lowest_bits, members
from .errors import LoopError, OutOfRangeError, TooLargeError

#: Distance value for unreachable pairs. Compares greater than every
#: finite radius, which is what "strictly greater than r" needs for
#: disconnected pairs.
UNREACHABLE = math.inf

# contains_biclique is exhaustive; reject inputs beyond this range rather
# than silently degrading to a heuristic.
BICLIQUE_MAX_SIDE = 4
BICLIQUE_MAX_VERTICES = 1 << 12


class Graph:
    """Immutable undirected graph; adjacency stored as one int per vertex."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        self.n = n
        self.adj = tuple(adj)
        if len(self.adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(self.adj)}")
        for u, row in enumerate(self.adj):
            if row >> u & 1:
                raise LoopError(f"row {u} has a loop bit")
            if row >> n:
                raise OutOfRangeError(f"row {u} has bits beyond vertex {n - 1}")

    def row(self, u: int) -> int:
        return self.adj[u]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def check_invariants(self) -> None:
        """Full symmetry and loop-freeness scan (test helper, O(n^2))."""
        for u in range(self.n):
            if self.adj[u] >> u & 1:
                raise AssertionError(f"loop at {u}")
            for v in iter_bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise AssertionError(f"asymmetric pair ({u}, {v})")

    def complement(self) -> Graph:
        all_bits = full_mask(self.n)
        return Graph(self.n, (all_bits & ~row & ~(1 << u) for u, row in enumerate(self.adj)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs.

    Repeated pairs are idempotent; (u, u) raises LoopError and endpoints
    at or beyond n raise OutOfRangeError.
    """
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopError(f"loop edge ({u}, {u})")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def _check_vertex(n: int, v: int) -> None:
    if not (0 <= v < n):
        raise OutOfRangeError(f"vertex {v} outside 0..{n - 1}")


def _check_mask(n: int, mask: int) -> None:
    if mask < 0 or mask >> n:
        raise OutOfRangeError(f"vertex set has bits outside 0..{n - 1}")


def neighborhood(g: Graph, v: int) -> int:
    _check_vertex(g.n, v)
    return g.adj[v]


def bfs_reach(rows, n: int, source: int, radius: int | None = None) -> int:
    """Mask of vertices within the given radius of source (source included).

    ``rows`` is indexable by vertex and yields adjacency masks, so this
    runs unchanged on a Graph's rows or on a lazily flipped view. With
    radius None the whole reachable component is returned.
    """
    seen = 1 << source
    frontier = seen
    depth = 0
    while frontier and (radius is None or depth < radius):
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
        depth += 1
    return seen


def bfs_layers(rows, n: int, source: int) -> list:
    """Exact distances from source; UNREACHABLE marks separated vertices."""
    dist = [UNREACHABLE] * n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for v in iter_bits(frontier):
            dist[v] = d
    return dist


def bfs_distances(g: Graph, source: int) -> list:
    _check_vertex(g.n, source)
    return bfs_layers(g.adj, g.n, source)


def delete_vertices(g: Graph, s_mask: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V minus S, plus the old-index -> new-index map.

    The map lets witnesses computed before a deletion be translated into
    the smaller graph and back.
    """
    _check_mask(g.n, s_mask)
    kept = [v for v in range(g.n) if not s_mask >> v & 1]
    relabel = {old: new for new, old in enumerate(kept)}
    rows = []
    for old_u in kept:
        row = g.adj[old_u]
        new_row = 0
        for new_v, old_v in enumerate(kept):
            if row >> old_v & 1:
                new_row |= 1 << new_v
        rows.append(new_row)
    return Graph(len(kept), rows), relabel


def isolate_vertices(g: Graph, s_mask: int) -> Graph:
    """Drop every edge incident to S but keep all vertex labels.

    Among the surviving vertices this has exactly the distances of the
    induced subgraph on V minus S, so checks that only look at V minus S
    can skip the relabeling round trip of delete_vertices.
    """
    _check_mask(g.n, s_mask)
    keep = ~s_mask
    return Graph(g.n, (0 if s_mask >> u & 1 else row & keep for u, row in enumerate(g.adj)))


def is_r_independent(g_rows, n: int, b_mask: int, r: int) -> bool:
    """True iff all pairs in B are at distance strictly greater than r.

    Unreachable pairs count as independent. ``g_rows`` follows the same
    duck typing as bfs_reach.
    """
    _check_mask(n, b_mask)
    for u in iter_bits(b_mask):
        reach = bfs_reach(g_rows, n, u, r)
        if reach & b_mask & ~(1 << u):
            return False
    return True


def graph_r_independent(g: Graph, b_mask: int, r: int) -> bool:
    return is_r_independent(g.adj, g.n, b_mask, r)


def _biclique_extend(adj, x_chosen: list[int], common: int, x_pool: int, y_pool: int, t: int):
    # x_chosen grows in increasing vertex order, so the first hit is the
    # lexicographically smallest X side.
    if len(x_chosen) == t:
        y_side = common & y_pool
        for x in x_chosen:
            y_side &= ~(1 << x)
        if y_side.bit_count() >= t:
            return x_chosen, lowest_bits(y_side, t)
        return None
    if x_pool.bit_count() < t - len(x_chosen):
        return None
    pool = x_pool
    while pool:
        low = pool & -pool
        v = low.bit_length() - 1
        pool ^= low
        new_common = common & adj[v]
        if (new_common & y_pool).bit_count() >= t:
            found = _biclique_extend(adj, x_chosen + [v], new_common, pool, y_pool, t)
            if found:
                return found
    return None


def find_biclique_between(g: Graph, x_pool: int, y_pool: int, t: int) -> tuple[int, int] | None:
    """A K_{t,t} subgraph with one side inside x_pool, the other inside y_pool.

    Exhaustive; returns (X, Y) masks or None. Sides are vertex-disjoint
    even when the pools overlap.
    """
    _check_mask(g.n, x_pool)
    _check_mask(g.n, y_pool)
    hit = _biclique_extend(g.adj, [], full_mask(g.n), x_pool, y_pool, t)
    if hit is None:
        return None
    x_chosen, y_mask = hit
    x_mask = 0
    for v in x_chosen:
        x_mask |= 1 << v
    return x_mask, y_mask


def contains_biclique(g: Graph, t: int) -> tuple[int, int] | None:
    """Search for a K_{t,t} subgraph (not necessarily induced).

    Exhaustive and exact within the documented range (t <= 4, n <= 4096);
    larger inputs are rejected so absence of a result always means
    absence of the subgraph.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if t > BICLIQUE_MAX_SIDE or g.n > BICLIQUE_MAX_VERTICES:
        raise TooLargeError(
            f"exhaustive biclique search supports t <= {BICLIQUE_MAX_SIDE},"
            f" n <= {BICLIQUE_MAX_VERTICES}"
        )
    all_bits = full_mask(g.n)
    return find_biclique_between(g, all_bits, all_bits, t)
