"""Shared brute-force oracles and instance generators.

Every oracle here recomputes a property from its definition, independent
of the code paths under test: distances by Floyd-Warshall, r-independence
by all-pairs scan, bicliques by subset enumeration, and flip effects by
per-pair parity counting.
"""

from __future__ import annotations

import itertools
import math
import random

import pytest

from flipwide.bitset import mask_from, members
from flipwide.flips import Flip
from flipwide.graph import Graph
from flipwide.families import random_graph

INF = math.inf


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.n
    dist = [[0 if i == j else (1 if g.has_edge(i, j) else INF) for j in range(n)] for i in range(n)]
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def brute_r_independent(g: Graph, b_mask: int, r: int) -> bool:
    dist = floyd_warshall(g)
    bs = members(b_mask)
    return all(dist[u][v] > r for u, v in itertools.combinations(bs, 2))


def brute_biclique(g: Graph, t: int):
    """Enumerate all t-subsets and their common neighborhoods."""
    for xs in itertools.combinations(range(g.n), t):
        common = (1 << g.n) - 1
        for x in xs:
            common &= g.adj[x]
        common &= ~mask_from(xs)
        if common.bit_count() >= t:
            return mask_from(xs), common
    return None


def brute_pair_flipped(flips, u: int, v: int) -> bool:
    """Parity of per-flip toggles for the pair {u, v}, straight from the definition."""
    parity = 0
    for f in flips:
        if (f.a >> u & 1 and f.b >> v & 1) or (f.b >> u & 1 and f.a >> v & 1):
            parity ^= 1
    return bool(parity)


def brute_flipped_graph(g: Graph, flips) -> Graph:
    rows = [0] * g.n
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            if bool(g.adj[u] >> v & 1) ^ brute_pair_flipped(flips, u, v):
                rows[u] |= 1 << v
    return Graph(g.n, rows)


def random_flip(rng: random.Random, n: int) -> Flip:
    def side():
        size = rng.randint(0, n)
        return mask_from(rng.sample(range(n), size))
    return Flip(side(), side())


def random_mask(rng: random.Random, n: int, size: int | None = None) -> int:
    if size is None:
        size = rng.randint(0, n)
    return mask_from(rng.sample(range(n), min(size, n)))


@pytest.fixture
def rng():
    return random.Random(0xF11B)


def seeded_graph(seed: int, n: int, p: float = 0.3) -> Graph:
    return random_graph(n, p, seed)
