import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from flipwide.bitset import mask_from, members
from flipwide.errors import LoopError, OutOfRangeError, TooLargeError
from flipwide.graph import (
    UNREACHABLE,
    bfs_distances,
    contains_biclique,
    delete_vertices,
    from_edge_list,
    graph_r_independent,
    isolate_vertices,
    neighborhood,
)
from flipwide.families import biclique, complete, cycle, path, random_graph, star

from conftest import brute_biclique, brute_r_independent, floyd_warshall, seeded_graph


class TestFromEdgeList:
    def test_cycle(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.edge_count() == 4
        assert g == cycle(4)

    def test_edgeless(self):
        g = from_edge_list(3, [])
        assert all(row == 0 for row in g.adj)

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            from_edge_list(2, [(0, 2)])

    def test_loop_rejected(self):
        with pytest.raises(LoopError):
            from_edge_list(2, [(0, 0)])

    def test_duplicate_edges_idempotent(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1


class TestBfs:
    def test_path(self):
        assert bfs_distances(path(5), 0) == [0, 1, 2, 3, 4]

    def test_edgeless(self):
        assert bfs_distances(from_edge_list(3, []), 1) == [UNREACHABLE, 0, UNREACHABLE]

    def test_cycle(self):
        assert bfs_distances(cycle(4), 0) == [0, 1, 2, 1]

    def test_source_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            bfs_distances(path(3), 3)

    def test_unreachable_compares_above_any_radius(self):
        assert UNREACHABLE > 10**100

    def test_against_floyd_warshall(self):
        for seed, n in [(1, 8), (2, 16), (3, 31), (4, 48), (5, 64), (6, 64)]:
            g = seeded_graph(seed, n, p=0.15)
            dist = floyd_warshall(g)
            for src in range(0, n, 7):
                assert bfs_distances(g, src) == dist[src]

    def test_edge_triangle_inequality(self):
        g = seeded_graph(99, 40, p=0.1)
        d = bfs_distances(g, 0)
        for u, v in g.edges():
            if d[u] is not UNREACHABLE and d[v] is not UNREACHABLE:
                assert abs(d[u] - d[v]) <= 1


class TestDeleteVertices:
    def test_cycle_minus_vertex(self):
        g, relabel = delete_vertices(cycle(4), 1 << 0)
        assert relabel == {1: 0, 2: 1, 3: 2}
        assert g == path(3)

    def test_empty_deletion(self):
        g = cycle(5)
        h, relabel = delete_vertices(g, 0)
        assert h == g
        assert relabel == {v: v for v in range(5)}

    def test_full_deletion(self):
        g, relabel = delete_vertices(cycle(4), 0b1111)
        assert g.n == 0
        assert relabel == {}

    def test_isolate_matches_induced_distances(self):
        g = seeded_graph(7, 20, p=0.2)
        s = mask_from([2, 9, 17])
        induced, relabel = delete_vertices(g, s)
        isolated = isolate_vertices(g, s)
        for old, new in relabel.items():
            got = bfs_distances(isolated, old)
            want = bfs_distances(induced, new)
            for other_old, other_new in relabel.items():
                assert got[other_old] == want[other_new]


class TestRIndependent:
    def test_path_far_pair(self):
        g = path(5)
        assert graph_r_independent(g, mask_from([0, 4]), 3)
        assert not graph_r_independent(g, mask_from([0, 4]), 4)

    def test_single_vertex_always(self):
        g = complete(4)
        assert graph_r_independent(g, 1 << 2, 100)
        assert graph_r_independent(g, 0, 5)

    def test_unreachable_counts_as_far(self):
        g = from_edge_list(4, [(0, 1), (2, 3)])
        assert graph_r_independent(g, mask_from([0, 2]), 10**6)

    def test_against_brute_force(self, rng):
        for _ in range(25):
            n = rng.randint(2, 14)
            g = random_graph(n, 0.3, rng.randint(0, 9999))
            b = mask_from(rng.sample(range(n), rng.randint(0, n)))
            r = rng.randint(0, 5)
            assert graph_r_independent(g, b, r) == brute_r_independent(g, b, r)


class TestBiclique:
    def test_c4_is_k22(self):
        found = contains_biclique(cycle(4), 2)
        assert found == (mask_from([0, 2]), mask_from([1, 3]))

    def test_tree_has_no_k22(self):
        spine = path(7)
        assert contains_biclique(spine, 2) is None
        assert contains_biclique(star(6), 2) is None

    def test_k35_contains_k33(self):
        found = contains_biclique(biclique(3, 5), 3)
        assert found is not None
        x, y = found
        g = biclique(3, 5)
        for u in members(x):
            assert y & ~g.adj[u] == 0
        assert x & y == 0

    def test_rejects_large_inputs(self):
        with pytest.raises(TooLargeError):
            contains_biclique(path(3), 5)
        with pytest.raises(TooLargeError):
            contains_biclique(from_edge_list(5000, []), 2)

    def test_against_enumeration(self, rng):
        for _ in range(20):
            n = rng.randint(4, 20)
            g = random_graph(n, rng.choice([0.2, 0.4, 0.6]), rng.randint(0, 9999))
            for t in (2, 3):
                got = contains_biclique(g, t)
                want = brute_biclique(g, t)
                assert (got is None) == (want is None)
                if got is not None:
                    x, y = got
                    assert x & y == 0
                    assert x.bit_count() == t and y.bit_count() == t
                    for u in members(x):
                        assert y & ~g.adj[u] == 0


class TestNeighborhood:
    def test_star_center(self):
        assert neighborhood(star(3), 0) == mask_from([1, 2, 3])

    def test_edgeless(self):
        assert neighborhood(from_edge_list(3, []), 1) == 0

    def test_cycle(self):
        assert neighborhood(cycle(4), 0) == mask_from([1, 3])

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            neighborhood(path(2), 2)


@given(
    n=st.integers(min_value=1, max_value=12),
    data=st.data(),
)
@settings(max_examples=60, deadline=None)
def test_constructor_invariants(n, data):
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = data.draw(st.lists(pairs, max_size=2 * n))
    g = from_edge_list(n, edges)
    g.check_invariants()
    for u, v in edges:
        assert g.has_edge(u, v) and g.has_edge(v, u)


@given(st.integers(min_value=0, max_value=2**40 - 1))
@settings(max_examples=80, deadline=None)
def test_mask_roundtrip(mask):
    assert mask_from(members(mask)) == mask
