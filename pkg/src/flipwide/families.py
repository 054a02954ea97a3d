"""Generators for the graph families used throughout, plus Ramsey bounds
and the subdivided-biclique deletion experiment.

Vertex numbering is canonical per family so fixtures and reports stay
stable: bicliques put the left block first, half-graphs put the a-side
first, and subdivisions keep base vertices at their original indices and
append internal path vertices in sorted edge order.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .bitset import full_mask, iter_bits, mask_from
from .errors import ChainSizeOverflowError, InvalidSpecError, TooLargeError
from .graph import Graph, from_edge_list, isolate_vertices

EXPERIMENT_MAX_VERTICES = 200
EXPERIMENT_MAX_SIDE = 3


def complete(t: int) -> Graph:
    if t < 1:
        raise InvalidSpecError("complete graph needs t >= 1")
    full = full_mask(t)
    return Graph(t, (full & ~(1 << u) for u in range(t)))


def biclique(s: int, n_right: int) -> Graph:
    """K_{s,N}: left block 0..s-1, right block s..s+N-1."""
    if s < 1 or n_right < 1:
        raise InvalidSpecError("biclique needs both sides >= 1")
    left = full_mask(s)
    right = full_mask(n_right) << s
    rows = [right] * s + [left] * n_right
    return Graph(s + n_right, rows)


def star(n_leaves: int) -> Graph:
    """K_{1,N} with the center at vertex 0."""
    return biclique(1, n_leaves)


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSpecError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSpecError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def half_graph(order: int) -> Graph:
    """Bipartite encoding of a linear order: a_i and b_j adjacent iff i <= j.

    a-side occupies 0..order-1, b-side occupies order..2*order-1.
    """
    if order < 1:
        raise InvalidSpecError("half-graph needs order >= 1")
    edges = [(i, order + j) for i in range(order) for j in range(order) if i <= j]
    return from_edge_list(2 * order, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p) with a fixed algorithm and pair order.

    Uses the Mersenne Twister behind random.Random and draws one float
    per pair (u, v), u < v, in lexicographic order, so corpora reproduce
    across platforms.
    """
    if n < 0 or not (0.0 <= p <= 1.0):
        raise InvalidSpecError("random graph needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def subdivide(g: Graph, depth: int) -> Graph:
    """Replace every edge by a path with exactly *depth* internal vertices.

    Base vertices keep their indices; internal vertices are appended in
    the sorted order of the edges they subdivide.
    """
    if depth < 0:
        raise InvalidSpecError("subdivision depth must be >= 0")
    if depth == 0:
        return g
    base_edges = g.edges()
    n = g.n + depth * len(base_edges)
    edges = []
    nxt = g.n
    for u, v in base_edges:
        chain = [u] + list(range(nxt, nxt + depth)) + [v]
        nxt += depth
        edges.extend(zip(chain, chain[1:]))
    return from_edge_list(n, edges)


def subdivided_biclique(s: int, n_right: int) -> Graph:
    """The s-subdivision of K_{s,N}, the family that resists small deletions."""
    return subdivide(biclique(s, n_right), s)


@dataclass(frozen=True)
class FamilySpec:
    """Machine-readable family description, also expressible on the CLI.

    kind is one of complete, biclique, half_graph, path, cycle, star,
    random, subdivided; subdivided wraps a base spec with a depth in
    args[0].
    """

    kind: str
    args: tuple = ()
    base: "FamilySpec | None" = None


def generate(spec: FamilySpec) -> Graph:
    try:
        if spec.kind == "complete":
            return complete(int(spec.args[0]))
        if spec.kind == "biclique":
            return biclique(int(spec.args[0]), int(spec.args[1]))
        if spec.kind == "half_graph":
            return half_graph(int(spec.args[0]))
        if spec.kind == "path":
            return path(int(spec.args[0]))
        if spec.kind == "cycle":
            return cycle(int(spec.args[0]))
        if spec.kind == "star":
            return star(int(spec.args[0]))
        if spec.kind == "random":
            n, p, seed = spec.args
            return random_graph(int(n), float(p), int(seed))
        if spec.kind == "subdivided":
            if spec.base is None:
                raise InvalidSpecError("subdivided spec needs a base family")
            return subdivide(generate(spec.base), int(spec.args[0]))
    except (IndexError, ValueError) as exc:
        raise InvalidSpecError(f"bad parameters for family {spec.kind!r}: {exc}") from exc
    raise InvalidSpecError(f"unknown family kind {spec.kind!r}")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the CLI syntax, e.g. 'biclique:2,6' or 'subdivided:1:biclique:2,6'."""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind == "subdivided":
        depth_text, _, base_text = rest.partition(":")
        if not base_text:
            raise InvalidSpecError("subdivided needs a depth and a base family")
        try:
            depth = int(depth_text)
        except ValueError as exc:
            raise InvalidSpecError(f"bad subdivision depth {depth_text!r}") from exc
        return FamilySpec("subdivided", (depth,), parse_family_spec(base_text))
    args: tuple = ()
    if rest.strip():
        parts = [p.strip() for p in rest.split(",")]
        try:
            args = tuple(float(p) if "." in p else int(p) for p in parts)
        except ValueError as exc:
            raise InvalidSpecError(f"bad family parameters {rest!r}") from exc
    return FamilySpec(kind, args)


def ramsey_upper(m: int, n: int) -> int:
    """Binomial upper bound C(m+n-2, m-1) on the two-color Ramsey number."""
    if m < 1 or n < 1:
        raise ValueError("ramsey_upper needs m, n >= 1")
    return math.comb(m + n - 2, m - 1)


def iterated_ramsey_upper(k: int, m: int, n: int, ceiling: int | None = None) -> int:
    """k-fold composition of ramsey_upper in its second argument."""
    if k < 0:
        raise ValueError("iteration depth must be >= 0")
    value = n
    for _ in range(k):
        value = ramsey_upper(m, value)
        if ceiling is not None and value > ceiling:
            raise ChainSizeOverflowError(
                f"iterated Ramsey bound exceeded the configured ceiling {ceiling}"
            )
    return value


@dataclass(frozen=True)
class BudgetResult:
    budget: int
    success: bool
    exhaustive: bool
    s_set: int | None = None
    b_set: int | None = None


@dataclass(frozen=True)
class ExperimentReport:
    """Per-budget outcomes of the subdivided-biclique deletion experiment."""

    s: int
    n_right: int
    r: int
    m: int
    n_vertices: int
    budget_results: tuple[BudgetResult, ...] = field(default_factory=tuple)

    @property
    def min_budget(self) -> int | None:
        for res in self.budget_results:
            if res.success:
                return res.budget
        return None


def counterexample_experiment(
    s: int, n_right: int, r: int | None = None, m: int = 2
) -> ExperimentReport:
    """Exhaustively measure how many deletions the s-subdivision of K_{s,N} needs.

    For each budget b <= s, decides whether some deletion set of exactly
    b vertices leaves an m-subset of the right side r-independent. The
    default radius 2(s+1) is the right-side pairwise distance, the
    smallest radius at which the family puts up a fight.
    """
    # Import here: witness depends on this module for ramsey_upper.
    from .search import find_independent_set
    from .witness import closeness_of_graph

    if r is None:
        r = 2 * (s + 1)
    g = subdivided_biclique(s, n_right)
    if g.n > EXPERIMENT_MAX_VERTICES or s > EXPERIMENT_MAX_SIDE:
        raise TooLargeError(
            f"experiment supports n <= {EXPERIMENT_MAX_VERTICES} and s <= {EXPERIMENT_MAX_SIDE}"
        )
    a_mask = mask_from(range(s, s + n_right))
    results = []
    for b in range(s + 1):
        witness = None
        for combo in itertools.combinations(range(g.n), b):
            s_mask = mask_from(combo)
            pool = a_mask & ~s_mask
            if pool.bit_count() < m:
                continue
            residual = isolate_vertices(g, s_mask)
            cg = closeness_of_graph(residual, pool, r)
            found = find_independent_set(cg.graph, m)
            if found is not None:
                witness = (s_mask, cg.to_original_mask(found))
                break
        if witness is None:
            results.append(BudgetResult(b, False, True))
        else:
            results.append(BudgetResult(b, True, True, witness[0], witness[1]))
    return ExperimentReport(s, n_right, r, m, g.n, tuple(results))
