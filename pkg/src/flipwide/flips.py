"""Flips, flip-set normalization, and lazy BFS in flipped graphs.

A flip (A, B) complements adjacency between A and B. A list of flips is
order-independent and each flip is an involution, so any flip set reduces
to a toggle relation on the atoms of its side partition: that normal form
is what makes adjacency in the flipped graph answerable without ever
materializing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitset import full_mask, iter_bits, mask_from, members
from .errors import DuplicateVertexError, LoopQueryError, OutOfRangeError
from .graph import Graph, bfs_layers, neighborhood


@dataclass(frozen=True)
class Flip:
    """A pair of vertex sets; the sides may intersect or be equal."""

    a: int
    b: int

    def sides(self) -> tuple[int, int]:
        return self.a, self.b

    @staticmethod
    def of(a_vertices: Iterable[int], b_vertices: Iterable[int]) -> "Flip":
        return Flip(mask_from(a_vertices), mask_from(b_vertices))


FlipSet = Sequence[Flip]


def _check_flip(n: int, f: Flip) -> None:
    if f.a < 0 or f.b < 0 or f.a >> n or f.b >> n:
        raise OutOfRangeError(f"flip sides have bits outside 0..{n - 1}")


def _toggle_row(f: Flip, u: int) -> int:
    # Vertices v whose pair {u, v} is complemented: the opposite side for
    # each side containing u, as a set union (a pair flips at most once
    # per flip even when both orientations match).
    t = 0
    if f.a >> u & 1:
        t |= f.b
    if f.b >> u & 1:
        t |= f.a
    return t & ~(1 << u)


def apply_flip(g: Graph, f: Flip) -> Graph:
    """Complement adjacency between the flip's sides; the diagonal is ignored."""
    _check_flip(g.n, f)
    return Graph(g.n, (row ^ _toggle_row(f, u) for u, row in enumerate(g.adj)))


def apply_flips(g: Graph, flips: FlipSet) -> Graph:
    for f in flips:
        g = apply_flip(g, f)
    return g


@dataclass(frozen=True)
class AtomPartition:
    """Partition of 0..n-1 refining every side of every flip.

    Atoms are ordered by smallest member so outputs are reproducible;
    atom_of[v] is the index of v's atom.
    """

    n: int
    atoms: tuple[int, ...]
    atom_of: tuple[int, ...]


def atom_partition(flips: FlipSet, n: int) -> AtomPartition:
    """Group vertices by their membership signature over all flip sides.

    The nonempty signature classes (the all-zero class is the rest of the
    vertex set) are exactly the coarsest partition in which every flip
    side is a union of parts; there are at most 2^(2k) + 1 of them.
    """
    for f in flips:
        _check_flip(n, f)
    buckets: dict[int, int] = {}
    for v in range(n):
        sig = 0
        for i, f in enumerate(flips):
            sig |= (f.a >> v & 1) << (2 * i)
            sig |= (f.b >> v & 1) << (2 * i + 1)
        buckets[sig] = buckets.get(sig, 0) | (1 << v)
    atoms = tuple(sorted(buckets.values(), key=lambda m: (m & -m).bit_length()))
    atom_of = [0] * n
    for idx, atom in enumerate(atoms):
        for v in iter_bits(atom):
            atom_of[v] = idx
    return AtomPartition(n, atoms, tuple(atom_of))


@dataclass(frozen=True)
class NormalizedFlipSet:
    """Atom partition plus the unordered atom pairs whose adjacency toggles.

    Every vertex pair is toggled at most once. A pair (i, i) complements
    an atom internally; those arise only from flips whose sides overlap.
    """

    partition: AtomPartition
    toggles: frozenset[tuple[int, int]]

    @property
    def has_reflexive_toggle(self) -> bool:
        return any(a == b for a, b in self.toggles)

    def sorted_toggles(self) -> list[tuple[int, int]]:
        return sorted(self.toggles)

    def single_pair_flips(self) -> list[Flip]:
        """The toggles materialized as one flip per atom pair, sorted by index."""
        atoms = self.partition.atoms
        return [Flip(atoms[a], atoms[b]) for a, b in self.sorted_toggles()]


def normalize(flips: FlipSet, n: int) -> NormalizedFlipSet:
    """Reduce a flip list to toggles on atom pairs, cancelling repeats.

    An atom pair toggles iff an odd number of flips complement it; even
    counts cancel because a repeated flip restores the graph. Applying
    the result to any graph on n vertices equals folding the original
    flips.
    """
    part = atom_partition(flips, n)
    atoms = part.atoms
    parity: dict[tuple[int, int], int] = {}
    for f in flips:
        in_a = [i for i, atom in enumerate(atoms) if atom & ~f.a == 0]
        in_b = [i for i, atom in enumerate(atoms) if atom & ~f.b == 0]
        flipped_pairs = {(min(i, j), max(i, j)) for i in in_a for j in in_b}
        for pair in flipped_pairs:
            parity[pair] = parity.get(pair, 0) ^ 1
    toggles = frozenset(pair for pair, p in parity.items() if p)
    return NormalizedFlipSet(part, toggles)


class FlippedView:
    """Graph plus normalized flips, with adjacency answered lazily.

    Row u of the flipped graph is row u of the base XOR the union of all
    atoms toggled against u's atom, minus u itself. The per-atom unions
    are precomputed once, so each row costs O(n / wordsize).
    """

    __slots__ = ("base", "nf", "_targets", "rows")

    def __init__(self, base: Graph, nf: NormalizedFlipSet):
        if nf.partition.n != base.n:
            raise OutOfRangeError("normalized flip set built for a different vertex count")
        self.base = base
        self.nf = nf
        atoms = nf.partition.atoms
        targets = [0] * len(atoms)
        for a, b in nf.toggles:
            targets[a] |= atoms[b]
            targets[b] |= atoms[a]
        self._targets = targets
        self.rows = _ViewRows(self)

    @property
    def n(self) -> int:
        return self.base.n

    def row(self, u: int) -> int:
        t = self._targets[self.nf.partition.atom_of[u]]
        return (self.base.adj[u] ^ t) & ~(1 << u)

    def materialize(self) -> Graph:
        return Graph(self.n, (self.row(u) for u in range(self.n)))


class _ViewRows:
    """Indexable adapter so BFS code treats a view like a row tuple."""

    __slots__ = ("view",)

    def __init__(self, view: FlippedView):
        self.view = view

    def __getitem__(self, u: int) -> int:
        return self.view.row(u)


def flipped_adjacency(view: FlippedView, u: int, v: int) -> bool:
    if u == v:
        raise LoopQueryError("adjacency of a vertex with itself")
    n = view.n
    if not (0 <= u < n and 0 <= v < n):
        raise OutOfRangeError(f"vertex outside 0..{n - 1}")
    return bool(view.row(u) >> v & 1)


def flipped_bfs(view: FlippedView, source: int) -> list:
    """Exact BFS distances in the flipped graph, never materializing it."""
    if not (0 <= source < view.n):
        raise OutOfRangeError(f"vertex {source} outside 0..{view.n - 1}")
    return bfs_layers(view.rows, view.n, source)


def view_of(g: Graph, flips: FlipSet) -> FlippedView:
    return FlippedView(g, normalize(flips, g.n))


def star_product(g: Graph, flips: FlipSet) -> Graph:
    """Two disjoint copies of g, flipped between first-copy A and second-copy B."""
    n = g.n
    for f in flips:
        _check_flip(n, f)
    rows = [row for row in g.adj] + [row << n for row in g.adj]
    product = Graph(2 * n, rows)
    cross = [Flip(f.a, f.b << n) for f in flips]
    return apply_flips(product, cross)


def isolating_flips(g: Graph, order: Sequence[int]) -> list[Flip]:
    """Flips that cut each listed vertex off from the rest, one at a time.

    Flip i pairs v_i with its neighborhood in the graph after the first
    i - 1 flips, so the result isolates all of S while leaving the rest
    of the graph (the induced subgraph on V minus S) untouched.
    """
    if len(set(order)) != len(order):
        raise DuplicateVertexError("vertex list for isolation has repeats")
    flips: list[Flip] = []
    current = g
    for v in order:
        f = Flip(1 << v, neighborhood(current, v))
        flips.append(f)
        current = apply_flip(current, f)
    return flips


def materialized_equal(g: Graph, flips: FlipSet, nf: NormalizedFlipSet) -> bool:
    """Soundness probe: folding the flips equals applying the normal form."""
    return apply_flips(g, flips) == FlippedView(g, nf).materialize()


__all__ = [
    "Flip",
    "FlipSet",
    "AtomPartition",
    "NormalizedFlipSet",
    "FlippedView",
    "apply_flip",
    "apply_flips",
    "atom_partition",
    "normalize",
    "flipped_adjacency",
    "flipped_bfs",
    "view_of",
    "star_product",
    "isolating_flips",
    "materialized_equal",
]
