"""Graph flips, flatness witnesses, and deletion-based wideness witnesses.

The package turns the flip calculus into executable pieces: a bit-row
graph core, flip normalization over atom partitions with lazy flipped
BFS, witness verification and brute-force search oracles, the
flip-to-deletion conversion with its explicit budget, and generators for
the graph families that exercise all of it.
"""

__version__ = "0.1.0"

from .graph import (
    Graph,
    UNREACHABLE,
    bfs_distances,
    contains_biclique,
    delete_vertices,
    from_edge_list,
    graph_r_independent,
    isolate_vertices,
    neighborhood,
)
from .flips import (
    Flip,
    FlippedView,
    NormalizedFlipSet,
    apply_flip,
    apply_flips,
    atom_partition,
    flipped_adjacency,
    flipped_bfs,
    isolating_flips,
    normalize,
    star_product,
    view_of,
)
from .witness import (
    ClosenessGraph,
    CloseFarResult,
    FlippableInstance,
    Verdict,
    WidenableInstance,
    close_or_far,
    closeness_of_graph,
    closeness_of_view,
    find_flat_subset,
    search_deletion_witness,
    verify_flippable,
    verify_widenable,
)
from .conversion import (
    ConversionResult,
    ConversionTrace,
    SingleFlipOutcome,
    SparsityLevel,
    elementary_segments,
    flips_to_deletions,
    required_chain_size,
    single_flip_to_deletion,
)
from .families import (
    ExperimentReport,
    FamilySpec,
    biclique,
    complete,
    counterexample_experiment,
    cycle,
    generate,
    half_graph,
    iterated_ramsey_upper,
    parse_family_spec,
    path,
    ramsey_upper,
    random_graph,
    star,
    subdivide,
    subdivided_biclique,
)
from .graphio import parse_edge_list, parse_graph6, write_graph6
