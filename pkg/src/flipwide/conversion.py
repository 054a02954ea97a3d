"""Converting flip-based flatness witnesses into deletion-based wideness
witnesses.

The one-flip extraction deletes the smaller flip side and keeps the rest
of the witness; the general case peels flips off one at a time, feeding
each step a mutually-close candidate set extracted by the far/close
dichotomy. Deleting one side per flip gives the deletion budget
k * (t_eff^2 + t_eff - 2), where t_eff is the effective biclique-exclusion
parameter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitset import lowest_bits
from .errors import (
    BoundViolatedError,
    InvalidPathError,
    PreconditionFailedError,
    SizeRequirementUnmetError,
)
from .families import iterated_ramsey_upper
from .flips import Flip, apply_flip, apply_flips, normalize
from .graph import (
    Graph,
    find_biclique_between,
    graph_r_independent,
    isolate_vertices,
)
from .witness import close_or_far, closeness_of_graph

# The one-flip extraction needs its own bound to dominate both standing
# assumptions (bound >= 8t and bound >= 4t + 2); both hold from t = 8 up,
# and excluding K_{t,t} only gets easier as t grows, so smaller requests
# are rounded up.
MIN_EFFECTIVE_T = 8


@dataclass(frozen=True)
class SparsityLevel:
    """Biclique-exclusion parameter with its effective floor and deletion bound."""

    t: int

    @property
    def t_eff(self) -> int:
        return max(self.t, MIN_EFFECTIVE_T)

    @property
    def deletion_bound(self) -> int:
        t = self.t_eff
        return t * t + t - 2


def required_chain_size(k: int, sparsity: SparsityLevel, m: int, ceiling: int | None = None) -> int:
    """Candidate-pool size that guarantees the k-step extraction chain.

    The base requirement is deletion_bound + m; each additional flip
    wraps it in the binomial Ramsey upper bound. Grows fast: only small
    m and k are desk-scale.
    """
    if k < 0:
        raise ValueError("flip count must be >= 0")
    base = sparsity.deletion_bound + m
    if k == 0:
        return base
    if m < 1:
        raise ValueError("chain sizes with k >= 1 need m >= 1")
    return iterated_ramsey_upper(k, m, base, ceiling)


@dataclass(frozen=True)
class SingleFlipOutcome:
    """Result of trading one flip for a deletion set.

    s_set is the deleted flip side, b_prime the surviving witness, and
    deleted_side records which side lost ("first" or "second").
    """

    s_set: int
    b_prime: int
    deleted_side: str
    bound: int


def _bound_diagnostics(gp: Graph, f: Flip, b_mask: int, r: int, t_eff: int) -> dict:
    """Explain a bound violation: some hypothesis must be false."""
    cg = closeness_of_graph(gp, b_mask, r)
    non_edge = None
    g = cg.graph
    for u in range(g.n):
        free = ~g.adj[u] & ~((1 << (u + 1)) - 1) & ((1 << g.n) - 1)
        if free:
            v = (free & -free).bit_length() - 1
            non_edge = (cg.members[u], cg.members[v])
            break
    if non_edge is not None:
        return {"non_close_pair": non_edge}
    cross = find_biclique_between(gp, f.a, f.b, t_eff)
    if cross is not None:
        return {"cross_biclique": cross}
    return {"witness_too_small": b_mask.bit_count()}


def single_flip_to_deletion(
    gp: Graph,
    f: Flip,
    b_mask: int,
    r: int,
    sparsity: SparsityLevel,
    m: int,
    strict: bool = False,
    check_hypotheses: bool = False,
) -> SingleFlipOutcome:
    """Delete the smaller flip side; the witness survives minus that side.

    Requires B to be r-independent in the flipped graph. Any short path
    between surviving witness vertices that avoids the deleted side uses
    no flipped edge, so it would survive the flip and contradict that
    requirement; the survivors are therefore r-independent after the
    deletion unconditionally. Strict mode additionally asserts the
    deletion bound and the surviving size, which hold whenever the
    instance satisfies the size and no-crossing-biclique hypotheses.
    """
    flipped = apply_flip(gp, f)
    if not graph_r_independent(flipped, b_mask, r):
        raise PreconditionFailedError("witness is not r-independent in the flipped graph")
    bound = sparsity.deletion_bound
    if check_hypotheses:
        if b_mask.bit_count() < bound + m:
            raise PreconditionFailedError(
                f"witness has {b_mask.bit_count()} vertices, hypothesis needs {bound + m}"
            )
        cg = closeness_of_graph(gp, b_mask, r)
        comp = cg.graph.complement()
        if any(comp.adj[u] for u in range(comp.n)):
            raise PreconditionFailedError("witness pairs are not all within distance r")
        if find_biclique_between(gp, f.a, f.b, sparsity.t_eff) is not None:
            raise PreconditionFailedError("flip sides carry a crossing biclique")
    if f.a.bit_count() < f.b.bit_count():
        s_mask, side = f.a, "first"
    else:
        s_mask, side = f.b, "second"
    b_prime = b_mask & ~s_mask
    residual = isolate_vertices(gp, s_mask)
    assert graph_r_independent(residual, b_prime, r), (
        "survivors stopped being r-independent after deleting a flip side"
    )
    if strict:
        if s_mask.bit_count() > bound:
            raise BoundViolatedError(
                f"both flip sides exceed the deletion bound {bound}",
                diagnostics=_bound_diagnostics(gp, f, b_mask, r, sparsity.t_eff),
            )
        if b_prime.bit_count() < m:
            raise BoundViolatedError(
                f"only {b_prime.bit_count()} witness vertices survive, {m} required",
                diagnostics=_bound_diagnostics(gp, f, b_mask, r, sparsity.t_eff),
            )
    return SingleFlipOutcome(s_mask, b_prime, side, bound)


def elementary_segments(gp: Graph, f: Flip, path: list[int] | tuple[int, ...]):
    """Split a flip-broken path into its prefix and suffix segments.

    The prefix runs to the first vertex of either flip side, the suffix
    from the last one; each contains exactly one side vertex. Returns
    None when the path uses no flipped edge (diagnostic helper for the
    short-segment property, not part of the conversion itself).
    """
    if len(path) == 0:
        raise InvalidPathError("empty vertex sequence")
    if len(set(path)) != len(path):
        raise InvalidPathError("path repeats a vertex")
    for v in path:
        if not (0 <= v < gp.n):
            raise InvalidPathError(f"vertex {v} out of range")
    for u, v in zip(path, path[1:]):
        if not gp.has_edge(u, v):
            raise InvalidPathError(f"({u}, {v}) is not an edge")

    def toggled(u: int, v: int) -> bool:
        return bool(
            (f.a >> u & 1 and f.b >> v & 1) or (f.b >> u & 1 and f.a >> v & 1)
        )

    if not any(toggled(u, v) for u, v in zip(path, path[1:])):
        return None
    sides = f.a | f.b
    first = next(i for i, v in enumerate(path) if sides >> v & 1)
    last = max(i for i, v in enumerate(path) if sides >> v & 1)
    return tuple(path[: first + 1]), tuple(path[last:])


@dataclass(frozen=True)
class CloseStep:
    level: int
    size: int


@dataclass(frozen=True)
class FarStep:
    level: int
    size: int


@dataclass(frozen=True)
class DeletionStep:
    flip_index: int
    deleted_side: str
    deleted_count: int
    total_deleted: int


@dataclass(frozen=True)
class RecurseStep:
    remaining: int


@dataclass
class ConversionTrace:
    """Step-by-step record of the conversion; part of the output contract."""

    mode: str
    source_flip_count: int
    normalized_count: int
    steps: list = field(default_factory=list)
    s_final: int = 0
    b_final: int = 0


@dataclass(frozen=True)
class ConversionResult:
    success: bool
    s_set: int
    b_final: int
    trace: ConversionTrace
    failure_level: int | None = None
    failure_reason: str | None = None


class _Shortfall(Exception):
    def __init__(self, level: int | None, reason: str):
        super().__init__(reason)
        self.level = level
        self.reason = reason


def _restrict_flips(flips: list[Flip], deleted: int) -> list[Flip]:
    # Deleting P turns (A, B) into (A - P, B - P); flips that lose a whole
    # side no longer do anything and are dropped.
    out = []
    for f in flips:
        a, b = f.a & ~deleted, f.b & ~deleted
        if a and b:
            out.append(Flip(a, b))
    return out


def flips_to_deletions(
    g: Graph,
    flips,
    b_mask: int,
    r: int,
    sparsity: SparsityLevel,
    m: int,
    mode: str = "best_effort",
) -> ConversionResult:
    """Turn a flip-flatness witness into a deletion-wideness witness.

    The flip set is normalized first, so the recursion runs on k'
    single-pair flips, each acting on every vertex pair at most once. At
    each level the current candidates either already contain a far
    (r-independent) m-set under the flips applied so far, which restarts
    the recursion with fewer flips, or they contain a mutually close
    subset that the chain keeps. After the last level, one flip is traded
    for a deletion of at most deletion_bound vertices and the recursion
    continues on the smaller graph.

    Guaranteed mode enforces the chain-size preconditions and the
    per-step deletion bound; best-effort runs the identical recursion
    without them and either returns a verified witness or a structured
    failure naming the level that came up short. Either way, every
    success is re-verified against the definition before returning.
    """
    if mode not in ("guaranteed", "best_effort"):
        raise ValueError(f"unknown mode {mode!r}")
    flips = list(flips)
    if not graph_r_independent(apply_flips(g, flips), b_mask, r):
        raise PreconditionFailedError("witness is not r-independent under the flip set")
    normalized = normalize(flips, g.n).single_pair_flips()
    trace = ConversionTrace(
        mode=mode,
        source_flip_count=len(flips),
        normalized_count=len(normalized),
    )
    strict = mode == "guaranteed"

    def convert(work: Graph, work_flips: list[Flip], b: int) -> tuple[int, int]:
        k = len(work_flips)
        if strict and m >= 1:
            need = m if k == 0 else required_chain_size(k, sparsity, m)
            if b.bit_count() < need:
                raise SizeRequirementUnmetError(
                    f"{b.bit_count()} candidates for {k} flips, {need} required"
                )
        if k == 0:
            if b.bit_count() < m:
                raise _Shortfall(None, "candidate set fell below m with no flips left")
            return 0, lowest_bits(b, m)

        candidates = b
        level_graph = work
        for i in range(k):
            if i > 0:
                level_graph = apply_flip(level_graph, work_flips[i - 1])
            close_target = required_chain_size(k - 1 - i, sparsity, m) if strict else max(m, 1)
            cg = closeness_of_graph(level_graph, candidates, r)
            outcome = close_or_far(cg, m, close_target)
            if outcome.kind == "far":
                trace.steps.append(FarStep(i, outcome.size))
                trace.steps.append(RecurseStep(i))
                return convert(work, work_flips[:i], outcome.vertices)
            if outcome.kind == "close":
                trace.steps.append(CloseStep(i, outcome.size))
                candidates = outcome.vertices
                continue
            if strict:
                raise SizeRequirementUnmetError(
                    f"level {i}: pool of {cg.graph.n} exceeds the exact search"
                    f" limit and the greedy dichotomy found neither side"
                )
            raise _Shortfall(i, f"neither a far {m}-set nor a close set at level {i}")

        step = single_flip_to_deletion(
            level_graph, work_flips[-1], candidates, r, sparsity, m, strict=strict
        )
        trace.steps.append(
            DeletionStep(
                flip_index=k - 1,
                deleted_side=step.deleted_side,
                deleted_count=step.s_set.bit_count(),
                total_deleted=0,
            )
        )
        trace.steps.append(RecurseStep(k - 1))
        rest_graph = isolate_vertices(work, step.s_set)
        rest_flips = _restrict_flips(work_flips[:-1], step.s_set)
        s_rest, b_final = convert(rest_graph, rest_flips, step.b_prime)
        return step.s_set | s_rest, b_final

    try:
        s_total, b_final = convert(g, normalized, b_mask)
    except _Shortfall as sf:
        return ConversionResult(False, 0, 0, trace, sf.level, sf.reason)

    # Running totals in deletion steps are filled in once the recursion
    # has unwound, in execution order.
    running = 0
    for idx, s in enumerate(trace.steps):
        if isinstance(s, DeletionStep):
            running += s.deleted_count
            trace.steps[idx] = DeletionStep(s.flip_index, s.deleted_side, s.deleted_count, running)
    trace.s_final = s_total
    trace.b_final = b_final

    assert b_final.bit_count() >= m, "conversion returned fewer than m vertices"
    assert graph_r_independent(isolate_vertices(g, s_total), b_final, r), (
        "conversion output is not r-independent after the deletions"
    )
    if strict:
        limit = len(normalized) * sparsity.deletion_bound
        assert s_total.bit_count() <= limit, (
            f"deletion set of {s_total.bit_count()} exceeds {limit}"
        )
    return ConversionResult(True, s_total, b_final, trace)
