"""Alice-side strategies with certified lower bounds.

Each constructor returns a `CertifiedStrategy`: a playable strategy plus an
exact rational bound that Alice's final gain provably meets against any
legal opponent.  The master strategy composes the sparse-or-legal dichotomy
with the quotient-graph decomposition strategies.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from . import decompose
from .decompose import Outcome, subdivision_constant, subdivision_decomposition
from .game import (
    DEFAULT_MEMO_BUDGET,
    GameState,
    Solver,
    Strategy,
    legal_moves,
    make_state,
)
from .graph import (
    ZERO,
    ShallowQuotient,
    WeightedGraph,
    cycle_reduction_check,
    is_connected,
    is_sparse,
    iter_bits,
    lowest_bit,
    mask_of,
    shallow_quotient_GR,
    w_star,
)
from .ordering import (
    LegalOrderingContext,
    DichotomyResult,
    build_legal_ordering,
    dichotomy_constant,
    sparse_or_legal,
)
from .subdivision import SubdivisionWitness


class SubdivisionSurfaced(RuntimeError):
    """The structural search kept finding clique subdivisions up to its cap."""

    def __init__(self, message: str, witness: SubdivisionWitness):
        super().__init__(message)
        self.witness = witness


class CertifiedStrategy(Strategy):
    """A strategy wrapper carrying its certified bound and provenance."""

    def __init__(
        self,
        inner: Strategy,
        bound: Fraction,
        lemma: str,
        realized: Fraction,
        paper_constant: Fraction,
    ):
        self.inner = inner
        self.bound = bound
        self.lemma = lemma
        self.realized = realized
        self.paper_constant = paper_constant
        self.name = f"certified-{lemma}"

    def choose(self, state: GameState) -> int:
        return self.inner.choose(state)

    def reset(self) -> None:
        self.inner.reset()

    def format(self) -> str:
        def frac(x: Fraction) -> str:
            return f"{x.numerator}/{x.denominator}"

        return (
            f"certified lemma={self.lemma} bound={frac(self.bound)} "
            f"realized={frac(self.realized)} "
            f"paperConstant={frac(self.paper_constant)}"
        )


def _require_odd(graph: WeightedGraph) -> None:
    if graph.n % 2 == 0:
        raise ValueError("the game bound requires an odd number of vertices")


def strat_comp(
    graph: WeightedGraph,
    taken: int = 0,
    memo_budget: int = DEFAULT_MEMO_BUDGET,
) -> CertifiedStrategy:
    """Optimal continuation from a position with an even connected taken set;
    guaranteed at least half the deficiency of the remainder."""
    _require_odd(graph)
    if bin(taken).count("1") % 2 != 0:
        raise ValueError("an even number of vertices must have been taken")
    if taken and not is_connected(graph, taken):
        raise ValueError("the taken set must be connected")
    solver = Solver(graph, memo_budget)
    bound = w_star(graph, graph.full_mask & ~taken) / 2

    class _Oracle(Strategy):
        name = "component-continuation"

        def choose(self, state: GameState) -> int:
            return solver.best_move(state)

    return CertifiedStrategy(
        _Oracle(), bound, "component-bound", bound, Fraction(1, 2)
    )


class _QuotientSeparatorStrategy(Strategy):
    """Consume the separator, answering any approach toward an outside
    positive vertex, then switch to the optimal continuation."""

    name = "quotient-separator"

    def __init__(self, graph: WeightedGraph, union_s: int, solver: Solver):
        self.graph = graph
        self.union_s = union_s
        self.solver = solver
        self.reset()

    def reset(self) -> None:
        self.expected = 0
        self.handoff = False

    def choose(self, state: GameState) -> int:
        graph = self.graph
        if self.handoff or self.union_s & ~state.taken == 0:
            self.handoff = True
            return self._commit(state, self.solver.best_move(state))
        if state.taken == 0:
            return self._commit(state, lowest_bit(self.union_s))
        bob_new = state.taken & ~self.expected
        outside = graph.positive_mask() & ~self.union_s & ~state.taken
        replies = [v for v in iter_bits(outside) if graph.adj[v] & bob_new]
        assert len(replies) <= 1, "sparsity leaves at most one owner to defend"
        if replies:
            return self._commit(state, replies[0])
        avail = legal_moves(state) & self.union_s
        assert avail, "a partially taken connected separator stays reachable"
        return self._commit(state, lowest_bit(avail))

    def _commit(self, state: GameState, v: int) -> int:
        self.expected = state.taken | 1 << v
        return v


def strat_comp_R(
    graph: WeightedGraph,
    sq: ShallowQuotient,
    block_set: int,
    memo_budget: int = DEFAULT_MEMO_BUDGET,
) -> CertifiedStrategy:
    """Play through a connected separator of the contracted graph; bound is
    half the deficiency measured in the quotient."""
    _require_odd(graph)
    if not block_set or not is_connected(sq.graph, block_set):
        raise ValueError("block set must be nonempty and connected in the quotient")
    union_s = 0
    for i in iter_bits(block_set):
        union_s |= sq.blocks[i]
    bound = w_star(sq.graph, sq.graph.full_mask & ~block_set) / 2
    inner = _QuotientSeparatorStrategy(graph, union_s, Solver(graph, memo_budget))
    return CertifiedStrategy(
        inner, bound, "quotient-component-bound", bound, Fraction(1, 2)
    )


class _QuotientCycleStrategy(Strategy):
    """The two-rule play along a cycle of positive-vertex blocks."""

    name = "quotient-cycle"

    def __init__(self, graph: WeightedGraph, owners: list[int], start: int,
                 protected: int):
        self.graph = graph
        self.owners_mask = mask_of(owners)
        self.start = start
        self.protected = protected  # owners Bob must never reach

    def reset(self) -> None:
        pass

    def choose(self, state: GameState) -> int:
        if state.taken == 0:
            return self.start
        avail = legal_moves(state)
        in_s = avail & self.owners_mask
        if in_s:
            return lowest_bit(in_s)
        untaken_owners = self.owners_mask & ~state.taken
        risky = self.graph.neighborhood(untaken_owners)
        safe = avail & ~risky
        if safe:
            return lowest_bit(safe)
        # Forced into some owner's neighborhood: prefer endangering an
        # unprotected owner.
        for v in iter_bits(avail):
            touched = self.graph.adj[v] & untaken_owners
            if not touched & self.protected:
                return v
        return lowest_bit(avail)


def strat_cycle_R(
    graph: WeightedGraph, sq: ShallowQuotient, block_set: int
) -> CertifiedStrategy:
    """Play on a block set whose quotient reduction is a cycle; bound is at
    least one sixth of the block-set weight."""
    _require_odd(graph)
    if not is_sparse(graph, graph.positive_mask()):
        raise ValueError("positive-weight vertices must form a sparse set")
    trimmed = mask_of(
        i for i in iter_bits(block_set) if sq.graph.weights[i] > 0
    )
    total = sq.graph.weight_of(block_set)
    if not trimmed:
        # All-zero cycle: the bound is zero and any opening move works.
        inner = _QuotientCycleStrategy(graph, [], lowest_bit(graph.full_mask), 0)
        return CertifiedStrategy(inner, ZERO, "quotient-cycle", ZERO, Fraction(1, 6))
    block_cycle = cycle_reduction_check(sq.graph, trimmed)
    if block_cycle is None:
        raise ValueError("block set does not reduce to a cycle")
    owners = [sq.core[i] for i in block_cycle]
    assert all(v >= 0 for v in owners), "positive blocks carry their center"
    n = len(owners)
    heaviest = max(owners, key=lambda v: (graph.weights[v], -v))

    if n <= 6:
        inner = _QuotientCycleStrategy(graph, owners, heaviest, 0)
        bound = graph.weights[heaviest]
        assert bound >= total / 6
        return CertifiedStrategy(inner, bound, "quotient-cycle", bound, Fraction(1, 6))

    blocks = [sq.blocks[i] for i in block_cycle]
    hull = 0
    for b in blocks:
        hull |= b
    # Attribute every outside component to one block (single attachment) or
    # to a consecutive pair (double attachment).
    segment = list(blocks)  # A_i, seeded with N[v_i]
    straddle = [0] * n  # A_{i,i+1}
    for comp in decompose.components(graph, graph.full_mask & ~hull):
        nbrs = graph.neighborhood(comp)
        touched = sorted(i for i in range(n) if nbrs & blocks[i])
        if len(touched) == 1:
            segment[touched[0]] |= comp
        else:
            assert len(touched) == 2
            i, j = touched
            assert (j - i == 1) or (i == 0 and j == n - 1)
            straddle[i if j - i == 1 else n - 1] |= comp
    sizes = [bin(m).count("1") for m in segment]
    gap_sizes = [bin(m).count("1") for m in straddle]
    assert sum(sizes) + sum(gap_sizes) == graph.n

    # Parity class C: owners split by the parity of everything strictly
    # before them around the cycle.
    prefix = 0
    parity_class: list[int] = []
    for i in range(n):
        parity_class.append(prefix % 2)
        prefix += sizes[i] + gap_sizes[i]
    weights = graph.weights
    class_w = [
        sum((weights[owners[i]] for i in range(n) if parity_class[i] == k), ZERO)
        for k in (0, 1)
    ]
    chosen_parity = 0 if class_w[0] >= class_w[1] else 1
    in_c = [parity_class[i] == chosen_parity for i in range(n)]

    even_seg = [sizes[i] % 2 == 0 for i in range(n)]  # v_i in S_0
    claim1 = sum((weights[owners[i]] for i in range(n) if in_c[i] and even_seg[i]), ZERO)
    claim2_total = sum(
        (weights[owners[i]] for i in range(n) if in_c[i] and not even_seg[i]), ZERO
    )
    claim2 = claim2_total / 2

    if claim1 >= claim2:
        protected = mask_of(owners[i] for i in range(n) if in_c[i] and even_seg[i])
        inner = _QuotientCycleStrategy(graph, owners, owners[0], protected)
        bound = claim1
    else:
        acc = ZERO
        j = 0
        for i in range(n):
            if in_c[i] and not even_seg[i]:
                acc += weights[owners[i]]
            if acc >= claim2:
                j = i
                break
        protected = mask_of(
            owners[i] for i in range(n) if in_c[i] and not even_seg[i]
        )
        inner = _QuotientCycleStrategy(graph, owners, owners[j], protected)
        bound = claim2
    assert bound >= total / 6
    return CertifiedStrategy(inner, bound, "quotient-cycle", bound, Fraction(1, 6))


def strat_sparse(
    graph: WeightedGraph,
    n: int,
    escalation_cap: Optional[int] = None,
    memo_budget: int = DEFAULT_MEMO_BUDGET,
) -> CertifiedStrategy:
    """Decompose the contracted graph and dispatch to the matching play.

    If the decomposition keeps producing clique-subdivision witnesses, the
    target clique size is raised step by step up to `escalation_cap`
    (default n+3) before giving up."""
    _require_odd(graph)
    if not is_connected(graph, graph.full_mask):
        raise ValueError("graph must be connected")
    sq = shallow_quotient_GR(graph)
    cap = n + 3 if escalation_cap is None else escalation_cap
    outcome: Optional[Outcome] = None
    used_n = n
    witness: Optional[SubdivisionWitness] = None
    for trial in range(n, cap + 1):
        result = subdivision_decomposition(sq.graph, trial)
        if result.kind != decompose.WITNESS:
            outcome, used_n = result, trial
            break
        witness = result.witness
    if outcome is None:
        assert witness is not None
        raise SubdivisionSurfaced(
            f"clique subdivisions found for every size in [{n}, {cap}]", witness
        )
    paper_c = subdivision_constant(used_n) / 6
    if outcome.kind == decompose.SEPARATOR:
        inner = strat_comp_R(graph, sq, outcome.vertices, memo_budget)
    else:
        inner = strat_cycle_R(graph, sq, outcome.vertices)
    return CertifiedStrategy(
        inner.inner, inner.bound, "sparse", outcome.achieved, paper_c
    )


class _LegalStrategy(Strategy):
    """Open with the first ordering vertex; then heaviest exposed vertex of
    the independent set, falling back to the next ordering vertex."""

    name = "legal-ordering"

    def __init__(self, ctx: LegalOrderingContext):
        self.ctx = ctx

    def reset(self) -> None:
        pass

    def choose(self, state: GameState) -> int:
        ctx = self.ctx
        if state.taken == 0:
            return ctx.sigma[0]
        avail = legal_moves(state)
        exposed = avail & ctx.independent
        if exposed:
            weights = state.graph.weights
            return max(iter_bits(exposed), key=lambda v: (weights[v], -v))
        for v in ctx.sigma:
            if not state.taken >> v & 1:
                assert avail >> v & 1, "legality keeps the ordering available"
                return v
        raise AssertionError("no move left for a legal ordering strategy")


def strat_legal(
    graph: WeightedGraph,
    independent: int,
    ctx: Optional[LegalOrderingContext] = None,
) -> CertifiedStrategy:
    """Certified bound: half the independent weight outside the blocked set."""
    if graph.n < 2:
        raise ValueError("need at least two vertices")
    if ctx is None:
        ctx = build_legal_ordering(graph, independent)
    if ctx.independent != independent or ctx.graph is not graph:
        raise ValueError("context does not match the given independent set")
    bound = ctx.free_weight / 2
    return CertifiedStrategy(
        _LegalStrategy(ctx), bound, "legal-ordering", ctx.free_weight,
        Fraction(1, 2),
    )


class _Rebased(Strategy):
    """Replay an auxiliary-graph strategy on the real game (same vertices and
    edges, different weights)."""

    def __init__(self, inner: Strategy, aux: WeightedGraph):
        self.inner = inner
        self.aux = aux
        self.name = inner.name

    def reset(self) -> None:
        self.inner.reset()

    def choose(self, state: GameState) -> int:
        mirrored = make_state(self.aux, state.taken, state.to_move)
        return self.inner.choose(mirrored)


def master_strategy(
    graph: WeightedGraph,
    n: int,
    escalation_cap: Optional[int] = None,
    memo_budget: int = DEFAULT_MEMO_BUDGET,
) -> CertifiedStrategy:
    """The end-to-end strategy: run the sparse-or-legal dichotomy, then play
    the matching branch.  The dichotomy record is attached as `.dichotomy`."""
    _require_odd(graph)
    if not is_connected(graph, graph.full_mask):
        raise ValueError("graph must be connected")
    if graph.n == 1:
        bound = graph.total_weight
        dichotomy = DichotomyResult(
            "sparse", bound, 0, dichotomy_constant(0), sparse_set=graph.full_mask
        )

        class _TakeIt(Strategy):
            name = "single-vertex"

            def choose(self, state: GameState) -> int:
                return 0

        cs = CertifiedStrategy(_TakeIt(), bound, "master", bound, Fraction(1))
        cs.dichotomy = dichotomy
        return cs

    dichotomy = sparse_or_legal(graph)
    c_prime = dichotomy.c_n
    if dichotomy.branch == "legal":
        branch = strat_legal(graph, dichotomy.context.independent, dichotomy.context)
        inner: Strategy = branch.inner
    else:
        aux = WeightedGraph(
            [
                graph.weights[v] if dichotomy.sparse_set >> v & 1 else ZERO
                for v in range(graph.n)
            ],
            graph.edges,
        )
        branch = strat_sparse(aux, n, escalation_cap, memo_budget)
        inner = _Rebased(branch.inner, aux)
    paper_c = c_prime * min(branch.paper_constant, Fraction(1, 2))
    cs = CertifiedStrategy(inner, branch.bound, "master", dichotomy.weight, paper_c)
    cs.dichotomy = dichotomy
    return cs
