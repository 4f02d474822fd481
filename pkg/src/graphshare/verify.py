"""Seeded property suites re-checking every certified claim from scratch.

Each suite is a function seed -> (status, detail) with status "pass",
"fail", or "skip".  The suites are shared between the test suite and the
command-line `verify` verb; they recompute all quantities independently of
the code under test wherever feasible (w*, cycle reductions, witness
validation, charging audits, oracle play).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Optional

from . import decompose
from .decompose import (
    FULL_CONSTANT,
    HAMILTON_CONSTANT,
    cycle_w_star,
    dfs_cycle,
    full_decomposition,
    hamil_grow,
    hamil_separator,
    subdivision_constant,
    subdivision_decomposition,
)
from .game import MoveRecord, Solver, make_state, optimal_strategy, play
from .generators import (
    GeneratorSpec,
    random_connected,
    random_sparse_weighted,
    ring_of_stars,
    subdivide_even,
)
from .graph import (
    WeightedGraph,
    bits,
    components,
    cycle_reduction_check,
    is_connected,
    is_independent,
    is_sparse,
    mask_of,
    shallow_quotient_GR,
    validate_cycle_certificate,
    w_star,
)
from .ordering import (
    arrangeable_ordering,
    build_legal_ordering,
    distinguishing_coloring,
    heaviest_color_class,
    improve_ordering,
    observation_check,
    sparse_or_legal,
)
from .strategies import (
    SubdivisionSurfaced,
    master_strategy,
    strat_comp_R,
    strat_cycle_R,
    strat_legal,
)
from .subdivision import validate_witness

CheckResult = tuple[str, str]

PASS: CheckResult = ("pass", "")


def fail(detail: str) -> CheckResult:
    return "fail", detail


def skip(detail: str) -> CheckResult:
    return "skip", detail


# -- instance builders -----------------------------------------------------


def random_hamiltonian(seed: int, size: int) -> tuple[WeightedGraph, list[int]]:
    """A random graph with a known Hamiltonian cycle."""
    rng = random.Random(seed)
    n = max(3, size)
    order = list(range(n))
    rng.shuffle(order)
    edges = {(min(u, v), max(u, v)) for u, v in zip(order, order[1:] + order[:1])}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.2:
                edges.add((u, v))
    weights = [
        0 if rng.random() < 0.4 else Fraction(rng.randint(1, 8)) for _ in range(n)
    ]
    return WeightedGraph(weights, edges), order


def _random_connected(seed: int, size: int, parity: Optional[str] = None) -> WeightedGraph:
    spec = GeneratorSpec(
        family="randomConnected", size=size, seed=seed, parity=parity
    )
    return random_connected(spec)


# -- outcome audits --------------------------------------------------------


def audit_outcome(graph: WeightedGraph, out: decompose.Outcome,
                  n: Optional[int] = None) -> Optional[str]:
    """Recheck a top-level decomposition outcome from scratch; returns an
    error string or None."""
    total = graph.total_weight
    if out.base != total:
        return f"base {out.base} != w(G) {total}"
    if out.kind == decompose.SEPARATOR:
        if not is_connected(graph, out.vertices):
            return "separator is not connected"
        real = w_star(graph, graph.full_mask & ~out.vertices)
        if real != out.achieved:
            return f"separator deficiency {real} != {out.achieved}"
    elif out.kind == decompose.NEIGHBORHOOD:
        if not is_connected(graph, out.vertices):
            return "neighborhood seed is not connected"
        hood = graph.neighborhood(out.vertices)
        if graph.weight_of(hood) != out.achieved:
            return "neighborhood weight mismatch"
    elif out.kind == decompose.CYCLE:
        order = cycle_reduction_check(graph, out.vertices)
        if order is None:
            return "cycle set does not reduce to a cycle"
        if graph.weight_of(out.vertices) != out.achieved:
            return "cycle-set weight mismatch"
    elif out.kind == decompose.WITNESS:
        if n is None:
            return "witness outcome where none expected"
        from math import comb

        if not validate_witness(graph, out.witness, vertex_count=n,
                                edge_count=comb(n, 2)):
            return "invalid subdivision witness"
        return None
    else:
        return f"unexpected outcome kind {out.kind}"
    if out.achieved < out.constant * total:
        return f"achieved {out.achieved} below {out.constant} * {total}"
    return None


def charging_violations(ctx, log: list[MoveRecord]) -> list[str]:
    """The per-move accounting behind the legal-ordering bound: every
    Bob-taken vertex of I is dominated by Alice's directly preceding move."""
    graph = ctx.graph
    errors = []
    for i, rec in enumerate(log):
        if rec.player != 1 or not ctx.independent >> rec.vertex & 1:
            continue
        if i == 0:
            errors.append(f"Bob took {rec.vertex} with no preceding Alice move")
            continue
        prev = log[i - 1].vertex
        w_u = graph.weights[rec.vertex]
        if ctx.independent >> prev & 1:
            if w_u > graph.weights[prev]:
                errors.append(f"w({rec.vertex}) > w({prev}) within I")
        else:
            u_choice = ctx.choice.get(prev)
            if u_choice is None or w_u > graph.weights[u_choice]:
                errors.append(
                    f"Bob's {rec.vertex} uncharged after Alice's {prev}"
                )
    return errors


# -- suites ----------------------------------------------------------------


def check_struct_cycle(seed: int, size: int = 12) -> CheckResult:
    graph = _random_connected(seed, size)
    cycle = dfs_cycle(graph)
    if not validate_cycle_certificate(graph, cycle):
        return fail("returned sequence is not a cycle in the graph")
    rest = graph.full_mask & ~mask_of(cycle)
    for comp in components(graph, rest):
        if graph.weight_of(comp) > graph.total_weight / 2:
            return fail(f"component {bits(comp)} too heavy")
    return PASS


def check_struct_hamil1(seed: int, size: int = 10) -> CheckResult:
    graph, order = random_hamiltonian(seed, size)
    out = hamil_separator(graph, order)
    total = graph.total_weight
    if out.kind == decompose.CYCLE:
        if cycle_reduction_check(graph, out.vertices) is None:
            return fail("cycle set fails the reduction check")
        if graph.weight_of(out.vertices) < HAMILTON_CONSTANT * total:
            return fail("cycle set too light")
    elif out.kind == decompose.SEPARATOR:
        if not is_connected(graph, out.vertices):
            return fail("separator not connected")
        if cycle_w_star(graph, order, out.vertices) < HAMILTON_CONSTANT * total:
            return fail("separator deficiency too small on the cycle")
    else:
        return fail(f"unexpected kind {out.kind}")
    return PASS


def check_struct_hamil2(seed: int, size: int = 10) -> CheckResult:
    graph, order = random_hamiltonian(seed, size)
    rng = random.Random(seed ^ 0x5EED)
    anchor = rng.randrange(graph.n)
    grow = rng.randrange(1, max(2, graph.n // 2))
    seed_set = 1 << anchor
    for _ in range(grow):
        frontier = graph.neighborhood(seed_set) & ~seed_set
        if not frontier:
            break
        seed_set |= 1 << rng.choice(bits(frontier))
    base = cycle_w_star(graph, order, seed_set)
    out = hamil_grow(graph, order, seed_set)
    if out.vertices & seed_set != seed_set:
        return fail("result does not contain the seed")
    if not is_connected(graph, out.vertices):
        return fail("result not connected")
    if out.kind == decompose.SEPARATOR:
        real = w_star(graph, graph.full_mask & ~out.vertices)
        if real < HAMILTON_CONSTANT * base:
            return fail(f"deficiency {real} below base/5 ({base}/5)")
    elif out.kind == decompose.NEIGHBORHOOD:
        hood = graph.weight_of(graph.neighborhood(out.vertices))
        if hood < HAMILTON_CONSTANT * base:
            return fail(f"neighborhood weight {hood} below base/5")
    else:
        return fail(f"unexpected kind {out.kind}")
    return PASS


def check_struct_full(seed: int, size: int = 14) -> CheckResult:
    graph = _random_connected(seed, size)
    out = full_decomposition(graph)
    if out.constant != FULL_CONSTANT:
        return fail("wrong constant")
    err = audit_outcome(graph, out)
    return fail(err) if err else PASS


def check_struct_subdiv(seed: int, size: int = 12, n: int = 4) -> CheckResult:
    graph = _random_connected(seed, size)
    out = subdivision_decomposition(graph, n)
    if out.constant != subdivision_constant(n):
        return fail("wrong constant")
    err = audit_outcome(graph, out, n=n)
    return fail(err) if err else PASS


def check_strat_comp(seed: int, size: int = 8) -> CheckResult:
    graph = _random_connected(seed, size, parity="odd")
    solver = Solver(graph)
    for taken in range(1 << graph.n):
        if bin(taken).count("1") % 2 != 0:
            continue
        if taken and not is_connected(graph, taken):
            continue
        state = make_state(graph, taken)
        target = w_star(graph, graph.full_mask & ~taken) / 2
        if solver.value_from(state) < target:
            return fail(f"value below half-deficiency from taken={bits(taken)}")
    return PASS


def check_strat_comp_R(seed: int, size: int = 9) -> CheckResult:
    spec = GeneratorSpec(family="randomConnected", size=size, seed=seed, parity="odd")
    graph = random_sparse_weighted(spec)
    sq = shallow_quotient_GR(graph)
    rng = random.Random(seed ^ 0xC0117)
    start = rng.randrange(sq.graph.n)
    block_set = 1 << start
    for _ in range(rng.randrange(1, sq.graph.n + 1)):
        frontier = sq.graph.neighborhood(block_set) & ~block_set
        if not frontier:
            break
        block_set |= 1 << rng.choice(bits(frontier))
    strategy = strat_comp_R(graph, sq, block_set)
    gain, _, _ = play(graph, strategy, optimal_strategy(graph))
    if gain < strategy.bound:
        return fail(f"gain {gain} below bound {strategy.bound}")
    return PASS


def check_strat_cycle_R(seed: int, size: int = 4) -> CheckResult:
    graph = ring_of_stars(max(3, size), seed)
    sq = shallow_quotient_GR(graph)
    block_set = mask_of(
        i for i in range(sq.graph.n) if sq.graph.weights[i] > 0
    )
    if cycle_reduction_check(sq.graph, block_set) is None:
        return skip("positive blocks do not form a cycle")
    strategy = strat_cycle_R(graph, sq, block_set)
    gain, _, _ = play(graph, strategy, optimal_strategy(graph))
    target = sq.graph.weight_of(block_set) / 6
    if gain < strategy.bound:
        return fail(f"gain {gain} below bound {strategy.bound}")
    if gain < target:
        return fail(f"gain {gain} below w(S_R)/6 = {target}")
    return PASS


def check_strat_legal(seed: int, size: int = 10) -> CheckResult:
    graph = _random_connected(seed, size)
    if graph.n < 2:
        return skip("single vertex")
    ordered = arrangeable_ordering(graph)
    independent = heaviest_color_class(graph, distinguishing_coloring(ordered))
    ctx = improve_ordering(build_legal_ordering(graph, independent))
    strategy = strat_legal(graph, independent, ctx)
    gain, _, log = play(graph, strategy, optimal_strategy(graph))
    if gain < strategy.bound:
        return fail(f"gain {gain} below bound {strategy.bound}")
    errors = charging_violations(ctx, log)
    if errors:
        return fail("; ".join(errors))
    return PASS


def check_arrangeable(seed: int, size: int = 12) -> CheckResult:
    graph = _random_connected(seed, size)
    ordered = arrangeable_ordering(graph)
    if not observation_check(ordered):
        return fail("observation bounds violated for the measured p")
    return PASS


def check_final(seed: int, size: int = 11) -> CheckResult:
    graph = _random_connected(seed, size)
    result = sparse_or_legal(graph)
    if result.weight < result.c_n * graph.total_weight:
        return fail("branch weight below c_n w(G)")
    if result.branch == "sparse":
        if not is_sparse(graph, result.sparse_set):
            return fail("sparse branch set is not sparse")
        if graph.weight_of(result.sparse_set) != result.weight:
            return fail("sparse branch weight mismatch")
    else:
        ctx = result.context
        if not is_independent(graph, ctx.independent):
            return fail("legal branch I not independent")
        if ctx.free_weight != result.weight:
            return fail("legal branch weight mismatch")
    return PASS


def check_subdivision_invariance(seed: int, size: int = 9) -> CheckResult:
    spec = GeneratorSpec(family="randomConnected", size=size, seed=seed)
    graph = random_sparse_weighted(spec)
    zero_edges = [
        (u, v)
        for u, v in sorted(graph.edges)
        if graph.weights[u] == 0 and graph.weights[v] == 0
    ]
    if not zero_edges:
        return skip("no zero-zero edge to subdivide")
    counts = {zero_edges[seed % len(zero_edges)]: 2}
    bigger = subdivide_even(graph, counts)
    before = Solver(graph).game_value()
    after = Solver(bigger).game_value()
    if before != after:
        return fail(f"value changed: {before} -> {after}")
    return PASS


def check_master(seed: int, size: int = 11, n: int = 4) -> CheckResult:
    graph = _random_connected(seed, size, parity="odd")
    try:
        strategy = master_strategy(graph, n)
    except SubdivisionSurfaced:
        return skip("subdivision witness surfaced")
    gain, _, _ = play(graph, strategy, optimal_strategy(graph))
    if gain < strategy.bound:
        return fail(f"gain {gain} below bound {strategy.bound}")
    if strategy.bound < strategy.paper_constant * graph.total_weight:
        return fail("certified bound below the instance constant")
    return PASS


SUITES: dict[str, Callable[[int], CheckResult]] = {
    "struct-cycle": check_struct_cycle,
    "struct-hamil1": check_struct_hamil1,
    "struct-hamil2": check_struct_hamil2,
    "struct-full": check_struct_full,
    "struct-subdiv": check_struct_subdiv,
    "strat-comp": check_strat_comp,
    "strat-comp-R": check_strat_comp_R,
    "strat-cycle-R": check_strat_cycle_R,
    "strat-legal": check_strat_legal,
    "arrangeable": check_arrangeable,
    "final": check_final,
    "subdivision": check_subdivision_invariance,
    "master": check_master,
}


def run_suite(name: str, seeds: int, size: Optional[int] = None) -> list[tuple[int, str, str]]:
    """Run a named suite over seeds 0..seeds-1; returns (seed, status, detail)."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    check = SUITES[name]
    results = []
    for seed in range(seeds):
        if size is None:
            status, detail = check(seed)
        else:
            status, detail = check(seed, size)
        results.append((seed, status, detail))
    return results
